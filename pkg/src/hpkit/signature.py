"""Finite-index hairpin signatures and their one-symbol updates.

A right signature of ``w`` records every infix ``xy`` (``|y| = k``,
``k <= |xy| <= m + k``) together with each ``z`` that is at once a suffix of
what follows that occurrence and a prefix of ``rc(y)``. A pair whose ``z``
has full length ``k`` is exactly a usable hairpin, so the signature decides
which completions are applicable. The left signature is the mirror image,
and a full signature carries both.

Each signature also keeps a boundary memory (the suffix, resp. prefix, of
length ``min(|w|, m + k - 1)``) and the word length saturated at
``m + 2k``. With these the signature of ``w a`` (or ``a w``) is computable
from the signature of ``w`` alone.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import Alphabet, Word
from .errors import AlphabetError, LengthError


def _pair_key(alphabet, long, short):
    return (len(long), alphabet.sort_key(long), len(short), alphabet.sort_key(short))


@dataclass(frozen=True)
class RightSignature:
    pairs: frozenset  # {(xy, z)}
    suffix_memory: Word
    len_sat: int
    m: int
    k: int
    alphabet: Alphabet = field(compare=False, repr=False)

    def sorted_pairs(self):
        return sorted(self.pairs, key=lambda p: _pair_key(self.alphabet, p[0], p[1]))

    def to_json(self) -> dict:
        return {
            "kind": "right",
            "m": self.m,
            "k": self.k,
            "pairs": [[list(xy), list(z)] for xy, z in self.sorted_pairs()],
            "suffix_memory": list(self.suffix_memory),
            "len_sat": self.len_sat,
        }

    def canonical(self) -> tuple:
        return ("right", self.m, self.k, tuple(self.sorted_pairs()), self.suffix_memory, self.len_sat)


@dataclass(frozen=True)
class LeftSignature:
    pairs: frozenset  # {(z, yx)}
    prefix_memory: Word
    len_sat: int
    m: int
    k: int
    alphabet: Alphabet = field(compare=False, repr=False)

    def sorted_pairs(self):
        return sorted(self.pairs, key=lambda p: _pair_key(self.alphabet, p[1], p[0]))

    def to_json(self) -> dict:
        return {
            "kind": "left",
            "m": self.m,
            "k": self.k,
            "pairs": [[list(z), list(yx)] for z, yx in self.sorted_pairs()],
            "prefix_memory": list(self.prefix_memory),
            "len_sat": self.len_sat,
        }

    def canonical(self) -> tuple:
        return ("left", self.m, self.k, tuple(self.sorted_pairs()), self.prefix_memory, self.len_sat)


@dataclass(frozen=True)
class FullSignature:
    right: RightSignature
    left: LeftSignature

    def __post_init__(self):
        if self.right.len_sat != self.left.len_sat or (self.right.m, self.right.k) != (self.left.m, self.left.k):
            raise ValueError("right and left parts disagree on length or parameters")

    @property
    def m(self):
        return self.right.m

    @property
    def k(self):
        return self.right.k

    @property
    def alphabet(self):
        return self.right.alphabet

    @property
    def len_sat(self):
        return self.right.len_sat

    def to_json(self) -> dict:
        return {"kind": "full", "right": self.right.to_json(), "left": self.left.to_json()}

    def canonical(self) -> tuple:
        return ("full", self.right.canonical(), self.left.canonical())


def signature_from_json(data: dict, alphabet: Alphabet):
    kind = data["kind"]
    if kind == "full":
        return FullSignature(signature_from_json(data["right"], alphabet), signature_from_json(data["left"], alphabet))
    pairs = frozenset((tuple(a), tuple(b)) for a, b in data["pairs"])
    if kind == "right":
        return RightSignature(pairs, tuple(data["suffix_memory"]), data["len_sat"], data["m"], data["k"], alphabet)
    if kind == "left":
        return LeftSignature(pairs, tuple(data["prefix_memory"]), data["len_sat"], data["m"], data["k"], alphabet)
    raise ValueError(f"unknown signature kind {kind!r}")


# -- direct computation -----------------------------------------------------

def _require_length(w, k):
    if len(w) < 2 * k:
        raise LengthError(f"signatures need |w| >= 2k = {2 * k}, got |w| = {len(w)}")


def _right_pairs(w: Word, m: int, k: int, alphabet: Alphabet) -> set:
    n = len(w)
    pairs = set()
    for size in range(k, m + k + 1):
        for start in range(0, n - size + 1):
            xy = w[start:start + size]
            target = alphabet.rc(xy[size - k:])
            after = w[start + size:]
            for j in range(0, min(k, len(after)) + 1):
                z = after[len(after) - j:]
                if target[:j] == z:
                    pairs.add((xy, z))
    return pairs


def _left_pairs(w: Word, m: int, k: int, alphabet: Alphabet) -> set:
    n = len(w)
    pairs = set()
    for size in range(k, m + k + 1):
        for start in range(0, n - size + 1):
            yx = w[start:start + size]
            target = alphabet.rc(yx[:k])
            before = w[:start]
            for j in range(0, min(k, len(before)) + 1):
                z = before[:j]
                if target[k - j:] == z:
                    pairs.add((z, yx))
    return pairs


def compute_right_signature(w, m: int, k: int, alphabet: Alphabet) -> RightSignature:
    w = alphabet.check_word(w)
    _require_length(w, k)
    n = len(w)
    mem = min(n, m + k - 1)
    return RightSignature(frozenset(_right_pairs(w, m, k, alphabet)), w[n - mem:], min(n, m + 2 * k), m, k, alphabet)


def compute_left_signature(w, m: int, k: int, alphabet: Alphabet) -> LeftSignature:
    w = alphabet.check_word(w)
    _require_length(w, k)
    n = len(w)
    mem = min(n, m + k - 1)
    return LeftSignature(frozenset(_left_pairs(w, m, k, alphabet)), w[:mem], min(n, m + 2 * k), m, k, alphabet)


def compute_full_signature(w, m: int, k: int, alphabet: Alphabet) -> FullSignature:
    return FullSignature(compute_right_signature(w, m, k, alphabet), compute_left_signature(w, m, k, alphabet))


def compute_signature(w, m: int, k: int, alphabet: Alphabet, mode: str = "right"):
    if mode == "right":
        return compute_right_signature(w, m, k, alphabet)
    if mode == "left":
        return compute_left_signature(w, m, k, alphabet)
    if mode == "full":
        return compute_full_signature(w, m, k, alphabet)
    raise ValueError(f"mode must be right, left or full, got {mode!r}")


# -- mirror images ----------------------------------------------------------

def mirror(sig):
    """The signature of the reversed word.

    A right pair ``(xy, z)`` of ``w`` is the left pair ``(z^R, (xy)^R)`` of
    ``w^R`` and vice versa; the memories swap roles.
    """
    if isinstance(sig, FullSignature):
        return FullSignature(mirror(sig.left), mirror(sig.right))
    if isinstance(sig, RightSignature):
        pairs = frozenset((z[::-1], xy[::-1]) for xy, z in sig.pairs)
        return LeftSignature(pairs, sig.suffix_memory[::-1], sig.len_sat, sig.m, sig.k, sig.alphabet)
    if isinstance(sig, LeftSignature):
        pairs = frozenset((yx[::-1], z[::-1]) for z, yx in sig.pairs)
        return RightSignature(pairs, sig.prefix_memory[::-1], sig.len_sat, sig.m, sig.k, sig.alphabet)
    raise TypeError(f"not a signature: {sig!r}")


# -- incremental extension --------------------------------------------------

def _extend_right_part(sig: RightSignature, a: str) -> RightSignature:
    m, k, alpha = sig.m, sig.k, sig.alphabet
    mem = sig.suffix_memory
    pairs = {(xy, z) for xy, z in sig.pairs if not z}
    for i in range(m + 1):
        size = i + k - 1
        if sig.len_sat >= size:
            pairs.add((mem[len(mem) - size:] + (a,), ()))
    for xy, z in sig.pairs:
        za = z + (a,)
        if len(za) <= k and alpha.rc(xy[len(xy) - k:])[:len(za)] == za:
            pairs.add((xy, za))
    width = m + k - 1
    new_mem = (mem + (a,))[-width:]
    return RightSignature(frozenset(pairs), new_mem, min(sig.len_sat + 1, m + 2 * k), m, k, alpha)


def _extend_left_part_on_append(left: LeftSignature, suffix_memory: Word, a: str) -> LeftSignature:
    """Update the left part for ``w -> w a`` from the left part and the suffix memory of ``w``."""
    m, k, alpha = left.m, left.k, left.alphabet
    n = left.len_sat  # stands in for |w| in every comparison below
    pairs = set(left.pairs)
    for i in range(m + 1):
        size = i + k - 1
        if n < size:
            continue
        yx = suffix_memory[len(suffix_memory) - size:] + (a,)
        pairs.add(((), yx))
        target = alpha.rc(yx)
        for j in range(1, k + 1):
            if n < j + size:
                break
            z = left.prefix_memory[:j]
            if target[len(target) - j:] == z:
                pairs.add((z, yx))
    width = m + k - 1
    pmem = left.prefix_memory
    if len(pmem) < width:
        pmem = pmem + (a,)
    return LeftSignature(frozenset(pairs), pmem, min(left.len_sat + 1, m + 2 * k), m, k, alpha)


def _check_symbol(sig, a):
    if a not in sig.alphabet:
        raise AlphabetError(f"symbol {a!r} not in alphabet")


def extend_right(sig, a: str):
    """Signature of ``w a`` computed from the signature of ``w`` only."""
    _check_symbol(sig, a)
    if isinstance(sig, RightSignature):
        return _extend_right_part(sig, a)
    if isinstance(sig, FullSignature):
        return FullSignature(
            _extend_right_part(sig.right, a),
            _extend_left_part_on_append(sig.left, sig.right.suffix_memory, a),
        )
    if isinstance(sig, LeftSignature):
        raise TypeError("a left signature alone cannot be extended on the right; use a FullSignature")
    raise TypeError(f"not a signature: {sig!r}")


def extend_left(a: str, sig):
    """Signature of ``a w`` computed from the signature of ``w`` only."""
    _check_symbol(sig, a)
    if isinstance(sig, (FullSignature, LeftSignature)):
        return mirror(extend_right(mirror(sig), a))
    if isinstance(sig, RightSignature):
        raise TypeError("a right signature alone cannot be extended on the left; use a FullSignature")
    raise TypeError(f"not a signature: {sig!r}")


def extend_right_word(sig, r):
    for a in r:
        sig = extend_right(sig, a)
    return sig


def extend_left_word(l, sig):
    for a in reversed(tuple(l)):
        sig = extend_left(a, sig)
    return sig


# -- queries ----------------------------------------------------------------

def applicable_completions(sig) -> set:
    """Words ``r`` with ``w r`` one step from ``w`` (right), or ``l`` with ``l w`` (left).

    A pair whose partial match ``z`` reached full stem length ``k`` marks a
    usable hairpin; the completion is the reversal complement of the
    prolongation part of the infix. The empty word is always included,
    matching the convention that a word without any hairpin maps to itself.
    """
    k, alpha = sig.k, sig.alphabet
    if isinstance(sig, RightSignature):
        out = {alpha.rc(xy[:len(xy) - k]) for xy, z in sig.pairs if len(z) == k}
    elif isinstance(sig, LeftSignature):
        out = {alpha.rc(yx[k:]) for z, yx in sig.pairs if len(z) == k}
    else:
        raise TypeError("applicable_completions takes a RightSignature or LeftSignature")
    out.add(())
    return out


def equivalent(w1, w2, m: int, k: int, alphabet: Alphabet, mode: str = "right") -> bool:
    return compute_signature(w1, m, k, alphabet, mode) == compute_signature(w2, m, k, alphabet, mode)


def signature_step(w, m: int, k: int, alphabet: Alphabet, side: str = "right") -> set:
    """One incompletion step read off the signature: ``{w r}`` (right) or ``{l w}`` (left).

    Words shorter than ``2k`` have no signature and no hairpin, so they map to ``{w}``.
    """
    w = alphabet.check_word(w)
    if len(w) < 2 * k:
        return {w}
    sig = compute_signature(w, m, k, alphabet, side)
    if side == "right":
        return {w + r for r in applicable_completions(sig)}
    return {l + w for l in applicable_completions(sig)}
