"""Alphabets with an involution, words, and the finite language operations.

Words are plain tuples of symbol tokens. Symbols are opaque strings, so a
token such as ``"[a,S]"`` is one symbol, never four characters.
"""
from __future__ import annotations

import json
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence

from .errors import AlphabetError, LengthError

Word = tuple  # tuple[str, ...]

LAMBDA: Word = ()


class Alphabet:
    """Ordered finite symbol set with a self-inverse bijection ``bar``.

    Symbol order is fixed here and drives every deterministic ordering in
    the package (see :meth:`sort_key`).
    """

    __slots__ = ("symbols", "involution", "strict_wk", "index")

    def __init__(self, symbols: Iterable[str], involution, strict_wk: bool = False):
        symbols = tuple(symbols)
        if len(set(symbols)) != len(symbols):
            raise AlphabetError(f"duplicate symbols in {symbols!r}")
        if isinstance(involution, Mapping):
            inv = dict(involution)
        else:
            inv = {}
            for pair in involution:
                a, b = pair
                for x, y in ((a, b), (b, a)):
                    if inv.get(x, y) != y:
                        raise AlphabetError(f"symbol {x!r} paired twice")
                    inv[x] = y
        index = {s: i for i, s in enumerate(symbols)}
        if set(inv) != set(symbols):
            raise AlphabetError("involution must be total on the symbol set")
        for a, b in inv.items():
            if b not in index:
                raise AlphabetError(f"involution maps {a!r} outside the alphabet")
            if inv[b] != a:
                raise AlphabetError(f"involution is not self-inverse at {a!r}")
            if strict_wk and a == b:
                raise AlphabetError(f"Watson-Crick involution has fixed point {a!r}")
        self.symbols = symbols
        self.involution = inv
        self.strict_wk = bool(strict_wk)
        self.index = index

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[str]], strict_wk: bool = False) -> Alphabet:
        """Build an alphabet whose symbol order is the order of first appearance in ``pairs``."""
        pairs = [tuple(p) for p in pairs]
        symbols = []
        for p in pairs:
            for s in p:
                if s not in symbols:
                    symbols.append(s)
        return cls(symbols, pairs, strict_wk)

    # -- identity -----------------------------------------------------------

    def _key(self):
        return (self.symbols, tuple(self.involution[s] for s in self.symbols), self.strict_wk)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        pairs = []
        for s in self.symbols:
            b = self.involution[s]
            if self.index[s] <= self.index[b]:
                pairs.append(f"{s}<->{b}")
        return f"Alphabet({', '.join(pairs)})"

    def __contains__(self, symbol) -> bool:
        return symbol in self.index

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    # -- word algebra -------------------------------------------------------

    def bar(self, a: str) -> str:
        try:
            return self.involution[a]
        except KeyError:
            raise AlphabetError(f"symbol {a!r} not in alphabet") from None

    def complement(self, w: Sequence[str]) -> Word:
        return tuple(self.bar(a) for a in w)

    def rc(self, w: Sequence[str]) -> Word:
        """Reversal of the symbol-wise involution image."""
        return tuple(self.bar(a) for a in reversed(w))

    def check_word(self, w: Sequence[str]) -> Word:
        w = tuple(w)
        for a in w:
            if a not in self.index:
                raise AlphabetError(f"symbol {a!r} not in alphabet")
        return w

    def sort_key(self, w: Sequence[str]):
        """Length first, then lexicographic by alphabet order; foreign tokens sort after, by name."""
        n = len(self.symbols)
        return (len(w), tuple((self.index.get(a, n), a) for a in w))

    def words(self, length: int):
        """All words of exactly ``length`` symbols, in :meth:`sort_key` order."""
        return [tuple(p) for p in product(self.symbols, repeat=length)]

    def words_upto(self, max_len: int, min_len: int = 0):
        out = []
        for n in range(min_len, max_len + 1):
            out.extend(self.words(n))
        return out

    # -- (de)serialisation --------------------------------------------------

    @property
    def compact(self) -> bool:
        """True when every symbol is a single character, so words print as plain strings."""
        return all(len(s) == 1 for s in self.symbols)

    def parse_word(self, obj) -> Word:
        """Accept a token list, or a compact string when the alphabet allows it."""
        if isinstance(obj, str):
            if not self.compact:
                raise AlphabetError("compact word strings need an alphabet of single-character symbols")
            return self.check_word(tuple(obj))
        return self.check_word(tuple(obj))

    def format_word(self, w: Sequence[str]):
        if self.compact and all(len(a) == 1 for a in w):
            return "".join(w)
        return list(w)

    def to_json(self) -> dict:
        pairs = []
        for s in self.symbols:
            b = self.involution[s]
            if self.index[s] <= self.index[b]:
                pairs.append([s, b])
        return {"symbols": list(self.symbols), "involution": pairs, "strict_wk": self.strict_wk}

    @classmethod
    def from_json(cls, data: dict) -> Alphabet:
        try:
            symbols = data["symbols"]
            pairs = data["involution"]
        except (KeyError, TypeError) as exc:
            raise AlphabetError(f"malformed alphabet document: {exc}") from None
        seen = [s for p in pairs for s in (p if p[0] != p[1] else p[:1])]
        if sorted(seen) != sorted(symbols):
            raise AlphabetError("every symbol must appear in exactly one involution pair")
        return cls(symbols, [tuple(p) for p in pairs], data.get("strict_wk", False))

    @classmethod
    def load(cls, path) -> Alphabet:
        with open(path) as fh:
            return cls.from_json(json.load(fh))


class LanguageSet(frozenset):
    """A finite set of words that iterates length-then-lexicographic.

    Behaves as a ``frozenset`` of tuples for membership, equality and the
    set operators (which return plain frozensets).
    """

    __slots__ = ("alphabet", "_order")

    def __new__(cls, words: Iterable[Sequence[str]] = (), alphabet: Alphabet | None = None):
        self = super().__new__(cls, (tuple(w) for w in words))
        self.alphabet = alphabet
        self._order = None
        return self

    def _sort_key(self, w):
        if self.alphabet is not None:
            return self.alphabet.sort_key(w)
        return (len(w), w)

    def ordered(self) -> tuple:
        if self._order is None:
            self._order = tuple(sorted(frozenset.__iter__(self), key=self._sort_key))
        return self._order

    def __iter__(self):
        return iter(self.ordered())

    def __repr__(self):
        fmt = self.alphabet.format_word if self.alphabet is not None else list
        return f"LanguageSet({[fmt(w) for w in self.ordered()]!r})"

    def __reduce__(self):
        return (LanguageSet, (list(frozenset.__iter__(self)), self.alphabet))

    def truncate(self, max_len: int) -> LanguageSet:
        return LanguageSet((w for w in frozenset.__iter__(self) if len(w) <= max_len), self.alphabet)

    def to_json(self) -> list:
        fmt = self.alphabet.format_word if self.alphabet is not None else list
        return [fmt(w) for w in self.ordered()]


def _alphabet_of(*langs):
    for lang in langs:
        alpha = getattr(lang, "alphabet", None)
        if alpha is not None:
            return alpha
    return None


def rc(w: Sequence[str], alphabet: Alphabet) -> Word:
    return alphabet.rc(w)


def pref(w: Sequence[str], i: int) -> Word:
    if i < 0 or i > len(w):
        raise LengthError(f"pref_{i} undefined for a word of length {len(w)}")
    return tuple(w[:i])


def suf(w: Sequence[str], i: int) -> Word:
    if i < 0 or i > len(w):
        raise LengthError(f"suf_{i} undefined for a word of length {len(w)}")
    return tuple(w[len(w) - i:])


def factor_sets(w: Sequence[str], k: int, alphabet: Alphabet | None = None):
    """Return ``(Inf_k, Pref_<=k, Suf_<=k)`` for ``w``.

    ``Inf_k`` is empty when ``w`` is shorter than ``k``; the prefix and
    suffix sets stop at ``min(k, |w|)`` and always hold the empty word.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    w = tuple(w)
    n = len(w)
    inf = LanguageSet((w[i:i + k] for i in range(n - k + 1)), alphabet)
    top = min(k, n)
    prefixes = LanguageSet((w[:i] for i in range(top + 1)), alphabet)
    suffixes = LanguageSet((w[n - i:] for i in range(top + 1)), alphabet)
    return inf, prefixes, suffixes


def concat(left: Iterable[Sequence[str]], right: Iterable[Sequence[str]], alphabet: Alphabet | None = None) -> LanguageSet:
    right = [tuple(v) for v in right]
    return LanguageSet((tuple(u) + v for u in left for v in right), alphabet or _alphabet_of(left))


def rotations(w: Sequence[str]) -> set:
    w = tuple(w)
    if not w:
        return {w}
    return {w[i:] + w[:i] for i in range(len(w))}


def circular_permutations(lang: Iterable[Sequence[str]]) -> LanguageSet:
    out = set()
    for w in lang:
        out |= rotations(w)
    return LanguageSet(out, _alphabet_of(lang))


def left_derivative(p: Sequence[str], lang: Iterable[Sequence[str]]) -> LanguageSet:
    """``{x | p x in lang}``."""
    p = tuple(p)
    n = len(p)
    return LanguageSet((tuple(w[n:]) for w in lang if tuple(w[:n]) == p), _alphabet_of(lang))


def right_derivative(lang: Iterable[Sequence[str]], p: Sequence[str]) -> LanguageSet:
    """``{x | x p in lang}``, the mirror of :func:`left_derivative`."""
    p = tuple(p)
    n = len(p)
    return LanguageSet(
        (tuple(w[:len(w) - n]) for w in lang if len(w) >= n and tuple(w[len(w) - n:]) == p),
        _alphabet_of(lang),
    )


def substitute(
    lang: Iterable[Sequence[str]],
    f: Mapping[str, Iterable[Sequence[str]]] | Callable[[str], Iterable[Sequence[str]]],
    alphabet: Alphabet | None = None,
) -> LanguageSet:
    """Apply the finite substitution ``f`` symbol-wise and union over ``lang``."""
    lookup = f if callable(f) else f.__getitem__
    cache: dict = {}
    out = set()
    for w in lang:
        parts = [()]
        for a in w:
            if a not in cache:
                cache[a] = [tuple(v) for v in lookup(a)]
            images = cache[a]
            parts = [u + v for u in parts for v in images]
            if not parts:
                break
        out.update(parts)
    return LanguageSet(out, alphabet)
