"""Bounded hairpin incompletion: one step, n-fold iteration and bounded closure.

Right side: ``w = delta gamma alpha beta rc(alpha)`` yields ``w rc(gamma)``.
Left side:  ``w = alpha beta rc(alpha) gamma delta`` yields ``rc(gamma) w``.
Here ``|alpha| = k`` and ``|gamma| <= m``.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .core import Alphabet, LanguageSet, Word
from .errors import CapExceeded

log = logging.getLogger(__name__)

SIDES = ("right", "left", "both")

DEFAULT_WORD_CAP = 10**6


@dataclass(frozen=True)
class HiParams:
    m: int
    k: int
    side: str = "right"

    def __post_init__(self):
        if self.m < 1 or self.k < 1:
            raise ValueError(f"m and k must be >= 1, got m={self.m}, k={self.k}")
        if self.side not in SIDES:
            raise ValueError(f"side must be one of {SIDES}, got {self.side!r}")

    def with_side(self, side: str) -> HiParams:
        return HiParams(self.m, self.k, side)


@dataclass(frozen=True)
class Decomposition:
    """One way of reading ``w`` as a hairpin; ``side`` says which shape."""

    delta: Word
    gamma: Word
    alpha: Word
    beta: Word
    side: str = "right"

    def word(self, alphabet: Alphabet) -> Word:
        stem = alphabet.rc(self.alpha)
        if self.side == "right":
            return self.delta + self.gamma + self.alpha + self.beta + stem
        return self.alpha + self.beta + stem + self.gamma + self.delta

    def completion(self, alphabet: Alphabet) -> Word:
        return alphabet.rc(self.gamma)


def right_decompositions(w: Word, m: int, k: int, alphabet: Alphabet, bounded: bool = False) -> Iterator[Decomposition]:
    """All ``(delta, gamma, alpha, beta)`` with ``w = delta gamma alpha beta rc(alpha)``.

    With ``bounded`` only ``delta = lambda`` is produced.
    """
    w = tuple(w)
    n = len(w)
    if n < 2 * k:
        return
    alpha = alphabet.rc(w[n - k:])
    # alpha starts at p and must end before the final rc(alpha) begins
    for p in range(0, n - 2 * k + 1):
        if w[p:p + k] != alpha:
            continue
        beta = w[p + k:n - k]
        for g in range(0, min(m, p) + 1):
            if bounded and g != p:
                continue
            yield Decomposition(w[:p - g], w[p - g:p], alpha, beta, "right")


def left_decompositions(w: Word, m: int, k: int, alphabet: Alphabet, bounded: bool = False) -> Iterator[Decomposition]:
    """All ``(alpha, beta, gamma, delta)`` with ``w = alpha beta rc(alpha) gamma delta``."""
    w = tuple(w)
    n = len(w)
    if n < 2 * k:
        return
    alpha = w[:k]
    stem = alphabet.rc(alpha)
    # rc(alpha) starts at q >= k
    for q in range(k, n - k + 1):
        if w[q:q + k] != stem:
            continue
        beta = w[k:q]
        tail = n - (q + k)
        for g in range(0, min(m, tail) + 1):
            if bounded and g != tail:
                continue
            yield Decomposition(w[q + k + g:], w[q + k:q + k + g], alpha, beta, "left")


def _one_side(w: Word, p: HiParams, side: str, alphabet: Alphabet, bounded: bool) -> set:
    if side == "right":
        return {w + alphabet.rc(d.gamma) for d in right_decompositions(w, p.m, p.k, alphabet, bounded)}
    return {alphabet.rc(d.gamma) + w for d in left_decompositions(w, p.m, p.k, alphabet, bounded)}


def _step_words(w: Word, p: HiParams, alphabet: Alphabet) -> set:
    sides = ("right", "left") if p.side == "both" else (p.side,)
    out = set()
    for side in sides:
        # each side falls back to {w} on its own when it has no decomposition
        out |= _one_side(w, p, side, alphabet, False) or {w}
    return out


def hi_step(w, p: HiParams, alphabet: Alphabet) -> LanguageSet:
    """One application of the incompletion operator to a single word.

    The result always contains ``w``: either through ``gamma = lambda`` or,
    when no decomposition exists, through the convention that an
    inapplicable word maps to itself.
    """
    w = alphabet.check_word(w)
    return LanguageSet(_step_words(w, p, alphabet), alphabet)


def hi_step_language(lang: Iterable, p: HiParams, alphabet: Alphabet) -> LanguageSet:
    out = set()
    for w in lang:
        out |= _step_words(alphabet.check_word(w), p, alphabet)
    return LanguageSet(out, alphabet)


def hi_iter(lang: Iterable, p: HiParams, n: int, alphabet: Alphabet) -> LanguageSet:
    """The ``n``-fold composition of :func:`hi_step`, applied pointwise over ``lang``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    current = {alphabet.check_word(w) for w in lang}
    for _ in range(n):
        nxt = set()
        for w in current:
            nxt |= _step_words(w, p, alphabet)
        current = nxt
    return LanguageSet(current, alphabet)


def bhc_step(w, p: HiParams, alphabet: Alphabet) -> LanguageSet:
    """Bounded hairpin completion: :func:`hi_step` restricted to ``delta = lambda``.

    No fallback to ``{w}``; the result may be empty.
    """
    w = alphabet.check_word(w)
    sides = ("right", "left") if p.side == "both" else (p.side,)
    out = set()
    for side in sides:
        out |= _one_side(w, p, side, alphabet, True)
    return LanguageSet(out, alphabet)


@dataclass
class ClosureReport:
    words: LanguageSet
    max_len: int
    oversized_seeds: list = field(default_factory=list)
    expanded: int = 0


def hi_closure_report(
    lang: Iterable,
    p: HiParams,
    max_len: int,
    alphabet: Alphabet,
    word_cap: int = DEFAULT_WORD_CAP,
    keep: Callable[[Word], bool] | None = None,
) -> ClosureReport:
    """Worklist fixed point of :func:`hi_step` restricted to words of length <= ``max_len``.

    Every step output is at least as long as its input, so any closure
    member within the bound is reachable through words within the bound.
    Seeds longer than ``max_len`` are kept as they are and listed in
    ``oversized_seeds``.

    ``keep`` optionally discards words (and everything derived from them);
    it must be inherited, i.e. if ``keep(w)`` is false then it is false for
    every word derived from ``w``.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    seeds = sorted({alphabet.check_word(w) for w in lang}, key=alphabet.sort_key)
    seen: set = set()
    oversized = []
    queue: deque = deque()
    for w in seeds:
        if len(w) > max_len:
            oversized.append(w)
            seen.add(w)
            continue
        if keep is not None and not keep(w):
            continue
        seen.add(w)
        queue.append(w)
    if oversized:
        log.warning("%d seed(s) longer than %d passed through unexpanded", len(oversized), max_len)
    if len(seen) > word_cap:
        raise CapExceeded("word", word_cap, len(seen))
    expanded = 0
    while queue:
        w = queue.popleft()
        expanded += 1
        fresh = []
        for v in _step_words(w, p, alphabet):
            if len(v) > max_len or v in seen:
                continue
            if keep is not None and not keep(v):
                continue
            fresh.append(v)
        fresh.sort(key=alphabet.sort_key)
        for v in fresh:
            seen.add(v)
            queue.append(v)
        if len(seen) > word_cap:
            raise CapExceeded("word", word_cap, len(seen))
    return ClosureReport(LanguageSet(seen, alphabet), max_len, oversized, expanded)


def hi_closure_bounded(
    lang: Iterable,
    p: HiParams,
    max_len: int,
    alphabet: Alphabet,
    word_cap: int = DEFAULT_WORD_CAP,
    keep: Callable[[Word], bool] | None = None,
) -> LanguageSet:
    """The iterated closure intersected with words of length <= ``max_len``."""
    return hi_closure_report(lang, p, max_len, alphabet, word_cap, keep).words
