"""Brute-force oracles written straight from the definitions.

Nothing here imports hpkit internals except the alphabet, so these stay
independent of the code paths under test.
"""
from itertools import combinations_with_replacement, product

PAIRS = {"a": "b", "b": "a"}


def bar(w, pairs=PAIRS):
    return tuple(pairs[c] for c in w)


def rc(w, pairs=PAIRS):
    out = [pairs[c] for c in w]
    out.reverse()
    return tuple(out)


def all_words(max_len, min_len=0, symbols="ab"):
    out = []
    for n in range(min_len, max_len + 1):
        out.extend(tuple(p) for p in product(symbols, repeat=n))
    return out


def splits(w, parts):
    """Every way to cut ``w`` into ``parts`` consecutive (possibly empty) pieces."""
    n = len(w)
    for cuts in combinations_with_replacement(range(n + 1), parts - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(tuple(w[bounds[i]:bounds[i + 1]]) for i in range(parts))


def rhi(w, m, k, pairs=PAIRS, bounded=False):
    """Right incompletion by cutting w into (delta, gamma, alpha, beta, tail)."""
    w = tuple(w)
    out = set()
    for delta, gamma, alpha, beta, tail in splits(w, 5):
        if len(alpha) == k and len(gamma) <= m and tail == rc(alpha, pairs):
            if bounded and delta:
                continue
            out.add(w + rc(gamma, pairs))
    return out


def lhi(w, m, k, pairs=PAIRS, bounded=False):
    w = tuple(w)
    out = set()
    for alpha, beta, head, gamma, delta in splits(w, 5):
        if len(alpha) == k and len(gamma) <= m and head == rc(alpha, pairs):
            if bounded and delta:
                continue
            out.add(rc(gamma, pairs) + w)
    return out


def hi(w, m, k, side, pairs=PAIRS):
    w = tuple(w)
    out = set()
    if side in ("right", "both"):
        out |= rhi(w, m, k, pairs) or {w}
    if side in ("left", "both"):
        out |= lhi(w, m, k, pairs) or {w}
    return out


def closure(seeds, m, k, side, max_len, pairs=PAIRS):
    """Iterate level by level until a round adds nothing (not a worklist)."""
    seen = {tuple(w) for w in seeds}
    level = {w for w in seen if len(w) <= max_len}
    while level:
        nxt = set()
        for w in level:
            nxt |= {v for v in hi(w, m, k, side, pairs) if len(v) <= max_len}
        level = nxt - seen
        seen |= level
    return seen


def right_pairs(w, m, k, pairs=PAIRS):
    """C_{m,k}(w) by enumerating every factorisation w = w1 xy w2."""
    w = tuple(w)
    out = set()
    for w1, xy, w2 in splits(w, 3):
        if not k <= len(xy) <= m + k:
            continue
        y = xy[len(xy) - k:]
        sufs = {w2[len(w2) - j:] for j in range(0, min(k, len(w2)) + 1)}
        prefs = {rc(y, pairs)[:j] for j in range(k + 1)}
        for z in sufs & prefs:
            out.add((xy, z))
    return out


def left_pairs(w, m, k, pairs=PAIRS):
    """C'_{m,k}(w) by enumerating every factorisation w = w1 yx w2."""
    w = tuple(w)
    out = set()
    for w1, yx, w2 in splits(w, 3):
        if not k <= len(yx) <= m + k:
            continue
        y = yx[:k]
        prefs = {w1[:j] for j in range(0, min(k, len(w1)) + 1)}
        target = rc(y, pairs)
        sufs = {target[k - j:] for j in range(k + 1)}
        for z in prefs & sufs:
            out.add((z, yx))
    return out


def regular_language(productions, start, max_len):
    """Words of a right-linear grammar given as (X, a, Y|None) triples, by recursion."""
    out = set()

    def go(prefix, x):
        if len(prefix) >= max_len:
            return
        for lhs, a, y in productions:
            if lhs != x:
                continue
            if y is None:
                out.add(prefix + (a,))
            else:
                go(prefix + (a,), y)

    go((), start)
    return out
