"""Encoding a right-linear grammar as one strand whose (1,1)-closure simulates it.

The strand is a run of barred blocks ``~# ~[a,Y] ~[b,X]`` followed by the
head token ``[λ,S]``. A head ``[b,X]`` anneals to ``~[b,X]``; the polymerase
copies the token just before it, appending ``[a,Y]``, which is the next
head. Copying across ``~#`` appends ``#`` instead, and every strand with a
``#`` is filtered out. A finished strand ends in a terminal token
``[a,λ]``; erasing everything but the letters of unbarred tokens yields a
word of the grammar.
"""
from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field

from .core import Alphabet, LanguageSet, Word
from .errors import ShapeError
from .hairpin import DEFAULT_WORD_CAP, HiParams, hi_closure_bounded

LAMBDA_NAME = "λ"
HASH = "#"


def token(a: str, x: str | None) -> str:
    return f"[{a},{LAMBDA_NAME if x is None else x}]"


def barred(tok: str) -> str:
    return "~" + tok


@dataclass(frozen=True)
class SourceRegularGrammar:
    """λ-free right-linear grammar: productions ``(X, a, Y)`` for ``X -> aY`` and ``(X, a, None)`` for ``X -> a``."""

    nonterminals: tuple
    terminals: tuple
    productions: tuple
    start: str = "S"

    def __post_init__(self):
        nts, ts = set(self.nonterminals), set(self.terminals)
        if self.start not in nts:
            raise ShapeError(f"start symbol {self.start!r} is not a nonterminal")
        if nts & ts:
            raise ShapeError("nonterminals and terminals must be disjoint")
        if not self.productions:
            raise ShapeError("the grammar has no productions")
        for prod in self.productions:
            if len(prod) != 3:
                raise ShapeError(f"production {prod!r} is not of the form X -> aY or X -> a")
            x, a, y = prod
            if x not in nts or a not in ts or (y is not None and y not in nts):
                raise ShapeError(f"production {prod!r} is not right-linear over this grammar")

    def language(self, max_len: int) -> LanguageSet:
        """Words of length <= ``max_len``, by direct derivation."""
        table: dict = {}
        for x, a, y in self.productions:
            table.setdefault(x, []).append((a, y))
        out = set()
        seen = {((), self.start)}
        queue = deque(seen)
        while queue:
            w, x = queue.popleft()
            if len(w) >= max_len:
                continue
            for a, y in table.get(x, ()):
                v = w + (a,)
                if y is None:
                    out.add(v)
                elif (v, y) not in seen:
                    seen.add((v, y))
                    queue.append((v, y))
        return LanguageSet(out, _plain_alphabet(self.terminals))

    def to_json(self) -> dict:
        return {
            "nonterminals": list(self.nonterminals),
            "terminals": list(self.terminals),
            "start": self.start,
            "productions": [list(p) for p in self.productions],
        }

    @classmethod
    def from_json(cls, doc: dict) -> SourceRegularGrammar:
        prods = []
        for p in doc["productions"]:
            if len(p) == 2:
                p = (p[0], p[1], None)
            prods.append(tuple(p))
        return cls(tuple(doc["nonterminals"]), tuple(doc["terminals"]), tuple(prods), doc.get("start", "S"))


def _plain_alphabet(terminals) -> Alphabet:
    return Alphabet(terminals, {a: a for a in terminals})


@dataclass(frozen=True)
class EncodedInstance:
    grammar: SourceRegularGrammar
    v_prime: Alphabet
    v_dprime: frozenset
    strand: Word
    coding: dict = field(compare=False)
    hash_symbol: str = HASH

    def h(self, w) -> Word:
        """The weak coding: keep the letter of each unbarred ``[a,X]`` token, erase the rest."""
        out = []
        for t in w:
            out.extend(self.coding[t])
        return tuple(out)

    def passes_filter(self, w, exclude_hash: bool = True) -> bool:
        if not w or w[-1] not in self.v_dprime:
            return False
        return not (exclude_hash and self.hash_symbol in w)

    def decode(self, w) -> list:
        """Read the appended tokens of an accepted strand back as a list of productions.

        Raises ``ShapeError`` if they do not form a derivation of the grammar.
        """
        w = tuple(w)
        n = len(self.strand)
        if w[:n] != self.strand:
            raise ShapeError("word does not extend the strand")
        prods = set(self.grammar.productions)
        state = self.grammar.start
        steps = []
        for i, t in enumerate(w[n:]):
            a, y = _parse_token(t)
            if a is None or state is None:
                raise ShapeError(f"token {t!r} cannot continue a derivation")
            if (state, a, y) not in prods:
                raise ShapeError(f"{state} -> {a}{y or ''} is not a production")
            steps.append((state, a, y))
            state = y
        if state is not None:
            raise ShapeError("derivation does not end with a terminal production")
        return steps

    def to_json(self) -> dict:
        return {
            "grammar": self.grammar.to_json(),
            "v_prime": self.v_prime.to_json(),
            "v_dprime": sorted(self.v_dprime, key=self.v_prime.sort_key_token),
            "strand": list(self.strand),
            "coding": {t: "".join(self.coding[t]) for t in self.v_prime.symbols},
            "hash_symbol": self.hash_symbol,
        }


def _parse_token(t: str):
    if not (t.startswith("[") and t.endswith("]")) or "," not in t:
        return None, None
    a, x = t[1:-1].split(",", 1)
    return a, (None if x == LAMBDA_NAME else x)


class _TokenAlphabet(Alphabet):
    __slots__ = ()

    def sort_key_token(self, t):
        return self.index[t]


def encode_regular_grammar(G: SourceRegularGrammar) -> EncodedInstance:
    """Build the strand, alphabets and weak coding for ``G``.

    One block ``~# ~[a,Y] ~[b,X]`` per production ``X -> aY`` (``Y = λ``
    for ``X -> a``) and per letter ``b`` that can precede ``X`` in a head
    token; the start nonterminal is additionally entered from ``[λ,S]``.
    """
    V, N, S = G.terminals, G.nonterminals, G.start
    heads = [token(a, x) for x in list(N) + [None] for a in V]
    start_tok = token(LAMBDA_NAME, S)
    symbols = heads + [start_tok, HASH]
    pairs = [(t, barred(t)) for t in symbols]
    v_prime = _TokenAlphabet([s for p in pairs for s in p], pairs)
    v_dprime = frozenset(token(a, None) for a in V)
    coding = {t: () for t in v_prime.symbols}
    for x in list(N) + [None]:
        for a in V:
            coding[token(a, x)] = (a,)
    strand = []
    for x, a, y in G.productions:
        sources = list(V) + ([LAMBDA_NAME] if x == S else [])
        for b in sources:
            strand += [barred(HASH), barred(token(a, y)), barred(token(b, x))]
    strand.append(start_tok)
    return EncodedInstance(G, v_prime, v_dprime, tuple(strand), coding)


def universal_language_bounded(inst: EncodedInstance, max_len: int, slack: int = 1,
                               exclude_hash: bool = True, word_cap: int = DEFAULT_WORD_CAP) -> LanguageSet:
    """``h(closure(strand) ∩ filter)`` truncated to words of length <= ``max_len``.

    Each productive step appends one token, so strands up to
    ``|strand| + max_len + slack`` suffice. With ``exclude_hash`` strands
    carrying ``#`` are pruned while the closure is built: the strand is only
    ever extended on the right, so a ``#`` never goes away again.
    """
    bound = len(inst.strand) + max_len + slack
    keep = (lambda w: inst.hash_symbol not in w) if exclude_hash else None
    closure = hi_closure_bounded([inst.strand], HiParams(1, 1, "right"), bound, inst.v_prime, word_cap, keep)
    images = {inst.h(w) for w in closure if inst.passes_filter(w, exclude_hash)}
    return LanguageSet((v for v in images if len(v) <= max_len), _plain_alphabet(inst.grammar.terminals))


@dataclass
class UniversalReport:
    grammar_language: LanguageSet
    universal_language: LanguageSet
    equal: bool
    counterexample: tuple | None
    bound_stable: bool
    strand_length: int

    def to_json(self) -> dict:
        return {
            "equal": self.equal,
            "bound_stable": self.bound_stable,
            "counterexample": None if self.counterexample is None else "".join(self.counterexample),
            "strand_length": self.strand_length,
            "grammar_language": ["".join(w) for w in self.grammar_language],
            "universal_language": ["".join(w) for w in self.universal_language],
        }


def verify_universal(G: SourceRegularGrammar, max_len: int, instance: EncodedInstance | None = None) -> UniversalReport:
    """Compare ``L(G)`` with the strand's filtered closure image up to ``max_len``."""
    inst = instance if instance is not None else encode_regular_grammar(G)
    lhs = G.language(max_len)
    rhs = universal_language_bounded(inst, max_len)
    wider = universal_language_bounded(inst, max_len, slack=2)
    diff = sorted(set(lhs) ^ set(rhs), key=lambda w: (len(w), w))
    return UniversalReport(lhs, rhs, not diff, diff[0] if diff else None, wider == rhs, len(inst.strand))


def random_regular_grammar(rng: random.Random, max_nonterminals: int = 3, max_productions: int = 5,
                           terminals=("a", "b")) -> SourceRegularGrammar:
    n = rng.randint(1, max_nonterminals)
    nts = ("S", "X", "Y", "Z", "W")[:n] if n <= 5 else tuple(f"N{i}" for i in range(n))
    count = min(rng.randint(1, max_productions), n * len(terminals) * (n + 1))
    prods = []
    while len(prods) < count:
        x = rng.choice(nts)
        a = rng.choice(terminals)
        y = rng.choice(list(nts) + [None])
        if (x, a, y) not in prods:
            prods.append((x, a, y))
    return SourceRegularGrammar(nts, tuple(terminals), tuple(prods), "S")


def load_source_grammar(path) -> SourceRegularGrammar:
    with open(path) as fh:
        return SourceRegularGrammar.from_json(json.load(fh))
