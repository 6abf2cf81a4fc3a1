"""Grammars whose languages are iterated incompletion closures.

``build_gw`` makes a right-linear grammar (left-linear for the left side)
whose nonterminals are the signature classes reachable from one seed word.
``build_gl`` makes a linear grammar for the two-sided closure of a finite
language; its words look like ``r_1 .. r_n $ l_n .. l_1 a_i`` and
:func:`reconstruct_closure` turns them back into closure words by a
circular permutation, a left derivative by ``$`` and a substitution of the
class marker ``a_i`` by the seed class ``A_i``.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .core import (
    Alphabet, LanguageSet, Word, circular_permutations, left_derivative, right_derivative, substitute,
)
from .errors import CapExceeded, LengthError, ShapeError
from .signature import (
    applicable_completions, compute_full_signature, compute_signature, extend_left_word,
    extend_right_word, signature_from_json,
)

DEFAULT_CLASS_CAP = 10**4
DEFAULT_FORM_CAP = 10**6


@dataclass(frozen=True)
class Production:
    """``lhs -> pre nt post``; ``nt`` is None for a terminal production."""

    lhs: str
    pre: Word = ()
    nt: str | None = None
    post: Word = ()

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "pre": list(self.pre), "nt": self.nt, "post": list(self.post)}

    @classmethod
    def from_json(cls, d: dict) -> Production:
        return cls(d["lhs"], tuple(d["pre"]), d["nt"], tuple(d["post"]))


@dataclass(frozen=True)
class Grammar:
    alphabet: Alphabet
    m: int
    k: int
    side: str
    nonterminals: tuple
    terminals: tuple
    productions: tuple
    class_table: dict = field(default_factory=dict)
    start: str = "S"

    kind = "grammar"

    def by_lhs(self) -> dict:
        table: dict = {}
        for p in self.productions:
            table.setdefault(p.lhs, []).append(p)
        return table

    def check(self):
        """Raise ``ShapeError`` if a production refers to an unknown nonterminal."""
        names = set(self.nonterminals)
        for p in self.productions:
            if p.lhs not in names or (p.nt is not None and p.nt not in names):
                raise ShapeError(f"production {p} mentions an unknown nonterminal")
        sigs = list(self.class_table.values())
        if len(set(sigs)) != len(sigs):
            raise ShapeError("class_table signatures are not pairwise distinct")


@dataclass(frozen=True)
class RightLinearGrammar(Grammar):
    kind = "right_linear"


@dataclass(frozen=True)
class LinearGrammar(Grammar):
    class_markers: dict = field(default_factory=dict)
    dollar: str = "$"

    kind = "linear"

    @property
    def right_blocks(self) -> set:
        return {p.pre for p in self.productions if p.lhs != self.start and p.nt is not None and p.pre} | {()}

    @property
    def left_blocks(self) -> set:
        return {p.post for p in self.productions if p.lhs != self.start and p.nt is not None and p.post} | {()}


def _fresh(name: str, taken) -> str:
    while name in taken:
        name += "'"
    return name


def _sorted_completions(sig) -> list:
    return sorted((r for r in applicable_completions(sig) if r), key=sig.alphabet.sort_key)


# -- G_w ----------------------------------------------------------------------

def build_gw(w, m: int, k: int, alphabet: Alphabet, side: str = "right",
             class_cap: int = DEFAULT_CLASS_CAP) -> RightLinearGrammar:
    """Grammar generating the one-sided iterated closure of the single word ``w``.

    Classes are discovered breadth-first from the signature of ``w``; each
    non-empty applicable completion becomes a production into the class of
    the extended signature. Empty completions are skipped since extending by
    the empty word stays in the same class and ``D_i -> lambda`` already
    ends derivations.
    """
    if side not in ("right", "left"):
        raise ValueError("build_gw side must be 'right' or 'left'")
    w = alphabet.check_word(w)
    if len(w) < 2 * k:
        raise LengthError(f"build_gw needs |w| >= 2k = {2 * k}, got {len(w)}")
    taken = set(alphabet.symbols)
    start = _fresh("S", taken)
    sig0 = compute_signature(w, m, k, alphabet, side)
    names: dict = {}
    order: list = []

    def name_of(sig):
        if sig not in names:
            if len(names) >= class_cap:
                raise CapExceeded("class", class_cap, len(names) + 1)
            names[sig] = _fresh(f"D{len(names) + 1}", taken)
            order.append(sig)
            queue.append(sig)
        return names[sig]

    queue: deque = deque()
    first = name_of(sig0)
    if side == "right":
        prods = [Production(start, w, first, ())]
    else:
        prods = [Production(start, (), first, w)]
    while queue:
        sig = queue.popleft()
        lhs = names[sig]
        for r in _sorted_completions(sig):
            if side == "right":
                prods.append(Production(lhs, r, name_of(extend_right_word(sig, r)), ()))
            else:
                prods.append(Production(lhs, (), name_of(extend_left_word(r, sig)), r))
        prods.append(Production(lhs))
    return RightLinearGrammar(
        alphabet=alphabet, m=m, k=k, side=side,
        nonterminals=(start,) + tuple(names[s] for s in order),
        terminals=alphabet.symbols,
        productions=tuple(prods),
        class_table={names[s]: s for s in order},
        start=start,
    )


# -- enumeration --------------------------------------------------------------

def sentential_forms(G: Grammar, max_len: int, form_cap: int = DEFAULT_FORM_CAP):
    """Every reachable ``(pre, nt, post)`` with at most ``max_len`` terminals, and the terminal words.

    Returns ``(forms, words)``; ``forms`` is in breadth-first discovery order.
    Pruning by length is exact because no production removes terminals.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    table = G.by_lhs()
    start = ((), G.start, ())
    seen = {start}
    forms = [start]
    queue = deque([start])
    words = set()
    while queue:
        pre, nt, post = queue.popleft()
        for p in table.get(nt, ()):
            npre = pre + p.pre
            npost = p.post + post
            if len(npre) + len(npost) > max_len:
                continue
            if p.nt is None:
                words.add(npre + npost)
                continue
            form = (npre, p.nt, npost)
            if form in seen:
                continue
            seen.add(form)
            forms.append(form)
            queue.append(form)
            if len(seen) > form_cap:
                raise CapExceeded("sentential form", form_cap, len(seen))
    return forms, LanguageSet(words, G.alphabet)


def enumerate_grammar(G: Grammar, max_len: int, form_cap: int = DEFAULT_FORM_CAP) -> LanguageSet:
    """All words of ``L(G)`` with length <= ``max_len``."""
    return sentential_forms(G, max_len, form_cap)[1]


# -- class decomposition of the one-sided closure -------------------------------

def closure_via_classes(lang: Iterable, m: int, k: int, alphabet: Alphabet, side: str = "right",
                        max_len: int = 10, class_cap: int = DEFAULT_CLASS_CAP,
                        form_cap: int = DEFAULT_FORM_CAP) -> LanguageSet:
    """One-sided bounded closure assembled as ``L2 + union_i [w_i] R_i``.

    Short words (``|w| < 2k``) admit no hairpin and pass through. Longer
    words are grouped by signature; one grammar per class gives the common
    quotient ``R_i``, which is then attached to every member of the class.
    """
    if side not in ("right", "left"):
        raise ValueError("closure_via_classes is one-sided: side must be 'right' or 'left'")
    words = sorted({alphabet.check_word(w) for w in lang}, key=alphabet.sort_key)
    out = {w for w in words if len(w) < 2 * k}
    classes: dict = {}
    for w in words:
        if len(w) >= 2 * k:
            classes.setdefault(compute_signature(w, m, k, alphabet, side), []).append(w)
    for members in classes.values():
        rep = members[0]  # shortest, so R_i is enumerated far enough for every member
        G = build_gw(rep, m, k, alphabet, side, class_cap)
        lang_rep = enumerate_grammar(G, max(max_len, len(rep)), form_cap)
        if side == "right":
            quotient = left_derivative(rep, lang_rep)
            attached = (w + r for w in members for r in quotient)
        else:
            quotient = right_derivative(lang_rep, rep)
            attached = (r + w for w in members for r in quotient)
        out.update(v for v in attached if len(v) <= max_len)
        out.update(members)
    return LanguageSet(out, alphabet)


# -- G_L ----------------------------------------------------------------------

def build_gl(lang: Iterable, m: int, k: int, alphabet: Alphabet,
             class_cap: int = DEFAULT_CLASS_CAP) -> LinearGrammar:
    """Linear grammar for the two-sided iterated closure of a finite language.

    Seeds are grouped into full-signature classes ``A_1 .. A_u`` with
    markers ``a_1 .. a_u``; nonterminals ``E_i`` are the full-signature
    classes reachable from them by right and left completions.
    """
    words = sorted({alphabet.check_word(w) for w in lang}, key=alphabet.sort_key)
    short = [w for w in words if len(w) < 2 * k]
    if short:
        raise LengthError(f"build_gl seeds must have length >= 2k = {2 * k}; got {short[0]!r}")
    taken = set(alphabet.symbols)
    start = _fresh("S", taken)
    taken.add(start)
    dollar = _fresh("$", taken)
    taken.add(dollar)

    seed_classes: dict = {}
    for w in words:
        seed_classes.setdefault(compute_full_signature(w, m, k, alphabet), []).append(w)
    markers = {}
    for i, members in enumerate(seed_classes.values(), 1):
        name = _fresh(f"a_{i}", taken)
        taken.add(name)
        markers[name] = LanguageSet(members, alphabet)

    names: dict = {}
    order: list = []
    queue: deque = deque()

    def name_of(sig):
        if sig not in names:
            if len(names) >= class_cap:
                raise CapExceeded("class", class_cap, len(names) + 1)
            names[sig] = _fresh(f"E{len(names) + 1}", taken)
            order.append(sig)
            queue.append(sig)
        return names[sig]

    prods = []
    for marker, sig in zip(markers, seed_classes):
        prods.append(Production(start, (), name_of(sig), (marker,)))
    while queue:
        sig = queue.popleft()
        lhs = names[sig]
        for r in _sorted_completions(sig.right):
            prods.append(Production(lhs, r, name_of(extend_right_word(sig, r)), ()))
        for l in _sorted_completions(sig.left):
            prods.append(Production(lhs, (), name_of(extend_left_word(l, sig)), l))
        prods.append(Production(lhs, (dollar,), None, ()))
    return LinearGrammar(
        alphabet=alphabet, m=m, k=k, side="both",
        nonterminals=(start,) + tuple(names[s] for s in order),
        terminals=alphabet.symbols + tuple(markers) + (dollar,),
        productions=tuple(prods),
        class_table={names[s]: s for s in order},
        start=start,
        class_markers=markers,
        dollar=dollar,
    )


def reconstruct_closure(G: LinearGrammar, max_len: int, form_cap: int = DEFAULT_FORM_CAP) -> LanguageSet:
    """Two-sided bounded closure recovered from ``L(G_L)``.

    Grammar words carry two extra tokens (``$`` and the marker) on top of
    the blocks, so enumerating to ``max_len + 2`` reaches every block
    combination that can fit in ``max_len``.
    """
    budget = max_len + 2
    lg = enumerate_grammar(G, budget, form_cap)
    rotated = circular_permutations(lg)
    stripped = left_derivative((G.dollar,), rotated)

    def image(a):
        if a in G.class_markers:
            return G.class_markers[a]
        return [(a,)]

    full = substitute(stripped, image, G.alphabet)
    return full.truncate(max_len)


# -- export -------------------------------------------------------------------

def grammar_to_json(G: Grammar) -> dict:
    doc = {
        "kind": G.kind,
        "start": G.start,
        "nonterminals": list(G.nonterminals),
        "terminals": list(G.terminals),
        "productions": [p.to_json() for p in G.productions],
        "class_table": {nt: sig.to_json() for nt, sig in G.class_table.items()},
        "class_markers": {},
        "alphabet": G.alphabet.to_json(),
        "params": {"m": G.m, "k": G.k, "side": G.side},
    }
    if isinstance(G, LinearGrammar):
        doc["class_markers"] = {a: [list(w) for w in ws] for a, ws in G.class_markers.items()}
        doc["dollar"] = G.dollar
    return doc


def grammar_from_json(doc: dict) -> Grammar:
    alphabet = Alphabet.from_json(doc["alphabet"])
    params = doc["params"]
    common = dict(
        alphabet=alphabet, m=params["m"], k=params["k"], side=params["side"],
        nonterminals=tuple(doc["nonterminals"]),
        terminals=tuple(doc["terminals"]),
        productions=tuple(Production.from_json(p) for p in doc["productions"]),
        class_table={nt: signature_from_json(s, alphabet) for nt, s in doc["class_table"].items()},
        start=doc["start"],
    )
    if doc["kind"] == "linear":
        markers = {a: LanguageSet((tuple(w) for w in ws), alphabet) for a, ws in doc["class_markers"].items()}
        return LinearGrammar(**common, class_markers=markers, dollar=doc.get("dollar", "$"))
    if doc["kind"] == "right_linear":
        return RightLinearGrammar(**common)
    raise ShapeError(f"unknown grammar kind {doc['kind']!r}")


def _dot_label(w) -> str:
    return " ".join(w) if w else "λ"


def grammar_to_dot(G: Grammar) -> str:
    lines = [f'digraph "{G.kind}" {{', "  rankdir=LR;"]
    finals = {}
    for p in G.productions:
        if p.nt is None:
            finals.setdefault(p.lhs, []).append(_dot_label(p.pre + p.post))
    for nt in G.nonterminals:
        attrs = [f'label="{nt}"']
        if nt in finals:
            attrs.append("shape=doublecircle")
            attrs.append(f'xlabel="→ {" | ".join(finals[nt])}"')
        lines.append(f'  "{nt}" [{", ".join(attrs)}];')
    for p in G.productions:
        if p.nt is None:
            continue
        label = f"{_dot_label(p.pre)} · _ · {_dot_label(p.post)}"
        lines.append(f'  "{p.lhs}" -> "{p.nt}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_grammar(G: Grammar, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(grammar_to_json(G), indent=2, ensure_ascii=False) + "\n"
    if fmt == "dot":
        return grammar_to_dot(G)
    raise ValueError(f"unknown grammar format {fmt!r}")


def import_grammar(text: str) -> Grammar:
    return grammar_from_json(json.loads(text))
