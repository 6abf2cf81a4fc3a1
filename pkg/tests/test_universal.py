import dataclasses
import json
import random

import pytest

import oracles as o
from conftest import S, W
from hpkit.errors import ShapeError
from hpkit.hairpin import HiParams, hi_closure_bounded
from hpkit.universal import (
    HASH, SourceRegularGrammar, barred, encode_regular_grammar, load_source_grammar, random_regular_grammar,
    token, universal_language_bounded, verify_universal,
)

A_STAR = SourceRegularGrammar(("S",), ("a",), (("S", "a", "S"), ("S", "a", None)))
AB = SourceRegularGrammar(("S", "X"), ("a", "b"), (("S", "a", "X"), ("X", "b", None)))
A_STAR_B = SourceRegularGrammar(("S",), ("a", "b"), (("S", "a", "S"), ("S", "b", None)))


def test_pinned_strand():
    inst = encode_regular_grammar(A_STAR)
    block = lambda a, y, b: ["~#", f"~[{a},{y}]", f"~[{b},S]"]  # noqa: E731
    expected = block("a", "S", "a") + block("a", "S", "λ") + block("a", "λ", "a") + block("a", "λ", "λ") + ["[λ,S]"]
    assert list(inst.strand) == expected
    assert inst.v_dprime == {token("a", None)}


def test_pinned_language():
    inst = encode_regular_grammar(A_STAR)
    assert set(universal_language_bounded(inst, 3)) == S("a", "aa", "aaa")
    assert set(universal_language_bounded(inst, 0)) == set()
    assert verify_universal(A_STAR, 4).equal


def test_weak_coding():
    inst = encode_regular_grammar(AB)
    assert inst.h(inst.strand) == ()
    assert inst.h([barred(t) for t in (token("a", "X"), token("b", None))]) == ()
    assert inst.h([token("a", "X"), HASH, token("b", None), "[λ,S]"]) == W("ab")


def test_zero_productions_are_rejected():
    with pytest.raises(ShapeError):
        SourceRegularGrammar(("S",), ("a",), ())
    with pytest.raises(ShapeError):
        SourceRegularGrammar(("S",), ("a",), (("S", "b", None),))


def test_grammar_with_empty_language():
    G = SourceRegularGrammar(("S", "X"), ("a", "b"), (("S", "a", "S"), ("X", "b", None)))
    assert set(G.language(6)) == set()
    assert set(universal_language_bounded(encode_regular_grammar(G), 5)) == set()


def test_direct_derivation_matches_recursive_oracle():
    rng = random.Random(11)
    for _ in range(20):
        G = random_regular_grammar(rng)
        assert set(G.language(6)) == o.regular_language(G.productions, G.start, 6)


@pytest.mark.parametrize("seed", range(30))
def test_random_grammars(seed):
    G = random_regular_grammar(random.Random(seed), max_nonterminals=2)
    report = verify_universal(G, 5)
    assert report.equal and report.bound_stable
    assert set(report.grammar_language) == o.regular_language(G.productions, G.start, 5)


def test_filter_is_needed():
    inst = encode_regular_grammar(AB)
    strict = set(universal_language_bounded(inst, 4))
    loose = set(universal_language_bounded(inst, 4, exclude_hash=False))
    assert strict == S("ab")
    assert strict < loose and W("aab") in loose


def _closure(inst, max_len, exclude_hash):
    keep = (lambda w: HASH not in w) if exclude_hash else None
    bound = len(inst.strand) + max_len + 1
    return hi_closure_bounded([inst.strand], HiParams(1, 1, "right"), bound, inst.v_prime, keep=keep)


@pytest.mark.parametrize("G", [A_STAR, AB, A_STAR_B])
def test_accepted_strands_decode_to_derivations(G):
    inst = encode_regular_grammar(G)
    for w in _closure(inst, 4, True):
        if inst.passes_filter(w):
            steps = inst.decode(w)
            assert tuple(a for _, a, _ in steps) == inst.h(w)
            assert len(steps) == len(w) - len(inst.strand)


@pytest.mark.parametrize("G", [A_STAR, AB, A_STAR_B])
def test_hash_only_enters_by_copying_the_stopper(G):
    inst = encode_regular_grammar(G)
    n = len(inst.strand)
    assert HASH not in inst.strand
    closure = _closure(inst, 3, False)
    for w in closure:
        assert w[:n] == inst.strand
        assert all(not t.startswith("~") for t in w[n:])
        if HASH in w:
            assert not inst.passes_filter(w)
            i = w.index(HASH)
            # one token appended per step, so the strand just before # was reached too
            assert w[:i] in closure and w[:i + 1] in closure


def test_decode_rejects_foreign_words():
    inst = encode_regular_grammar(AB)
    with pytest.raises(ShapeError):
        inst.decode(("[a,X]",))
    with pytest.raises(ShapeError):
        inst.decode(inst.strand + ("[a,X]",))
    with pytest.raises(ShapeError):
        inst.decode(inst.strand + ("[b,λ]",))


def test_corrupted_strand_is_caught():
    inst = encode_regular_grammar(A_STAR_B)
    bad = tuple("~[a,λ]" if t == "~[b,λ]" else t for t in inst.strand)
    report = verify_universal(A_STAR_B, 4, dataclasses.replace(inst, strand=bad))
    assert not report.equal
    assert report.counterexample == W("a")


def test_json(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps(AB.to_json()))
    assert load_source_grammar(path) == AB
    doc = encode_regular_grammar(AB).to_json()
    assert doc["strand"][-1] == "[λ,S]"
    assert doc["coding"]["[a,X]"] == "a" and doc["coding"]["~[a,X]"] == ""
    report = verify_universal(AB, 3).to_json()
    assert report["equal"] and report["grammar_language"] == ["ab"]
