import json

import pytest
from hypothesis import given, strategies as st

import oracles as o
from conftest import S, W
from hpkit import Alphabet, LanguageSet
from hpkit.core import (
    circular_permutations, concat, factor_sets, left_derivative, pref, rc, right_derivative, substitute, suf,
)
from hpkit.errors import AlphabetError, LengthError

words = st.text(alphabet="ab", max_size=12).map(tuple)


def test_rc_examples(ab):
    assert rc((), ab) == ()
    assert rc(W("a"), ab) == W("b")
    assert rc(W("aab"), ab) == o.rc("aab") == W("abb")


@given(words)
def test_rc_is_an_involution_and_matches_oracle(w):
    A = Alphabet(["a", "b"], [("a", "b")])
    assert rc(rc(w, A), A) == w
    assert rc(w, A) == o.rc(w)


def test_rc_exhaustive_over_four_letters(acgt):
    pairs = {"A": "T", "T": "A", "C": "G", "G": "C"}
    for w in acgt.words_upto(6):
        assert acgt.rc(w) == o.rc(w, pairs)
        assert acgt.rc(acgt.rc(w)) == w


def test_rc_of_concatenation_reverses_order(ab):
    for u in ab.words_upto(4):
        for v in ab.words_upto(3):
            assert ab.rc(u + v) == ab.rc(v) + ab.rc(u)


def test_factor_sets_examples(ab):
    inf, p, s = factor_sets(W("aab"), 2)
    assert set(inf) == S("aa", "ab")
    assert set(p) == S("", "a", "aa")
    assert set(s) == S("", "b", "ab")
    inf, p, s = factor_sets((), 1)
    assert set(inf) == set() and set(p) == {()} and set(s) == {()}
    inf, p, s = factor_sets(W("ab"), 5)
    assert set(inf) == set()
    assert set(p) == S("", "a", "ab") and set(s) == S("", "b", "ab")


def test_factor_sets_zero_window_is_the_empty_word():
    inf, p, s = factor_sets(W("ab"), 0)
    assert set(inf) == {()} and set(p) == {()} and set(s) == {()}


def test_pref_suf_bounds():
    assert pref(W("abc"), 2) == W("ab")
    assert suf(W("abc"), 2) == W("bc")
    assert suf(W("abc"), 0) == ()
    with pytest.raises(LengthError):
        pref(W("ab"), 3)
    with pytest.raises(LengthError):
        suf(W("ab"), -1)


def test_circular_permutation_examples():
    assert set(circular_permutations([W("aab")])) == S("aab", "aba", "baa")
    assert set(circular_permutations([()])) == {()}
    assert set(circular_permutations([W("aa")])) == S("aa")


def _primitive(w):
    n = len(w)
    return all(w != w[d:] + w[:d] for d in range(1, n))


def test_circular_permutation_count_detects_primitivity(ab):
    for w in ab.words_upto(8, 1):
        n = len(set(circular_permutations([w])))
        assert n <= len(w)
        assert (n == len(w)) == _primitive(w)


def test_derivatives():
    L = [W("$ab"), W("$b"), W("c")]
    assert set(left_derivative(W("$"), L)) == S("ab", "b")
    assert set(left_derivative((), L)) == set(map(tuple, L))
    assert set(left_derivative(W("ab"), [W("a")])) == set()
    assert set(right_derivative([W("ab$"), W("a")], W("$"))) == S("ab")


def test_substitute_examples():
    f = {"x": [W("a"), W("b")], "y": [W("c")]}
    assert set(substitute([W("xy")], f)) == S("ac", "bc")
    assert set(substitute([()], f)) == {()}
    assert set(substitute([W("xx")], {"x": [W("a"), W("b")]})) == {
        (p, q) for p in "ab" for q in "ab"
    }


def test_substitute_distributes_over_union():
    f = {"x": [W("a"), W("bb")], "y": [(), W("c")]}
    L1, L2 = [W("xy"), W("y")], [W("yx"), W("xx")]
    assert set(substitute(L1 + L2, f)) == set(substitute(L1, f)) | set(substitute(L2, f))


def test_substitute_accepts_a_callable():
    assert set(substitute([W("ab")], lambda s: [(s, s)])) == S("aabb")


def test_concat():
    assert set(concat([W("a"), ()], [W("b")])) == S("ab", "b")


def test_language_set_orders_by_length_then_alphabet(ab):
    L = LanguageSet([W("ba"), W("b"), W("aa"), ()], ab)
    assert list(L) == [(), W("b"), W("aa"), W("ba")]
    assert L.to_json() == ["", "b", "aa", "ba"]
    assert set(L.truncate(1)) == {(), W("b")}


def test_alphabet_order_is_declared_order():
    A = Alphabet(["b", "a"], [("a", "b")])
    assert list(LanguageSet([W("a"), W("b")], A)) == [W("b"), W("a")]


def test_alphabet_json_round_trip(tmp_path, acgt):
    doc = acgt.to_json()
    assert Alphabet.from_json(doc) == acgt
    path = tmp_path / "a.json"
    path.write_text(json.dumps(doc))
    assert Alphabet.load(path) == acgt


def test_alphabet_rejects_bad_involutions():
    with pytest.raises(AlphabetError):
        Alphabet(["a", "b"], {"a": "b", "b": "b"})
    with pytest.raises(AlphabetError):
        Alphabet(["a", "b"], {"a": "b"})
    with pytest.raises(AlphabetError):
        Alphabet(["a"], {"a": "a"}, strict_wk=True)
    assert Alphabet(["a"], {"a": "a"}).rc(W("aa")) == W("aa")


def test_unknown_symbol_is_rejected(ab):
    with pytest.raises(AlphabetError):
        ab.check_word(W("abc"))
    with pytest.raises(AlphabetError):
        ab.parse_word("abx")
