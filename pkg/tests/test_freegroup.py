import pytest
from hypothesis import given, settings, strategies as st

from bigonslide.freegroup import (
    Word,
    abelianize,
    apply_map,
    cyclic_canonical,
    cyclic_reduce,
    is_primitive,
    minimize,
    primitivity_oracle,
    reduce,
    reduced_words,
)

words = st.text(alphabet="aAbB", max_size=14).map(reduce)


def test_reduce():
    assert reduce("abBA") == ""
    assert reduce("aabBAb") == "ab"
    with pytest.raises(ValueError):
        reduce("ac")


def test_cyclic():
    assert cyclic_reduce("Bab") == "a"
    assert cyclic_canonical("bab") == cyclic_canonical("abb") == "abb"


def test_abelianize():
    assert abelianize("babab" + "bb") == (2, 5)
    assert abelianize("AbaB") == (0, 0)


@pytest.mark.parametrize("w", ["a", "B", "ab", "abb", "aab", "aabab", "bbbab"])
def test_primitive_examples(w):
    assert is_primitive(w) and primitivity_oracle(w)


@pytest.mark.parametrize("w", ["", "aa", "abAB", "abab", "aabb", "bababbb", "bbbbbbbaba"])
def test_non_primitive_examples(w):
    assert not is_primitive(w) and not primitivity_oracle(w)


@pytest.mark.parametrize("t", range(4, 12))
def test_family_words_not_primitive(t):
    assert not is_primitive("baba" + "b" * (t - 2))
    assert not is_primitive("b" * (t + 3) + "aba")


def test_exhaustive_agreement_short_words():
    n = 0
    for w in reduced_words(6):
        assert is_primitive(w) == primitivity_oracle(w), w
        n += 1
    assert n == 4 * (3 ** 6 - 1) // 2


def test_oracle_depth():
    assert not primitivity_oracle("abb", depth=1)
    assert primitivity_oracle("abb", depth=2)
    with pytest.raises(ValueError):
        primitivity_oracle("a", depth=0)


@settings(max_examples=200, deadline=None)
@given(words)
def test_inverse_involution(w):
    assert reduce(w + w.inverse()) == ""
    assert Word(w).inverse().inverse() == w


@settings(max_examples=200, deadline=None)
@given(words, st.sampled_from([{"a": "ab", "b": "b"}, {"a": "a", "b": "Ab"}, {"a": "b", "b": "a"}]))
def test_primitivity_invariant_under_automorphisms(w, phi):
    assert is_primitive(w) == is_primitive(apply_map(w, phi))


@settings(max_examples=200, deadline=None)
@given(words)
def test_minimize_shortens(w):
    m = minimize(w)
    assert len(m) <= len(cyclic_reduce(w))
    assert minimize(m) == m


@settings(max_examples=100, deadline=None)
@given(words)
def test_matches_oracle(w):
    assert is_primitive(w) == primitivity_oracle(w)
