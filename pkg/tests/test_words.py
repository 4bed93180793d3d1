import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from helpers import brute_masks, chain_value, term_value
from mdzv.errors import MalformedWord, MixedWeight, OverlapError
from mdzv.terms import RefinedTerm
from mdzv.words import (collect, enumerate_shuffles, interleave, letter_shuffle, restrict,
                        shuffle_chains, shuffle_product, term_from_word)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 6) for n in range(1, 6)])
def test_shuffles_equal_brute_force(m, n):
    masks = list(enumerate_shuffles(m, n))
    assert len(masks) == len(set(masks)) == comb(m + n, m)
    assert set(masks) == brute_masks(m, n)
    assert masks == sorted(masks)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 6) for n in range(1, 6)])
def test_order_preservation(m, n):
    a = tuple(f"a{i}" for i in range(m))
    b = tuple(f"b{i}" for i in range(n))
    for mask in enumerate_shuffles(m, n):
        w = interleave(a, b, mask)
        assert restrict(w, 0) == a and restrict(w, 1) == b
        assert len(w) == m + n


def test_small_counts():
    assert len(list(enumerate_shuffles(1, 1))) == 2
    with pytest.raises(ValueError):
        next(enumerate_shuffles(0, 2))


def test_term_from_word_examples():
    # separate blocks, each generator followed by one blank
    word = [1, None, 2, None, 3, None, 4, None]
    assert term_from_word(word) == RefinedTerm.make("(1)", (2, 2, 2, 2))
    assert term_from_word([1, None]).exponents == (2,)
    # a1, b1, -, a2, b2, - with base order (a1, b1, a2, b2)
    assert term_from_word([1, 2, None, 3, 4, None]) == RefinedTerm.make("(1)", (1, 2, 1, 2))
    assert term_from_word([2, 1, None, None]) == RefinedTerm.make("(12)", (1, 3))


def test_term_from_word_errors():
    with pytest.raises(MalformedWord):
        term_from_word([None, 1, 2])
    with pytest.raises(MalformedWord):
        term_from_word([1, None, 3])


def test_overlap_and_mixed_weight():
    with pytest.raises(OverlapError):
        list(shuffle_chains((1, None), (1, None)))
    with pytest.raises(MixedWeight):
        collect([RefinedTerm.make("(1)", (1, 1)), RefinedTerm.make("(1)", (1, 2))])


def test_collect_single_term():
    t = RefinedTerm.make("(12)", (2, 2))
    c = collect([t])
    assert c.items() == [(t, 1)]


chains = st.lists(st.booleans(), min_size=0, max_size=4)


@st.composite
def chain_pair(draw):
    """Two labelled chains with disjoint labels covering 1..k, k even."""
    k1 = draw(st.sampled_from([1, 2]))
    k2 = draw(st.sampled_from([1, 2])) if k1 == 1 else draw(st.sampled_from([2]))
    k2 = k2 if (k1 + k2) % 2 == 0 else k2 + 1
    labels = list(range(1, k1 + k2 + 1))
    random.Random(draw(st.integers(0, 10**6))).shuffle(labels)

    def build(labs):
        out = []
        for lab in labs:
            out.append(lab)
            out.extend([None] * draw(st.integers(0, 2)))
        return tuple(out)

    return build(labels[:k1]), build(labels[k1:])


@given(chain_pair(), st.lists(st.integers(1, 50), min_size=4, max_size=4))
def test_pointwise_shuffle_identity(pair, raw_freqs):
    """Product of two chain integrals equals the sum over their shuffles, exactly."""
    a, b = pair
    freqs = {i + 1: Fraction(f, 7) for i, f in enumerate(raw_freqs)}
    lhs = chain_value(a, freqs) * chain_value(b, freqs)
    rhs = Fraction(0)
    count = 0
    for w in shuffle_chains(a, b):
        t = term_from_word(w)
        assert t.weight == len(w)
        assert all(e >= 1 for e in t.exponents)
        rhs += term_value(t.order, t.exponents, freqs)
        count += 1
    assert count == comb(len(a) + len(b), len(a))
    assert lhs == rhs


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4), st.integers(1, 4),
       st.booleans())
def test_shuffle_product_conserves_counts(e1, e2, e3, e4, simplify):
    a = RefinedTerm.make("(1)", (e1, e2))
    b = RefinedTerm.make("(12)", (e3, e4))
    out = shuffle_product(a, b, simplify=simplify)
    assert out.total() == comb(a.weight + b.weight, a.weight)
    assert out.weights() == {a.weight + b.weight}
    assert {t.k for t in out.terms()} == {4}


def test_letter_shuffle_multiplicity():
    words = list(letter_shuffle("ab", "xy"))
    assert len(words) == 6
    assert set(words) == {("a", "b", "x", "y"), ("a", "x", "b", "y"), ("a", "x", "y", "b"),
                          ("x", "a", "b", "y"), ("x", "a", "y", "b"), ("x", "y", "a", "b")}
