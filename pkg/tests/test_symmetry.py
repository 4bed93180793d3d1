import itertools

import pytest
from hypothesis import given, strategies as st

from mdzv.evaluate import EvalContext, eval_term
from mdzv.permutation import Permutation, symmetric_group
from mdzv.symmetry import (DEPTH1, INTERLEAVED, STANDARD, PairingStructure, canonicalize,
                           coset_representatives, cosets, same_class, subgroup_H)
from mdzv.terms import RefinedTerm

S4 = list(symmetric_group(4))


def partition_stabilizer(pairing):
    """Brute force: permutations sending every pair onto some pair."""
    blocks = {frozenset(p) for p in pairing.pairs}
    return {g for g in symmetric_group(pairing.k)
            if {frozenset(g(x) for x in b) for b in blocks} == blocks}


def test_standard_H_matches_listed_elements():
    listed = ["(1)", "(12)", "(34)", "(12)(34)", "(13)(24)", "(14)(23)", "(1324)", "(1423)"]
    assert subgroup_H(STANDARD) == {Permutation.parse(x, 4) for x in listed}


@pytest.mark.parametrize("pairing", [DEPTH1, STANDARD, INTERLEAVED])
def test_H_is_partition_stabilizer(pairing):
    assert subgroup_H(pairing) == partition_stabilizer(pairing)


def test_depth_one_H():
    assert subgroup_H(DEPTH1) == {Permutation.identity(2), Permutation.parse("(12)", 2)}


def test_interleaved_is_conjugate_subgroup():
    s = Permutation.parse("(23)", 4)
    assert subgroup_H(INTERLEAVED) == {s * h * s.inverse() for h in subgroup_H(STANDARD)}


@pytest.mark.parametrize("pairing", [STANDARD, INTERLEAVED])
def test_H_is_a_group(pairing):
    H = subgroup_H(pairing)
    assert len(H) == 8
    for a, b in itertools.product(H, H):
        assert a * b in H
    assert all(h.inverse() in H for h in H)


@pytest.mark.parametrize("pairing", [STANDARD, INTERLEAVED])
def test_three_cosets_partition_S4(pairing):
    cs = cosets(pairing)
    assert len(cs) == 3 and all(len(c) == 8 for c in cs)
    assert set().union(*cs) == set(S4)
    assert sum(len(c) for c in cs) == 24


def test_coset_representatives():
    assert [str(r) for r in coset_representatives(STANDARD)] == ["(1)", "(23)", "(234)"]
    assert [str(r) for r in coset_representatives(INTERLEAVED)] == ["(1)", "(34)", "(23)"]


def test_class_membership_examples():
    p = lambda s: Permutation.parse(s, 4)
    assert same_class(p("(1)"), p("(12)"), STANDARD)
    assert not same_class(p("(23)"), p("(1234)"), STANDARD)
    # (23) and (1342) have the same one-line order up to relabeling by (13)(24)
    assert same_class(p("(23)"), p("(1342)"), STANDARD)
    assert same_class(p("(234)"), p("(132)"), STANDARD)
    assert not same_class(p("(23)"), p("(234)"), STANDARD)


def test_canonicalize_examples():
    t = RefinedTerm.make("(12)(34)", (1, 2, 3, 4))
    assert canonicalize(t, STANDARD) == RefinedTerm.make("(1)", (1, 2, 3, 4))
    assert canonicalize(RefinedTerm.make("(12)", (2, 2)), DEPTH1) == RefinedTerm.make("(1)", (2, 2))
    ident = RefinedTerm.make("(1)", (1, 1, 1, 1))
    assert canonicalize(ident, STANDARD) == ident
    with pytest.raises(ValueError):
        canonicalize(ident, DEPTH1)


def test_bad_pairing():
    with pytest.raises(ValueError):
        PairingStructure(((1, 2), (2, 3)))


@given(st.sampled_from(S4), st.sampled_from(S4),
       st.tuples(*[st.integers(1, 3)] * 4), st.sampled_from([STANDARD, INTERLEAVED]))
def test_canonicalize_is_class_invariant(r1, r2, exps, pairing):
    t1, t2 = RefinedTerm(r1, exps), RefinedTerm(r2, exps)
    c1 = canonicalize(t1, pairing)
    assert canonicalize(c1, pairing) == c1
    assert (c1 == canonicalize(t2, pairing)) == same_class(r1, r2, pairing)
    own = next(c for c in cosets(pairing) if r1 in c)
    assert c1.perm == min(own)


@pytest.fixture(scope="module")
def ctx_gauss():
    return EvalContext.build(-1, 6)


@pytest.mark.parametrize("exps", [(2, 2, 2, 2), (1, 3, 1, 3), (1, 1, 2, 4), (3, 1, 2, 2)])
def test_canonical_value_equals_original(ctx_gauss, exps):
    for r in S4:
        t = RefinedTerm(r, exps)
        a = eval_term(t, ctx_gauss)
        b = eval_term(canonicalize(t, STANDARD), ctx_gauss)
        assert abs(a - b) <= 1e-10 * abs(b)


def test_distinct_classes_have_distinct_values(ctx_gauss):
    vals = [eval_term(RefinedTerm(r, (1, 3, 1, 3)), ctx_gauss)
            for r in coset_representatives(STANDARD)]
    for x, y in itertools.combinations(vals, 2):
        assert abs(x - y) > 1e-6 * abs(x)
