import pytest
from hypothesis import given, strategies as st

from mdzv.permutation import Permutation
from mdzv.terms import COEFF_LIMIT, Combination, RefinedTerm


def test_parse_term():
    t = RefinedTerm.parse("(23):1,2;1,4")
    assert t.order == (1, 3, 2, 4) and t.exponents == (1, 2, 1, 4)
    assert t.weight == 8 and t.k == 4
    assert str(t) == "(23):1,2,1,4"


@pytest.mark.parametrize("bad", ["(1)", "(1):0,2", "(13):1,2", "(1):a,b"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        RefinedTerm.parse(bad)


def test_chain_round_trip():
    t = RefinedTerm.make("(1342)", (2, 1, 3, 1))
    assert t.chain() == (3, None, 1, 4, None, None, 2)


def test_combination_drops_zeros_and_adds():
    t = RefinedTerm.parse("(1):2,2")
    c = Combination({t: 2})
    c.add(t, -2)
    assert len(c) == 0 and not c
    d = Combination({t: 3}) - Combination({t: 1})
    assert d[t] == 2 and d["(1):2,2"] == 2
    assert (2 * d)[t] == 4


def test_overflow_guard():
    c = Combination()
    with pytest.raises(OverflowError):
        c.add(RefinedTerm.parse("(1):1,1"), COEFF_LIMIT)


@given(st.lists(st.tuples(st.permutations([1, 2]), st.integers(1, 3), st.integers(1, 3),
                          st.integers(-5, 5)), max_size=8))
def test_linearity(items):
    c = Combination()
    for perm, a, b, coeff in items:
        c.add(RefinedTerm(Permutation(perm), (a, b)), coeff)
    assert (c + c) == 2 * c
    assert (c - c) == Combination()
    assert all(v != 0 for v in c.as_dict().values())
