import pytest

from mdzv.formulas import (corollary_difference, pair_product, product_zeta, self_shuffle_mdzv,
                           self_shuffle_zeta)
from mdzv.printed import (parse_latex, parse_merges, printed_entries, printed_for,
                          reference_diff)
from mdzv.symmetry import STANDARD


def test_parse_latex_tolerates_layout_and_typos():
    text = r"& = & 2\zeta^{(1)}(2,2;2,2) \\ && + \zeta^{1}(1,3;2,2) - 3\zeta^{23)}(1,1;3,3) + 8\zeta^{(1)}(1,1,15)."
    p = parse_latex(text, 4, STANDARD)
    assert p.comb["(1):2,2,2,2"] == 2
    assert p.comb["(1):1,3,2,2"] == 1
    assert p.comb["(23):1,1,3,3"] == -3
    assert len(p.malformed) == 1 and "1,1,15" in p.malformed[0]
    assert p.leftover == ""


def test_all_entries_parse():
    entries = printed_entries()
    assert len(entries) == 29
    for e in entries:
        assert e.parse().leftover == ""


def test_self_diff_is_empty():
    for e in printed_entries():
        parsed = e.parse()
        rep = reference_diff(e.name, parsed.comb, e)
        assert not (rep.mismatches or rep.only_computed or rep.only_printed)


@pytest.mark.parametrize("name,comb", [
    ("selfie-zeta2", lambda s: self_shuffle_zeta(2, s)),
    ("selfie-zeta3", lambda s: self_shuffle_zeta(3, s)),
    ("selfie-mdzv-11", lambda s: self_shuffle_mdzv("(1)(1)", s)),
    ("pair-13-x-13", lambda s: pair_product("13", "13", s) if not s else None),
    ("pair-22-x-24", lambda s: pair_product("22", "24", s) if not s else None),
    ("pair-22-x-15", lambda s: pair_product("22", "15", s) if not s else None),
    ("pair-13-x-24", lambda s: pair_product("13", "24", s) if not s else None),
    ("pair-13-x-15", lambda s: pair_product("13", "15", s) if not s else None),
])
def test_clean_agreements(name, comb):
    for e in printed_for(name):
        c = comb(e.simplified)
        if c is None:
            continue
        assert reference_diff(name, c, e).clean, name


def test_product_diffs_are_reported():
    m = parse_merges(["(234)=(23)"])
    e = [x for x in printed_for("zeta2-x-zeta3") if x.simplified][0]
    rep = reference_diff("zeta2-x-zeta3", product_zeta(2, 3), e, m)
    # 1440 + 1440 matches the printed merged 2880; three residual coefficients differ
    assert [(str(t), a, b) for t, a, b in rep.mismatches] == [
        ("(23):2,1,3,4", 324, 252), ("(23):1,3,4,2", 72, 140), ("(23):1,3,3,3", 192, 196)]
    e2 = [x for x in printed_for("zeta2-x-zeta2") if x.simplified][0]
    rep2 = reference_diff("zeta2-x-zeta2", product_zeta(2, 2), e2)
    assert rep2.count() > 0 and any("1,1,15" in m for m in rep2.malformed)


def test_alias_reporting():
    e = [x for x in printed_for("selfie-mdzv-121") if x.simplified][0]
    rep = reference_diff(e.name, self_shuffle_mdzv("(12)(1)"), e)
    assert rep.aliases == {"(1234)": "(1)"}
    c = [x for x in printed_for("corollary")][0]
    assert reference_diff("corollary", corollary_difference(), c).count() > 0


def test_bad_merge_spec():
    with pytest.raises(ValueError):
        parse_merges(["(234)"])
