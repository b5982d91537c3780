"""Family instantiation, twist rows, and catalogue spot checks."""

import pytest

from ssgenus2 import families, ff, zeta
from ssgenus2.curve import parse_curve
from ssgenus2.families import FamilyTag


def test_ss_condition_rigid():
    assert families.ss_condition(FamilyTag("x6-1"), 11)
    assert not families.ss_condition(FamilyTag("x5-x"), 3)
    assert families.ss_condition(FamilyTag("x5-1"), 7)
    assert families.ss_condition(FamilyTag("x5-x"), 5)


def test_find_ss_parameters_d8():
    ctx = ff.ctx_new(13, 2)
    tags = families.find_ss_parameters("d8", ctx)
    assert tags
    for tag in tags[:3]:
        a = tag.params[0]
        assert not families.is_degenerate("d8", tag.params, ctx)
        C = families.standard_model(tag, ctx)
        assert zeta.is_supersingular(C)


def test_find_ss_parameters_empty_when_none():
    # no non-degenerate supersingular biquadratic members over GF(7)
    ctx = ff.ctx_new(7, 1)
    assert families.find_ss_parameters("biquadratic", ctx) == []


def test_applicable_tables():
    ctx7 = ff.ctx_new(7, 1)
    assert 5 in families.applicable_tables(ctx7, FamilyTag("x5-1"))
    assert 6 in families.applicable_tables(ctx7, FamilyTag("x5-x"))
    ctx5 = ff.ctx_new(5, 1)
    assert 7 in families.applicable_tables(ctx5, FamilyTag("x5-x"))
    ctx11 = ff.ctx_new(11, 1)
    assert 10 in families.applicable_tables(ctx11, FamilyTag("x6-1"))


def test_anchor_rows():
    # q=7: y^2 = x^5 - 1 gives (0,0), not self-dual, |Aut| = 2
    ctx = ff.ctx_new(7, 1)
    insts = families.instantiate_table(5, ctx, FamilyTag("x5-1"))
    row1 = next(i for i in insts if i.row == 1)
    rep = families.verify_row(row1)
    assert rep["pass"]
    assert rep["oracle_rs"] == (0, 0)
    assert rep["oracle_aut"] == 2 and not rep["oracle_sd"]

    # q=5: y^2 = x^5 - x gives (0,-10) with 120 automorphisms
    ctx = ff.ctx_new(5, 1)
    insts = families.instantiate_table(7, ctx, FamilyTag("x5-x"))
    row1 = next(i for i in insts if i.row == 1)
    rep = families.verify_row(row1)
    assert rep["pass"]
    assert rep["oracle_rs"] == (0, -10)
    assert rep["oracle_aut"] == 120

    # q=11: y^2 = x^6 - 1 gives (0,22), self-dual, |Aut| = 4
    ctx = ff.ctx_new(11, 1)
    insts = families.instantiate_table(10, ctx, FamilyTag("x6-1"))
    row1 = next(i for i in insts if i.row == 1)
    rep = families.verify_row(row1)
    assert rep["pass"]
    assert rep["oracle_rs"] == (0, 22)
    assert rep["oracle_sd"] and rep["oracle_aut"] == 4


def test_row_not_applicable():
    ctx = ff.ctx_new(7, 1)  # 7 = 7 mod 8, table 7 needs q = 5 mod 8
    with pytest.raises(families.RowNotApplicable):
        families.instantiate_table(7, ctx, FamilyTag("x5-x"))


def test_twist_catalogue_x5_1():
    # q = 7 is not 1 mod 5: only C and its quadratic twist
    cat = families.twist_catalogue(FamilyTag("x5-1"), ff.ctx_new(7, 1))
    assert cat["twist_count"] == 2
    assert cat["twist_count"] == cat["twist_classes"]

    # q = 81 is 1 mod 5: ten twists
    cat = families.twist_catalogue(FamilyTag("x5-1"), ff.ctx_new(3, 4))
    assert cat["twist_count"] == 10
    assert cat["twist_count"] == cat["twist_classes"]
    assert cat["anchored"]
    # base twist pair with Weil polynomial (x +- 9)^4 appears exactly once
    base = [e for e in cat["entries"]
            if abs(e["weil"].r) == 36 and e["weil"].s == 486]
    assert len(base) == 1 and not base[0]["self_dual"]


def test_catalogue_entries_match_oracle():
    cat = families.twist_catalogue(FamilyTag("x5-x"), ff.ctx_new(5, 1))
    assert cat["twist_count"] == 8  # eight inequivalent twists
    for e in cat["entries"]:
        w = zeta.weil_from_counting(e["curve"])
        assert w.pair() == e["weil"].pair()
