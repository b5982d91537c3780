"""Supersingularity test, Weil polynomial tables, twist transforms."""

import pytest

from ssgenus2 import curve, ff, zeta
from ssgenus2.curve import parse_curve, weierstrass_shape
from ssgenus2.zeta import WeilCoeffs


def test_weil_coeffs_basics():
    w = WeilCoeffs(0, 0, 7)
    assert w.poly_str() == "x^4+49"
    assert w.jacobian_order() == 50
    w2 = WeilCoeffs(-4, 6, 1)  # (x-1)^4 at q=1 is out of scope; use q=4
    w3 = WeilCoeffs(8, 24, 4)  # (x+2)^4
    assert w3.jacobian_order() == 3 ** 4


def test_is_supersingular_known_cases():
    assert zeta.is_supersingular(parse_curve("y^2=x^5-1", ff.ctx_new(7, 1)))
    assert zeta.is_supersingular(parse_curve("y^2=x^5-x", ff.ctx_new(5, 1)))
    assert zeta.is_supersingular(parse_curve("y^2=x^6-1", ff.ctx_new(11, 1)))
    assert not zeta.is_supersingular(parse_curve("y^2=x^5-x",
                                                 ff.ctx_new(3, 1)))
    assert not zeta.is_supersingular(parse_curve("y^2=x^6-1",
                                                 ff.ctx_new(7, 1)))


def test_rigid_congruences_up_to_50():
    """The three rigid curves are supersingular exactly at the printed
    congruence classes of p."""
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        ctx = ff.ctx_new(p, 1)
        if p != 5:
            C = parse_curve("y^2=x^5-1", ctx)
            assert zeta.is_supersingular(C) == (p % 5 in (2, 3, 4))
        C = parse_curve("y^2=x^5-x", ctx)
        assert zeta.is_supersingular(C) == (p % 8 in (5, 7) or p == 5)
        if p != 3:
            C = parse_curve("y^2=x^6-1", ctx)
            assert zeta.is_supersingular(C) == (p % 3 == 2)


def test_weil_polynomial_examples():
    w = zeta.weil_polynomial(parse_curve("y^2=x^5-1", ff.ctx_new(7, 1)))
    assert (w.r, w.s) == (0, 0)
    w = zeta.weil_polynomial(parse_curve("y^2=x^5-x", ff.ctx_new(5, 1)))
    assert (w.r, w.s) == (0, -10)
    w = zeta.weil_polynomial(parse_curve("y^2=x^6-1", ff.ctx_new(11, 1)))
    assert (w.r, w.s) == (0, 22)


def test_weil_polynomial_matches_counting():
    cases = [("y^2=x^5-1", 3, 2), ("y^2=x^5-x", 5, 2), ("y^2=x^5-1", 13, 1),
             ("y^2=x^6-1", 17, 1)]
    for s, p, n in cases:
        C = parse_curve(s, ff.ctx_new(p, n))
        w = zeta.weil_polynomial(C)
        assert w == zeta.weil_from_counting(C)


def test_not_supersingular_raises():
    C = parse_curve("y^2=x^5-x", ff.ctx_new(3, 1))
    with pytest.raises(zeta.NotSupersingular):
        zeta.weil_polynomial(C)


def test_table2_char2():
    ctx = ff.ctx_new(2, 3)
    C = parse_curve("y^2+y=x^5", ctx)
    cands = zeta.table2_candidates(C)
    w = zeta.weil_from_counting(C)
    assert w in cands


def test_table34_not_possible_shapes():
    assert zeta.table34_candidates((1, 1, 1, 3), 7, 7) is zeta.NOT_POSSIBLE
    assert zeta.table34_candidates((1, 2, 3), 7, 7) is zeta.NOT_POSSIBLE
    assert zeta.table34_candidates((1, 2, 3), 7, 49) is zeta.NOT_POSSIBLE
    # p=3 allows (1,2,3) over prime fields
    cands = zeta.table34_candidates((1, 2, 3), 3, 3)
    assert {(w.r, w.s) for w in cands} == {(3, 6), (-3, 6)}


def test_twist_negates_r():
    for s, p in (("y^2=x^5-1", 3), ("y^2=x^6-1", 5)):
        C = parse_curve(s, ff.ctx_new(p, 2))
        w = zeta.weil_from_counting(C)
        wt = zeta.weil_from_counting(curve.hyperelliptic_twist(C))
        assert (wt.r, wt.s) == (-w.r, w.s)


def test_twisted_weil_transforms():
    # q square: the trivial relation class gives (4*sqrt(q), 6q)
    w = zeta.twisted_weil_qsq("1", 9)
    assert (w.r, w.s) == (12, 54)
    w = zeta.twisted_weil_qsq("iota", 9)
    assert (w.r, w.s) == (-12, 54)
    # q nonsquare: order n of w*w^F determines (0, s)
    assert zeta.twisted_weil_qnsq(1, 1, 7).pair() == (0, 14)
    assert zeta.twisted_weil_qnsq(2, 1, 7).pair() == (0, -14)
    assert zeta.twisted_weil_qnsq(4, 1, 7).pair() == (0, 0)


def test_group_structure_candidates():
    w = zeta.weil_polynomial(parse_curve("y^2=x^5-x", ff.ctx_new(5, 2)))
    cands = zeta.group_structure_candidates(w, 5)
    assert cands  # at least one abelian group of order f_J(1)
    for g in cands:
        order = 1
        for m in g:
            order *= m
        assert order == w.jacobian_order()
