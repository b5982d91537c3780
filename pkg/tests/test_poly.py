"""Polynomial arithmetic and factorization-shape checks."""

import pytest

from ssgenus2 import ff, poly
from ssgenus2.poly import Polynomial


@pytest.fixture(scope="module")
def ctx():
    return ff.ctx_new(7, 1)


def P(ctx, *coeffs):
    """Polynomial from integer coefficients, low degree first."""
    return Polynomial(ctx, [ctx.from_index(c % ctx.p) for c in coeffs])


def test_ring_ops(ctx):
    f = P(ctx, 1, 2, 3)
    g = P(ctx, 4, 5)
    assert (f + g) - g == f
    assert f * g == g * f
    assert (f * g).degree == f.degree + g.degree
    qt, rem = divmod(f * g + P(ctx, 6), g)
    assert qt * g + rem == f * g + P(ctx, 6)
    assert rem.degree < g.degree


def test_gcd_and_separability(ctx):
    x = Polynomial.x(ctx)
    f = (x - 1) * (x - 2) * (x - 3)
    g = (x - 2) * (x - 5)
    assert poly.gcd(f, g).monic() == (x - 2).monic()
    assert poly.is_separable(f)
    assert not poly.is_separable((x - 1) * (x - 1) * x)


def test_irreducibility(ctx):
    x = Polynomial.x(ctx)
    assert poly.is_irreducible(x * x + 1)  # -1 is not a square mod 7
    assert not poly.is_irreducible(x * x - 2)  # 2 = 3^2 mod 7


def test_roots_in_field(ctx):
    x = Polynomial.x(ctx)
    f = (x - 2) * (x - 3) * (x * x + 1)
    roots = poly.roots_in_field(f)
    assert sorted(r.index() for r in roots) == [2, 3]


def test_distinct_degree_shape(ctx):
    x = Polynomial.x(ctx)
    f = (x - 1) * (x * x + 1) * (x * x + x + 3)
    shape = poly.distinct_degree_shape(f)
    # x^2+x+3 has discriminant 1-12 = 3, a nonsquare mod 7: irreducible
    assert shape == (1, 2, 2)


def test_shape_of_irreducible_quintic():
    ctx = ff.ctx_new(3, 1)
    x = Polynomial.x(ctx)
    f = x ** 5 - x + 1  # Artin-Schreier-like, irreducible over GF(3)
    if poly.is_irreducible(f):
        assert poly.distinct_degree_shape(f) == (5,)


def test_pow_mod(ctx):
    x = Polynomial.x(ctx)
    m = x ** 3 + x + 1
    h = poly.pow_mod(x, 7 ** 3, m)
    assert h == x % m  # x^(q^deg) = x mod any cubic dividing x^(q^3)-x only
    # if m is irreducible; check consistency with is_irreducible
    assert poly.is_irreducible(m)


def test_factor_multiplicities(ctx):
    x = Polynomial.x(ctx)
    f = (x - 1) * (x - 1) * (x * x + 1)
    facs = dict((g.monic(), e) for g, e in poly.factor(f))
    assert facs[(x - 1).monic()] == 2
    assert facs[(x * x + 1).monic()] == 1
