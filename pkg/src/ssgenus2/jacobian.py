"""Divisor class arithmetic on genus-2 Jacobians (Mumford + Cantor).

Only the imaginary model y^2 = f(x), f monic of degree 5, in odd
characteristic is supported; degree-6 curves are converted by the curve
module when they have a rational Weierstrass point, and otherwise the
caller falls back to point counting.
"""

from __future__ import annotations

import random

from . import ff, poly
from .curve import CurveError, OddCurve
from .poly import Polynomial


class JacobianError(Exception):
    pass


class WrongModel(JacobianError):
    pass


class NoRationalPoints(JacobianError):
    pass


def _check_model(C):
    if not isinstance(C, OddCurve) or C.f.degree != 5 or C.f.lead() != C.ctx.one:
        raise WrongModel("Jacobian arithmetic needs a monic degree-5 model")


class MumfordDivisor:
    """Reduced divisor class (u, v): u monic, deg u <= 2, deg v < deg u,
    and u | v^2 - f."""

    __slots__ = ("curve", "u", "v")

    def __init__(self, curve, u, v, check=True):
        _check_model(curve)
        if check:
            if u.is_zero() or u.lead() != curve.ctx.one or u.degree > 2:
                raise JacobianError("u must be monic of degree <= 2")
            if v.degree >= u.degree and u.degree > 0:
                v = v % u
            if not ((v * v - curve.f) % u).is_zero():
                raise JacobianError("u does not divide v^2 - f")
        object.__setattr__(self, "curve", curve)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def __eq__(self, other):
        return (isinstance(other, MumfordDivisor) and self.curve == other.curve
                and self.u == other.u and self.v == other.v)

    def __hash__(self):
        return hash((self.u, self.v))

    def __repr__(self):
        return "D(u=%s, v=%s)" % (self.u, self.v)

    def is_identity(self):
        return self.u.degree == 0

    def serialize(self):
        return {"u": [repr(c) for c in self.u.coeffs],
                "v": [repr(c) for c in self.v.coeffs]}


def identity(C):
    _check_model(C)
    return MumfordDivisor(C, Polynomial.one(C.ctx), Polynomial.zero(C.ctx),
                          check=False)


def negate(D):
    u = D.u
    v = (-D.v) % u if u.degree > 0 else D.v
    return MumfordDivisor(D.curve, u, v, check=False)


def compose_reduce(D1, D2):
    """Reduced representative of the class D1 + D2 (Cantor's algorithm)."""
    if D1.curve != D2.curve:
        raise JacobianError("divisors on different curves")
    C = D1.curve
    f = C.f
    u1, v1 = D1.u, D1.v
    u2, v2 = D2.u, D2.v
    d1, e1, e2 = poly.xgcd(u1, u2)
    d, c1, c2 = poly.xgcd(d1, v1 + v2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    u = (u1 * u2) // (d * d)
    v = (s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f)) // d
    if u.degree > 0:
        v = v % u
    # reduction
    while u.degree > 2:
        u = (f - v * v) // u
        u = u * u.lead().inverse()
        v = (-v) % u
    if u.degree == 0:
        return identity(C)
    return MumfordDivisor(C, u, v, check=False)


def scalar_mul(n, D):
    if n < 0:
        return scalar_mul(-n, negate(D))
    acc = identity(D.curve)
    add = D
    while n:
        if n & 1:
            acc = compose_reduce(acc, add)
        n >>= 1
        if n:
            add = compose_reduce(add, add)
    return acc


def random_divisor(C, seed):
    """Deterministic-from-seed rational divisor class with deg u = 2,
    built from two affine points with nonzero y and distinct x."""
    _check_model(C)
    ctx = C.ctx
    rng = random.Random(seed)
    pts = []
    seen = set()
    for _ in range(64 * ctx.q + 64):
        x = ctx.from_index(rng.randrange(ctx.q))
        if x in seen:
            continue
        t = C.f(x)
        if t.is_zero() or ff.residue_symbol(t, 2) != 1:
            continue
        seen.add(x)
        y = ff.sqrt(t)
        if rng.randrange(2):
            y = -y
        pts.append((x, y))
        if len(pts) == 2:
            break
    if len(pts) < 2:
        raise NoRationalPoints("not enough affine points with y != 0")
    (x1, y1), (x2, y2) = pts
    u = Polynomial.from_roots(ctx, [x1, x2])
    lam = (y2 - y1) / (x2 - x1)
    v = Polynomial(ctx, [y1 - lam * x1, lam])
    return MumfordDivisor(C, u, v)


def annihilates(n, C, seeds):
    """True when n*D is the identity for the divisors seeded by `seeds`."""
    e = identity(C)
    for s in seeds:
        try:
            D = random_divisor(C, s)
        except NoRationalPoints:
            continue
        if scalar_mul(n, D) != e:
            return False
    return True
