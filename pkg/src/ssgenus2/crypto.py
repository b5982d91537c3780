"""Cryptographic exponent of simple supersingular abelian surfaces.

The exponent c_A is the smallest half-integer such that q^{c_A} is an
integer divisible-compatible field size: for every prime ell > 5 dividing
|A(F_q)|, ell divides q^{c_A} - 1 and c_A is minimal with that property.
It depends only on the isogeny class, i.e. on (r, s, q, p), through an
eleven-row table.
"""

from __future__ import annotations

import math

from .zeta import WeilCoeffs, ZetaError, exact_isqrt


class CryptoError(ZetaError):
    pass


class NotSimpleOrUncovered(CryptoError):
    """(r, s) is not a simple supersingular class, or fails the congruence
    conditions attached to its row."""


class VerificationFailed(CryptoError):
    pass


class HalfInteger:
    """Element of (1/2)Z, stored as twice the value (never a float)."""

    __slots__ = ("twice",)

    def __init__(self, twice):
        if twice <= 0:
            raise CryptoError("exponent must be positive")
        object.__setattr__(self, "twice", int(twice))

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def __eq__(self, other):
        return isinstance(other, HalfInteger) and self.twice == other.twice

    def __hash__(self):
        return hash(("half", self.twice))

    def __repr__(self):
        return "HalfInteger(%s)" % (str(self),)

    def __str__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return "%d/2" % self.twice

    def is_integral(self):
        return self.twice % 2 == 0


def _q_power(q, p, c):
    """q^c as an exact integer, or None when it is not an integer."""
    n = round(math.log(q, p))
    e = n * c.twice
    if e % 2:
        return None
    return p ** (e // 2)


def crypto_exponent(w, p):
    """c_A for the simple supersingular class (r, s) over F_q; raises
    NotSimpleOrUncovered outside the eleven covered rows."""
    q = w.q
    n = round(math.log(q, p))
    square = n % 2 == 0
    rq = exact_isqrt(q) if square else None
    r, s = w.pair()

    def bad(msg):
        raise NotSimpleOrUncovered(
            "(r, s) = (%d, %d) over q = %d: %s" % (r, s, q, msg))

    if (r, s) == (0, -2 * q):
        if square:
            bad("(x^2-q)^2 with q square is not simple")
        return HalfInteger(2)  # c = 1
    if (r, s) == (0, 2 * q):
        if not (square and p % 4 == 1):
            bad("(0,2q) is simple only for q square, p = 1 mod 4")
        return HalfInteger(4)  # c = 2
    if square and (r, s) == (2 * rq, 3 * q):
        if p % 3 != 1:
            bad("(2sqrt(q),3q) needs p = 1 mod 3")
        return HalfInteger(3)  # c = 3/2
    if square and (r, s) == (-2 * rq, 3 * q):
        if p % 3 != 1:
            bad("(-2sqrt(q),3q) needs p = 1 mod 3")
        return HalfInteger(6)  # c = 3
    if (r, s) == (0, 0):
        if not ((not square and p != 2) or (square and p % 8 != 1)):
            bad("(0,0) conditions fail")
        return HalfInteger(8)  # c = 4
    if (r, s) == (0, q):
        if square:
            bad("(0,q) with q square is not simple")
        return HalfInteger(6)  # c = 3
    if (r, s) == (0, -q):
        if not ((not square and p != 3) or (square and p % 12 != 1)):
            bad("(0,-q) conditions fail")
        return HalfInteger(12)  # c = 6
    if square and (r, s) == (rq, q):
        if p % 5 == 1:
            bad("(sqrt(q),q) needs p != 1 mod 5")
        return HalfInteger(5)  # c = 5/2
    if square and (r, s) == (-rq, q):
        if p % 5 == 1:
            bad("(-sqrt(q),q) needs p != 1 mod 5")
        return HalfInteger(10)  # c = 5
    if not square and p == 5 and s == 3 * q and r * r == 5 * q:
        return HalfInteger(10)  # c = 5
    if not square and p == 2 and s == q and r * r == 2 * q:
        return HalfInteger(24)  # c = 12
    bad("not a covered simple supersingular class")


def embedding_field_size(w, p):
    """q^{c_A} as an exact integer."""
    c = crypto_exponent(w, p)
    size = _q_power(w.q, p, c)
    if size is None:  # pragma: no cover - table guarantees integrality
        raise CryptoError("q^c is not an integer")
    return size


def large_prime_factors(m):
    """Prime factors ell > 5 of m, ascending."""
    out = []
    m = abs(m)
    for small in (2, 3, 5):
        while m % small == 0:
            m //= small
    d = 7
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 2
    if m > 1:
        out.append(m)
    return out


def verify_exponent(w, p, c=None):
    """Check, for every prime ell > 5 dividing |J(k)| = f_J(1), that ell
    divides q^c - 1 and that no smaller admissible half-integer works.
    Returns a report dict; status 'inconclusive' when no such ell exists."""
    if c is None:
        c = crypto_exponent(w, p)
    order = w.jacobian_order()
    ells = large_prime_factors(order)
    if not ells:
        return {"status": "inconclusive", "large_primes": [],
                "c": str(c), "order": order}
    size = _q_power(w.q, p, c)
    for ell in ells:
        if (size - 1) % ell != 0:
            raise VerificationFailed(
                "ell = %d does not divide q^c - 1" % ell)
        for twice in range(1, c.twice):
            smaller = _q_power(w.q, p, HalfInteger(twice))
            if smaller is None:
                continue
            if (smaller - 1) % ell == 0:
                raise VerificationFailed(
                    "ell = %d already divides q^(%d/2) - 1" % (ell, twice))
    return {"status": "verified", "large_primes": ells,
            "c": str(c), "order": order, "embedding_field_size": size}
