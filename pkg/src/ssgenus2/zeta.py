"""Weil polynomials of supersingular genus-2 curves.

The Weil polynomial is f_J(x) = x^4 + r x^3 + s x^2 + q r x + q^2.  For a
supersingular curve the pair (r, s) is almost determined by the Galois
orbit structure of the Weierstrass points (odd p) or of the roots of an
auxiliary quintic (p = 2); the finitely many remaining candidates are told
apart by a Jacobian order test or by direct point counting.  This module
also houses the brute-force counting oracle used to validate everything.
"""

from __future__ import annotations

import functools
import math
import os

import numpy as np

from . import fast, ff, poly
from .curve import (Char2Curve, CurveError, OddCurve, curve_points,
                    monic_deg5_model, weierstrass_shape)
from .poly import Polynomial


class ZetaError(Exception):
    pass


class NotSupersingular(ZetaError):
    pass


class BudgetExceeded(ZetaError):
    pass


class InconsistentCounts(ZetaError):
    pass


class RowNotFound(ZetaError):
    pass


class AmbiguityUnresolved(ZetaError):
    pass


class UnclassifiedOrder(ZetaError):
    pass


class InvalidOrder(ZetaError):
    pass


class UnknownClass(ZetaError):
    pass


#: sentinel returned by table34_candidates for excluded orbit shapes
NOT_POSSIBLE = "not possible"

ORDER_TEST_SEEDS = 32


def default_budget():
    env = os.environ.get("SS_ZETA_BUDGET")
    return int(env) if env else ff.DEFAULT_MAX_Q


def exact_isqrt(m):
    r = math.isqrt(m)
    if r * r != m:
        raise ZetaError("%d is not a perfect square" % m)
    return r


class WeilCoeffs:
    """The pair (r, s) plus the field size q."""

    __slots__ = ("r", "s", "q")

    def __init__(self, r, s, q):
        object.__setattr__(self, "r", int(r))
        object.__setattr__(self, "s", int(s))
        object.__setattr__(self, "q", int(q))

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def __eq__(self, other):
        return (isinstance(other, WeilCoeffs)
                and (self.r, self.s, self.q) == (other.r, other.s, other.q))

    def __hash__(self):
        return hash((self.r, self.s, self.q))

    def __repr__(self):
        return "WeilCoeffs(r=%d, s=%d, q=%d)" % (self.r, self.s, self.q)

    def pair(self):
        return (self.r, self.s)

    def coeff_list(self):
        """[1, r, s, q r, q^2], highest degree first."""
        return [1, self.r, self.s, self.q * self.r, self.q ** 2]

    def jacobian_order(self):
        """|J(k)| = f_J(1)."""
        q = self.q
        return (q * q + 1) + (q + 1) * self.r + self.s

    def negate(self):
        """Weil data of the hyperelliptic twist: f_{J'}(x) = f_J(-x)."""
        return WeilCoeffs(-self.r, self.s, self.q)

    def poly_str(self):
        out = ["x^4"]
        for c, mon in ((self.r, "x^3"), (self.s, "x^2"),
                       (self.q * self.r, "x"), (self.q ** 2, "")):
            if c == 0:
                continue
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            if mag == 1 and mon:
                out.append("%s%s" % (sign, mon))
            else:
                out.append("%s%d%s" % (sign, mag, mon))
        return "".join(out)


# ---------------------------------------------------------------------------
# supersingularity
# ---------------------------------------------------------------------------

def cartier_manin_matrix(C):
    """((c_{p-1}, c_{p-2}), (c_{2p-1}, c_{2p-2})) where f^((p-1)/2) = sum c_j x^j."""
    if not isinstance(C, OddCurve):
        raise CurveError("Cartier-Manin matrix requires odd characteristic")
    p = C.ctx.p
    h = C.f ** ((p - 1) // 2)
    return ((h[p - 1], h[p - 2]), (h[2 * p - 1], h[2 * p - 2]))


def is_supersingular(C):
    """M^(p) M = 0 for odd p; Artin-Schreier models are always supersingular."""
    if isinstance(C, Char2Curve):
        return True
    p = C.ctx.p
    (a, b), (c, d) = cartier_manin_matrix(C)
    ap, bp, cp, dp = (t ** p for t in (a, b, c, d))
    return all(t.is_zero() for t in
               (ap * a + bp * c, ap * b + bp * d, cp * a + dp * c, cp * b + dp * d))


# ---------------------------------------------------------------------------
# point counting oracle
# ---------------------------------------------------------------------------

def _base_change(C, ext):
    if ext == 1:
        return C
    ctx = C.ctx
    big = ff.ctx_new(ctx.p, ctx.n * ext, max_size=None)
    emb = ff.embedding(ctx, big)
    if isinstance(C, OddCurve):
        return OddCurve(C.f.map_coeffs(emb, big))
    return Char2Curve(big, emb(C.a), emb(C.b), emb(C.c), emb(C.d))


def _count_odd_fast(C):
    t = fast.tables(C.ctx)
    xs = np.arange(C.ctx.q, dtype=np.int64)
    vals = t.poly_eval([c.index() for c in C.f.coeffs], xs)
    n = int(np.count_nonzero(vals == 0))
    n += 2 * int(np.count_nonzero(t.is_square[vals]))
    if C.f.degree == 5:
        n += 1
    elif ff.residue_symbol(C.f.lead(), 2) == 1:
        n += 2
    return n


def _count_char2_fast(C):
    t = fast.tables(C.ctx)
    xs = np.arange(C.ctx.q, dtype=np.int64)
    vals = t.poly_eval([c.index() for c in C.rhs().coeffs], xs)
    return 2 * int(np.count_nonzero(t.trace[vals] == 0)) + 1


def _count_prime_field(C):
    """Numpy path for a large prime field GF(p), n = 1, p odd."""
    p = C.ctx.p
    # p <= 2^24 so products stay below 2^48: plain int64 is exact
    xs = np.arange(p, dtype=np.int64)
    vals = np.zeros(p, dtype=np.int64)
    for c in reversed(C.f.coeffs):
        vals = (vals * xs + int(c.coeffs[0])) % p
    # squareness via the set of nonzero squares
    sq = np.zeros(p, dtype=bool)
    half = np.arange(1, (p + 1) // 2, dtype=np.int64)
    sq[half * half % p] = True
    n = int(np.count_nonzero(vals == 0)) + 2 * int(np.count_nonzero(sq[vals]))
    if C.f.degree == 5:
        n += 1
    elif ff.residue_symbol(C.f.lead(), 2) == 1:
        n += 2
    return n


def count_points(C, ext=1, budget=None):
    """Exact |C(k_ext)| including points at infinity."""
    if ext not in (1, 2):
        raise ZetaError("ext must be 1 or 2")
    if budget is None:
        budget = default_budget()
    if C.ctx.q ** ext > budget:
        raise BudgetExceeded("q^%d = %d exceeds budget %d"
                             % (ext, C.ctx.q ** ext, budget))
    Ce = _base_change(C, ext)
    if isinstance(Ce, OddCurve):
        if fast.have_tables(Ce.ctx):
            return _count_odd_fast(Ce)
        if Ce.ctx.n == 1:
            return _count_prime_field(Ce)
    elif fast.have_tables(Ce.ctx):
        return _count_char2_fast(Ce)
    return len(curve_points(Ce))  # pure fallback for odd-ball sizes


def zeta_from_counts(counts, q):
    """(r, s) from (N1, N2) via N1 = q+1+r, N2 = q^2+1-r^2+2s."""
    n1, n2 = counts
    r = n1 - q - 1
    twice_s = n2 - q * q - 1 + r * r
    if twice_s % 2:
        raise InconsistentCounts("counts (%d, %d) give non-integral s" % (n1, n2))
    return WeilCoeffs(r, twice_s // 2, q)


def weil_from_counting(C, budget=None):
    n1 = count_points(C, 1, budget)
    n2 = count_points(C, 2, budget)
    return zeta_from_counts((n1, n2), C.ctx.q)


# ---------------------------------------------------------------------------
# characteristic-2 table
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=4096)
def _factor_cached(P):
    """Factorization cache: bulk scans hit the same auxiliary quintic for
    every value of the linear coefficient c."""
    return tuple(poly.factor(P))


class Char2Invariants:
    """The quintic P(x) = a^2 x^5 + b^2 x + a and the counts N, M for the
    trace form T(x) = tr((c + b^2/a) x)."""

    __slots__ = ("P", "T_coeff", "shape", "N", "M_inv")

    def __init__(self, C):
        ctx = C.ctx
        a, b, c = C.a, C.b, C.c
        z = ctx.zero
        P = Polynomial(ctx, [a, b * b, z, z, z, a * a])
        tc = c + b * b / a
        facs = _factor_cached(P)
        shape = tuple(sorted(g.degree for g, e in facs for _ in range(e)))
        n = 0
        m = 0
        for g, _ in facs:
            if g.degree == 1:
                root = -g[0]
                if ff.trace_to(tc * root, 1).is_zero():
                    n += 1
            elif g.degree == 2:
                if ff.trace_to(tc * g[1], 1).is_zero():
                    m += 1
        for name, val in (("P", P), ("T_coeff", tc), ("shape", shape),
                          ("N", n), ("M_inv", m)):
            object.__setattr__(self, name, val)

    def __setattr__(self, *a):
        raise AttributeError("immutable")


def table2_candidates(C):
    """Candidate set of (r, s) for y^2 + y = a x^5 + b x^3 + c x + d over
    GF(2^n).  The model is normalized to d = 0 internally; when the given d
    has nonzero absolute trace the curve is the hyperelliptic twist of the
    normalized model and every candidate r is negated."""
    ctx = C.ctx
    q = ctx.q
    flip = not ff.trace_to(C.d, 1).is_zero()
    inv = Char2Invariants(Char2Curve(ctx, C.a, C.b, C.c, ctx.zero))
    shape, N, M = inv.shape, inv.N, inv.M_inv
    if ctx.n % 2:  # q nonsquare
        if shape == (1, 4):
            rows = {0: [(exact_isqrt(2 * q), 2 * q), (-exact_isqrt(2 * q), 2 * q)],
                    1: [(0, 0)]}
            cands = rows.get(N)
        elif shape == (2, 3):
            rows = {0: [(exact_isqrt(2 * q), q), (-exact_isqrt(2 * q), q)],
                    1: [(0, q)]}
            cands = rows.get(M)
        elif shape == (1, 1, 1, 2):
            r0 = 2 * exact_isqrt(2 * q)
            rows = {0: [(r0, 4 * q), (-r0, 4 * q)], 1: [(0, 2 * q)],
                    2: [(0, 0)], 3: [(0, -2 * q)]}
            cands = rows.get(N)
        else:
            cands = None
    else:
        rq = exact_isqrt(q)
        if shape == (5,):
            cands = [(rq, q), (-rq, q)]
        elif shape == (1, 1, 3):
            rows = {0: [(0, -q)], 1: [(0, q)],
                    2: [(2 * rq, 3 * q), (-2 * rq, 3 * q)]}
            cands = rows.get(N)
        elif shape == (1, 2, 2):
            rows = {0: [(2 * rq, 2 * q), (-2 * rq, 2 * q)],
                    1: [(0, 0)], 2: [(0, 2 * q)]}
            cands = rows.get(M)
        elif shape == (1, 1, 1, 1, 1):
            rows = {1: [(0, -2 * q)], 3: [(0, 2 * q)],
                    5: [(4 * rq, 6 * q), (-4 * rq, 6 * q)]}
            cands = rows.get(N)
        else:
            cands = None
    if cands is None:
        raise RowNotFound("no row for shape %r with N=%d, M=%d" % (shape, N, M))
    if flip:
        cands = [(-r, s) for (r, s) in cands]
    return {WeilCoeffs(r, s, q) for (r, s) in cands}


# ---------------------------------------------------------------------------
# odd-characteristic tables (q nonsquare / q square)
# ---------------------------------------------------------------------------

def table34_candidates(shape, p, q):
    """Candidate (r, s) set for a supersingular curve whose Weierstrass
    points have the given Galois orbit shape, or NOT_POSSIBLE."""
    shape = tuple(sorted(shape))
    n = round(math.log(q, p))
    square = n % 2 == 0
    eps = 1 if p % 4 == 1 else -1  # Legendre symbol (-1/p)
    if not square:
        if shape in ((1, 1, 1, 1, 1, 1), (1, 1, 1, 1, 2)):
            cands = [(0, -2 * eps * q)]
        elif shape in ((1, 1, 2, 2), (2, 2, 2)):
            cands = [(0, 2 * q), (0, -2 * q)]
        elif shape == (1, 1, 1, 3):
            return NOT_POSSIBLE
        elif shape == (1, 2, 3):
            if p != 3:
                return NOT_POSSIBLE
            r0 = exact_isqrt(3 * q)
            cands = [(r0, 2 * q), (-r0, 2 * q)]
        elif shape in ((1, 1, 4), (2, 4)):
            cands = [(0, 0)]
        elif shape == (1, 5):
            if p != 5:
                return NOT_POSSIBLE
            r0 = exact_isqrt(5 * q)
            cands = [(r0, 3 * q), (-r0, 3 * q)]
        elif shape == (3, 3):
            if p == 3:
                return NOT_POSSIBLE
            cands = [(0, q)] if p % 3 == 1 else [(0, eps * q)]
        elif shape == (6,):
            cands = [(0, q), (0, -q)] if p % 3 == 2 else [(0, q)]
        else:
            raise ZetaError("unrecognized orbit shape %r" % (shape,))
    else:
        rq = exact_isqrt(q)
        if shape == (1, 1, 1, 1, 1, 1):
            cands = [(0, -2 * q), (4 * rq, 6 * q), (-4 * rq, 6 * q)]
        elif shape == (1, 1, 1, 1, 2):
            cands = [(0, -2 * q)]
        elif shape in ((1, 1, 2, 2), (2, 2, 2)):
            cands = [(0, 2 * q), (0, -2 * q)]
        elif shape == (1, 1, 1, 3):
            if p != 3:
                return NOT_POSSIBLE
            cands = [(rq, 0), (-rq, 0)]
        elif shape == (1, 2, 3):
            return NOT_POSSIBLE
        elif shape in ((1, 1, 4), (2, 4)):
            if p % 8 == 1:
                return NOT_POSSIBLE
            cands = [(0, 0)]
        elif shape == (1, 5):
            if p % 5 == 1:
                return NOT_POSSIBLE
            cands = [(rq, q), (-rq, q)]
        elif shape == (3, 3):
            cands = [(0, q), (2 * rq, 3 * q), (-2 * rq, 3 * q)]
        elif shape == (6,):
            cands = [(0, q), (0, -q)] if p % 12 == 5 else [(0, q)]
        else:
            raise ZetaError("unrecognized orbit shape %r" % (shape,))
    return {WeilCoeffs(r, s, q) for (r, s) in cands}


# ---------------------------------------------------------------------------
# disambiguation pipeline
# ---------------------------------------------------------------------------

def _order_test_filter(C5, cands):
    """Keep the candidates whose Jacobian order annihilates 32 seeded
    divisors.  C5 is a monic degree-5 model."""
    from . import jacobian
    seeds = range(ORDER_TEST_SEEDS)
    return [w for w in cands if jacobian.annihilates(w.jacobian_order(), C5, seeds)]


def weil_polynomial(C, budget=None, with_method=False):
    """The (r, s, q) of a supersingular curve, by table lookup plus (when
    several candidates remain) a Jacobian order test or exact counting."""
    q = C.ctx.q
    if not is_supersingular(C):
        raise NotSupersingular("curve is not supersingular")
    if isinstance(C, Char2Curve):
        cands = table2_candidates(C)
        method = "table"
        if len(cands) > 1:
            # the +-r rows always differ in r, so N1 settles them
            n1 = count_points(C, 1, budget)
            cands = {w for w in cands if w.r == n1 - q - 1}
            method = "table+count"
    else:
        shape = weierstrass_shape(C)
        cands = table34_candidates(shape, C.ctx.p, q)
        if cands is NOT_POSSIBLE:
            raise NotSupersingular("orbit shape %r cannot be supersingular"
                                   % (shape,))
        method = "table"
        if len(cands) > 1:
            C5 = monic_deg5_model(C)
            if C5 is not None:
                survivors = _order_test_filter(C5, sorted(cands, key=WeilCoeffs.pair))
                if len(survivors) == 1:
                    cands = set(survivors)
                    method = "table+order-test"
        if len(cands) > 1:
            n1 = count_points(C, 1, budget)
            cands = {w for w in cands if w.r == n1 - q - 1}
            method = "table+count"
            if len(cands) > 1:
                n2 = count_points(C, 2, budget)
                w = zeta_from_counts((n1, n2), q)
                cands = {c for c in cands if c == w}
    if len(cands) != 1:
        raise AmbiguityUnresolved("candidates left: %r" % (sorted(
            c.pair() for c in cands),))
    w = next(iter(cands))
    return (w, method) if with_method else w


# ---------------------------------------------------------------------------
# group structure of J(k)
# ---------------------------------------------------------------------------

def _weil_factors(w):
    """Irreducible factors of f_J over the integers, as (poly-coeffs, mult)
    pairs computed with sympy."""
    import sympy

    x = sympy.Symbol("x")
    f = x ** 4 + w.r * x ** 3 + w.s * x ** 2 + w.q * w.r * x + w.q ** 2
    _, facs = sympy.Poly(f, x).factor_list()
    return [(g, e) for (g, e) in facs]


def group_structure_candidates(w, p):
    """Possible abelian group structures of J(k), each as a sorted tuple of
    cyclic orders.  Generic case: direct sum of (Z/F_i(1))^{e_i}; the three
    exceptional isogeny classes return the full candidate lists."""
    q = w.q
    n = round(math.log(q, p))
    square = n % 2 == 0
    rs = w.pair()
    if rs == (0, 2 * q) and not square and p % 4 == 3:
        # f = (x^2+q)^2
        big, small = 1 + q, (1 + q) // 2
        return [tuple(sorted([big, big])),
                tuple(sorted([big, small, 2])),
                tuple(sorted([small, 2, small, 2]))]
    if rs == (0, -2 * q) and not square and p % 4 == 1:
        # f = (x^2-q)^2
        big, small = q - 1, (q - 1) // 2
        return [tuple(sorted([big, big])),
                tuple(sorted([big, small, 2])),
                tuple(sorted([small, 2, small, 2]))]
    if rs == (0, -2 * q) and square:
        # f = (x^2-q)^2
        out = {tuple(sorted([(q - 1) // 2, (q - 1) // 2, 2, 2]))}
        v2 = ((q - 1) & -(q - 1)).bit_length() - 1
        for m in range(v2 + 1):
            for k in range(v2 + 1):
                parts = [(q - 1) // 2 ** m, (q - 1) // 2 ** k, 2 ** (m + k)]
                out.add(tuple(sorted(t for t in parts if t > 1)))
        return sorted(out)
    facs = _weil_factors(w)
    parts = []
    for g, e in facs:
        val = int(g.eval(1))
        if val == 0:
            raise UnknownClass("factor vanishes at 1")
        parts.extend([abs(val)] * e)
    return [tuple(sorted(parts))]


# ---------------------------------------------------------------------------
# twisted Weil polynomials (base twists with extreme Weil polynomial)
# ---------------------------------------------------------------------------

#: (r, s) of the twist C_v of a curve with Weil polynomial (x+sqrt(q))^4,
#: keyed by the relation class of v.  sqrt(q) enters as a multiplier on rq.
_QSQ_TABLE = {
    "1": (4, 0, 6), "iota": (-4, 0, 6),
    "v2=1": (0, 0, -2), "v2=iota": (0, 0, 2),
    "v3=1": (-2, 0, 3), "v3=iota": (2, 0, 3),
    "v4=iota": (0, 0, 0),
    "v5=1": (-1, 0, 1), "v5=iota": (1, 0, 1),
    "v6=1": (0, 0, 1), "v6=iota": (0, 0, -1),
}


def relation_class(v, iota):
    """Smallest relation v^m in {1, iota} describing v, as one of the keys
    of the proposition table ('1', 'iota', 'v2=1', ..., 'v6=iota')."""
    if v.is_identity():
        return "1"
    if v == iota:
        return "iota"
    pw = v
    for m in range(2, 7):
        pw = pw * v
        if pw.is_identity():
            return "v%d=1" % m
        if pw == iota:
            return "v%d=iota" % m
    raise UnclassifiedOrder("automorphism order not covered")


def twisted_weil_qsq(v_class, q):
    """(r, s) of the twist by v of a base curve with Weil polynomial
    (x+sqrt(q))^4; q must be a square."""
    rq = exact_isqrt(q)
    if v_class not in _QSQ_TABLE:
        raise UnclassifiedOrder(v_class)
    a, b, c = _QSQ_TABLE[v_class]
    return WeilCoeffs(a * rq, b + c * q, q)


def twisted_weil_qnsq(n, eps, q):
    """(r, s) of the twist by v of a base curve with Weil polynomial
    (x^2 + eps q)^2, q nonsquare, in terms of the order n of v v^sigma."""
    table = {1: (0, 2 * eps * q), 2: (0, -2 * eps * q), 3: (0, -eps * q),
             4: (0, 0), 6: (0, eps * q)}
    if n not in table:
        raise InvalidOrder("order %d of v v^sigma is not possible" % n)
    r, s = table[n]
    return WeilCoeffs(r, s, q)
