"""Supersingular genus-2 families with extra automorphisms and their twists.

Six families cover, up to geometric isomorphism, every genus-2 curve in odd
characteristic whose reduced automorphism group is nontrivial:

  biquadratic   y^2 = x^6 + a x^4 + b x^2 + 1   (generic V4)
  d8            y^2 = x^5 + x^3 + a x           (a != 0, 1/4, 9/100)
  d12           y^2 = x^6 + x^3 + a             (p > 3; a != 0, 1/4, -1/50)
  x6-1          y^2 = x^6 - 1                   (supersingular iff p = -1 mod 3)
  x5-x          y^2 = x^5 - x                   (supersingular iff p = 5, 7 mod 8)
  x5-1          y^2 = x^5 - 1                   (supersingular iff p = 2, 3, 4 mod 5)

For each family this module materializes a catalogue of explicit twist rows
over a given field: an equation, a cocycle (as a Mobius matrix over the
splitting field), a predicted pair (r, s) of Weil coefficients, a predicted
self-duality flag and a predicted count of rational automorphisms.  Every
prediction can be checked against the point-counting oracle (verify_row) and
against the rebasing propositions for twisted Weil polynomials
(twist_catalogue).
"""

from __future__ import annotations

import numpy as np

from . import fast, ff, poly, zeta
from .curve import (OddCurve, CurveError, NotGenus2, automorphism_group,
                    twist_aut_count, is_self_dual_twist, fixed_rational_count,
                    h1_classes, first_nonsquare, first_non_mth_power,
                    mobius_normalize)
from .poly import Polynomial
from .zeta import (WeilCoeffs, exact_isqrt, relation_class, twisted_weil_qsq,
                   twisted_weil_qnsq, weil_from_counting, InvalidOrder,
                   UnclassifiedOrder)


class FamilyError(Exception):
    pass


class NoParameterFound(FamilyError):
    pass


class RowNotApplicable(FamilyError):
    pass


KINDS = ("biquadratic", "d8", "d12", "x6-1", "x5-x", "x5-1")

FAMILY_TABLES = {
    "x5-1": (5,),
    "x5-x": (6, 7, 9),
    "x6-1": (10, 11),
    "d12": (12, 13, 14),
    "d8": (15, 16, 17),
    "biquadratic": (18,),
}

PARAM_BUDGET = 10 ** 4


# ---------------------------------------------------------------------------
# family tags and standard models
# ---------------------------------------------------------------------------

class FamilyTag:
    """A family name plus its parameters (field elements)."""

    __slots__ = ("kind", "params")

    def __init__(self, kind, params=()):
        if kind not in KINDS:
            raise FamilyError("unknown family %r" % (kind,))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "params", tuple(params))

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def __eq__(self, other):
        return (isinstance(other, FamilyTag) and self.kind == other.kind
                and self.params == other.params)

    def __hash__(self):
        return hash((self.kind, self.params))

    def __repr__(self):
        if self.params:
            return "FamilyTag(%r, %r)" % (self.kind, self.params)
        return "FamilyTag(%r)" % (self.kind,)


def legendre_int(c, p, m=1):
    """Quadratic residue symbol of the integer constant c in GF(p^m)."""
    if c % p == 0:
        raise FamilyError("residue symbol of zero")
    return 1 if pow(c % p, (p ** m - 1) // 2, p) == 1 else -1


def is_degenerate(kind, params, ctx):
    """True when the parameters violate the genericity conditions of the
    family (degenerate members have extra automorphisms or singularities)."""
    el = ctx.element
    if kind == "d8":
        (a,) = params
        return (a.is_zero() or el(4) * a == ctx.one
                or el(100) * a == el(9))
    if kind == "d12":
        (a,) = params
        return (a.is_zero() or el(4) * a == ctx.one
                or el(50) * a == el(-1))
    if kind == "biquadratic":
        a, b = params
        c = a * b
        d = a ** 3 + b ** 3
        for expr in (el(4) * c ** 3 - d * d,
                     c * c - el(4) * d + el(18) * c - el(27),
                     c * c - el(4) * d - el(110) * c + el(1125)):
            if expr.is_zero():
                return True
        return False
    return False


def standard_model(tag, ctx):
    """The standard curve of the family over ctx."""
    p = ctx.p
    if p == 2:
        raise FamilyError("families are defined in odd characteristic")
    el = ctx.element
    if tag.kind == "x5-1":
        f = Polynomial(ctx, [el(-1), el(0), el(0), el(0), el(0), el(1)])
    elif tag.kind == "x5-x":
        f = Polynomial(ctx, [el(0), el(-1), el(0), el(0), el(0), el(1)])
    elif tag.kind == "x6-1":
        f = Polynomial(ctx, [el(-1), el(0), el(0), el(0), el(0), el(0), el(1)])
    elif tag.kind == "d8":
        (a,) = (ctx.element(t) for t in tag.params)
        if is_degenerate("d8", (a,), ctx):
            raise FamilyError("degenerate d8 parameter %r" % (a,))
        f = Polynomial(ctx, [el(0), a, el(0), el(1), el(0), el(1)])
    elif tag.kind == "d12":
        if p == 3:
            raise FamilyError("the sextic d12 model needs p > 3")
        (a,) = (ctx.element(t) for t in tag.params)
        if is_degenerate("d12", (a,), ctx):
            raise FamilyError("degenerate d12 parameter %r" % (a,))
        f = Polynomial(ctx, [a, el(0), el(0), el(1), el(0), el(0), el(1)])
    else:
        a, b = (ctx.element(t) for t in tag.params)
        if is_degenerate("biquadratic", (a, b), ctx):
            raise FamilyError("degenerate biquadratic parameters")
        f = Polynomial(ctx, [el(1), el(0), b, el(0), a, el(0), el(1)])
    return OddCurve(f)


def ss_condition(tag, p):
    """Whether the family member is supersingular in characteristic p.

    The three rigid curves obey exact congruences on p; parametric families
    are decided by the matrix test on the standard model (tag must then carry
    parameters over a concrete field)."""
    if p == 2:
        return False
    if tag.kind == "x6-1":
        return p % 3 == 2
    if tag.kind == "x5-x":
        return p % 8 in (5, 7)
    if tag.kind == "x5-1":
        return p % 5 in (2, 3, 4)
    if not tag.params:
        raise FamilyError("parametric family needs concrete parameters")
    ctx = tag.params[0].ctx
    if ctx.p != p:
        raise FamilyError("characteristic mismatch")
    return zeta.is_supersingular(standard_model(tag, ctx))


def find_ss_parameters(kind, ctx, budget=PARAM_BUDGET):
    """Scan parameters in enumeration order and return the supersingular,
    non-degenerate members found among the first `budget` candidates."""
    if ctx.p == 2:
        return []
    tags = []
    if kind in ("d8", "d12"):
        if kind == "d12" and ctx.p == 3:
            return []
        count = 0
        for a in ctx.elements():
            if a.is_zero() or count >= budget:
                if count >= budget:
                    break
                continue
            count += 1
            if is_degenerate(kind, (a,), ctx):
                continue
            tag = FamilyTag(kind, (a,))
            try:
                C = standard_model(tag, ctx)
            except (CurveError, FamilyError):
                continue
            if zeta.is_supersingular(C):
                tags.append(tag)
        return tags
    if kind == "biquadratic":
        return _find_biquadratic(ctx, budget)
    raise FamilyError("rigid family %r has no parameters" % (kind,))


def _find_biquadratic(ctx, budget):
    q = ctx.q
    one_idx = ctx.one.index()
    limit = min(q * q, budget)
    if fast.have_tables(ctx):
        idx = np.arange(limit, dtype=np.int64)
        ai = idx // q
        bi = idx % q
        ones = np.full(limit, one_idx, dtype=np.int64)
        zeros = np.zeros(limit, dtype=np.int64)
        mask = fast.supersingular_mask(
            ctx, [ones, zeros, bi, zeros, ai, zeros, ones])
        candidates = idx[mask]
    else:
        candidates = range(limit)
    tags = []
    for j in candidates:
        a = ctx.from_index(int(j) // q)
        b = ctx.from_index(int(j) % q)
        if is_degenerate("biquadratic", (a, b), ctx):
            continue
        tag = FamilyTag("biquadratic", (a, b))
        try:
            C = standard_model(tag, ctx)
        except (CurveError, FamilyError):
            continue
        if zeta.is_supersingular(C):
            tags.append(tag)
    return tags


# ---------------------------------------------------------------------------
# parameter-search helpers
# ---------------------------------------------------------------------------

def _scan(ctx, pred, budget=PARAM_BUDGET, what="parameter"):
    count = 0
    for e in ctx.elements():
        if e.is_zero():
            continue
        if count >= budget:
            break
        count += 1
        if pred(e):
            return e
    raise NoParameterFound("no %s found over %r" % (what, ctx))


def _quadratic_ext(ctx):
    k2 = ff.ctx_new(ctx.p, 2 * ctx.n, max_size=None)
    return k2, ff.embedding(ctx, k2)


def _theta_with_norm(ctx, target, exclude_k=True, noncube=False,
                     budget=PARAM_BUDGET):
    """theta in the quadratic extension with N(theta) = target, found by
    enumeration; optionally excluded from k or restricted to noncubes."""
    k2, emb = _quadratic_ext(ctx)
    t_up = emb(target)
    q = ctx.q
    count = 0
    for th in k2.elements():
        if th.is_zero():
            continue
        if count >= budget * budget:
            break
        count += 1
        if th ** (q + 1) != t_up:
            continue
        if exclude_k and th ** q == th:
            continue
        if noncube and ff.residue_symbol(th, 3) != -1:
            continue
        return k2, emb, th
    raise NoParameterFound("no theta with the requested norm")


def _min_poly2(k2, theta, q):
    """Monic minimal polynomial of theta over the degree-2 subfield,
    as a polynomial over k2."""
    one = k2.one
    return Polynomial(k2, [theta ** (q + 1), -(theta + theta ** q), one])


def _descend(pol, emb):
    """Map a polynomial with coefficients in the image of emb back down."""
    coeffs = []
    for i in range(pol.degree + 1):
        c = emb.preimage(pol[i])
        if c is None:
            raise FamilyError("polynomial does not descend to the base field")
        coeffs.append(c)
    return Polynomial(emb.src, coeffs)


def _nonsquare(ctx):
    return first_nonsquare(ctx)


def _noncube(ctx):
    t = first_non_mth_power(ctx, 3)
    if t is None:
        raise NoParameterFound("every element is a cube")
    return t


# ---------------------------------------------------------------------------
# cocycle matrix builders (over the splitting field K of an AutGroup)
# ---------------------------------------------------------------------------

def _kconst_roots(K, coeffs):
    return poly.roots_in_field(Polynomial(K, [K.element(c) for c in coeffs]))


def _i_branches(G):
    return _kconst_roots(G.K, [1, 0, 1])          # z^2 + 1


def _eta_branches(G):
    return _kconst_roots(G.K, [1, 1, 1])          # z^2 + z + 1


def _root_branches(G, a, m):
    """All m-th roots in K of the base-field element a."""
    K = G.K
    target = G.emb(a)
    pol_coeffs = [-target] + [K.zero] * (m - 1) + [K.one]
    return poly.roots_in_field(Polynomial(K, pol_coeffs))


def _mats_identity(G, env):
    K = G.K
    return [(K.one, K.zero, K.zero, K.one)]


def _mats_scale(value_fn):
    def build(G, env):
        K = G.K
        return [(z, K.zero, K.zero, K.one) for z in value_fn(G, env)]
    return build


def _mats_inv(value_fn):
    """x -> c / x for each candidate constant c."""
    def build(G, env):
        K = G.K
        return [(K.zero, z, K.one, K.zero) for z in value_fn(G, env)]
    return build


def _mats_cayley(G, env):
    """x -> (x - i)/(x + i), both branches of i."""
    K = G.K
    return [(K.one, -z, K.one, z) for z in _i_branches(G)]


def _lifts(G, mats):
    wanted = {mobius_normalize(m)[0] for m in mats}
    return [u for u in G.elements if u.m in wanted]


# ---------------------------------------------------------------------------
# row instances
# ---------------------------------------------------------------------------

class RowInstance:
    """A materialized twist row: concrete curve, predictions, cocycle."""

    __slots__ = ("table", "row", "label", "curve", "tag", "pred_rs",
                 "pred_sd", "pred_aut", "mats", "note")

    def __init__(self, table, row, label, curve, tag, pred_rs, pred_sd,
                 pred_aut, mats=None, note=""):
        self.table = table
        self.row = row
        self.label = label
        self.curve = curve
        self.tag = tag
        self.pred_rs = frozenset(pred_rs)
        self.pred_sd = pred_sd
        self.pred_aut = pred_aut
        self.mats = mats
        self.note = note

    def __repr__(self):
        return ("RowInstance(table=%d, row=%d, %s, rs=%s)"
                % (self.table, self.row, self.label, sorted(self.pred_rs)))


def _inst(table, row, label, f_or_curve, tag, rs, sd, aut, mats=None, note=""):
    C = f_or_curve if isinstance(f_or_curve, OddCurve) else OddCurve(f_or_curve)
    return RowInstance(table, row, label, C, tag, rs, sd, aut, mats, note)


# ---------------------------------------------------------------------------
# table builders
# ---------------------------------------------------------------------------

def _applies_t5(ctx, tag):
    return ctx.p % 5 in (2, 3, 4)


def _build_t5(ctx, tag, budget):
    q = ctx.q
    el = ctx.element
    out = []
    f0 = Polynomial(ctx, [el(-1), el(0), el(0), el(0), el(0), el(1)])
    if q % 5 in (2, 3):
        out.append(_inst(5, 1, "y^2=x^5-1", f0, tag,
                         {(0, 0)}, False, 2, _mats_identity))
    elif q % 5 == 4:
        out.append(_inst(5, 1, "y^2=x^5-1", f0, tag,
                         {(0, 2 * q)}, False, 2, _mats_identity))
    else:
        sq = exact_isqrt(q)
        eps = 1 if sq % 5 == 1 else -1
        out.append(_inst(5, 1, "y^2=x^5-1", f0, tag,
                         {(-4 * eps * sq, 6 * q)}, False, 10, _mats_identity))
        # one representative per nontrivial class of k*/(k*)^5
        seen = set()
        reps = []
        for e in ctx.elements():
            if e.is_zero():
                continue
            c = e ** ((q - 1) // 5)
            if c == ctx.one or c in seen:
                continue
            seen.add(c)
            reps.append(e)
            if len(reps) == 4:
                break
        for j, t in enumerate(reps):
            f = Polynomial(ctx, [el(-1), el(0), el(0), el(0), el(0), t])
            zal = (t.inverse()) ** ((q - 1) // 5)

            def mats(G, env, _z=zal):
                K = G.K
                return [(G.emb(_z), K.zero, K.zero, K.one)]

            out.append(_inst(5, 2, "y^2=%s*x^5-1" % (t,), f, tag,
                             {(eps * sq, q)}, False, 10, mats,
                             note="class %d of k*/(k*)^5" % (j + 1,)))
    return out


def _applies_t6(ctx, tag):
    return ctx.q % 8 == 7


def _build_t6(ctx, tag, budget):
    q = ctx.q
    el = ctx.element
    x = Polynomial(ctx, [el(0), el(1)])
    one = Polynomial(ctx, [el(1)])
    out = [
        _inst(6, 1, "y^2=x^5-x",
              Polynomial(ctx, [el(0), el(-1), el(0), el(0), el(0), el(1)]),
              tag, {(0, 2 * q)}, True, 8, _mats_identity),
        _inst(6, 2, "y^2=x^5+x",
              Polynomial(ctx, [el(0), el(1), el(0), el(0), el(0), el(1)]),
              tag, {(0, 2 * q)}, True, 4,
              _mats_scale(lambda G, env: _i_branches(G))),
    ]

    def t_ok(t):
        return ff.residue_symbol(t * t + el(1), 2) == -1

    t3 = _scan(ctx, lambda t: t_ok(t) and _sep(
        (x * x + one) * (x * x - el(2) * t * x - one)
        * (x * x + (el(2) / t) * x - one)), budget, "t with t^2+1 nonsquare")
    f3 = ((x * x + one) * (x * x - el(2) * t3 * x - one)
          * (x * x + (el(2) / t3) * x - one))
    out.append(_inst(6, 3, "y^2=(x^2+1)(x^2-2tx-1)(x^2+(2/t)x-1)", f3, tag,
                     {(0, -2 * q)}, True, 24,
                     _mats_inv(lambda G, env: [-G.K.one]),
                     note="t=%s" % (t3,)))
    t4 = _scan(ctx, lambda t: t_ok(t) and _sep(
        (x * x + one) * (x ** 4 - el(4) * t * x ** 3 - el(6) * x * x
                         + el(4) * t * x + one)),
        budget, "t with t^2+1 nonsquare")
    f4 = (x * x + one) * (x ** 4 - el(4) * t4 * x ** 3 - el(6) * x * x
                          + el(4) * t4 * x + one)
    out.append(_inst(6, 4, "y^2=(x^2+1)(x^4-4tx^3-6x^2+4tx+1)", f4, tag,
                     {(0, 0)}, True, 4,
                     _mats_inv(lambda G, env: _i_branches(G)),
                     note="t=%s" % (t4,)))

    half = el(2).inverse()

    def row5(t):
        u = el(-2) - t * t
        s = ff.sqrt(u)
        if s is None or s.is_zero():
            return None
        f = Polynomial(ctx, [
            el(1), t - el(3), el(5) * (el(2) - t - s) * half,
            el(5) * (s - el(1)), el(5) * (el(2) + t - s) * half,
            -(t + el(3)), el(1)])
        if poly.is_irreducible(f):
            return f
        return None

    f5 = None
    count = 0
    for t in ctx.elements():
        if count >= budget:
            break
        count += 1
        f5 = row5(t)
        if f5 is not None:
            break
    if f5 is None:
        raise NoParameterFound("no (s,t) with s^2+t^2=-2 and irreducible sextic")
    out.append(_inst(6, 5, "y^2=irreducible sextic, s^2+t^2=-2", f5, tag,
                     {(0, q)}, False, 6, _mats_cayley))
    return out


def _applies_t7(ctx, tag):
    return ctx.q % 8 == 5


def _build_t7(ctx, tag, budget):
    q = ctx.q
    p = ctx.p
    el = ctx.element
    x = Polynomial(ctx, [el(0), el(1)])
    out = [
        _inst(7, 1, "y^2=x^5-x",
              Polynomial(ctx, [el(0), el(-1), el(0), el(0), el(0), el(1)]),
              tag, {(0, -2 * q)}, True, 120 if p == 5 else 24,
              _mats_identity),
        _inst(7, 2, "y^2=x^5-4x",
              Polynomial(ctx, [el(0), el(-4), el(0), el(0), el(0), el(1)]),
              tag, {(0, 2 * q)}, True, 8,
              _mats_scale(lambda G, env: [-G.K.one])),
        _inst(7, 3, "y^2=x^5-2x",
              Polynomial(ctx, [el(0), el(-2), el(0), el(0), el(0), el(1)]),
              tag, {(0, 0)}, True, 4,
              _mats_scale(lambda G, env: _i_branches(G))),
        _inst(7, 4, "y^2=(x^2+2)(x^4-12x^2+4)",
              (x * x + el(2)) * (x ** 4 - el(12) * x * x + el(4)),
              tag, {(0, 2 * q)}, True, 12 if p == 5 else 4,
              _mats_inv(lambda G, env: _i_branches(G))),
    ]
    i0 = ff.sqrt(el(-1))

    def cubic(t):
        return Polynomial(ctx, [el(1), t - el(3), -t, el(1)])

    f5 = None
    count = 0
    for t in ctx.elements():
        if count >= budget:
            break
        count += 1
        den = (el(5) * i0 + el(3)) - el(2) * t
        if den.is_zero():
            continue
        f1 = cubic(t)
        if not poly.is_irreducible(f1):
            continue
        t2 = (el(18) + (el(5) * i0 - el(3)) * t) / den
        f2 = cubic(t2)
        prod = f1 * f2
        if _sep(prod):
            f5 = prod
            break
    if f5 is None:
        raise NoParameterFound("no t with irreducible cubic pair")
    out.append(_inst(7, 5, "y^2=f(t,x)f(t',x), cubics", f5, tag,
                     {(0, q)}, p == 5, 6, _mats_cayley))
    if p == 5:
        t6 = _scan(ctx, lambda t: ff.trace_to(t, 1) == ctx.one, budget,
                   "trace-one t")
        f6 = Polynomial(ctx, [-t6, el(-1), el(0), el(0), el(0), el(1)])
        out.append(_inst(7, 6, "y^2=x^5-x-t, tr(t)=1", f6, tag,
                         {(exact_isqrt(5 * q), 3 * q)}, False, 10,
                         _mats_unipotent))
        f7 = _t7_row7_poly(ctx, budget)
        out.append(_inst(7, 7, "y^2=x^6+tx^5+(1-t)x+2 irreducible", f7, tag,
                         {(0, -q)}, True, 6, _mats_row7))
    return out


def _mats_unipotent(G, env):
    K = G.K
    return [(K.one, K.one, K.zero, K.one)]


def _mats_row7(G, env):
    K = G.K
    return [(K.zero, K.element(3), K.one, K.element(-1))]


def _t7_row7_poly(ctx, budget):
    el = ctx.element
    count = 0
    for t in ctx.elements():
        if count >= budget:
            break
        count += 1
        f = Polynomial(ctx, [el(2), el(1) - t, el(0), el(0), el(0), t, el(1)])
        if poly.is_irreducible(f):
            return f
    raise NoParameterFound("no t with irreducible sextic")


def _applies_t9(ctx, tag):
    return ctx.p % 8 in (5, 7) and ctx.n % 2 == 0


def _build_t9(ctx, tag, budget):
    q = ctx.q
    p = ctx.p
    el = ctx.element
    sq = exact_isqrt(q)
    eps = legendre_int(-1, p, ctx.n // 2)
    eps2 = legendre_int(-3, p, ctx.n // 2)
    x = Polynomial(ctx, [el(0), el(1)])
    t = _nonsquare(ctx)
    out = [
        _inst(9, 1, "y^2=x^5-x",
              Polynomial(ctx, [el(0), el(-1), el(0), el(0), el(0), el(1)]),
              tag, {(-4 * eps * sq, 6 * q)}, False, 240 if p == 5 else 48,
              _mats_identity),
        _inst(9, 2, "y^2=x^5-t^2 x",
              Polynomial(ctx, [el(0), -t * t, el(0), el(0), el(0), el(1)]),
              tag, {(0, 2 * q)}, True, 8,
              _mats_scale(lambda G, env: [-G.K.one])),
        _inst(9, 3, "y^2=x^5-t x",
              Polynomial(ctx, [el(0), -t, el(0), el(0), el(0), el(1)]),
              tag, {(0, 0)}, False, 8,
              _mats_scale(lambda G, env: _i_branches(G))),
        _inst(9, 4, "y^2=(x^2-t)(x^4+6tx^2+t^2)",
              (x * x - t) * (x ** 4 + el(6) * t * x * x + t * t),
              tag, {(0, -2 * q)}, True, 12 if p == 5 else 4,
              _mats_inv(lambda G, env: _i_branches(G))),
    ]
    tc = _noncube(ctx)
    r3 = ff.sqrt(el(3))
    f5 = None
    for branch in (r3, -r3):
        c0 = el(15) * branch - el(26)
        cand = (x ** 3 - tc) * (x ** 3 - c0 * tc)
        if _sep(cand):
            f5 = cand
            break
    if f5 is None:
        raise NoParameterFound("degenerate cubic pair in row 5")
    out.append(_inst(9, 5, "y^2=(x^3-t)(x^3-(15*sqrt(3)-26)t)", f5, tag,
                     {(2 * eps2 * sq, 3 * q)}, False, 12 if p == 5 else 6,
                     _mats_cayley))
    if p == 5:
        t6 = _scan(ctx, lambda e: ff.trace_to(e, 1) == ctx.one, budget,
                   "trace-one t")
        f6 = Polynomial(ctx, [-t6, el(-1), el(0), el(0), el(0), el(1)])
        out.append(_inst(9, 6, "y^2=x^5-x-t, tr(t)=1", f6, tag,
                         {(sq, q)}, False, 10, _mats_unipotent))
        f7 = _t7_row7_poly(ctx, budget)
        out.append(_inst(9, 7, "y^2=x^6+tx^5+(1-t)x+2 irreducible", f7, tag,
                         {(0, q)}, False, 12, _mats_row7))
    return out


def _applies_t10(ctx, tag):
    return ctx.q % 3 == 2 and ctx.p != 5


def _build_t10(ctx, tag, budget):
    q = ctx.q
    el = ctx.element
    eps = legendre_int(-1, ctx.p, 1)
    x = Polynomial(ctx, [el(0), el(1)])
    one = Polynomial(ctx, [el(1)])
    t0 = _nonsquare(ctx)
    out = [
        _inst(10, 1, "y^2=x^6-1",
              Polynomial(ctx, [el(-1)] + [el(0)] * 5 + [el(1)]),
              tag, {(0, 2 * q)}, eps == -1, 6 + 2 * eps, _mats_identity),
        _inst(10, 2, "y^2=x^6-t",
              Polynomial(ctx, [-t0] + [el(0)] * 5 + [el(1)]),
              tag, {(0, 2 * q)}, eps == 1, 6 - 2 * eps,
              _mats_scale(lambda G, env: [-G.K.one])),
        _inst(10, 3, "y^2=x(x^2-1)(x^2-9)",
              x * (x * x - one) * (x * x - el(9)),
              tag, {(0, -2 * eps * q)}, True, 12,
              _mats_inv(lambda G, env: [G.K.one])),
    ]

    def row4(t):
        if t.is_zero():
            return None
        if ff.residue_symbol(t * t + el(4), 2) != -1:
            return None
        den = t * t + el(3)
        if den.is_zero():
            return None
        s = den.inverse()
        f = ((x ** 4 - el(2) * s * t * x ** 3 + (el(7) * s + el(1)) * x * x
              + el(2) * t * s * x + one)
             * (x * x - (el(4) / t) * x - one))
        return f if _sep(f) else None

    f4 = _first_poly(ctx, row4, budget, "t with t^2+4 nonsquare")
    out.append(_inst(10, 4, "y^2=(x^4-2stx^3+(7s+1)x^2+2tsx+1)(x^2-(4/t)x-1)",
                     f4, tag, {(0, 2 * eps * q)}, True, 12,
                     _mats_inv(lambda G, env: [-G.K.one])))

    def row5(t):
        s = t * t - el(4)
        if s.is_zero() or ff.residue_symbol(s, 2) != -1:
            return None
        quad = x * x - t * x + one
        r = poly.pow_mod(x, (q + 1) // 3, quad) - one
        if poly.gcd(r, quad).degree != 0:
            return None
        f = Polynomial(ctx, [s ** 3, el(6) * t * s * s, el(15) * s * s,
                             el(20) * t * s, el(15) * s, el(6) * t, el(1)])
        return f if _sep(f) else None

    f5 = _first_poly(ctx, row5, budget, "t for sextic row 5")
    out.append(_inst(10, 5, "y^2=x^6+6tx^5+15sx^4+20tsx^3+15s^2x^2+6ts^2x+s^3",
                     f5, tag, {(0, eps * q)}, True, 6,
                     _mats_inv(lambda G, env: _eta_branches(G))))

    def row6(t):
        if t.is_zero():
            return None
        den = t * t + el(4)
        if den.is_zero():
            return None
        s = t * t / den
        if ff.residue_symbol(s, 2) != -1:
            return None
        quad = x * x - t * x - one
        r = poly.pow_mod(x, (q + 1) // 3, quad) + one
        if poly.gcd(r, quad).degree != 0:
            return None
        f = Polynomial(ctx, [s ** 3, el(6) * s * s, el(15) * s * s,
                             el(20) * s, el(15) * s, el(6), el(1)])
        return f if _sep(f) else None

    f6 = _first_poly(ctx, row6, budget, "t for sextic row 6")
    out.append(_inst(10, 6, "y^2=x^6+6x^5+15sx^4+20sx^3+15s^2x^2+6s^2x+s^3",
                     f6, tag, {(0, -eps * q)}, True, 6,
                     _mats_inv(lambda G, env: [-z for z in _eta_branches(G)])))
    return out


def _applies_t11(ctx, tag):
    return ctx.p % 3 == 2 and ctx.p != 5 and ctx.n % 2 == 0


def _build_t11(ctx, tag, budget):
    q = ctx.q
    el = ctx.element
    sq = exact_isqrt(q)
    eps = legendre_int(-3, ctx.p, ctx.n // 2)
    x = Polynomial(ctx, [el(0), el(1)])
    t2 = _nonsquare(ctx)
    t3 = _noncube(ctx)
    t6 = _scan(ctx, lambda e: (ff.residue_symbol(e, 2) == -1
                               and ff.residue_symbol(e, 3) == -1),
               budget, "element neither square nor cube")
    out = [
        _inst(11, 1, "y^2=x^6-1",
              Polynomial(ctx, [el(-1)] + [el(0)] * 5 + [el(1)]),
              tag, {(-4 * eps * sq, 6 * q)}, False, 24, _mats_identity),
        _inst(11, 2, "y^2=x^6-t^3",
              Polynomial(ctx, [-t2 ** 3] + [el(0)] * 5 + [el(1)]),
              tag, {(0, -2 * q)}, True, 12,
              _mats_scale(lambda G, env: [-G.K.one])),
        _inst(11, 3, "y^2=x^6-t^2",
              Polynomial(ctx, [-t3 * t3] + [el(0)] * 5 + [el(1)]),
              tag, {(2 * eps * sq, 3 * q)}, False, 12,
              _mats_scale(lambda G, env: _eta_branches(G))),
        _inst(11, 4, "y^2=x^6-t",
              Polynomial(ctx, [-t6] + [el(0)] * 5 + [el(1)]),
              tag, {(0, q)}, False, 12,
              _mats_scale(lambda G, env: [-z for z in _eta_branches(G)])),
        _inst(11, 5, "y^2=x(x^2+3t)(x^2+t/3)",
              x * (x * x + el(3) * t2) * (x * x + t2 / el(3)),
              tag, {(0, 2 * q)}, True, 4,
              _mats_inv(lambda G, env: [G.K.one])),
        _inst(11, 6, "y^2=x^6+15tx^4+15t^2x^2+t^3",
              Polynomial(ctx, [t2 ** 3, el(0), el(15) * t2 * t2, el(0),
                               el(15) * t2, el(0), el(1)]),
              tag, {(0, -2 * q)}, True, 4,
              _mats_inv(lambda G, env: [-G.K.one])),
    ]
    return out


def _applies_t12(ctx, tag):
    return ctx.p > 3 and ctx.q % 3 == 2


def _build_t12(ctx, tag, budget):
    q = ctx.q
    el = ctx.element
    (a,) = tag.params
    eps = ff.residue_symbol(a, 2)
    A = ff.nth_root(a, 3)
    out = [
        _inst(12, 1, "y^2=x^6+x^3+a",
              Polynomial(ctx, [a, el(0), el(0), el(1), el(0), el(0), el(1)]),
              tag, {(0, 2 * q)}, eps == -1, 3 + eps, _mats_identity),
    ]
    f2 = _theta_sextic(ctx, a, A.inverse(), 3, budget)
    out.append(_inst(12, 2, "y^2=theta^-3(x-theta)^6-g^3+a theta^3(x-theta^s)^6",
                     f2, tag, {(0, 2 * eps * q)}, eps == -1, 9 + 3 * eps,
                     _mats_inv(lambda G, env, _A=A: [G.emb(_A)])))
    f3 = _t12_row3(ctx, a, budget)
    out.append(_inst(12, 3, "y^2=theta(x-eta)^6-g^3+a theta^-1(x-eta^2)^6",
                     f3, tag, {(0, -eps * q)}, False, 6,
                     _mats_inv(lambda G, env, _A=A:
                               [z * G.emb(_A) for z in _eta_branches(G)])))
    return out


def _theta_sextic(ctx, a, norm_target, nexp, budget):
    """y^2 = theta^-n (x-theta)^6 - g(x)^3 + a theta^n (x-theta^q)^6 with
    g the minimal polynomial of theta, descended to the base field."""
    q = ctx.q
    k2, emb, th = _theta_with_norm(ctx, norm_target, exclude_k=True,
                                   budget=budget)
    g = _min_poly2(k2, th, q)
    x2 = Polynomial(k2, [k2.zero, k2.one])
    lhs = ((x2 - th) ** 6) * (th.inverse() ** nexp)
    rhs = ((x2 - th ** q) ** 6) * (emb(a) * th ** nexp)
    f_up = lhs - g ** 3 + rhs
    return _descend(f_up, emb)


def _t12_row3(ctx, a, budget):
    q = ctx.q
    k2, emb, th = _theta_with_norm(ctx, a, exclude_k=False, noncube=True,
                                   budget=budget)
    g = Polynomial(k2, [k2.one, k2.one, k2.one])
    etas = poly.roots_in_field(g)
    if len(etas) != 2:
        raise NoParameterFound("no primitive cube root of unity upstairs")
    eta = etas[0]
    x2 = Polynomial(k2, [k2.zero, k2.one])
    f_up = (((x2 - eta) ** 6) * th - g ** 3
            + ((x2 - eta * eta) ** 6) * (emb(a) * th.inverse()))
    return _descend(f_up, emb)


def _applies_t13(ctx, tag):
    return ctx.p > 3 and ctx.q % 3 == 1 and ctx.n % 2 == 1


def _build_t13(ctx, tag, budget):
    q = ctx.q
    el = ctx.element
    (a,) = tag.params
    nu3 = ff.residue_symbol(a, 3)
    if nu3 == 1:
        A = ff.nth_root(a, 3)
        nexp = 3
    else:
        A = a
        nexp = 1
    f1 = Polynomial(ctx, [a, el(0), el(0), el(1), el(0), el(0), el(1)])
    out = [
        _inst(13, 1, "y^2=x^6+x^3+a", f1, tag,
              {(0, -2 * q)} if nu3 == 1 else {(0, q)},
              nu3 == 1, 6, _mats_identity),
    ]
    if nu3 == 1:
        t = _noncube(ctx)
        f2 = Polynomial(ctx, [t * t * a, el(0), el(0), t, el(0), el(0), el(1)])
        rs2, sd2 = {(0, q)}, False
        zal = t ** ((q - 1) // 3)
    else:
        f2 = Polynomial(ctx, [a ** 3, el(0), el(0), a, el(0), el(0), el(1)])
        rs2, sd2 = {(0, -2 * q)}, True
        zal = a ** ((q - 1) // 3)
    out.append(_inst(13, 2, "y^2=x^6+tx^3+t^2 a", f2, tag, rs2, sd2, 6,
                     _mats_scale(lambda G, env, _z=zal: [G.emb(_z)])))
    f3 = _theta_sextic(ctx, a, A.inverse(), nexp, budget)
    out.append(_inst(13, 3, "y^2=theta^-n(x-theta)^6-g^3+a theta^n(x-theta^s)^6",
                     f3, tag, {(0, 2 * q)}, True, 2,
                     _mats_inv(lambda G, env, _a=a: _root_branches(G, _a, 3))))
    return out


def _applies_t14(ctx, tag):
    return ctx.p > 3 and ctx.n % 2 == 0


def _build_t14(ctx, tag, budget):
    q = ctx.q
    el = ctx.element
    sq = exact_isqrt(q)
    eps = legendre_int(-3, ctx.p, ctx.n // 2)
    (a,) = tag.params
    nu3 = ff.residue_symbol(a, 3)
    if nu3 == 1:
        A = ff.nth_root(a, 3)
        nexp = 3
    else:
        A = a
        nexp = 1
    big = {(-4 * eps * sq, 6 * q)}
    small = {(2 * eps * sq, 3 * q)}
    f1 = Polynomial(ctx, [a, el(0), el(0), el(1), el(0), el(0), el(1)])
    out = [
        _inst(14, 1, "y^2=x^6+x^3+a", f1, tag,
              big if nu3 == 1 else small, False,
              12 if nu3 == 1 else 6, _mats_identity),
    ]
    if nu3 == 1:
        t = _noncube(ctx)
        f2 = Polynomial(ctx, [t * t * a, el(0), el(0), t, el(0), el(0), el(1)])
        rs2, aut2 = small, 6
        zal = t ** ((q - 1) // 3)
    else:
        f2 = Polynomial(ctx, [a ** 3, el(0), el(0), a, el(0), el(0), el(1)])
        rs2, aut2 = big, 12
        zal = a ** ((q - 1) // 3)
    out.append(_inst(14, 2, "y^2=x^6+tx^3+t^2 a", f2, tag, rs2, False, aut2,
                     _mats_scale(lambda G, env, _z=zal: [G.emb(_z)])))
    f3 = _theta_sextic(ctx, a, A.inverse(), nexp, budget)
    out.append(_inst(14, 3, "y^2=theta^-n(x-theta)^6-g^3+a theta^n(x-theta^s)^6",
                     f3, tag, {(0, -2 * q)}, False, 4,
                     _mats_inv(lambda G, env, _a=a: _root_branches(G, _a, 3))))
    return out


def _applies_t15(ctx, tag):
    return ctx.n % 2 == 0


def _build_t15(ctx, tag, budget):
    q = ctx.q
    el = ctx.element
    sq = exact_isqrt(q)
    (a,) = tag.params
    nu4 = ff.residue_symbol(a, 4)
    epsm = legendre_int(-1, ctx.p, ctx.n // 2)
    disc = ff.sqrt(el(1) - el(4) * a)
    if disc is None:
        raise NoParameterFound("1-4a is not a square")
    z = (el(-1) + disc) / el(2)
    if (a / z).index() < z.index():
        z = a / z
    f1 = Polynomial(ctx, [el(0), a, el(0), el(1), el(0), el(1)])
    if nu4 == 1:
        eps = -epsm * ff.residue_symbol(z, 4)
        rs1, sd1, aut1 = {(4 * eps * sq, 6 * q)}, False, 8
    else:
        rs1, sd1, aut1 = {(0, 2 * q)}, True, 4
    out = [_inst(15, 1, "y^2=x^5+x^3+ax", f1, tag, rs1, sd1, aut1,
                 _mats_identity)]
    t = _nonsquare(ctx)
    f2 = Polynomial(ctx, [el(0), a * t * t, el(0), t, el(0), el(1)])
    if nu4 == 1:
        rs2, sd2, aut2 = {(0, 2 * q)}, True, 4
    else:
        epsp = -epsm * ff.residue_symbol(t * z, 4)
        rs2, sd2, aut2 = {(4 * epsp * sq, 6 * q)}, False, 8
    out.append(_inst(15, 2, "y^2=x^5+tx^3+at^2x", f2, tag, rs2, sd2, aut2,
                     _mats_scale(lambda G, env: [-G.K.one])))
    ra = ff.sqrt(a)
    for j, root in enumerate((ra, -ra)):
        f3 = _theta_quartic(ctx, a, root, budget)
        out.append(_inst(15, 3, "y^2=g(x)(theta^2(x-theta^s)^4+g^2+a theta^-2(x-theta)^4)",
                         f3, tag, {(0, -2 * q)}, True, 4,
                         _mats_inv(lambda G, env, _a=a: _root_branches(G, _a, 2)),
                         note="N(theta)=%s" % (root,)))
    return out


def _theta_quartic(ctx, a, norm_target, budget):
    """y^2 = g(x) (theta^2 (x-theta^q)^4 + g(x)^2 + a theta^-2 (x-theta)^4)
    with g the minimal polynomial of theta, descended to the base field."""
    q = ctx.q
    k2, emb, th = _theta_with_norm(ctx, norm_target, exclude_k=True,
                                   budget=budget)
    g = _min_poly2(k2, th, q)
    x2 = Polynomial(k2, [k2.zero, k2.one])
    inner = (((x2 - th ** q) ** 4) * (th * th) + g * g
             + ((x2 - th) ** 4) * (emb(a) * (th.inverse() ** 2)))
    return _descend(g * inner, emb)


def _applies_t16(ctx, tag):
    if ctx.n % 2 == 0:
        return False
    (a,) = tag.params
    return ff.residue_symbol(a, 2) == -1


def _build_t16(ctx, tag, budget):
    q = ctx.q
    el = ctx.element
    (a,) = tag.params
    epsm = legendre_int(-1, ctx.p, 1)
    f1 = Polynomial(ctx, [el(0), a, el(0), el(1), el(0), el(1)])
    if epsm == 1:
        rs1, sd1, aut1 = {(0, 0)}, False, 4
        rs2, sd2, aut2 = {(0, 2 * q)}, True, 2
    else:
        rs1, sd1, aut1 = {(0, 2 * q)}, True, 2
        rs2, sd2, aut2 = {(0, 0)}, False, 4
    out = [_inst(16, 1, "y^2=x^5+x^3+ax", f1, tag, rs1, sd1, aut1,
                 _mats_identity)]
    k2, emb, th = _theta_with_norm(ctx, a, exclude_k=False, budget=budget)
    sa = ff.sqrt(emb(a))
    x2 = Polynomial(k2, [k2.zero, k2.one])
    quad = x2 * x2 - emb(a)
    inner = (((x2 - sa) ** 4) * th + quad * quad
             + ((x2 + sa) ** 4) * (emb(a) * th.inverse()))
    f2 = _descend(quad * inner, emb)
    out.append(_inst(16, 2, "y^2=(x^2-a)(theta(x-sqrt a)^4+(x^2-a)^2+a theta^-1(x+sqrt a)^4)",
                     f2, tag, rs2, sd2, aut2,
                     _mats_inv(lambda G, env, _a=a: _root_branches(G, _a, 2))))
    return out


def _applies_t17(ctx, tag):
    if ctx.n % 2 == 0:
        return False
    (a,) = tag.params
    return ff.residue_symbol(a, 2) == 1


def _build_t17(ctx, tag, budget):
    q = ctx.q
    el = ctx.element
    (a,) = tag.params
    eps = legendre_int(-1, ctx.p, 1)
    nu4 = ff.residue_symbol(a, 4)
    ra = ff.sqrt(a)
    if eps == -1:
        # exactly one square root of a is itself a square; use that one
        if ff.residue_symbol(ra, 2) != 1:
            ra = -ra
    f1 = Polynomial(ctx, [el(0), a, el(0), el(1), el(0), el(1)])
    if nu4 == 1:
        rs1, sd1, aut1 = {(0, 2 * q)}, eps == -1, 6 + 2 * eps
        rs2, sd2, aut2 = {(0, -2 * eps * q)}, True, 4
    else:
        rs1, sd1, aut1 = {(0, -2 * q)}, True, 4
        rs2, sd2, aut2 = {(0, 2 * q)}, False, 8
    out = [_inst(17, 1, "y^2=x^5+x^3+ax", f1, tag, rs1, sd1, aut1,
                 _mats_identity)]
    t = _nonsquare(ctx)
    f2 = Polynomial(ctx, [el(0), a * t * t, el(0), t, el(0), el(1)])
    out.append(_inst(17, 2, "y^2=x^5+tx^3+at^2x", f2, tag, rs2, sd2, aut2,
                     _mats_scale(lambda G, env: [-G.K.one])))
    f3 = _theta_quartic(ctx, a, ra, budget)
    out.append(_inst(17, 3, "y^2=g(x)(theta^2(x-theta^s)^4+g^2+a theta^-2(x-theta)^4)",
                     f3, tag, {(0, 2 * q)}, eps == 1, 6 - 2 * eps,
                     _mats_inv(lambda G, env, _a=a: _root_branches(G, _a, 2)),
                     note="N(theta)=sqrt(a)"))
    f4 = _theta_quartic(ctx, a, -ra, budget)
    out.append(_inst(17, 4, "y^2=g(x)(theta^2(x-theta^s)^4+g^2+a theta^-2(x-theta)^4)",
                     f4, tag, {(0, 2 * eps * q)}, True, 4,
                     _mats_inv(lambda G, env, _a=a: _root_branches(G, _a, 2)),
                     note="N(theta)=-sqrt(a)"))
    return out


def _applies_t18(ctx, tag):
    return ctx.p > 2


def _build_t18(ctx, tag, budget):
    q = ctx.q
    el = ctx.element
    a, b = tag.params
    square = ctx.n % 2 == 0
    f1 = Polynomial(ctx, [el(1), el(0), b, el(0), a, el(0), el(1)])
    if square:
        sq = exact_isqrt(q)
        rs1 = {(4 * sq, 6 * q), (-4 * sq, 6 * q)}
        rs2 = {(0, -2 * q)}
    else:
        rs1 = {(0, 2 * q)}
        rs2 = {(0, 2 * q)}
    t = _nonsquare(ctx)
    f2 = Polynomial(ctx, [t ** 3, el(0), b * t * t, el(0), a * t, el(0),
                          el(1)])
    return [
        _inst(18, 1, "y^2=x^6+ax^4+bx^2+1", f1, tag, rs1, False, 4,
              _mats_identity),
        _inst(18, 2, "y^2=x^6+atx^4+bt^2x^2+t^3", f2, tag, rs2, False, 4,
              _mats_scale(lambda G, env: [-G.K.one])),
    ]


def _sep(f):
    try:
        OddCurve(f)
        return True
    except (CurveError, NotGenus2):
        return False


def _first_poly(ctx, builder, budget, what):
    count = 0
    for t in ctx.elements():
        if count >= budget:
            break
        count += 1
        f = builder(t)
        if f is not None:
            return f
    raise NoParameterFound("no %s found" % (what,))


_TABLES = {
    5: ("x5-1", _applies_t5, _build_t5),
    6: ("x5-x", _applies_t6, _build_t6),
    7: ("x5-x", _applies_t7, _build_t7),
    9: ("x5-x", _applies_t9, _build_t9),
    10: ("x6-1", _applies_t10, _build_t10),
    11: ("x6-1", _applies_t11, _build_t11),
    12: ("d12", _applies_t12, _build_t12),
    13: ("d12", _applies_t13, _build_t13),
    14: ("d12", _applies_t14, _build_t14),
    15: ("d8", _applies_t15, _build_t15),
    16: ("d8", _applies_t16, _build_t16),
    17: ("d8", _applies_t17, _build_t17),
    18: ("biquadratic", _applies_t18, _build_t18),
}

TABLE_IDS = tuple(sorted(_TABLES))

_PARAMETRIC = ("d8", "d12", "biquadratic")


def table_family(table_id):
    if table_id not in _TABLES:
        raise FamilyError("no table %r" % (table_id,))
    return _TABLES[table_id][0]


def table_applies(table_id, ctx, tag=None):
    kind, applies, _ = _TABLES[table_id]
    if tag is not None and tag.kind != kind:
        return False
    if kind in _PARAMETRIC and tag is None:
        raise FamilyError("table %d needs a family tag" % (table_id,))
    return applies(ctx, tag)


def applicable_tables(ctx, tag=None):
    """Table ids applicable over ctx (restricted to tag's family if given)."""
    out = []
    for tid, (kind, applies, _) in sorted(_TABLES.items()):
        if tag is not None and tag.kind != kind:
            continue
        if kind in _PARAMETRIC and tag is None:
            continue
        if applies(ctx, tag):
            out.append(tid)
    return out


def tags_for_table(table_id, ctx, budget=PARAM_BUDGET):
    """Representative family tags exercising each parameter class of the
    table (one per residue class of the parameter where predictions differ).
    Rigid tables return a single parameterless tag."""
    kind, applies, _ = _TABLES[table_id]
    if kind not in _PARAMETRIC:
        tag = FamilyTag(kind)
        return [tag] if applies(ctx, tag) else []
    found = find_ss_parameters(kind, ctx, budget)
    if kind == "biquadratic":
        tags = found[:1]
    else:
        classes = {}
        m = 3 if kind == "d12" else 4
        for tag in found:
            (a,) = tag.params
            key = ff.residue_symbol(a, m)
            if table_id == 16 and ff.residue_symbol(a, 2) != -1:
                continue
            if table_id == 17 and ff.residue_symbol(a, 2) != 1:
                continue
            classes.setdefault(key, tag)
        tags = [classes[k] for k in sorted(classes)]
    return [tag for tag in tags if applies(ctx, tag)]


def instantiate_table(table_id, ctx, tag=None, budget=PARAM_BUDGET):
    """Materialize every row of the table over ctx for the given tag."""
    kind, applies, build = _TABLES[table_id]
    if kind in _PARAMETRIC:
        if tag is None:
            raise FamilyError("table %d needs a family tag" % (table_id,))
    elif tag is None:
        tag = FamilyTag(kind)
    if tag.kind != kind:
        raise RowNotApplicable("table %d belongs to family %r"
                               % (table_id, kind))
    if not applies(ctx, tag):
        raise RowNotApplicable("table %d does not apply over %r"
                               % (table_id, ctx))
    return build(ctx, tag, budget)


def instantiate_row(table_id, row_id, ctx, tag=None, budget=PARAM_BUDGET):
    """All instances of one row (a row may materialize several curves)."""
    rows = [r for r in instantiate_table(table_id, ctx, tag, budget)
            if r.row == row_id]
    if not rows:
        raise RowNotApplicable("row %d of table %d is empty over %r"
                               % (row_id, table_id, ctx))
    return rows


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def verify_row(inst, budget=None):
    """Check a row instance against the oracle: (r,s) by counting,
    self-duality and |Aut| by exhaustive cocycle computation, and the
    fixed-point congruence |C(k)| = |F| mod |Aut(C)|."""
    C = inst.curve
    q = C.ctx.q
    w = weil_from_counting(C, budget=budget)
    G = automorphism_group(C)
    aut = twist_aut_count(G, G.identity)
    sd = is_self_dual_twist(G, G.identity)
    fixed = fixed_rational_count(C, G.identity, G)
    n1 = q + 1 + w.r
    report = {
        "table": inst.table,
        "row": inst.row,
        "label": inst.label,
        "note": inst.note,
        "p": C.ctx.p,
        "n": C.ctx.n,
        "predicted_rs": sorted(inst.pred_rs),
        "oracle_rs": w.pair(),
        "rs_ok": w.pair() in inst.pred_rs,
        "predicted_sd": inst.pred_sd,
        "oracle_sd": sd,
        "sd_ok": sd == inst.pred_sd,
        "predicted_aut": inst.pred_aut,
        "oracle_aut": aut,
        "aut_ok": aut == inst.pred_aut,
        "congruence_ok": (n1 - fixed) % aut == 0,
    }
    report["pass"] = (report["rs_ok"] and report["sd_ok"]
                      and report["aut_ok"] and report["congruence_ok"])
    return report


def atlas_report(ctx, tables=None, budget=PARAM_BUDGET, oracle_budget=None):
    """verify_row reports for every applicable, instantiable row over ctx."""
    reports = []
    for tid in (tables or TABLE_IDS):
        kind = _TABLES[tid][0]
        try:
            tags = tags_for_table(tid, ctx, budget)
        except NoParameterFound:
            continue
        for tag in tags:
            try:
                insts = instantiate_table(tid, ctx, tag, budget)
            except (RowNotApplicable, NoParameterFound):
                continue
            for inst in insts:
                reports.append(verify_row(inst, budget=oracle_budget))
    return reports


# ---------------------------------------------------------------------------
# twist catalogue via rebasing
# ---------------------------------------------------------------------------

def _aut_order(u):
    w = u
    for m in range(1, 241):
        if w.is_identity():
            return m
        w = w * u
    raise FamilyError("automorphism order exceeds bound")


def _is_base_pred(rs_set, q, square):
    if not rs_set:
        return False
    if square:
        sq = exact_isqrt(q)
        return all(abs(r) == 4 * sq and s == 6 * q for (r, s) in rs_set)
    return all(r == 0 and abs(s) == 2 * q for (r, s) in rs_set)


def _rebased_prediction(G, v, v0, base_weil, square):
    """(r, s) of the twist by cocycle v, derived from the base twist v0
    whose Weil polynomial is (x +- sqrt(q))^4 or (x^2 +- q)^2."""
    q = G.q
    if square:
        w = v * v0.inverse()
        cls = relation_class(w, G.iota)
        pred = twisted_weil_qsq(cls, q)
        if base_weil.r < 0:
            pred = WeilCoeffs(-pred.r, pred.s, q)
        return pred.pair()
    eps = base_weil.s // (2 * q)
    w = v * v.sigma(q) * v0.sigma(q).inverse() * v0.inverse()
    n = _aut_order(w)
    return twisted_weil_qnsq(n, eps, q).pair()


def twist_catalogue(tag, ctx, budget=PARAM_BUDGET, oracle_budget=None):
    """The catalogue of twists of the family over ctx.

    Materializes every applicable table row, then rebases all cocycles to a
    base twist with Weil polynomial (x +- sqrt(q))^4 (q square) or
    (x^2 +- q)^2 (q nonsquare) and predicts each (r, s) from the order or
    relation class of the rebased cocycle.  Rows whose cocycles fall outside
    the rebasing propositions (and whole fields without a base twist) use
    the counting oracle directly ('direct')."""
    tids = applicable_tables(ctx, tag)
    insts = []
    for tid in tids:
        insts.extend(instantiate_table(tid, ctx, tag, budget))
    if not insts:
        raise RowNotApplicable("no applicable table for %r over %r"
                               % (tag, ctx))
    C0 = standard_model(tag, ctx)
    G = automorphism_group(C0)
    q = ctx.q
    square = ctx.n % 2 == 0
    oracles = [weil_from_counting(i.curve, budget=oracle_budget)
               for i in insts]
    cands = []
    for inst in insts:
        mats = inst.mats(G, {}) if inst.mats is not None else []
        cands.append(_lifts(G, mats))
    base_idx = [i for i, inst in enumerate(insts)
                if _is_base_pred(inst.pred_rs, q, square) and cands[i]]
    anchor = None
    methods = None
    for bi in base_idx:
        bw = oracles[bi]
        if square and abs(bw.r) != 4 * exact_isqrt(q):
            continue
        if not square and (bw.r != 0 or abs(bw.s) != 2 * q):
            continue
        for v0 in cands[bi]:
            trial = []
            ok = True
            for i in range(len(insts)):
                preds = set()
                for v in cands[i]:
                    try:
                        preds.add(_rebased_prediction(G, v, v0, bw, square))
                    except (InvalidOrder, UnclassifiedOrder):
                        pass
                if not preds:
                    trial.append("direct")
                elif oracles[i].pair() in preds:
                    trial.append("proposition")
                else:
                    ok = False
                    break
            if ok:
                anchor = v0
                methods = trial
                break
        if anchor is not None:
            break
    entries = []
    for i, inst in enumerate(insts):
        entries.append({
            "table": inst.table,
            "row": inst.row,
            "label": inst.label,
            "note": inst.note,
            "curve": inst.curve,
            "weil": oracles[i],
            "self_dual": inst.pred_sd,
            "aut_order": inst.pred_aut,
            "method": methods[i] if methods is not None else "direct",
        })
    twist_count = sum(1 if e["self_dual"] else 2 for e in entries)
    return {
        "family": tag.kind,
        "tag": tag,
        "q": q,
        "entries": entries,
        "anchored": anchor is not None,
        "twist_count": twist_count,
        "twist_classes": len(h1_classes(G)),
    }
