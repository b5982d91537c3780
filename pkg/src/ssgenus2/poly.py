"""Univariate polynomials over GF(p^n): arithmetic, gcds, factorization.

Coefficients are FieldElements, stored low degree first with no trailing
zeros.  The zero polynomial has an empty coefficient tuple and degree -1.
Factorization is fully deterministic: equal-degree splitting sweeps field
elements in enumeration order instead of sampling.
"""

from __future__ import annotations

import re

from . import ff
from .ff import ContextMismatch, FieldError


class PolyError(Exception):
    pass


class NotSeparable(PolyError):
    pass


class Polynomial:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        cs = [ctx.element(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, [])

    @classmethod
    def one(cls, ctx):
        return cls(ctx, [1])

    @classmethod
    def x(cls, ctx):
        return cls(ctx, [0, 1])

    @classmethod
    def from_roots(cls, ctx, roots):
        out = cls.one(ctx)
        for r in roots:
            out = out * cls(ctx, [-ctx.element(r), ctx.one])
        return out

    # -- basics ---------------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ctx.zero

    def lead(self):
        if not self.coeffs:
            raise PolyError("leading coefficient of zero polynomial")
        return self.coeffs[-1]

    def monic(self):
        if self.is_zero():
            return self
        inv = self.lead().inverse()
        return Polynomial(self.ctx, [c * inv for c in self.coeffs])

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ctx is not self.ctx:
                raise ContextMismatch("mixed polynomial contexts")
            return other
        if isinstance(other, (int, ff.FieldElement)):
            return Polynomial(self.ctx, [other])
        return NotImplemented

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return Polynomial.zero(self.ctx)
        a, b = self.coeffs, o.coeffs
        out = [self.ctx.zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca.is_zero():
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Polynomial(self.ctx, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = o.degree
        inv = o.lead().inverse()
        quot = [self.ctx.zero] * max(len(rem) - dg, 0)
        while len(rem) - 1 >= dg and rem:
            if rem[-1].is_zero():
                rem.pop()
                continue
            c = rem[-1] * inv
            shift = len(rem) - 1 - dg
            quot[shift] = c
            for k in range(dg + 1):
                rem[shift + k] = rem[shift + k] - c * o.coeffs[k]
            rem.pop()
        return Polynomial(self.ctx, quot), Polynomial(self.ctx, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        result = Polynomial.one(self.ctx)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, ff.FieldElement)):
            other = Polynomial(self.ctx, [other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx is other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    # -- evaluation and calculus ------------------------------------------------

    def __call__(self, x):
        x = self.ctx.element(x) if isinstance(x, int) else x
        out = self.ctx.zero
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def derivative(self):
        return Polynomial(self.ctx,
                          [i * c for i, c in enumerate(self.coeffs)][1:])

    def compose_mod(self, g, m):
        """self(g) mod m."""
        out = Polynomial.zero(self.ctx)
        for c in reversed(self.coeffs):
            out = (out * g + c) % m
        return out

    def map_coeffs(self, fn, ctx=None):
        return Polynomial(ctx or self.ctx, [fn(c) for c in self.coeffs])

    def reverse(self, degree=None):
        d = self.degree if degree is None else degree
        return Polynomial(self.ctx, [self[d - i] for i in range(d + 1)])

    def __repr__(self):
        return format_polynomial(self)


# ---------------------------------------------------------------------------
# gcds
# ---------------------------------------------------------------------------

def gcd(f, g):
    while not g.is_zero():
        f, g = g, f % g
    return f.monic() if not f.is_zero() else f


def xgcd(f, g):
    """(d, u, v) with d = u*f + v*g, d monic (or zero)."""
    ctx = f.ctx
    r0, r1 = f, g
    u0, u1 = Polynomial.one(ctx), Polynomial.zero(ctx)
    v0, v1 = Polynomial.zero(ctx), Polynomial.one(ctx)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    inv = r0.lead().inverse()
    scale = Polynomial(ctx, [inv])
    return r0 * scale, u0 * scale, v0 * scale


def pow_mod(base, e, m):
    result = Polynomial.one(base.ctx)
    base = base % m
    while e:
        if e & 1:
            result = (result * base) % m
        base = (base * base) % m
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------

def is_separable(f):
    if f.degree < 1:
        raise PolyError("separability undefined for constants")
    return gcd(f, f.derivative()).degree == 0


def _pth_root_poly(f):
    """For f with zero derivative, f = g(x^p); return g."""
    ctx = f.ctx
    p = ctx.p
    # coefficient c -> c^(p^(n-1)) is the inverse of x -> x^p
    e = p ** (ctx.n - 1)
    return Polynomial(ctx, [f[i] ** e for i in range(0, f.degree + 1, p)])


def squarefree_part(f):
    """Monic product of the distinct irreducible factors of f."""
    f = f.monic()
    if f.degree <= 0:
        return f
    d = f.derivative()
    if d.is_zero():
        return squarefree_part(_pth_root_poly(f))
    g = gcd(f, d)
    out = f // g
    if g.degree > 0:
        rest = squarefree_part(g)
        extra = rest // gcd(rest, out)
        out = out * extra
    return out.monic()


def distinct_degree_shape(f):
    """Multiset of irreducible factor degrees of a separable monic f,
    returned as a sorted tuple, e.g. (1, 1, 4)."""
    f = f.monic()
    if not is_separable(f):
        raise NotSeparable("polynomial has repeated roots")
    ctx = f.ctx
    shape = []
    x = Polynomial.x(ctx)
    h = x
    d = 0
    while f.degree > 0:
        d += 1
        if 2 * d > f.degree:
            shape.extend([f.degree])
            break
        h = pow_mod(h, ctx.q, f)
        g = gcd(f, h - x)
        if g.degree > 0:
            shape.extend([d] * (g.degree // d))
            f = f // g
            h = h % f
    return tuple(sorted(shape))


def _split_equal_degree(f, d):
    """Deterministic split of monic separable f = product of degree-d
    irreducibles into its irreducible factors."""
    ctx = f.ctx
    if f.degree == d:
        return [f]
    out = []
    stack = [f]
    qd = ctx.q ** d
    x = Polynomial.x(ctx)
    while stack:
        g = stack.pop()
        if g.degree == d:
            out.append(g)
            continue
        found = False
        for idx in range(ctx.q):
            c = ctx.from_index(idx)
            if ctx.p == 2:
                # additive (trace) splitting polynomial
                t = (x * c) % g
                acc = t
                cur = t
                m = ctx.n * d
                for _ in range(m - 1):
                    cur = (cur * cur) % g
                    acc = (acc + cur) % g
                h = gcd(g, acc)
            else:
                t = pow_mod(x + c, (qd - 1) // 2, g)
                h = gcd(g, t - 1)
            if 0 < h.degree < g.degree:
                stack.append(h)
                stack.append(g // h)
                found = True
                break
        if not found:  # pragma: no cover
            raise PolyError("equal-degree splitting failed")
    return out


def factor(f):
    """Full factorization: list of (monic irreducible, multiplicity),
    sorted deterministically; plus the leading coefficient is discarded."""
    ctx = f.ctx
    if f.degree < 1:
        return []
    out = {}
    f = f.monic()
    while f.degree > 0:
        sqf = squarefree_part(f)
        # distinct-degree on the squarefree part, then equal-degree
        work = sqf
        x = Polynomial.x(ctx)
        h = x
        d = 0
        parts = []
        while work.degree > 0:
            d += 1
            if 2 * d > work.degree:
                parts.append((work.degree, work))
                break
            h = pow_mod(h, ctx.q, work)
            g = gcd(work, h - x)
            if g.degree > 0:
                parts.append((d, g))
                work = work // g
                h = h % work
        for d, g in parts:
            for irr in _split_equal_degree(g, d):
                out[irr] = out.get(irr, 0) + 1
        f = f // sqf
    return sorted(out.items(),
                  key=lambda kv: (kv[0].degree, [c.coeffs for c in kv[0].coeffs]))


def roots_in_field(f):
    """All roots of f in its coefficient field (each once), any multiplicity."""
    ctx = f.ctx
    if f.is_zero():
        raise PolyError("roots of the zero polynomial")
    f = squarefree_part(f.monic()) if f.degree > 0 else f
    if f.degree < 1:
        return []
    x = Polynomial.x(ctx)
    xq = pow_mod(x, ctx.q, f)
    g = gcd(f, xq - x)
    roots = []
    for irr in _split_equal_degree(g, 1) if g.degree > 0 else []:
        roots.append(-irr[0])
    return roots


def is_irreducible(f):
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    if not is_separable(f):
        # an irreducible over a finite (perfect) field is separable
        return False
    return distinct_degree_shape(f) == (f.degree,)


# ---------------------------------------------------------------------------
# parsing / formatting
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"^\s*(?P<coeff>\[[0-9,\s]+\]|\d+)?\s*\*?\s*"
    r"(?P<var>x)?\s*(?:\^\s*(?P<exp>\d+))?\s*$")


def parse_polynomial(s, ctx, var="x"):
    """Parse strings like 'x^5 - 1', '2*x^3 + x', '[1,2]*x^2 + [0,1]'."""
    s = s.replace("-", "+-").replace(" ", "")
    if s.startswith("+"):
        s = s[1:]
    coeffs = {}
    for raw in s.split("+"):
        if not raw:
            continue
        neg = raw.startswith("-")
        if neg:
            raw = raw[1:]
        m = _TERM_RE.match(raw.replace(var, "x"))
        if not m or (m.group("coeff") is None and m.group("var") is None):
            raise PolyError("cannot parse term %r" % raw)
        cs = m.group("coeff")
        if cs is None:
            c = ctx.one
        elif cs.startswith("["):
            c = ctx.element([int(t) for t in cs[1:-1].split(",")])
        else:
            c = ctx.element(int(cs))
        if m.group("var") is None:
            e = 0
        elif m.group("exp") is None:
            e = 1
        else:
            e = int(m.group("exp"))
        if neg:
            c = -c
        coeffs[e] = coeffs.get(e, ctx.zero) + c
    deg = max(coeffs) if coeffs else 0
    return Polynomial(ctx, [coeffs.get(i, ctx.zero) for i in range(deg + 1)])


def format_polynomial(f, var="x"):
    if f.is_zero():
        return "0"
    terms = []
    for i in range(f.degree, -1, -1):
        c = f[i]
        if c.is_zero():
            continue
        if f.ctx.n == 1:
            cs = str(c.coeffs[0])
        else:
            cs = "[" + ",".join(str(t) for t in c.coeffs) + "]"
        if i == 0:
            terms.append(cs)
        else:
            xs = var if i == 1 else "%s^%d" % (var, i)
            if cs == "1":
                terms.append(xs)
            else:
                terms.append("%s*%s" % (cs, xs))
    return " + ".join(terms)
