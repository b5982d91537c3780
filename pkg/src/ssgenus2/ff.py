"""Exact arithmetic in finite fields GF(p^n).

Elements are coefficient vectors in the polynomial basis modulo a
deterministic irreducible polynomial: the lexicographically smallest monic
irreducible of degree n over GF(p), where coefficient vectors are compared
low-degree-first.  Enumeration order of field elements is lexicographic on
coefficient vectors with the degree-0 coordinate most significant.
"""

from __future__ import annotations

import functools

DEFAULT_MAX_Q = 2 ** 24
# Fields at or below this size may build discrete-log tables for fast
# multiplication and vectorized scans.
TABLE_MAX_Q = 2 ** 21


class FieldError(Exception):
    """Base class for field-level errors."""


class NotPrime(FieldError):
    pass


class SizeExceeded(FieldError):
    pass


class DivisionByZero(FieldError):
    pass


class ContextMismatch(FieldError):
    pass


class ZeroInput(FieldError):
    pass


class DegreeMismatch(FieldError):
    pass


def is_prime(m):
    """Deterministic Miller-Rabin, valid far beyond any field size used here."""
    if m < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % sp == 0:
            return m == sp
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# dense polynomial helpers over GF(p), used only for modulus selection and
# element inversion; coefficients are plain ints, low degree first.
# ---------------------------------------------------------------------------

def _ptrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = (out[i + j] + a * b) % p
    return _ptrim(out)


def _psub(f, g, p):
    out = [0] * max(len(f), len(g))
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return _ptrim(out)


def _pdivmod(f, g, p):
    """Quotient and remainder of f by g over GF(p)."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    quot = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        if f[-1] == 0:
            f.pop()
            continue
        c = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        quot[shift] = c
        for k in range(dg + 1):
            f[shift + k] = (f[shift + k] - c * g[k]) % p
        f.pop()
    return _ptrim(quot), _ptrim(f)


def _pmod(f, m, p):
    f = list(f)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(f) - 1 >= dm and f:
        if f[-1] == 0:
            f.pop()
            continue
        c = f[-1] * inv_lead % p
        shift = len(f) - 1 - dm
        for k in range(dm + 1):
            f[shift + k] = (f[shift + k] - c * m[k]) % p
        f.pop()
    return _ptrim(f)


def _pgcd(f, g, p):
    f, g = list(f), list(g)
    while g:
        f, g = g, _pmod(f, g, p)
    if f:
        inv = pow(f[-1], p - 2, p)
        f = [c * inv % p for c in f]
    return f


def _ppowmod(f, e, m, p):
    result = [1]
    base = _pmod(f, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _prime_factors(m):
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def _psub_x(h, p):
    """h(x) - x over GF(p)."""
    hx = list(h) + [0, 0]
    hx[1] = (hx[1] - 1) % p
    return _ptrim(hx)


def _is_irreducible_over_prime(f, p):
    """Irreducibility of a monic polynomial over GF(p)."""
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(n):
        h = _ppowmod(h, p, f, p)
    if _psub_x(h, p):
        return False
    for ell in _prime_factors(n):
        h = x
        for _ in range(n // ell):
            h = _ppowmod(h, p, f, p)
        diff = _psub_x(h, p)
        if len(_pgcd(f, diff, p)) != 1:
            return False
    return True


def _smallest_irreducible(p, n):
    """Lexicographically smallest monic irreducible of degree n over GF(p).

    Coefficient vectors (c0, ..., c_{n-1}) are compared low-degree-first.
    """
    if n == 1:
        return (0, 1)
    # the block idx < p^(n-1) has constant term 0 (divisible by x): skip it
    for idx in range(p ** (n - 1), p ** n):
        coeffs = []
        rem = idx
        for j in range(n):
            coeffs.append(rem // p ** (n - 1 - j) % p)
        f = coeffs + [1]
        # quick root filter
        if any(sum(c * pow(a, i, p) for i, c in enumerate(f)) % p == 0
               for a in range(p)):
            continue
        if _is_irreducible_over_prime(f, p):
            return tuple(f)
    raise FieldError("no irreducible polynomial found")  # pragma: no cover


class FieldCtx:
    """Arithmetic context for GF(p^n)."""

    def __init__(self, p, n, max_size=DEFAULT_MAX_Q, _token=None):
        if _token is not _CTX_TOKEN:
            raise FieldError("use ctx_new() to create field contexts")
        if not is_prime(p):
            raise NotPrime("p = %d is not prime" % p)
        if n < 1:
            raise FieldError("extension degree must be >= 1")
        q = p ** n
        if max_size is not None and q > max_size:
            raise SizeExceeded("p^n = %d exceeds bound %d" % (q, max_size))
        self.p = p
        self.n = n
        self.q = q
        self.modulus = _smallest_irreducible(p, n)
        self.zero = FieldElement(self, (0,) * n)
        self.one = FieldElement(self, (1,) + (0,) * (n - 1))
        # x^(n+j) mod modulus, as coefficient tuples
        self._red = []
        for j in range(n - 1):
            xp = [0] * (n + j) + [1]
            self._red.append(tuple((_pmod(xp, list(self.modulus), p) + [0] * n)[:n]))
        self._powers = tuple(p ** (n - 1 - j) for j in range(n))
        self._log = None
        self._exp = None
        self._gen = None

    # -- representation -----------------------------------------------------

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.n) if self.n > 1 else "GF(%d)" % self.p

    def element(self, coeffs):
        """Element from an int (prime-subfield value) or coefficient list."""
        if isinstance(coeffs, FieldElement):
            if coeffs.ctx is not self:
                raise ContextMismatch("element from a different field")
            return coeffs
        if isinstance(coeffs, int):
            return FieldElement(self, (coeffs % self.p,) + (0,) * (self.n - 1))
        t = tuple(int(c) % self.p for c in coeffs)
        if len(t) != self.n:
            raise DegreeMismatch("expected %d coefficients" % self.n)
        return FieldElement(self, t)

    def from_index(self, idx):
        """Element number idx in enumeration order."""
        if not 0 <= idx < self.q:
            raise FieldError("index out of range")
        return FieldElement(self, tuple(idx // w % self.p for w in self._powers))

    def index(self, a):
        return sum(c * w for c, w in zip(a.coeffs, self._powers))

    def elements(self):
        """All elements in enumeration order."""
        for idx in range(self.q):
            yield self.from_index(idx)

    # -- raw coefficient-tuple arithmetic ------------------------------------

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a, b):
        n = self.n
        if n == 1:
            return ((a[0] * b[0]) % self.p,)
        if self._log is not None:
            la = self._log[sum(c * w for c, w in zip(a, self._powers))]
            if la < 0:
                return self.zero.coeffs
            lb = self._log[sum(c * w for c, w in zip(b, self._powers))]
            if lb < 0:
                return self.zero.coeffs
            return self._exp[(la + lb) % (self.q - 1)]
        p = self.p
        # schoolbook convolution via one big-int multiply
        pa = 0
        pb = 0
        for i in range(n - 1, -1, -1):
            pa = (pa << 32) | a[i]
            pb = (pb << 32) | b[i]
        prod = pa * pb
        conv = []
        mask = (1 << 32) - 1
        for _ in range(2 * n - 1):
            conv.append(prod & mask)
            prod >>= 32
        out = [c % p for c in conv[:n]]
        for j in range(n - 1):
            c = conv[n + j] % p
            if c:
                rt = self._red[j]
                for k in range(n):
                    if rt[k]:
                        out[k] = (out[k] + c * rt[k]) % p
        return tuple(out)

    def _inv(self, a):
        if not any(a):
            raise DivisionByZero("division by zero in %r" % self)
        if self.n == 1:
            return (pow(a[0], self.p - 2, self.p),)
        if self._log is not None:
            la = self._log[sum(c * w for c, w in zip(a, self._powers))]
            return self._exp[(-la) % (self.q - 1)]
        # extended Euclid against the modulus
        p = self.p
        r0, r1 = list(self.modulus), _ptrim(list(a))
        t0, t1 = [], [1]
        while r1:
            q_poly, r = _pdivmod(r0, r1, p)
            t_new = _psub(t0, _pmul(q_poly, t1, p), p)
            r0, r1 = r1, r
            t0, t1 = t1, t_new
        if len(r0) != 1:
            raise DivisionByZero("element not invertible")  # pragma: no cover
        c = pow(r0[0], p - 2, p)
        out = _pmod([(x * c) % p for x in t0], list(self.modulus), p)
        out += [0] * (self.n - len(out))
        return tuple(out[:self.n])

    def _pow(self, a, e):
        if e < 0:
            return self._pow(self._inv(a), -e)
        result = self.one.coeffs
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    # -- discrete-log tables --------------------------------------------------

    def build_tables(self):
        """Build exp/log tables for fast multiplication (small fields only)."""
        if self._log is not None:
            return
        if self.q > TABLE_MAX_Q:
            raise SizeExceeded("field too large for log tables")
        gen = self._find_generator()
        exp = [None] * (self.q - 1)
        log = [-1] * self.q
        cur = self.one.coeffs
        for i in range(self.q - 1):
            exp[i] = cur
            log[sum(c * w for c, w in zip(cur, self._powers))] = i
            cur = self._mul(cur, gen)
        self._gen = gen
        self._exp = exp
        self._log = log

    def _find_generator(self):
        order = self.q - 1
        facs = _prime_factors(order)
        for idx in range(1, self.q):
            g = self.from_index(idx).coeffs
            if all(self._pow(g, order // f) != self.one.coeffs for f in facs):
                return g
        raise FieldError("no generator found")  # pragma: no cover

    @property
    def generator(self):
        self.build_tables()
        return FieldElement(self, self._gen)


_CTX_TOKEN = object()


@functools.lru_cache(maxsize=None)
def _ctx_cached(p, n):
    return FieldCtx(p, n, max_size=None, _token=_CTX_TOKEN)


def ctx_new(p, n, max_size=DEFAULT_MAX_Q):
    """Context for GF(p^n).  Contexts are cached, so (p, n) is canonical."""
    if not isinstance(p, int) or not isinstance(n, int):
        raise FieldError("p and n must be ints")
    if not is_prime(p):
        raise NotPrime("p = %r is not prime" % (p,))
    if n < 1:
        raise FieldError("extension degree must be >= 1")
    if max_size is not None and p ** n > max_size:
        raise SizeExceeded("p^n = %d exceeds bound %d" % (p ** n, max_size))
    return _ctx_cached(p, n)


class FieldElement:
    """Immutable element of GF(p^n), coefficient vector low-degree-first."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise ContextMismatch("mixed field contexts")
            return other
        if isinstance(other, int):
            return self.ctx.element(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._add(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._sub(self.coeffs, o.coeffs))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._sub(o.coeffs, self.coeffs))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx._neg(self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(self.coeffs, self.ctx._inv(o.coeffs)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(o.coeffs, self.ctx._inv(self.coeffs)))

    def __pow__(self, e):
        return FieldElement(self.ctx, self.ctx._pow(self.coeffs, e))

    def inverse(self):
        return FieldElement(self.ctx, self.ctx._inv(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.ctx is other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self):
        return not any(self.coeffs)

    def index(self):
        return self.ctx.index(self)

    def frob(self, m=1):
        """Frobenius a -> a^(p^m)."""
        return self ** (self.ctx.p ** m)

    def __repr__(self):
        if self.ctx.n == 1:
            return str(self.coeffs[0])
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"


# ---------------------------------------------------------------------------
# field-level operations
# ---------------------------------------------------------------------------

def frobenius(a, m=1):
    return a.frob(m)


def trace_to(a, m=1):
    """Trace of a from GF(p^n) down to the subfield GF(p^m), m | n.

    The result is returned as an element of the ambient field (it lies in
    the subfield, i.e. is fixed by x -> x^(p^m)).
    """
    ctx = a.ctx
    if ctx.n % m != 0:
        raise DegreeMismatch("GF(p^%d) is not a subfield of GF(p^%d)" % (m, ctx.n))
    out = ctx.zero
    cur = a
    for _ in range(ctx.n // m):
        out = out + cur
        cur = cur.frob(m)
    return out


def norm_to(a, m=1):
    """Norm of a from GF(p^n) to GF(p^m), as an ambient-field element."""
    ctx = a.ctx
    if ctx.n % m != 0:
        raise DegreeMismatch("GF(p^%d) is not a subfield of GF(p^%d)" % (m, ctx.n))
    out = ctx.one
    cur = a
    for _ in range(ctx.n // m):
        out = out * cur
        cur = cur.frob(m)
    return out


def residue_symbol(a, m):
    """nu_m(a): +1 if a is an m-th power in k*, else -1.  a must be nonzero."""
    if a.is_zero():
        raise ZeroInput("residue symbol of zero")
    ctx = a.ctx
    import math
    g = math.gcd(m, ctx.q - 1)
    if g == 1:
        return 1
    return 1 if (a ** ((ctx.q - 1) // g)) == ctx.one else -1


def _element_min(elems):
    return min(elems, key=lambda e: e.index() if e.ctx.q <= 2 ** 26 else e.coeffs)


def _root_of_unity(ctx, g):
    """Element of exact multiplicative order g (g | q-1), deterministic."""
    if g == 1:
        return ctx.one
    facs = _prime_factors(g)
    for idx in range(1, ctx.q):
        u = ctx.from_index(idx)
        z = u ** ((ctx.q - 1) // g)
        if all(z ** (g // f) != ctx.one for f in facs):
            return z
    raise FieldError("no root of unity of order %d" % g)  # pragma: no cover


def _prime_root(a, ell):
    """One ell-th root of a (ell prime), or None.  Deterministic AMM."""
    ctx = a.ctx
    q1 = ctx.q - 1
    if q1 % ell != 0:
        inv = pow(ell, -1, q1)
        return a ** inv
    if (a ** (q1 // ell)) != ctx.one:
        return None
    t, s = 0, q1
    while s % ell == 0:
        s //= ell
        t += 1
    # nonresidue, deterministic scan
    u = None
    for idx in range(1, ctx.q):
        cand = ctx.from_index(idx)
        if (cand ** (q1 // ell)) != ctx.one:
            u = cand
            break
    g = u ** s  # order ell^t
    # discrete log of a^s in <g> by base-ell digits
    h = a ** s
    e = 0
    ge_inv = ctx.one
    for i in range(t):
        w = (h * ge_inv) ** (ell ** (t - 1 - i))
        # find digit d with w == g^(d * ell^(t-1))
        base = g ** (ell ** (t - 1))
        cur = ctx.one
        d = None
        for cand_d in range(ell):
            if w == cur:
                d = cand_d
                break
            cur = cur * base
        if d is None:
            return None  # pragma: no cover
        e += d * ell ** i
        if d:
            ge_inv = ge_inv * (g ** (-(d * ell ** i) % (ell ** t)))
    if e % ell != 0:
        return None
    c = pow(ell, -1, s)
    mfac = (ell * c - 1) // s
    f_exp = (-(e // ell) * mfac) % (ell ** t)
    return (a ** c) * (g ** f_exp)


def nth_root(a, m):
    """Deterministic m-th root: the smallest root in enumeration order,
    or None when a is not an m-th power."""
    ctx = a.ctx
    if m < 1:
        raise FieldError("root index must be positive")
    if a.is_zero():
        return ctx.zero
    import math
    b = a
    mm = m
    for ell in _prime_factors(m):
        while mm % ell == 0:
            b = _prime_root(b, ell)
            if b is None:
                return None
            mm //= ell
    g = math.gcd(m, ctx.q - 1)
    if g == 1:
        return b
    zeta = _root_of_unity(ctx, g)
    best = b
    cur = b
    for _ in range(g - 1):
        cur = cur * zeta
        if cur.index() < best.index():
            best = cur
    return best


def sqrt(a):
    return nth_root(a, 2)


def is_square(a):
    if a.is_zero():
        return True
    return residue_symbol(a, 2) == 1


# ---------------------------------------------------------------------------
# subfield embeddings
# ---------------------------------------------------------------------------

class Embedding:
    """Field embedding GF(p^n) -> GF(p^m), n | m, sending the source
    polynomial generator to the smallest root of the source modulus."""

    def __init__(self, src, dst, root):
        self.src = src
        self.dst = dst
        self.root = root

    def __call__(self, a):
        if a.ctx is not self.src:
            raise ContextMismatch("element not from the source field")
        out = self.dst.zero
        for c in reversed(a.coeffs):
            out = out * self.root + self.dst.element(int(c))
        return out

    def preimage(self, b):
        """Inverse on the image; raises if b is not in the embedded subfield."""
        if b.ctx is not self.dst:
            raise ContextMismatch("element not from the target field")
        if self.src.q <= 2 ** 16:
            table = _preimage_table(self)
            key = b.coeffs
            if key not in table:
                raise FieldError("element not in embedded subfield")
            return table[key]
        raise FieldError("preimage only supported for small source fields")


@functools.lru_cache(maxsize=None)
def _preimage_table(emb):
    return {emb(a).coeffs: a for a in emb.src.elements()}


@functools.lru_cache(maxsize=None)
def _embedding_cached(src, dst):
    if src.p != dst.p or dst.n % src.n != 0:
        raise DegreeMismatch("no embedding GF(%d^%d) -> GF(%d^%d)"
                             % (src.p, src.n, dst.p, dst.n))
    if src.n == 1:
        return Embedding(src, dst, dst.element(0))
    if src is dst:
        return Embedding(src, dst, dst.element([0, 1] + [0] * (dst.n - 2)))
    from . import poly
    mod_poly = poly.Polynomial(dst, [dst.element(int(c)) for c in src.modulus])
    roots = poly.roots_in_field(mod_poly)
    if not roots:
        raise FieldError("modulus has no root in target field")  # pragma: no cover
    root = min(roots, key=lambda r: r.coeffs)
    return Embedding(src, dst, root)


def embedding(src, dst):
    """Deterministic embedding GF(p^n) -> GF(p^m) for n | m (cached)."""
    return _embedding_cached(src, dst)
