"""Vectorized field arithmetic over small GF(p^n) via discrete-log tables.

Elements are represented by their enumeration indices; multiplication uses
exp/log tables, addition uses digit tables.  This backs the brute-force
point-counting oracle and the bulk Cartier-Manin scans.  Pure-Python
reference implementations live in zeta.py and are cross-checked in tests.
"""

from __future__ import annotations

import functools

import numpy as np

from . import ff


class FastTables:
    def __init__(self, ctx):
        ctx.build_tables()
        q, n, p = ctx.q, ctx.n, ctx.p
        powers = np.array(ctx._powers, dtype=np.int64)
        self.ctx = ctx
        self.q = q
        self.p = p
        self.exp_el = ctx._exp  # list of coefficient tuples
        exp_idx = np.fromiter(
            (sum(c * w for c, w in zip(t, ctx._powers)) for t in ctx._exp),
            dtype=np.int64, count=q - 1)
        self.exp = np.concatenate([exp_idx, exp_idx])  # avoid mod in hot loops
        log = np.array(ctx._log, dtype=np.int64)
        self.log = log
        digits = np.empty((q, n), dtype=np.int64)
        idx = np.arange(q, dtype=np.int64)
        for j, w in enumerate(ctx._powers):
            digits[:, j] = idx // w % p
        self.digits = digits
        self.powers = powers
        # trace to the prime subfield, as an integer in [0, p)
        tr_basis = np.array(
            [ff.trace_to(ctx.from_index(int(w)), 1).coeffs[0] for w in ctx._powers],
            dtype=np.int64)
        self.trace = (digits @ tr_basis) % p
        # squareness of each nonzero element (odd p): even discrete log
        if p != 2:
            self.is_square = np.where(idx == 0, False, (log % 2) == 0)

    def vmul(self, a, b):
        la, lb = self.log[a], self.log[b]
        out = self.exp[la + lb]
        return np.where((la < 0) | (lb < 0), 0, out)

    def vadd(self, a, b):
        d = (self.digits[a] + self.digits[b]) % self.p
        return d @ self.powers

    def vneg(self, a):
        d = (-self.digits[a]) % self.p
        return d @ self.powers

    def vfrob(self, a, m=1):
        return self.exp_arr_pow(a, self.p ** m)

    def exp_arr_pow(self, a, e):
        """a**e elementwise (a given by indices)."""
        la = self.log[a]
        out = self.exp[(la * (e % (self.q - 1))) % (self.q - 1)]
        return np.where(la < 0, 0, out)

    def poly_eval(self, coeff_indices, xs):
        """Evaluate a polynomial (list of coefficient indices, low degree
        first) at every index in xs."""
        acc = np.full(xs.shape, coeff_indices[-1], dtype=np.int64)
        for c in reversed(coeff_indices[:-1]):
            acc = self.vmul(acc, xs)
            if c:
                acc = self.vadd(acc, np.full(xs.shape, c, dtype=np.int64))
        return acc

    # -- vectorized truncated polynomial arithmetic ---------------------------

    def vpoly_mul(self, A, B, maxdeg):
        """A, B: lists of index arrays (coefficient per degree).  Product
        truncated at degree maxdeg."""
        out_len = min(len(A) + len(B) - 1, maxdeg + 1)
        shape = A[0].shape
        out = [np.zeros(shape, dtype=np.int64) for _ in range(out_len)]
        for i, ca in enumerate(A):
            if i >= out_len:
                break
            for j, cb in enumerate(B):
                k = i + j
                if k >= out_len:
                    break
                out[k] = self.vadd(out[k], self.vmul(ca, cb))
        return out

    def vpoly_pow(self, A, e, maxdeg):
        shape = A[0].shape
        result = [np.ones(shape, dtype=np.int64)]
        base = A
        while e:
            if e & 1:
                result = self.vpoly_mul(result, base, maxdeg)
            e >>= 1
            if e:
                base = self.vpoly_mul(base, base, maxdeg)
        return result


@functools.lru_cache(maxsize=None)
def tables(ctx):
    return FastTables(ctx)


def have_tables(ctx):
    return ctx.q <= ff.TABLE_MAX_Q


def supersingular_mask(ctx, coeff_arrays):
    """Vectorized Cartier-Manin test for odd characteristic.

    coeff_arrays: list of index arrays, low degree first, describing many
    sextic/quintic polynomials f at once.  Returns a boolean mask of the
    curves y^2 = f(x) whose Cartier-Manin matrix M satisfies M^(p) M = 0.
    """
    t = tables(ctx)
    p = ctx.p
    h = t.vpoly_pow(coeff_arrays, (p - 1) // 2, 2 * p - 1)
    shape = coeff_arrays[0].shape
    zero = np.zeros(shape, dtype=np.int64)

    def coeff(i):
        return h[i] if i < len(h) else zero

    a11 = coeff(p - 1)
    a12 = coeff(p - 2)
    a21 = coeff(2 * p - 1)
    a22 = coeff(2 * p - 2)
    f11 = t.exp_arr_pow(a11, p)
    f12 = t.exp_arr_pow(a12, p)
    f21 = t.exp_arr_pow(a21, p)
    f22 = t.exp_arr_pow(a22, p)
    e11 = t.vadd(t.vmul(f11, a11), t.vmul(f12, a21))
    e12 = t.vadd(t.vmul(f11, a12), t.vmul(f12, a22))
    e21 = t.vadd(t.vmul(f21, a11), t.vmul(f22, a21))
    e22 = t.vadd(t.vmul(f21, a12), t.vmul(f22, a22))
    return (e11 == 0) & (e12 == 0) & (e21 == 0) & (e22 == 0)
