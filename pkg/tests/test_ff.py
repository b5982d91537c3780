"""Finite-field arithmetic sanity checks."""

import pytest

from ssgenus2 import ff


@pytest.mark.parametrize("p,n", [(2, 1), (2, 4), (3, 1), (3, 2), (5, 2),
                                 (7, 1), (11, 2)])
def test_field_axioms_sampled(p, n):
    ctx = ff.ctx_new(p, n)
    els = list(ctx.elements())
    sample = els[:: max(1, len(els) // 12)]
    for a in sample:
        assert a + ctx.zero == a
        assert a * ctx.one == a
        assert a - a == ctx.zero
        if not a.is_zero():
            assert a * a.inverse() == ctx.one
        for b in sample:
            assert a + b == b + a
            assert a * b == b * a
            for c in sample[:4]:
                assert (a + b) * c == a * c + b * c


def test_frobenius_and_order():
    ctx = ff.ctx_new(3, 4)
    q = ctx.q
    for a in list(ctx.elements())[::7]:
        assert a ** q == a
        assert ff.frobenius(a) == a ** ctx.p
        assert ff.frobenius(a, ctx.n) == a


def test_index_round_trip():
    ctx = ff.ctx_new(5, 3)
    for i in (0, 1, 2, 17, 124):
        assert ctx.from_index(i).index() == i


def test_sqrt_and_residue():
    ctx = ff.ctx_new(7, 2)
    for a in list(ctx.elements())[1::5]:
        sym = ff.residue_symbol(a, 2)
        if sym == 1:
            r = ff.sqrt(a)
            assert r * r == a
        else:
            assert a ** ((ctx.q - 1) // 2) == -ctx.one


def test_embedding_preimage():
    k = ff.ctx_new(3, 2)
    K = ff.ctx_new(3, 4)
    emb = ff.embedding(k, K)
    for a in k.elements():
        b = emb(a)
        assert b ** k.q == b
        assert emb.preimage(b) == a


def test_trace_to_prime_field():
    ctx = ff.ctx_new(2, 4)
    for a in ctx.elements():
        t = ff.trace_to(a, 1)
        assert t == t * t  # lies in GF(2)
