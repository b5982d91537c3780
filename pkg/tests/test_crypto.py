"""Cryptographic exponent c_A and its verification."""

import pytest

from ssgenus2 import crypto, ff, zeta
from ssgenus2.crypto import HalfInteger
from ssgenus2.curve import parse_curve
from ssgenus2.zeta import WeilCoeffs


def test_half_integer_rendering():
    assert str(HalfInteger(3)) == "3/2"
    assert str(HalfInteger(8)) == "4"
    assert HalfInteger(8).is_integral()
    assert not HalfInteger(5).is_integral()
    with pytest.raises(crypto.CryptoError):
        HalfInteger(0)


def test_known_exponents():
    # (0,-q) over q=7: c = 6
    assert crypto.crypto_exponent(WeilCoeffs(0, -7, 7), 7) == HalfInteger(12)
    # (0,0) over q=7: c = 4
    assert crypto.crypto_exponent(WeilCoeffs(0, 0, 7), 7) == HalfInteger(8)
    # (0,-2q) nonsquare: c = 1
    assert crypto.crypto_exponent(WeilCoeffs(0, -10, 5), 5) == HalfInteger(2)
    # (2sqrt(q),3q) with q=169, p=13=1 mod 3: c = 3/2
    assert crypto.crypto_exponent(WeilCoeffs(26, 3 * 169, 169), 13) \
        == HalfInteger(3)
    # p=5 special (+-sqrt(5q),3q): c = 5
    assert crypto.crypto_exponent(WeilCoeffs(5, 15, 5), 5) == HalfInteger(10)


def test_not_simple_raises():
    with pytest.raises(crypto.NotSimpleOrUncovered):
        crypto.crypto_exponent(WeilCoeffs(0, -2 * 9, 9), 3)  # (x^2-q)^2, q sq
    with pytest.raises(crypto.NotSimpleOrUncovered):
        crypto.crypto_exponent(WeilCoeffs(0, 2 * 7, 7), 7)  # nonsquare (0,2q)


def test_embedding_field_size():
    w = WeilCoeffs(0, -7, 7)
    assert crypto.embedding_field_size(w, 7) == 7 ** 6
    w = WeilCoeffs(26, 3 * 169, 169)  # c = 3/2 over q = 13^2
    assert crypto.embedding_field_size(w, 13) == 13 ** 3


def test_anchor_x5_1_gf27():
    """y^2 = x^5 - 1 over GF(27): c = 4, and 73 | 27^4 - 1 minimally."""
    C = parse_curve("y^2=x^5-1", ff.ctx_new(3, 3))
    w = zeta.weil_polynomial(C)
    c = crypto.crypto_exponent(w, 3)
    assert c == HalfInteger(8)
    assert w.jacobian_order() % 73 == 0
    rep = crypto.verify_exponent(w, 3)
    assert rep["status"] == "verified"
    assert 73 in rep["large_primes"]
    assert (27 ** 4 - 1) % 73 == 0
    # minimality: no smaller admissible power of q is 1 mod 73
    for twice_c in range(1, 8):
        if (3 * twice_c) % 2:
            continue
        if (3 ** (3 * twice_c // 2) - 1) % 73 == 0:
            raise AssertionError("smaller exponent works")


def test_exponent_depends_only_on_class():
    ctx = ff.ctx_new(7, 1)
    C = parse_curve("y^2=x^5-1", ctx)
    w = zeta.weil_polynomial(C)
    assert crypto.crypto_exponent(w, 7) \
        == crypto.crypto_exponent(WeilCoeffs(w.r, w.s, w.q), 7)
