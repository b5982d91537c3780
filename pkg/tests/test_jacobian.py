"""Mumford-divisor arithmetic on degree-5 models."""

import pytest

from ssgenus2 import ff, jacobian, zeta
from ssgenus2.curve import parse_curve


@pytest.fixture(scope="module")
def C():
    return parse_curve("y^2=x^5-1", ff.ctx_new(7, 1))


def test_identity_and_negation(C):
    e = jacobian.identity(C)
    assert e.is_identity()
    D = jacobian.random_divisor(C, seed=1)
    assert jacobian.compose_reduce(D, jacobian.negate(D)) == e
    assert jacobian.compose_reduce(D, e) == D


def test_group_axioms_sampled(C):
    e = jacobian.identity(C)
    divs = [jacobian.random_divisor(C, seed=s) for s in range(6)]
    for a in divs:
        for b in divs:
            assert jacobian.compose_reduce(a, b) \
                == jacobian.compose_reduce(b, a)
            for c in divs[:3]:
                lhs = jacobian.compose_reduce(jacobian.compose_reduce(a, b), c)
                rhs = jacobian.compose_reduce(a, jacobian.compose_reduce(b, c))
                assert lhs == rhs


def test_scalar_mul_consistency(C):
    D = jacobian.random_divisor(C, seed=3)
    two = jacobian.compose_reduce(D, D)
    assert jacobian.scalar_mul(2, D) == two
    assert jacobian.scalar_mul(5, D) \
        == jacobian.compose_reduce(two, jacobian.compose_reduce(two, D))
    assert jacobian.scalar_mul(0, D).is_identity()


def test_order_annihilates(C):
    w = zeta.weil_polynomial(C)
    order = w.jacobian_order()
    assert jacobian.annihilates(order, C, range(20))


def test_wrong_order_fails(C):
    w = zeta.weil_polynomial(C)
    order = w.jacobian_order()
    assert not jacobian.annihilates(order - 1, C, range(32))


def test_random_divisor_deterministic(C):
    assert jacobian.random_divisor(C, seed=11) \
        == jacobian.random_divisor(C, seed=11)


def test_degree6_model_rejected():
    C6 = parse_curve("y^2=x^6-1", ff.ctx_new(11, 1))
    with pytest.raises(jacobian.JacobianError):
        jacobian.random_divisor(C6, seed=0)
