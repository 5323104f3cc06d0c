from fractions import Fraction

import pytest
from hypothesis import given

from cuntz_cyclic.algebra import LinComb, chain_to_element, element_to_chain, left_act, lin_mul, pi_multiply, right_act
from cuntz_cyclic.chains import chain
from cuntz_cyclic.semigroup import CUNTZ_UNIT, p, pq, q, w
from strategies import chains, monomials


def E(*pairs):
    return LinComb({m: c for m, c in pairs})


def test_zero_coefficients_dropped():
    x = LinComb({p(1): 1, q(1): 0})
    assert len(x) == 1 and x.coeff(q(1)) == 0


def test_arithmetic_and_equality():
    x = E((p(1), 1), (q(1), Fraction(1, 2)))
    assert x - x == 0
    assert (x * 2).coeff(q(1)) == 1
    assert (x / 2).coeff(p(1)) == Fraction(1, 2)
    assert -x + x == LinComb()
    assert isinstance((x * 2).coeff(q(1)), int)


def test_unhashable():
    with pytest.raises(TypeError):
        hash(LinComb())


def test_lin_mul_examples():
    assert lin_mul(E((p(1), 1), (q(1), 1)), E((p(1), 1))) == E((p(1, 1), 1), (CUNTZ_UNIT, 1))
    assert lin_mul(E((p(1), 1)), LinComb()) == 0
    assert lin_mul(E((w(1), Fraction(2, 3))), E((w(2), 3))) == E((w(1, 2), 2))


def test_pi_examples():
    assert pi_multiply(chain(p(1), q(1))) == E((pq((1,), (1,)), 1))
    assert pi_multiply(chain(q(1), p(2))) == 0
    assert pi_multiply(chain(CUNTZ_UNIT, CUNTZ_UNIT)) == E((CUNTZ_UNIT, 1))


def test_pi_rejects_other_degrees():
    with pytest.raises(ValueError):
        pi_multiply(chain(p(1)))
    with pytest.raises(ValueError):
        pi_multiply(chain(p(1), p(1), p(1)))


def test_actions():
    c = chain(p(1), q(2))
    assert left_act(q(1), c) == chain(CUNTZ_UNIT, q(2))
    assert right_act(c, p(2)) == chain(p(1), CUNTZ_UNIT)
    assert left_act(q(3), c) == 0


def test_element_chain_roundtrip():
    x = E((p(1), 2), (q(2), -1))
    assert chain_to_element(element_to_chain(x)) == x


@given(chains(1), chains(1))
def test_addition_commutes(x, y):
    assert x + y == y + x


@given(monomials, monomials, monomials)
def test_lin_mul_bilinear(a, b, c):
    lhs = lin_mul(E((a, 1)) + E((b, 2)), E((c, 3)))
    rhs = lin_mul(E((a, 1)), E((c, 3))) + lin_mul(E((b, 2)), E((c, 3)))
    assert lhs == rhs
