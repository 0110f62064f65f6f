import random
from fractions import Fraction

import pytest

from qkpt.cyclotomic import CycloNum, cyclo_arith, cyclo_poly, primitive_roots, root_order, totient
from qkpt.errors import CycloDivisionByZero, OrderMismatch, RootOrderError


def test_cyclotomic_polynomials():
    assert cyclo_poly(1) == [-1, 1]
    assert cyclo_poly(2) == [1, 1]
    assert cyclo_poly(6) == [1, -1, 1]
    # product over divisors of 6 gives q^6 - 1
    prod = [Fraction(1)]
    from qkpt.cyclotomic import poly_mul
    for d in (1, 2, 3, 6):
        prod = poly_mul(prod, cyclo_poly(d))
    assert prod == [-1, 0, 0, 0, 0, 0, 1]


def test_out_of_range_order():
    with pytest.raises(RootOrderError):
        cyclo_poly(7)
    with pytest.raises(RootOrderError):
        cyclo_poly(0)
    assert len(cyclo_poly(8, max_order=8)) == 5


def test_arith_examples():
    z6 = CycloNum.zeta(6)
    assert z6 * z6 == z6 - 1
    assert cyclo_arith("inv", CycloNum.zeta(4)) == -CycloNum.zeta(4)
    z5 = CycloNum.zeta(5)
    assert sum((z5 ** k for k in range(5)), CycloNum(5)).is_zero()
    assert cyclo_arith("pow", z6, 6) == 1


def test_errors():
    with pytest.raises(CycloDivisionByZero):
        CycloNum(3).inv()
    with pytest.raises(OrderMismatch):
        CycloNum.zeta(3) + CycloNum.zeta(4)


@pytest.mark.parametrize("m", range(1, 7))
def test_generator_is_primitive_root(m):
    z = CycloNum.zeta(m)
    value = CycloNum(m)
    for i, c in enumerate(cyclo_poly(m)):
        value = value + z ** i * c
    assert value.is_zero()
    assert z ** m == 1
    assert all(z ** j != 1 for j in range(1, m))


@pytest.mark.parametrize("m", range(1, 7))
def test_random_inverses(m):
    rng = random.Random(m)
    for _ in range(100):
        a = CycloNum(m, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(totient(m))])
        if a.is_zero():
            continue
        assert a * a.inv() == 1


def test_root_helpers():
    assert primitive_roots(6) == [1, 5]
    assert primitive_roots(1) == [0]
    assert root_order(6, 2) == 3
