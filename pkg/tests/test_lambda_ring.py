import random
from fractions import Fraction

import pytest

from qkpt.errors import AugmentationError, TruncationMismatch
from qkpt.lambda_ring import SymFunc, adams, augment, exp_log, sym_arith

from randgen import positive, symfunc


def N(k, d=4):
    return SymFunc.gen(k, d)


def test_mul_example():
    assert sym_arith("mul", N(1, 3) + N(2, 3), N(1, 3)) == N(1, 3) ** 2 + N(1, 3) * N(2, 3)


def test_truncation_drops_high_degree():
    assert sym_arith("mul", N(1, 3), N(3, 3)) == SymFunc.zero(3)


def test_additive_inverse():
    assert sym_arith("add", N(1), sym_arith("scale", N(1), -1)).is_zero()


def test_mismatched_degrees_rejected():
    with pytest.raises(TruncationMismatch):
        N(1, 3) + N(1, 4)


def test_adams_examples():
    a = N(1) + N(1) ** 2
    assert adams(1, a) == a
    assert adams(2, a) == N(2) + N(2) ** 2
    assert adams(3, N(2)) == 0


def test_augment_examples():
    assert augment(SymFunc.const(Fraction(3, 2)) + N(1) ** 2) == Fraction(3, 2)
    assert all(augment(N(k)) == 0 for k in range(1, 5))


def test_exp_examples():
    d = 2
    assert exp_log("exp", N(1, d)) == 1 + N(1, d) + (N(1, d) ** 2).scale(Fraction(1, 2))
    x = N(1) + N(2)
    assert exp_log("log", exp_log("exp", x)) == x
    with pytest.raises(AugmentationError):
        exp_log("exp", 1 + N(1))
    with pytest.raises(AugmentationError):
        exp_log("log", N(1))


def test_from_powers_and_str():
    s = SymFunc.from_powers({1: 2}, Fraction(1, 2)) + N(3)
    assert str(s) == "N1^2/2 + N3"
    assert s.terms == {(2, 0, 0, 0): Fraction(1, 2), (0, 0, 1, 0): Fraction(1)}


def test_degree_six_supported():
    assert N(1, 6) ** 6 != 0
    assert N(1, 6) ** 7 == 0


@pytest.mark.parametrize("seed", range(20))
def test_adams_properties(seed):
    rng = random.Random(seed)
    d = 6
    a, b = symfunc(rng, d), symfunc(rng, d)
    for r in range(1, 4):
        assert adams(r, a * b) == adams(r, a) * adams(r, b)
        assert adams(r, a + b) == adams(r, a) + adams(r, b)
        assert augment(adams(r, a)) == augment(a)
        for s in range(1, 4):
            assert adams(r, adams(s, a)) == adams(r * s, a)


@pytest.mark.parametrize("seed", range(20))
def test_filtration_growth(seed):
    rng = random.Random(seed)
    a = positive(rng, 6)
    for r in range(2, 7):
        img = adams(r, a)
        assert img.is_zero() or img.min_degree() == r * a.min_degree()


@pytest.mark.parametrize("seed", range(20))
def test_exp_log_round_trip(seed):
    rng = random.Random(seed)
    a = positive(rng, 5)
    assert exp_log("log", exp_log("exp", a)) == a
    u = 1 + positive(rng, 5)
    assert exp_log("exp", exp_log("log", u)) == u


def test_inverse():
    x = 2 + N(1) - N(2)
    assert x * x.inverse() == 1
