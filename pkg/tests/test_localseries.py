import random
from fractions import Fraction

import pytest

from qkpt.cyclotomic import CycloNum
from qkpt.errors import OrderMismatch, WindowTooSmall
from qkpt.lambda_ring import SymFunc
from qkpt.localseries import CycloSym, LocalSeries, adams_q, localize, residue_pairing, subst_mth_root
from qkpt.qseries import QRat

from randgen import laurent, qrat

D = 4
N1 = SymFunc.gen(1, D)


def coeffs(s, lo, hi):
    """Rational coefficients of a series over Q on [lo, hi]."""
    return [s.coeff(i).parts[0].augment() if s.coeff(i).parts[0].is_constant() else s.coeff(i).parts[0]
            for i in range(lo, hi + 1)]


def test_simple_pole_at_one():
    s = localize(QRat.one_over(1), 1, 0, (-2, 3))
    assert coeffs(s, -2, 3) == [0, -1, 0, 0, 0, 0]


def test_simple_pole_at_minus_one():
    s = localize(1 / QRat.laurent({0: 1, 1: 1}), 2, 1, (-2, 3))
    assert s.coeff(-1) == CycloSym.from_sym(2, SymFunc.one(D))
    assert all(not s.coeff(i) for i in (0, 1, 2, 3))


def test_expansion_of_one_over_one_minus_q_squared():
    # -1/((q-1)(2+(q-1))) = -1/2 u^-1 * sum (-u/2)^k
    s = localize(QRat.one_over(2), 1, 0, (-1, 4))
    expected = [Fraction(-1, 2) * Fraction(-1, 2) ** k for k in range(6)]
    assert coeffs(s, -1, 4) == expected


def test_window_must_cover_pole():
    with pytest.raises(WindowTooSmall):
        localize(QRat.one_over(1, 2), 1, 0, (-1, 3))


def test_non_primitive_center_rejected():
    with pytest.raises(ValueError):
        localize(QRat.one_over(2), 4, 2)


@pytest.mark.parametrize("seed", range(100))
def test_localize_multiplicative(seed):
    rng = random.Random(seed)
    f, g = qrat(rng, D, max_k=3), qrat(rng, D, max_k=3)
    m = rng.choice([1, 2, 3, 4, 6])
    j = rng.choice([j for j in range(m) if __import__("math").gcd(j, m) == 1] or [0])
    pf, pg = f.pole_order_at(m), g.pole_order_at(m)
    hi = 4
    sf = localize(f, m, j, (-pf, hi + pg))
    sg = localize(g, m, j, (-pg, hi + pf))
    sfg = localize(f * g, m, j, (-(pf + pg), hi))
    prod = sf * sg
    for i in range(-(pf + pg), hi + 1):
        assert prod.coeff(i) == sfg.coeff(i)


def test_subst_mth_root_at_one():
    # 1/(1 - q^(1/2)) = 2/(1 - q) + regular
    s = subst_mth_root(localize(QRat.one_over(1), 1, 0, (-2, 5)), 2)
    assert s.coeff(-1) == CycloSym.from_sym(1, SymFunc.const(-2, D))
    assert not s.coeff(-2)


def test_subst_mth_root_at_minus_one():
    s = subst_mth_root(localize(1 / QRat.laurent({0: 1, 1: 1}), 2, 1, (-2, 5)), 2)
    assert s.coeff(-1) == CycloSym.from_sym(2, SymFunc.const(-2, D))


def test_subst_constant_unchanged():
    s = localize(QRat.const(N1 + 3), 3, 1, (0, 4))
    t = subst_mth_root(s, 3)
    assert t.coeff(0) == s.coeff(0)
    assert all(not t.coeff(i) for i in range(1, 5))


def test_adams_on_series():
    s = localize(QRat.one_over(1, coef=-1), 1, 0, (-1, 5))  # (q-1)^-1
    t = adams_q(2, s)
    expected = localize(QRat.one_over(2, coef=-1), 1, 0, (-1, 4))
    for i in range(-1, 5):
        assert t.coeff(i) == expected.coeff(i)
    assert t.coeff(-1).parts[0] == SymFunc.const(Fraction(1, 2), D)
    assert t.coeff(0).parts[0] == SymFunc.const(Fraction(-1, 4), D)


def test_adams_needs_center_one():
    s = localize(QRat.one_over(2), 2, 1, (-1, 3))
    with pytest.raises(OrderMismatch):
        adams_q(2, s)


def test_adams_series_agrees_with_qrat():
    rng = random.Random(3)
    for _ in range(10):
        f = qrat(rng, D, max_k=2)
        p = f.pole_order_at(1)
        lhs = adams_q(2, localize(f, 1, 0, (-p, 8)))
        rhs = localize(f.adams(2), 1, 0, (-2 * p, 5))
        for i in range(-p, min(lhs.vmax, 5) + 1):
            assert lhs.coeff(i) == rhs.coeff(i)


def test_residue_pairing_examples():
    assert residue_pairing(QRat.const(1), QRat.one_over(1)) == SymFunc.one(D)
    assert residue_pairing(QRat.one_over(1), QRat.one_over(1)) == 0
    assert residue_pairing(QRat.laurent({0: 1, 1: 2}), QRat.laurent({2: N1})) == 0


def _qm1(a):
    return QRat.laurent({0: -1, 1: 1}) ** a


def test_fake_polarization_isotropy():
    for a in range(4):
        for b in range(4):
            assert residue_pairing(_qm1(a), _qm1(b)) == 0
    for a in range(1, 4):
        for b in range(1, 4):
            assert residue_pairing(QRat.one_over(1, a), QRat.one_over(1, b)) == 0


@pytest.mark.parametrize("seed", range(100))
def test_isotropy_random(seed):
    rng = random.Random(seed)
    f = laurent(rng, D, 0, 3)
    g = laurent(rng, D, -1, 2)
    assert residue_pairing(f, g) == 0


def test_inverse_and_log():
    g = localize(QRat.one_over(1, coef=N1).exp(), 1, 0, (-4, 8))
    prod = g * g.inverse()
    assert prod.coeff(0) == CycloSym.from_sym(1, SymFunc.one(D))
    assert all(not prod.coeff(i) for i in range(prod.vmin, 0))
    assert all(not prod.coeff(i) for i in range(1, prod.vmax + 1))
    polar = g.log().polar_part()
    assert polar.coeff(-1).parts[0] == -N1
    assert all(not polar.coeff(i) for i in range(polar.vmin, -1))


def test_exact_series_equality():
    a = LocalSeries(1, 0, 0, [CycloSym.from_sym(1, N1)], True)
    b = LocalSeries(1, 0, -1, [CycloSym.zero(1, D), CycloSym.from_sym(1, N1)], True)
    assert a == b
