import random
from fractions import Fraction

import pytest

from qkpt.cyclotomic import CycloNum
from qkpt.errors import RootOrderError, TruncationMismatch
from qkpt.lambda_ring import SymFunc
from qkpt.localseries import CycloSym
from qkpt.qseries import QRat, polarize, q_arith

from randgen import positive, qrat

D = 4
N1 = SymFunc.gen(1, D)
ONE_MINUS_Q = QRat.laurent({0: 1, 1: -1}, D)


def test_cancellation():
    assert q_arith("mul", QRat.one_over(1), ONE_MINUS_Q) == 1
    assert q_arith("mul", QRat.q_power(-1), QRat.q_power(1)) == QRat.const(1)


def test_sum_of_simple_fractions():
    # 1 + q = (1 - q^2)/(1 - q), so the sum is 2/(1 - q^2)
    lhs = QRat.one_over(1) + 1 / QRat.laurent({0: 1, 1: 1})
    assert lhs == QRat.one_over(2, coef=2)
    assert lhs.den == ((2, 1),)


def test_canonical_reduction():
    f = QRat({0: 1, 1: 1}, ((2, 1),))
    assert f.num == QRat.one_over(1).num and f.den == ((1, 1),)


def test_root_order_limit():
    with pytest.raises(RootOrderError):
        QRat.one_over(7)
    with pytest.raises(TruncationMismatch):
        QRat.const(1, 3) + QRat.const(1, 4)


def test_polarize_examples():
    plus, minus = polarize(QRat({2: 1}, ((1, 1),)))
    assert plus == QRat.laurent({0: -1, 1: -1})
    assert minus == QRat.one_over(1)
    plus, minus = polarize(QRat.one_over(2))
    assert plus == 0 and minus == QRat.one_over(2)
    f = QRat.laurent({0: 3, -2: N1})
    assert polarize(f) == (f, QRat.zero())


def _is_minus(f):
    if not f:
        return True
    if f.is_laurent():
        return False
    return min(f.num) >= 0 and max(f.num) < f.den_degree()


@pytest.mark.parametrize("seed", range(200))
def test_polarize_direct_sum(seed):
    rng = random.Random(seed)
    f = qrat(rng, D)
    plus, minus = polarize(f)
    assert plus + minus == f
    assert plus.is_laurent()
    # the minus part in reduced form: proper, no negative powers
    assert _is_minus(minus)
    assert polarize(plus) == (plus, QRat.zero())
    assert polarize(minus) == (QRat.zero(), minus)


def test_polarize_intersection_trivial():
    # a Laurent polynomial that is also proper and regular at 0 must vanish
    for f in (QRat.laurent({0: 1}), QRat.laurent({1: N1})):
        assert not _is_minus(f)


@pytest.mark.parametrize("seed", range(30))
def test_adams_composition(seed):
    rng = random.Random(seed)
    # denominators (1 - q^k) with k <= 1 keep every image within the root-order bound
    f = qrat(rng, D, max_k=1) * qrat(rng, D, max_k=1)
    for m, n in ((1, 2), (2, 1), (2, 2), (3, 2), (2, 3)):
        lhs = f.adams(n).adams(m)
        assert lhs == f.adams(m * n)


def test_adams_examples():
    assert QRat.one_over(1).adams(2) == QRat.one_over(2)
    assert QRat.laurent({1: N1}).adams(2) == QRat.laurent({2: SymFunc.gen(2, D)})


def test_horn_identity_rational_roots():
    """1/(1 - qζ(1+x)) = sum (qζ)^k x^k / (1-qζ)^(k+1) for ζ = ±1."""
    rng = random.Random(5)
    for zeta in (1, -1):
        for _ in range(10):
            x = positive(rng, D)
            qz = QRat.laurent({1: zeta})
            lhs = 1 / (1 - qz * (1 + x))
            rhs = QRat.zero()
            for k in range(D + 1):
                rhs = rhs + qz ** k * (x ** k) / (1 - qz) ** (k + 1)
            assert lhs == rhs


def _poly_mul(a, b, m):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out[i + j] + x * y if i + j in out else x * y
    return out


@pytest.mark.parametrize("m", range(1, 7))
def test_horn_identity_all_roots(m):
    """Cleared-denominator form over Λ ⊗ Q(ζ_m):
    (1 - qζ - qζx) sum_k (qζ)^k x^k (1-qζ)^(D-k) = (1-qζ)^(D+1)."""
    rng = random.Random(100 + m)
    for _ in range(20):
        x = positive(rng, D)
        for j in range(m):
            z = CycloSym.from_cyclo(CycloNum.zeta(m, j), D)
            one = CycloSym.from_sym(m, SymFunc.one(D))
            xs = CycloSym.from_sym(m, x)
            base = {0: one, 1: -z}
            lhs = {}
            for k in range(D + 1):
                zk = one
                for _ in range(k):
                    zk = zk * z * xs
                term = {k: zk}
                for _ in range(D - k):
                    term = _poly_mul(term, base, m)
                for e, c in term.items():
                    lhs[e] = lhs[e] + c if e in lhs else c
            lhs = _poly_mul(lhs, {0: one, 1: -(z + z * xs)}, m)
            rhs = {0: one}
            for _ in range(D + 1):
                rhs = _poly_mul(rhs, base, m)
            keys = set(lhs) | set(rhs)
            zero = CycloSym.zero(m, D)
            assert all(lhs.get(e, zero) == rhs.get(e, zero) for e in keys)


def test_invert_q():
    f = QRat.one_over(1)
    # 1/(1 - 1/q) = -q/(1 - q)
    assert f.invert_q() == QRat({1: -1}, ((1, 1),))


def test_scalar_fraction_scale():
    assert QRat.const(2).scale(Fraction(1, 2)) == 1
