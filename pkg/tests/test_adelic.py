import random

import pytest

from qkpt import adelic
from qkpt.errors import NonUnitLeading, NotInFakeRange
from qkpt.jfun import small_j, tau_of_nu
from qkpt.lambda_ring import SymFunc
from qkpt.localseries import localize
from qkpt.qseries import QRat

from randgen import positive, unit_laurent

D = 4
N1 = SymFunc.gen(1, D)
DIL = QRat.laurent({0: 1, 1: -1}, D)


def test_extract_tau_of_exponential():
    f = DIL * QRat.one_over(1, coef=N1).exp()
    assert adelic.extract_tau(localize(f)) == N1


def test_extract_tau_of_small_j():
    assert adelic.extract_tau(localize(small_j(N1))) == tau_of_nu(N1)


def test_extract_tau_rejects_second_order_pole():
    f = small_j(N1) + QRat.one_over(1, 2, N1)
    with pytest.raises(NotInFakeRange):
        adelic.extract_tau(localize(f, 1, 0, (-6, 40)))


def test_extract_tau_rejects_non_unit():
    with pytest.raises(NonUnitLeading):
        adelic.extract_tau(localize(DIL.scale(2)))


def test_extract_tau_rejects_surviving_pole():
    with pytest.raises(NotInFakeRange):
        adelic.extract_tau(localize(QRat.const(1)))


def test_test_ii_examples():
    f = small_j(N1)
    assert adelic.test_ii_at_root(f, 2, 1)
    for m, j in ((2, 1), (3, 2), (5, 3), (6, 5)):
        assert adelic.test_ii_at_root(DIL, m, j)
    tampered = f * (1 + QRat.const(N1) / QRat.laurent({0: 1, 1: 1}))
    assert not adelic.test_ii_at_root(tampered, 2, 1)


def test_check_all_dilaton():
    report = adelic.check_all(DIL)
    assert report.overall and report.tau == 0
    assert sorted(report.test_ii) == [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3), (5, 1), (5, 2),
                                      (5, 3), (5, 4), (6, 1), (6, 5)]


def test_check_all_tamper_families():
    f = small_j(N1)
    r1 = adelic.check_all(f + QRat.one_over(1, 2, N1))
    assert not r1.overall and "i" in r1.failing_tests()
    r2 = adelic.check_all(f * (1 + QRat.const(N1) / QRat.laurent({0: 1, 1: 1})))
    assert not r2.overall and not r2.test_ii[(2, 1)]
    assert r2.test_i


@pytest.mark.parametrize("seed", range(5))
def test_check_all_sweeping_family(seed):
    rng = random.Random(seed)
    nu = positive(rng, D, upto=2)
    p = unit_laurent(rng, D)
    report = adelic.check_all(small_j(nu) * p)
    assert report.overall
    assert report.tau == tau_of_nu(nu)


def test_representation_failure_report():
    r = adelic.representation_failure("pole at 1/2")
    assert not r.overall and r.failing_tests() == ["i", "iii"]
