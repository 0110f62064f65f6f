"""Small and big J-functions of the point.

``small_j(nu)`` is the closed form ``(1-q) exp(sum_k Ψ^k(nu) / k(1-q^k))``.
``reconstruct_bigJ(t)`` finds ``nu`` and a Laurent polynomial ``p`` with
``[small_j(nu) * p]_+ = (1 - q) + t`` by iterating on the λ-filtration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import AugmentationError, InvariantViolation, NonPositiveInput
from .lambda_ring import SymFunc
from .qseries import QRat, polarize


@dataclass(frozen=True)
class BigJSolution:
    t: QRat
    nu: SymFunc
    p: QRat
    f: QRat
    passes: int = 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, BigJSolution):
            return NotImplemented
        return (self.t, self.nu, self.p, self.f) == (other.t, other.nu, other.p, other.f)

    __hash__ = None


def _check_positive(nu: SymFunc) -> None:
    if nu.augment() != 0:
        raise AugmentationError("nu must lie in the augmentation ideal")


def small_j(nu: SymFunc, max_root: int | None = None) -> QRat:
    """``(1 - q) * exp(sum_{k>0} Ψ^k(nu) / (k (1 - q^k)))``."""
    _check_positive(nu)
    deg = nu.deg
    result = QRat.dilaton(deg)
    if max_root is not None:
        result = result.with_max_root(max_root)
    if not nu:
        return result
    lowest = nu.min_degree()
    # exp of a sum is the product of the exps; exp(A/(1-q^k)) = sum_j A^j / (j! (1-q^k)^j)
    for k in range(1, deg // lowest + 1):
        a = nu.adams(k).scale(Fraction(1, k))
        if not a:
            continue
        factor = QRat.const(1, deg)
        power = SymFunc.one(deg)
        for j in range(1, deg + 1):
            power = power * a
            if not power:
                break
            factor = factor + QRat.one_over(k, j, power.scale(Fraction(1, factorial(j))), deg)
        result = result * factor
    return result


def tau_of_nu(nu: SymFunc) -> SymFunc:
    """``sum_{k>0} Ψ^k(nu) / k^2``."""
    _check_positive(nu)
    out = SymFunc.zero(nu.deg)
    if not nu:
        return out
    for k in range(1, nu.deg // nu.min_degree() + 1):
        out = out + nu.adams(k).scale(Fraction(1, k * k))
    return out


def _lowest_part(r: QRat) -> QRat:
    d = r.min_lambda_degree()
    return r.homogeneous(d)


def reconstruct_bigJ(t: QRat, schedule: str = "all") -> BigJSolution:
    """Solve ``[small_j(nu) p]_+ = (1 - q) + t`` for ``nu`` in Λ+ and a Laurent polynomial ``p``.

    ``schedule="all"`` feeds the whole residual back each pass;
    ``schedule="lowest"`` feeds back only its lowest λ-degree part.  Both
    reach the same value ``f``.
    """
    if not t.is_laurent():
        raise NonPositiveInput("the input must be a Laurent polynomial in q")
    if any(c.augment() for c in t.num.values()):
        raise NonPositiveInput("every coefficient of the input must have zero augmentation")
    if schedule not in ("all", "lowest"):
        raise ValueError(f"unknown schedule {schedule!r}")
    deg = t.deg
    target = QRat.dilaton(deg) + t
    one_minus_q = QRat.dilaton(deg)
    nu = SymFunc.zero(deg)
    p = QRat.const(1, deg)
    # each pass raises the lowest λ-degree of the residual; degrees 1..deg are
    # fed back at most once each with "all", at most deg^2 updates with "lowest"
    limit = deg + 1 if schedule == "all" else deg * deg + 1
    passes = 0
    while True:
        f = small_j(nu) * p
        r = target - polarize(f)[0]
        if not r:
            break
        passes += 1
        if passes > limit:
            raise InvariantViolation(f"reconstruction did not converge within {limit} passes")
        if schedule == "lowest":
            r = _lowest_part(r)
        r1 = r.eval_at_one()
        nu = nu + r1
        step = (r - r1) / one_minus_q
        if not step.is_laurent():
            raise InvariantViolation("residual minus its value at 1 is not divisible by 1 - q")
        p = p + step
    return BigJSolution(t, nu, p, f, passes)
