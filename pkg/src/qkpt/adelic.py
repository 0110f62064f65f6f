"""Adelic membership tests for values of the J-function.

Test (i) asks that the expansion at q = 1 lie in the fake range
``(1-q) exp(tau/(1-q)) K+``; test (ii) compares the expansion at each
primitive root of unity with the Adams image of the expansion at 1;
test (iii) is the requirement that poles sit at roots of unity only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomic import CycloNum, primitive_roots
from .errors import (
    NonInvertibleDenominator,
    NonUnitLeading,
    NotInFakeRange,
    PrecisionLost,
    QKError,
    WindowTooSmall,
)
from .lambda_ring import SymFunc
from .localseries import DEFAULT_WINDOW, LocalSeries, adams_series, localize, subst_mth_root
from .qseries import QRat

DEFAULT_MAX_ROOT_ORDER = 6


@dataclass
class AdelicReport:
    test_i: bool
    tau: SymFunc | None
    test_ii: dict = field(default_factory=dict)  # (m, j) -> bool
    test_iii: bool = True
    reasons: dict = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return self.test_i and all(self.test_ii.values()) and self.test_iii

    def failing_tests(self) -> list:
        out = []
        if not self.test_i:
            out.append("i")
        if not all(self.test_ii.values()):
            out.append("ii")
        if not self.test_iii:
            out.append("iii")
        return out


def _over_one_minus_q(s: LocalSeries) -> LocalSeries:
    # 1/(1 - q) = -(q - 1)^-1
    return (-s).shift(-1)


def _internal_windows(f: QRat, order: int, window: tuple):
    """Windows for internal expansions, from short to long.

    Each starts at the structural pole when that is deeper than ``window``.
    The far end grows because nilpotent powers of the polar part eat
    precision; the last candidate covers every power up to the truncation
    degree, so running out of candidates means the window itself is the
    limit.  The reporting window ``window`` is never widened.
    """
    lo, hi = window
    pole = f.pole_order_at(order)
    lo = min(lo, -pole)
    cap = max(hi, (pole + 1) * (f.deg + 1))
    end = max(hi, 2 * pole + 2)
    while end < cap:
        yield (lo, end)
        end *= 2
    yield (lo, cap)


def _with_precision(f: QRat, order: int, window: tuple, fn):
    for win in _internal_windows(f, order, window):
        try:
            return fn(win)
        except PrecisionLost as exc:
            last = exc
    raise last


def extract_tau(s: LocalSeries) -> SymFunc:
    """τ with ``s/(1-q) = exp(τ/(1-q)) * (regular series)``, or NotInFakeRange."""
    if s.center != (1, 0):
        raise ValueError("extract_tau needs the expansion at q = 1")
    g = _over_one_minus_q(s)
    for i in range(g.vmin, 0):
        if not g.coeff(i).augment().is_zero():
            raise NotInFakeRange(f"pole of order {-i} at q = 1 survives modulo Λ+")
    c0 = g.coeff(0).augment()
    if c0 != CycloNum.rational(1, 1):
        raise NonUnitLeading(f"regular leading coefficient has augmentation {c0}, not 1")
    polar = g.log().polar_part()
    for i in range(polar.vmin, -1):
        if polar.coeff(i):
            raise NotInFakeRange(f"log has a pole of order {-i} at q = 1")
    return -polar.coeff(-1).to_sym()


def test_ii_at_root(f: QRat, m: int, j: int, s1: LocalSeries | None = None,
                    window: tuple = DEFAULT_WINDOW) -> bool:
    """Clause (ii) at ζ = ζ_m^j: ``C * B^-1`` must be regular at q = 1, where
    C is the expansion at ζ^-1 re-expanded along q -> q^(1/m)/ζ and B is
    Ψ^m of the expansion at 1 divided by (1 - q)."""
    if m < 2:
        raise ValueError("test (ii) runs at roots of order at least 2")
    lo1 = min(window[0], -f.pole_order_at(1))

    def ratio_at(win):
        at_one = s1 if s1 is not None and min(s1.prec) >= win[1] else localize(f, 1, 0, (lo1, win[1]))
        b = adams_series(m, _over_one_minus_q(at_one)).embed(m)
        c = subst_mth_root(localize(f, m, -j % m, win), m)
        r = c * b.inverse()
        if min(r.prec) < -1:
            raise PrecisionLost("window too short to decide the polar part of the ratio")
        return r

    ratio = _with_precision(f, m, window, ratio_at)
    lo = window[0]
    if any(ratio.coeff(i) for i in range(max(lo, ratio.vmin), 0)):
        return False
    for i in range(ratio.vmin, lo):
        if ratio.coeff(i):
            raise WindowTooSmall(f"pole of order {-i} lies outside the window")
    return True


def check_all(f: QRat, max_root_order: int = DEFAULT_MAX_ROOT_ORDER,
              window: tuple = DEFAULT_WINDOW) -> AdelicReport:
    """Run tests (i), (ii) and (iii) on ``f``; sub-errors become failures with reasons."""
    reasons = {}
    s1 = None

    def tau_at(win):
        nonlocal s1
        s1 = localize(f, 1, 0, win)
        return extract_tau(s1)

    try:
        tau = _with_precision(f, 1, window, tau_at)
        ok_i = True
    except QKError as exc:
        tau, ok_i = None, False
        reasons["test_i"] = f"{type(exc).__name__}: {exc}"
    results = {}
    for m in range(2, max_root_order + 1):
        for j in primitive_roots(m):
            try:
                results[(m, j)] = test_ii_at_root(f, m, j, s1, window)
            except (NonInvertibleDenominator, WindowTooSmall) as exc:
                results[(m, j)] = False
                reasons[f"test_ii[{m},{j}]"] = f"{type(exc).__name__}: {exc}"
            else:
                if not results[(m, j)]:
                    reasons[f"test_ii[{m},{j}]"] = "ratio has a pole at q = 1"
    # every QRat carries poles only at roots of unity, so (iii) holds structurally
    return AdelicReport(ok_i, tau, results, True, reasons)


def representation_failure(reason: str) -> AdelicReport:
    """Report for an input whose denominator could not be represented (test (iii) fails)."""
    return AdelicReport(False, None, {}, False, {"test_iii": reason})
