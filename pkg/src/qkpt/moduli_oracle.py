"""Fixed-point oracles for permutation-equivariant correlators with n <= 3 inputs.

The big J-function is ``1 - q + t + sum_n (1/n!) sum_h tr_h <t, ..., t, 1/(1-qL)>``
with the horn in the last slot.  For n = 2 the moduli space is a point; for
n = 3 it is M_{0,4} = P^1, parametrized by the horn position λ while the
marked points sit at (0, 1, ∞).  A permutation σ of the marked points acts
through the anharmonic group, and the trace is computed by the holomorphic
Lefschetz formula at its fixed points.  Nothing here calls into ``jfun``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial, lcm

from .cyclotomic import CycloNum
from .errors import InvariantViolation
from .lambda_ring import SymFunc
from .localseries import CycloSym
from .qseries import QRat

# all eigenvalues met below (±1, cube and sixth roots of unity) live in Q(zeta_6)
FIELD = 6
INF = None  # the point at infinity of P^1


def _c(x) -> CycloNum:
    return CycloNum.rational(FIELD, x)


ZETA = CycloNum.zeta(FIELD, 1)


@dataclass(frozen=True)
class CycleType:
    parts: tuple

    def __init__(self, parts):
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))
        if any(p < 1 for p in self.parts):
            raise ValueError("cycle lengths must be positive")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def counts(self) -> Counter:
        return Counter(self.parts)

    def class_size(self) -> int:
        size = factorial(self.n)
        for r, l in self.counts().items():
            size //= r ** l * factorial(l)
        return size

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"


def cycle_type_of(perm: tuple) -> CycleType:
    seen, parts = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        r, k = 0, i
        while k not in seen:
            seen.add(k)
            k = perm[k]
            r += 1
        parts.append(r)
    return CycleType(parts)


def partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def cycle_type_trace(nu: SymFunc, c: CycleType) -> SymFunc:
    """Trace of a permutation of cycle type ``c`` on ``nu^{⊗n}``: ``prod_r Ψ^r(nu)^{l_r}``."""
    out = SymFunc.one(nu.deg)
    for r, l in c.counts().items():
        out = out * nu.adams(r) ** l
    return out


# Möbius transformations of P^1 over Q(zeta_6), as 2x2 matrices (a, b, c, d)

def mobius_apply(mat: tuple, z):
    a, b, c, d = mat
    if z is INF:
        return INF if c.is_zero() else a / c
    den = c * z + d
    if den.is_zero():
        return INF
    return (a * z + b) / den


def mobius_compose(f: tuple, g: tuple) -> tuple:
    """Matrix of ``f ∘ g``."""
    a, b, c, d = f
    e, fb, g_, h = g
    return (a * e + b * g_, a * fb + b * h, c * e + d * g_, c * fb + d * h)


def mobius_power(mat: tuple, r: int) -> tuple:
    out = (_c(1), _c(0), _c(0), _c(1))
    for _ in range(r):
        out = mobius_compose(mat, out)
    return out


def mobius_eigenvalue(mat: tuple, z):
    """Multiplier of the map on the cotangent line at a fixed point ``z``."""
    a, b, c, d = mat
    if z is INF:
        # in the chart w = 1/z the map is w -> (c + d w)/(a + b w)
        return d / a
    return (a * d - b * c) / (c * z + d) ** 2


def same_point(x, y) -> bool:
    if x is INF or y is INF:
        return x is y
    return x == y


def same_map(f: tuple, g: tuple) -> bool:
    """Equality in PGL_2."""
    return all((x * w - y * v).is_zero() for (x, v), (y, w) in
               [((f[i], g[i]), (f[k], g[k])) for i in range(4) for k in range(4)])


MARKED = (_c(0), _c(1), INF)

# σ -> Möbius map sending the marked point z_i to z_σ(i); σ is the tuple of images
ANHARMONIC = {
    (0, 1, 2): (_c(1), _c(0), _c(0), _c(1)),     # z
    (1, 0, 2): (_c(-1), _c(1), _c(0), _c(1)),    # 1 - z
    (2, 1, 0): (_c(0), _c(1), _c(1), _c(0)),     # 1/z
    (0, 2, 1): (_c(1), _c(0), _c(1), _c(-1)),    # z/(z - 1)
    (1, 2, 0): (_c(0), _c(1), _c(-1), _c(1)),    # 1/(1 - z)
    (2, 0, 1): (_c(1), _c(-1), _c(1), _c(0)),    # (z - 1)/z
}


def _sqrt(x: CycloNum) -> CycloNum:
    """Square root of a rational square or of -3 times one (2ζ-1 squares to -3)."""
    if not x.is_rational():
        raise ValueError(f"no square root available for {x}")
    v = x.to_fraction()
    for scale, base in ((Fraction(1), _c(1)), (Fraction(-3), 2 * ZETA - 1)):
        w = v / scale
        if w >= 0:
            rn, rd = _isqrt(w.numerator), _isqrt(w.denominator)
            if rn is not None and rd is not None:
                return base * Fraction(rn, rd)
    raise ValueError(f"{v} is not a square in Q(zeta_6)")


def _isqrt(n: int):
    r = int(round(n ** 0.5))
    for s in (r - 1, r, r + 1):
        if s >= 0 and s * s == n:
            return s
    return None


def fixed_points(mat: tuple) -> list:
    """Fixed points on P^1 of a non-identity Möbius map."""
    a, b, c, d = mat
    if c.is_zero():
        pts = [INF]
        if not (d - a).is_zero():
            pts.append(b / (d - a))
        return pts
    # c z^2 + (d - a) z - b = 0
    disc = (d - a) * (d - a) + 4 * b * c
    root = _sqrt(disc)
    pts = [(a - d + root) / (2 * c), (a - d - root) / (2 * c)]
    return pts if not root.is_zero() else pts[:1]


@dataclass(frozen=True)
class FixedPointDatum:
    """One isolated fixed point of σ acting on M_{0,n+1}.

    ``horn`` is the eigenvalue on the horn cotangent line, ``conormal`` the
    eigenvalue on the moduli cotangent line (1 on a point moduli space, where
    no denominator appears), and ``cycles`` lists per cycle of σ its length
    and the eigenvalue of σ^r on the cotangent line at its first point.
    """

    label: str
    boundary: bool
    horn: CycloNum
    conormal: CycloNum | None
    cycles: tuple


def _cycles(perm: tuple) -> list:
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        cyc, k = [], i
        while k not in seen:
            seen.add(k)
            cyc.append(k)
            k = perm[k]
        out.append(tuple(cyc))
    return out


def _marked_cycle_data(perm: tuple, mat: tuple) -> tuple:
    data = []
    for cyc in _cycles(perm):
        r = len(cyc)
        z = MARKED[cyc[0]]
        data.append((r, mobius_eigenvalue(mobius_power(mat, r), z)))
    return tuple(data)


def _point_label(z) -> str:
    return "inf" if z is INF else str(z)


def fixed_point_data(perm: tuple) -> list:
    """Fixed points of a permutation of three marked points acting on M_{0,4}.

    Interior points: the horn sits at a fixed point λ of the anharmonic map φ,
    and φ itself is the curve automorphism.  The horn eigenvalue is φ'(λ); we
    take the moduli eigenvalue equal to it (λ is the horn position).

    Boundary points λ = z_i (σ(i) = i): the curve is nodal.  The bubble
    carrying the horn, z_i and the node has three fixed special points, so σ
    acts trivially there (horn eigenvalue 1, z_i eigenvalue 1).  The other
    component carries the two swapped points and the node; σ acts on it as
    an involution fixing the node, with branch multiplier -1.  The smoothing
    direction has conormal eigenvalue equal to the product of the two branch
    multipliers, 1 * (-1).
    """
    mat = ANHARMONIC[perm]
    if perm == (0, 1, 2):
        raise ValueError("the identity has no isolated fixed points")
    out = []
    for lam in fixed_points(mat):
        boundary = any(same_point(lam, z) for z in MARKED)
        if not boundary:
            omega = mobius_eigenvalue(mat, lam)
            out.append(FixedPointDatum(_point_label(lam), False, omega, omega,
                                       _marked_cycle_data(perm, mat)))
            continue
        i = next(k for k, z in enumerate(MARKED) if same_point(lam, z))
        if perm[i] != i:
            raise InvariantViolation("boundary fixed point at a moved marked point")
        # other component modelled on P^1 with the swapped pair at 0, 1 and the node at ∞
        swap = ANHARMONIC[(1, 0, 2)]
        branch = mobius_eigenvalue(swap, INF)
        cycles = []
        for cyc in _cycles(perm):
            if cyc == (i,):
                cycles.append((1, _c(1)))
            else:
                cycles.append((len(cyc), mobius_eigenvalue(mobius_power(swap, len(cyc)), _c(0))))
        out.append(FixedPointDatum(_point_label(lam), True, _c(1), _c(1) * branch, tuple(cycles)))
    return sorted(out, key=lambda p: (p.boundary, p.label))


# Laurent polynomials in q with CycloSym coefficients: {exp: CycloSym}

def _eval_input(t: QRat, r: int, point: CycloNum) -> CycloSym:
    """``(Ψ^r t)`` at L = μ with μ^r = point: ``sum_k Ψ^r(t_k) point^k``."""
    acc = CycloSym.zero(FIELD, t.deg)
    for k, c in t.num.items():
        acc = acc + CycloSym.from_sym(FIELD, c.adams(r)).mul_scalar(point ** k)
    return acc


def _geometric(omega: CycloNum) -> tuple:
    """``1/(1 - q ω)`` as (numerator {exp: CycloNum}, d) over ``1 - q^d``."""
    d = next(k for k in range(1, FIELD + 1) if omega ** k == 1)
    return {i: omega ** i for i in range(d)}, d


def _local_term(t: QRat, p: FixedPointDatum) -> tuple:
    """Lefschetz contribution at one fixed point as ({exp: CycloSym}, d) over ``1 - q^d``."""
    trace = CycloSym.from_sym(FIELD, SymFunc.one(t.deg))
    for r, kappa in p.cycles:
        trace = trace * _eval_input(t, r, kappa)
    if p.conormal is not None:
        if p.conormal == 1:
            raise InvariantViolation(f"fixed point {p.label} is not isolated")
        trace = trace.mul_scalar((1 - p.conormal).inv())
    geo, d = _geometric(p.horn)
    return {e: trace.mul_scalar(w) for e, w in geo.items()}, d


def _sum_to_qrat(terms: list, deg: int) -> QRat:
    """Sum of ``num/(1 - q^d)`` terms; the cyclotomic parts must cancel."""
    if not terms:
        return QRat.zero(deg)
    big = lcm(*(d for _, d in terms))
    acc: dict = {}
    for num, d in terms:
        for e, c in num.items():
            for i in range(big // d):
                k = e + d * i
                acc[k] = acc[k] + c if k in acc else c
    out = {}
    for k, c in acc.items():
        if not c.is_rational():
            raise InvariantViolation(f"cyclotomic part survives at q^{k}: {c}")
        if c.parts[0]:
            out[k] = c.parts[0]
    return QRat(out, ((big, 1),), deg)


def _identity_trace(n: int, t: QRat) -> QRat:
    deg = t.deg
    if n == 2:
        val = t.eval_at_one()
        return QRat.one_over(1, 1, val * val, deg)
    # n = 3: sum_{a,b,c} t_a t_b t_c [(a+b+c+1)/(1-q) + q/(1-q)^2]
    total_lin = SymFunc.zero(deg)
    total = SymFunc.zero(deg)
    items = list(t.num.items())
    for (a, x), (b, y), (c, z) in product(items, repeat=3):
        w = x * y * z
        if w:
            total_lin = total_lin + w.scale(a + b + c + 1)
            total = total + w
    return (QRat.one_over(1, 1, total_lin, deg)
            + QRat({1: total}, ((1, 2),), deg))


def lefschetz_trace(n: int, c: CycleType, t: QRat) -> QRat:
    """``tr_h <t, ..., t, 1/(1-qL)>_{0,n+1}`` for h of cycle type ``c`` in S_n."""
    if n not in (2, 3) or c.n != n:
        raise ValueError(f"unsupported (n, cycle type) = ({n}, {c})")
    if not t.is_laurent():
        raise ValueError("the input must be a Laurent polynomial")
    if c.parts == (1,) * n:
        return _identity_trace(n, t)
    if n == 2:
        # M_{0,3} is a point; z -> 1 - z swaps z1 = 0, z2 = 1 and fixes the horn at ∞
        swap = ANHARMONIC[(1, 0, 2)]
        pt = FixedPointDatum("pt", False, mobius_eigenvalue(swap, INF), None,
                             ((2, mobius_eigenvalue(mobius_power(swap, 2), _c(0))),))
        return _sum_to_qrat([_local_term(t, pt)], t.deg)
    rep = {(2, 1): (1, 0, 2), (3,): (1, 2, 0)}[c.parts]
    return _sum_to_qrat([_local_term(t, p) for p in fixed_point_data(rep)], t.deg)


@dataclass
class TraceReport:
    n: int
    classes: list  # (CycleType, size, QRat)
    average: QRat


def trace_report(n: int, t: QRat) -> TraceReport:
    classes = []
    total = QRat.zero(t.deg)
    for parts in sorted(partitions(n)):
        c = CycleType(parts)
        contrib = lefschetz_trace(n, c, t)
        classes.append((c, c.class_size(), contrib))
        total = total + contrib.scale(c.class_size())
    return TraceReport(n, classes, total.scale(Fraction(1, factorial(n))))


def equivariant_bigJ_oracle(t: QRat, max_n: int = 2) -> QRat:
    """``1 - q + t + sum_{n <= max_n} (1/n!) sum_h tr_h <t, ..., t, 1/(1-qL)>``."""
    if max_n not in (2, 3):
        raise ValueError("max_n must be 2 or 3")
    out = QRat.dilaton(t.deg) + t
    for n in range(2, max_n + 1):
        out = out + trace_report(n, t).average
    return out


def fake_correlator(exponents, horn: bool = False):
    """Euler characteristic of ``prod L_i^{a_i}`` on M_{0,3} or M_{0,4}.

    Without a horn, ``exponents`` lists all marked points; with a horn, the
    horn slot carries ``1/(1 - qL)`` and is not listed.
    """
    exponents = list(exponents)
    if any(a < 0 for a in exponents):
        raise ValueError("exponents must be non-negative")
    n = len(exponents) + (1 if horn else 0)
    if n == 3:
        return QRat.one_over(1) if horn else Fraction(1)
    if n == 4:
        a = sum(exponents)
        if not horn:
            # M_{0,4} = P^1 and each L_i has degree 1: χ(O(a)) = a + 1
            return Fraction(a + 1)
        return QRat.one_over(1, 1, a + 1) + QRat({1: 1}, ((1, 2),))
    raise ValueError(f"unsupported number of points {n}")


def string_identity_check(exponents) -> bool:
    """<L^a1, L^a2, L^a3, 1>_{0,4} against the string-equation right-hand side."""
    a = list(exponents)
    lhs = fake_correlator(a + [0])
    rhs = fake_correlator(a)
    for i in range(len(a)):
        # (L^a - 1)/(L - 1) restricted to M_{0,3}, where L = 1, is a
        shifted = a[:i] + a[i + 1:]
        rhs += a[i] * fake_correlator(shifted + [0])
    return lhs == rhs
