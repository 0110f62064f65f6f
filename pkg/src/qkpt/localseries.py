"""Truncated Laurent expansions at roots of unity.

A :class:`LocalSeries` is ``sum_i c_i (q - a)^i`` for ``vmin <= i <= vmax``
with ``a = zeta_m^j`` and coefficients in the λ-algebra tensored with
Q(zeta_m) (:class:`CycloSym`).  Coefficients below ``vmin`` are zero;
coefficients above ``vmax`` are unknown unless the series is ``exact``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

from .cyclotomic import CycloNum, _power_table, totient
from .errors import (
    NonInvertibleDenominator,
    OrderMismatch,
    PrecisionLost,
    TruncationMismatch,
    WindowTooSmall,
)
from .lambda_ring import SymFunc, sym_sum
from .qseries import QRat

DEFAULT_WINDOW = (-4, 10)


class CycloSym:
    """Element of Λ ⊗ Q(zeta_m): one SymFunc per power-basis index."""

    __slots__ = ("m", "deg", "parts")

    def __init__(self, m: int, parts):
        parts = tuple(parts)
        n = totient(m)
        if len(parts) != n:
            raise ValueError(f"expected {n} parts for order {m}, got {len(parts)}")
        self.m = m
        self.deg = parts[0].deg
        self.parts = parts

    @classmethod
    def zero(cls, m: int, deg: int) -> CycloSym:
        z = SymFunc.zero(deg)
        return cls(m, (z,) * totient(m))

    @classmethod
    def from_sym(cls, m: int, s: SymFunc) -> CycloSym:
        z = SymFunc.zero(s.deg)
        return cls(m, (s,) + (z,) * (totient(m) - 1))

    @classmethod
    def from_cyclo(cls, c: CycloNum, deg: int) -> CycloSym:
        return cls(c.m, tuple(SymFunc.const(x, deg) for x in c.coeffs))

    def is_zero(self) -> bool:
        return not any(self.parts)

    def __bool__(self) -> bool:
        return any(self.parts)

    def augment(self) -> CycloNum:
        return CycloNum(self.m, [p.augment() for p in self.parts])

    def is_rational(self) -> bool:
        return not any(self.parts[1:])

    def to_sym(self) -> SymFunc:
        if not self.is_rational():
            raise ValueError("coefficient has a non-rational cyclotomic part")
        return self.parts[0]

    def _check(self, other: CycloSym) -> None:
        if other.m != self.m:
            raise OrderMismatch(f"cyclotomic orders differ: {self.m} vs {other.m}")
        if other.deg != self.deg:
            raise TruncationMismatch(f"truncation degrees differ: {self.deg} vs {other.deg}")

    def __add__(self, other: CycloSym) -> CycloSym:
        self._check(other)
        return CycloSym(self.m, tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __sub__(self, other: CycloSym) -> CycloSym:
        self._check(other)
        return CycloSym(self.m, tuple(a - b for a, b in zip(self.parts, other.parts)))

    def __neg__(self) -> CycloSym:
        return CycloSym(self.m, tuple(-a for a in self.parts))

    def __mul__(self, other):
        if isinstance(other, CycloNum):
            return self.mul_scalar(other)
        if isinstance(other, (int, Fraction)):
            return CycloSym(self.m, tuple(a.scale(other) for a in self.parts))
        if isinstance(other, SymFunc):
            return CycloSym(self.m, tuple(a * other for a in self.parts))
        self._check(other)
        n = len(self.parts)
        table = _power_table(self.m)
        acc = [[] for _ in range(n)]
        for i, a in enumerate(self.parts):
            if not a:
                continue
            for j, b in enumerate(other.parts):
                if not b:
                    continue
                ab = a * b
                if not ab:
                    continue
                row = table[(i + j) % self.m]
                for k in range(n):
                    if row[k]:
                        acc[k].append(ab if row[k] == 1 else ab.scale(row[k]))
        return CycloSym(self.m, tuple(sym_sum(a, self.deg) for a in acc))

    __rmul__ = __mul__

    def mul_scalar(self, c: CycloNum) -> CycloSym:
        if c.m != self.m:
            raise OrderMismatch(f"cyclotomic orders differ: {self.m} vs {c.m}")
        n = len(self.parts)
        table = _power_table(self.m)
        acc = [[] for _ in range(n)]
        for i, a in enumerate(self.parts):
            if not a:
                continue
            for j, x in enumerate(c.coeffs):
                if not x:
                    continue
                row = table[(i + j) % self.m]
                for k in range(n):
                    if row[k]:
                        acc[k].append(a.scale(x * row[k]))
        return CycloSym(self.m, tuple(sym_sum(a, self.deg) for a in acc))

    def map(self, fn) -> CycloSym:
        return CycloSym(self.m, tuple(fn(p) for p in self.parts))

    def inverse(self) -> CycloSym:
        alpha = self.augment()
        if alpha.is_zero():
            raise NonInvertibleDenominator("coefficient has zero augmentation")
        ainv = alpha.inv()
        n = self.mul_scalar(ainv) - CycloSym.from_sym(self.m, SymFunc.one(self.deg))
        total = CycloSym.from_sym(self.m, SymFunc.one(self.deg))
        power = total
        for _ in range(self.deg):
            power = -(power * n)
            if not power:
                break
            total = total + power
        return total.mul_scalar(ainv)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloSym):
            return NotImplemented
        return self.m == other.m and self.parts == other.parts

    def __hash__(self) -> int:
        return hash((self.m, self.parts))

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.parts[0])
        out = []
        for i, p in enumerate(self.parts):
            if p:
                z = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
                out.append(f"({p})" + (f"*{z}" if z else ""))
        return " + ".join(out) or "0"

    def __repr__(self) -> str:
        return f"CycloSym({self.m}, {self})"


EXACT = 10 ** 9


def _clamp(p: int) -> int:
    return EXACT if p >= EXACT // 2 else p


class LocalSeries:
    """Truncated Laurent series in (q - a), a = zeta_m^j.

    Precision is tracked per λ-degree: ``prec[d]`` is the highest exponent
    whose degree-d component is known.  Nilpotent polar terms therefore do
    not destroy precision in products, inverses and logarithms.
    """

    __slots__ = ("m", "j", "vmin", "coeffs", "prec", "deg")

    def __init__(self, m: int, j: int, vmin: int, coeffs, exact: bool = False,
                 deg: int | None = None, prec=None):
        coeffs = list(coeffs)
        if deg is None:
            if not coeffs:
                raise ValueError("empty series needs an explicit truncation degree")
            deg = coeffs[0].deg
        for c in coeffs:
            if c.m != m:
                raise OrderMismatch(f"coefficient of order {c.m} in a series over Q(zeta_{m})")
        if prec is None:
            p = EXACT if exact else vmin + len(coeffs) - 1
            prec = (p,) * (deg + 1)
        prec = tuple(_clamp(p) for p in prec)
        self.m = m
        self.j = j % m if m > 1 else 0
        self.vmin = vmin
        self.deg = deg
        self.prec = prec
        top = max(p for p in prec)
        if top < EXACT:
            coeffs = coeffs[: max(top - vmin + 1, 0)]
        if min(prec) < vmin + len(coeffs) - 1:
            masked = []
            for i, c in enumerate(coeffs):
                e = vmin + i
                if any(e > p for p in prec):
                    c = c.map(lambda s, e=e: s.select(lambda w: w < len(prec) and e <= prec[w]))
                masked.append(c)
            coeffs = masked
        self.coeffs = coeffs

    @property
    def exact(self) -> bool:
        return min(self.prec) >= EXACT

    @property
    def vmax(self) -> int:
        """Highest exponent whose coefficient is fully known."""
        p = min(self.prec)
        return self.vmin + len(self.coeffs) - 1 if p >= EXACT else p

    @property
    def top(self) -> int:
        return self.vmin + len(self.coeffs) - 1

    @property
    def center(self) -> tuple:
        return (self.m, self.j)

    def center_value(self) -> CycloNum:
        return CycloNum.zeta(self.m, self.j)

    def _zero(self) -> CycloSym:
        return CycloSym.zero(self.m, self.deg)

    def _one(self) -> CycloSym:
        return CycloSym.from_sym(self.m, SymFunc.one(self.deg))

    def _raw(self, i: int) -> CycloSym:
        k = i - self.vmin
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self._zero()

    def coeff(self, i: int) -> CycloSym:
        if i > min(self.prec):
            raise PrecisionLost(f"coefficient {i} beyond known precision {min(self.prec)}")
        return self._raw(i)

    def known(self, i: int) -> bool:
        return i <= min(self.prec)

    def leading_index(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return self.vmin + i
        return None

    def _lows(self) -> list:
        lows = [None] * (self.deg + 1)
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            for p in c.parts:
                for d in p.degrees():
                    if lows[d] is None:
                        lows[d] = self.vmin + i
        return [lows[d] if lows[d] is not None else _clamp(self.prec[d] + 1) for d in range(self.deg + 1)]

    def trimmed(self) -> LocalSeries:
        """Drop leading zero coefficients."""
        lead = self.leading_index()
        if lead is None or lead == self.vmin:
            return self
        return LocalSeries(self.m, self.j, lead, self.coeffs[lead - self.vmin:], deg=self.deg, prec=self.prec)

    def window(self, lo: int, hi: int) -> LocalSeries:
        """Restrict to exponents ``lo..hi``; nonzero terms below ``lo`` are an error."""
        for i in range(self.vmin, lo):
            if self._raw(i):
                raise WindowTooSmall(f"nonzero coefficient at (q-a)^{i} below window start {lo}")
        if hi > min(self.prec):
            raise PrecisionLost(f"window end {hi} beyond known precision {min(self.prec)}")
        return LocalSeries(self.m, self.j, lo, [self._raw(i) for i in range(lo, hi + 1)], False, self.deg)

    def _same_center(self, other: LocalSeries) -> None:
        if (self.m, self.j) != (other.m, other.j):
            raise OrderMismatch(f"series centers differ: {self.center} vs {other.center}")
        if self.deg != other.deg:
            raise TruncationMismatch(f"truncation degrees differ: {self.deg} vs {other.deg}")

    def _span(self, prec: tuple, fallback: int) -> int:
        finite = [p for p in prec if p < EXACT]
        return max(finite) if finite else fallback

    def __add__(self, other: LocalSeries) -> LocalSeries:
        self._same_center(other)
        lo = min(self.vmin, other.vmin)
        prec = tuple(min(a, b) for a, b in zip(self.prec, other.prec))
        hi = self._span(prec, max(self.top, other.top))
        return LocalSeries(self.m, self.j, lo, [self._raw(i) + other._raw(i) for i in range(lo, hi + 1)],
                           deg=self.deg, prec=prec)

    def __neg__(self) -> LocalSeries:
        return LocalSeries(self.m, self.j, self.vmin, [-c for c in self.coeffs], deg=self.deg, prec=self.prec)

    def __sub__(self, other: LocalSeries) -> LocalSeries:
        return self + (-other)

    def scale(self, c) -> LocalSeries:
        return LocalSeries(self.m, self.j, self.vmin, [x * c for x in self.coeffs], deg=self.deg, prec=self.prec)

    def shift(self, s: int) -> LocalSeries:
        """Multiply by (q - a)^s."""
        return LocalSeries(self.m, self.j, self.vmin + s, self.coeffs, deg=self.deg,
                           prec=tuple(p + s if p < EXACT else p for p in self.prec))

    def __mul__(self, other):
        if not isinstance(other, LocalSeries):
            return self.scale(other)
        self._same_center(other)
        la, lb = self._lows(), other._lows()
        pa, pb = self.prec, other.prec
        prec = []
        for d in range(self.deg + 1):
            best = EXACT
            for a in range(d + 1):
                b = d - a
                best = min(best, _clamp(la[a] + pb[b]) if pb[b] < EXACT else _clamp(la[a] + EXACT),
                           _clamp(lb[b] + pa[a]) if pa[a] < EXACT else _clamp(lb[b] + EXACT))
            prec.append(best)
        prec = tuple(prec)
        lo = self.vmin + other.vmin
        hi = self._span(prec, self.top + other.top)
        n = max(hi - lo + 1, 0)
        acc = [[] for _ in range(n)]
        for ia, a in enumerate(self.coeffs):
            if not a:
                continue
            for ib, b in enumerate(other.coeffs):
                k = ia + ib
                if k >= n:
                    break
                if b:
                    acc[k].append(a * b)
        out = []
        for parts in acc:
            if not parts:
                out.append(self._zero())
            elif len(parts) == 1:
                out.append(parts[0])
            else:
                out.append(CycloSym(self.m, tuple(sym_sum([p.parts[t] for p in parts], self.deg)
                                                  for t in range(len(parts[0].parts)))))
        return LocalSeries(self.m, self.j, lo, out, deg=self.deg, prec=prec)

    def polar_part(self) -> LocalSeries:
        """Exact polar part; every negative coefficient must be known."""
        if min(self.prec) < -1:
            raise PrecisionLost("polar coefficients are not all known")
        lo = min(self.vmin, -1)
        return LocalSeries(self.m, self.j, lo, [self._raw(i) for i in range(lo, 0)], True, self.deg)

    def regular_part(self) -> LocalSeries:
        hi = self.top
        return LocalSeries(self.m, self.j, 0, [self._raw(i) for i in range(0, max(hi, -1) + 1)],
                           deg=self.deg, prec=self.prec)

    def has_polar_terms(self) -> bool:
        return any(self.coeff(i) for i in range(self.vmin, 0))

    def _power_series_inverse(self) -> LocalSeries:
        """Inverse of a series supported in exponents >= 0 with invertible constant term."""
        prec = []
        run = EXACT
        for p in self.prec:
            run = min(run, p)
            prec.append(run)
        hi = self._span(tuple(prec), self.top)
        c0inv = self._raw(0).inverse()
        g = [c0inv]
        for i in range(1, hi + 1):
            acc = None
            for k in range(1, i + 1):
                w = self._raw(k)
                if w and g[i - k]:
                    t = w * g[i - k]
                    acc = t if acc is None else acc + t
            g.append(-(acc * c0inv) if acc is not None else self._zero())
        return LocalSeries(self.m, self.j, 0, g, deg=self.deg, prec=tuple(prec))

    def inverse(self) -> LocalSeries:
        v0 = None
        for i in range(self.vmin, self.top + 1):
            if not self._raw(i).augment().is_zero():
                if i > self.prec[0]:
                    break
                v0 = i
                break
        if v0 is None:
            raise NonInvertibleDenominator("no coefficient with nonzero augmentation in the known window")
        w = self.shift(-v0)
        wpos = w.regular_part()
        if wpos.exact:
            raise ValueError("inverse of an exact series needs a finite precision")
        ginv = wpos._power_series_inverse()
        wneg = w.polar_part()
        if wneg.leading_index() is None:
            return ginv.shift(-v0)
        nil = wneg * ginv
        total = LocalSeries(self.m, self.j, 0, [self._one()], True, self.deg)
        power = total
        for _ in range(self.deg):
            power = -(power * nil)
            if power.leading_index() is None:
                break
            total = total + power
        return (ginv * total).shift(-v0)

    def log(self) -> LocalSeries:
        """Logarithm of a series whose constant term has augmentation 1 and whose
        polar coefficients all have zero augmentation."""
        if self.coeff(0).augment() != CycloNum.rational(self.m, 1):
            raise NonInvertibleDenominator("log needs augmentation 1 at the constant term")
        for i in range(self.vmin, 0):
            if not self.coeff(i).augment().is_zero():
                raise NonInvertibleDenominator("polar coefficient with nonzero augmentation")
        gpos = self.regular_part()
        c0 = gpos._raw(0)
        one = self._one()
        n0 = c0 - one
        log_c0 = self._zero()
        power = one
        for k in range(1, self.deg + 1):
            power = power * n0
            if not power:
                break
            log_c0 = log_c0 + power * Fraction((-1) ** (k + 1), k)
        c0inv = LocalSeries(self.m, self.j, 0, [c0.inverse()], True, self.deg)
        rest = LocalSeries(self.m, self.j, 0, [self._zero()] + gpos.coeffs[1:], deg=self.deg, prec=gpos.prec)
        h = rest * c0inv
        result = LocalSeries(self.m, self.j, 0, [log_c0], True, self.deg)
        power = LocalSeries(self.m, self.j, 0, [one], True, self.deg)
        hi = self._span(h.prec, h.top)
        for k in range(1, hi + 1):
            power = power * h
            if power.leading_index() is None:
                break
            result = result + power.scale(Fraction((-1) ** (k + 1), k))
        result = result + LocalSeries(self.m, self.j, 0, [], deg=self.deg, prec=h.prec)
        gneg = self.polar_part()
        if gneg.leading_index() is not None:
            nil = gneg * gpos._power_series_inverse()
            power = LocalSeries(self.m, self.j, 0, [one], True, self.deg)
            for k in range(1, self.deg + 1):
                power = power * nil
                if power.leading_index() is None:
                    break
                result = result + power.scale(Fraction((-1) ** (k + 1), k))
        return result

    def map_coefficients(self, fn, prec=None) -> LocalSeries:
        return LocalSeries(self.m, self.j, self.vmin, [c.map(fn) for c in self.coeffs], deg=self.deg,
                           prec=self.prec if prec is None else prec)

    def embed(self, m: int) -> LocalSeries:
        """View a series over Q as a series over Q(zeta_m), same center 1."""
        if self.m == m:
            return self
        if self.m != 1 or self.j != 0:
            raise OrderMismatch("only series over Q centered at 1 can be embedded")
        return LocalSeries(m, 0, self.vmin, [CycloSym.from_sym(m, c.parts[0]) for c in self.coeffs],
                           deg=self.deg, prec=self.prec)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LocalSeries):
            return NotImplemented
        if (self.m, self.j, self.deg) != (other.m, other.j, other.deg):
            return False
        lo = min(self.vmin, other.vmin)
        hi = min(self.vmax, other.vmax)
        if self.exact and other.exact:
            hi = max(self.top, other.top)
        return all(self._raw(i) == other._raw(i) for i in range(lo, hi + 1))

    __hash__ = None

    def __str__(self) -> str:
        a = "1" if self.j == 0 else f"zeta_{self.m}^{self.j}"
        var = f"(q-{a})"
        terms = []
        for i, c in enumerate(self.coeffs):
            e = self.vmin + i
            if c and e <= self.vmax:
                terms.append(f"[{c}]*{var}^{e}")
        tail = "" if self.exact else f" + O({var}^{self.vmax + 1})"
        return (" + ".join(terms) or "0") + tail

    def __repr__(self) -> str:
        return f"LocalSeries({self})"


# scalar power series helpers (lists of CycloNum, index = exponent)

def _ser_mul(a: list, b: list, n: int, m: int) -> list:
    out = [CycloNum(m) for _ in range(n)]
    for i, x in enumerate(a[:n]):
        if x.is_zero():
            continue
        for j, y in enumerate(b[: n - i]):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def _ser_inv(a: list, n: int, m: int) -> list:
    c0inv = a[0].inv()
    g = [c0inv]
    for i in range(1, n):
        acc = CycloNum(m)
        for k in range(1, min(i, len(a) - 1) + 1):
            if not a[k].is_zero():
                acc = acc + a[k] * g[i - k]
        g.append(-(acc * c0inv))
    return g[:n]


def _binom_general(e: int, i: int) -> Fraction:
    if e >= 0:
        return Fraction(comb(e, i)) if i <= e else Fraction(0)
    num = Fraction(1)
    for t in range(i):
        num *= e - t
    return num / Fraction(_fact(i))


def _fact(i: int) -> int:
    out = 1
    for t in range(2, i + 1):
        out *= t
    return out


def _frac_binom(alpha: Fraction, i: int) -> Fraction:
    num = Fraction(1)
    for t in range(i):
        num *= alpha - t
    return num / _fact(i)


def localize(f: QRat, m: int = 1, j: int = 0, window: tuple = DEFAULT_WINDOW) -> LocalSeries:
    """Laurent expansion of ``f`` in powers of ``q - zeta_m^j`` on the given window."""
    lo, hi = window
    if lo > hi:
        raise ValueError("empty window")
    if m > 1 and gcd(j % m, m) != 1:
        raise ValueError(f"zeta_{m}^{j} is not primitive")
    if m == 1:
        j = 0
    deg = f.deg
    a_order = m if m > 1 else 1
    pole = f.pole_order_at(a_order)
    n = hi + pole + 1
    zero_sym = CycloSym.zero(m, deg)
    if n <= 0:
        out = []
    else:
        scal = [CycloNum.rational(m, 1)] + [CycloNum(m) for _ in range(n - 1)]
        for k, mult in f.den:
            # 1 - (a + u)^k
            ak = CycloNum.zeta(m, j * k)
            fac = [CycloNum.rational(m, 1) - ak] + [
                CycloNum.zeta(m, j * (k - i)) * Fraction(-comb(k, i)) for i in range(1, k + 1)]
            if k % a_order == 0:
                fac = fac[1:]
            fac = (fac + [CycloNum(m)] * n)[:n]
            for _ in range(mult):
                scal = _ser_mul(scal, fac, n, m)
        sinv = _ser_inv(scal, n, m)
        numser = [[] for _ in range(n)]
        for e, c in f.num.items():
            for i in range(n):
                b = _binom_general(e, i)
                if not b:
                    if e >= 0 and i > e:
                        break
                    continue
                sc = CycloNum.zeta(m, j * (e - i)) * b
                numser[i].append(CycloSym.from_sym(m, c).mul_scalar(sc))
        numc = []
        for parts in numser:
            acc = zero_sym
            for p in parts:
                acc = acc + p
            numc.append(acc)
        out = []
        for i in range(n):
            acc = zero_sym
            for k in range(i + 1):
                if numc[k] and not sinv[i - k].is_zero():
                    acc = acc + numc[k].mul_scalar(sinv[i - k])
            out.append(acc)
    full = LocalSeries(m, j, -pole, out, False, deg) if out else LocalSeries(m, j, -pole, [], False, deg)
    if lo < -pole:
        full = LocalSeries(m, j, lo, [zero_sym] * (-pole - lo) + full.coeffs, False, deg)
    return full.window(lo, hi)


def _rat_mul(a: list, b: list, n: int) -> list:
    out = [Fraction(0)] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[: n - i]):
                if y:
                    out[i + j] += x * y
    return out


def _rat_inv(a: list, n: int) -> list:
    g = [1 / Fraction(a[0])]
    for i in range(1, n):
        acc = sum((a[k] * g[i - k] for k in range(1, min(i, len(a) - 1) + 1)), Fraction(0))
        g.append(-acc * g[0])
    return g


def _compose_val1(s: LocalSeries, w: list, scale: CycloNum | None = None) -> LocalSeries:
    """``sum_i c_i (scale * w(v))^i`` with rational ``w = w[1] v + w[2] v^2 + ...``, w[1] != 0.

    A valuation-one substitution keeps every exponent's precision, so the
    per-degree precision of ``s`` carries over unchanged.
    """
    m, deg = s.m, s.deg
    lo = s.vmin
    hi = s._span(s.prec, s.top)
    n = hi - lo + 1
    if n <= 0:
        return LocalSeries(m, 0, lo, [], deg=deg, prec=s.prec)
    unit = (list(w[1:]) + [Fraction(0)] * n)[:n]  # w / v
    powers = {0: [Fraction(1)] + [Fraction(0)] * (n - 1)}
    for i in range(1, max(hi, 0) + 1):
        powers[i] = _rat_mul(powers[i - 1], unit, n)
    if lo < 0:
        inv = _rat_inv(unit, n)
        for i in range(-1, lo - 1, -1):
            powers[i] = _rat_mul(powers[i + 1], inv, n)
    acc = [[] for _ in range(n)]
    for i in range(lo, hi + 1):
        c = s._raw(i)
        if not c:
            continue
        if scale is not None:
            c = c.mul_scalar(scale ** i)
        pw = powers[i]
        for k in range(i, hi + 1):
            x = pw[k - i]
            if x:
                acc[k - lo].append(c * x)
    out = []
    for parts in acc:
        if not parts:
            out.append(CycloSym.zero(m, deg))
        else:
            out.append(CycloSym(m, tuple(sym_sum([p.parts[t] for p in parts], deg)
                                          for t in range(len(parts[0].parts)))))
    return LocalSeries(m, 0, lo, out, deg=deg, prec=s.prec)


def subst_mth_root(s: LocalSeries, m: int) -> LocalSeries:
    """Re-expand ``s`` (centered at ``a``) along ``q -> a q^(1/m)``, in powers of ``q - 1``."""
    if m < 1:
        raise ValueError("root order must be positive")
    n = s._span(s.prec, s.top) - s.vmin + 2
    alpha = Fraction(1, m)
    # a q^(1/m) - a = a ((1 + v)^(1/m) - 1)
    w = [Fraction(0)] + [_frac_binom(alpha, i) for i in range(1, n + 1)]
    return _compose_val1(s, w, s.center_value())


def adams_series(r: int, s: LocalSeries) -> LocalSeries:
    """Ψ^r on a series centered at 1: Ψ^r on coefficients and q -> q^r."""
    if s.j != 0:
        raise OrderMismatch("Adams operation on series needs the center q = 1")
    if r == 1:
        return s
    n = s._span(s.prec, s.top) - s.vmin + 2
    w = [Fraction(0)] + [Fraction(comb(r, i)) for i in range(1, n + 1)]
    prec = [EXACT] * (s.deg + 1)
    for d in range(s.deg + 1):
        if r * d <= s.deg:
            prec[r * d] = s.prec[d]
    mapped = s.map_coefficients(lambda c: c.adams(r), prec=tuple(prec))
    return _compose_val1(mapped, w)


def adams_q(m: int, x):
    """Ψ^m on a QRat or on a LocalSeries centered at q = 1."""
    if isinstance(x, QRat):
        return x.adams(m)
    if isinstance(x, LocalSeries):
        return adams_series(m, x)
    raise TypeError(f"Adams operation not defined on {type(x).__name__}")


def from_qrat_at_one(f: QRat, window: tuple = DEFAULT_WINDOW) -> LocalSeries:
    return localize(f, 1, 0, window)


def residue_pairing(f: QRat, g: QRat) -> SymFunc:
    """``-Res_{q=1} f(1/q) g(q) dq/q``."""
    h = f.invert_q() * g * QRat.q_power(-1, 1, g.deg)
    pole = h.pole_order_at(1)
    if pole == 0:
        return SymFunc.zero(g.deg)
    s = localize(h, 1, 0, (-pole, -1))
    return -s.coeff(-1).parts[0]
