"""Rational functions of q over the λ-algebra with poles at roots of unity.

A :class:`QRat` is ``num / prod (1 - q^k)^mult`` where ``num`` is a Laurent
polynomial with :class:`SymFunc` coefficients.  Laurent polynomials in this
module are plain ``{exponent: SymFunc}`` dicts.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Rational

from .cyclotomic import _phi, poly_divmod, poly_mul
from .errors import (
    AugmentationError,
    RootOrderError,
    TruncationMismatch,
    UnsupportedDenominator,
)
from .lambda_ring import DEFAULT_DEGREE, SymFunc, sym_sum

DEFAULT_MAX_ROOT_ORDER = 6


# Laurent polynomial helpers ({exp: SymFunc})

def lp_clean(p: dict) -> dict:
    return {e: c for e, c in p.items() if c}


def lp_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out[e] + c if e in out else c
    return lp_clean(out)


def lp_neg(a: dict) -> dict:
    return {e: -c for e, c in a.items()}


def lp_mul(a: dict, b: dict) -> dict:
    acc: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            acc.setdefault(ea + eb, []).append(ca * cb)
    out = {}
    for e, parts in acc.items():
        deg = parts[0].deg
        s = sym_sum(parts, deg)
        if s:
            out[e] = s
    return out


def lp_mul_rat(a: dict, r: dict) -> dict:
    """Multiply by a rational Laurent polynomial ``{exp: Fraction}``."""
    acc: dict = {}
    for ea, ca in a.items():
        for er, cr in r.items():
            acc.setdefault(ea + er, []).append(ca.scale(cr))
    out = {}
    for e, parts in acc.items():
        s = sym_sum(parts, parts[0].deg)
        if s:
            out[e] = s
    return out


def lp_scale(a: dict, c) -> dict:
    if isinstance(c, SymFunc):
        return lp_clean({e: v * c for e, v in a.items()})
    return lp_clean({e: v.scale(c) for e, v in a.items()})


def lp_shift(a: dict, s: int) -> dict:
    return {e + s: c for e, c in a.items()}


def lp_eval_one(a: dict, deg: int) -> SymFunc:
    return sym_sum(a.values(), deg)


def lp_divmod_rat(a: dict, b: list, deg: int) -> tuple:
    """Divide a polynomial (non-negative exponents) by a dense rational polynomial."""
    b = list(b)
    while b and b[-1] == 0:
        b.pop()
    nb = len(b) - 1
    lead = Fraction(b[-1])
    rem = dict(a)
    quo = {}
    top = max(rem) if rem else -1
    for i in range(top - nb, -1, -1):
        c = rem.get(i + nb)
        if not c:
            continue
        c = c.scale(1 / lead)
        quo[i] = c
        for j, y in enumerate(b):
            if y:
                k = i + j
                v = rem.get(k, SymFunc.zero(deg)) - c.scale(y)
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
    return quo, rem


def lp_divexact_rat(a: dict, b: list, deg: int):
    """Exact quotient of a Laurent polynomial by a rational polynomial, or None."""
    if not a:
        return {}
    s = min(a)
    quo, rem = lp_divmod_rat(lp_shift(a, -s), b, deg)
    if rem:
        return None
    return lp_shift(quo, s)


@lru_cache(maxsize=None)
def _one_minus(k: int) -> tuple:
    p = [Fraction(0)] * (k + 1)
    p[0] += 1
    p[k] -= 1
    return tuple(p)


@lru_cache(maxsize=None)
def den_poly(den: tuple) -> tuple:
    """Dense coefficients of prod (1 - q^k)^mult."""
    p = [Fraction(1)]
    for k, mult in den:
        for _ in range(mult):
            p = poly_mul(p, list(_one_minus(k)))
    return tuple(p)


def _den_as_dict(den: tuple) -> dict:
    return {i: c for i, c in enumerate(den_poly(den)) if c}


def _den_merge(a: tuple, b: tuple, how: str) -> tuple:
    da, db = dict(a), dict(b)
    out = {}
    for k in set(da) | set(db):
        x, y = da.get(k, 0), db.get(k, 0)
        if how == "sum":
            v = x + y
        elif how == "max":
            v = max(x, y)
        else:
            v = x - y
            if v < 0:
                raise ValueError("denominator is not a sub-multiset")
        if v:
            out[k] = v
    return tuple(sorted(out.items()))


def _coerce_sym(c, deg: int) -> SymFunc:
    if isinstance(c, SymFunc):
        if c.deg != deg:
            raise TruncationMismatch(f"truncation degrees differ: {deg} vs {c.deg}")
        return c
    return SymFunc.const(Fraction(c), deg)


class QRat:
    """``num(q) / prod_k (1 - q^k)^mult``; immutable value type."""

    __slots__ = ("deg", "num", "den", "max_root")

    def __init__(self, num=None, den=(), deg: int = DEFAULT_DEGREE, max_root: int | None = None,
                 reduce: bool = True):
        self.deg = deg
        self.max_root = max(DEFAULT_MAX_ROOT_ORDER, deg) if max_root is None else max_root
        num = {int(e): _coerce_sym(c, deg) for e, c in (num or {}).items()}
        self.num = lp_clean(num)
        merged: dict = {}
        for k, mult in den:
            if k < 1 or mult < 0:
                raise ValueError(f"bad denominator factor {(k, mult)}")
            if mult:
                merged[k] = merged.get(k, 0) + mult
        self.den = tuple(sorted(merged.items()))
        for k, _ in self.den:
            if k > self.max_root:
                raise RootOrderError(f"factor (1 - q^{k}) exceeds maximum root order {self.max_root}")
        if not self.num:
            self.den = ()
        elif reduce:
            self.num, self.den = _reduce(self.num, self.den, deg)

    @classmethod
    def _raw(cls, num: dict, den: tuple, deg: int, max_root: int) -> QRat:
        obj = cls.__new__(cls)
        obj.deg = deg
        obj.max_root = max_root
        obj.num = num
        obj.den = den if num else ()
        return obj

    # constructors

    @classmethod
    def zero(cls, deg: int = DEFAULT_DEGREE) -> QRat:
        return cls({}, (), deg)

    @classmethod
    def const(cls, c, deg: int = DEFAULT_DEGREE) -> QRat:
        return cls({0: _coerce_sym(c, deg)}, (), deg)

    @classmethod
    def q_power(cls, e: int, coef=1, deg: int = DEFAULT_DEGREE) -> QRat:
        return cls({e: _coerce_sym(coef, deg)}, (), deg)

    @classmethod
    def laurent(cls, coeffs: dict, deg: int = DEFAULT_DEGREE) -> QRat:
        return cls(coeffs, (), deg)

    @classmethod
    def one_over(cls, k: int, mult: int = 1, coef=1, deg: int = DEFAULT_DEGREE) -> QRat:
        """``coef / (1 - q^k)^mult``."""
        return cls({0: _coerce_sym(coef, deg)}, ((k, mult),), deg)

    @classmethod
    def dilaton(cls, deg: int = DEFAULT_DEGREE) -> QRat:
        """The dilaton shift ``1 - q``."""
        return cls({0: 1, 1: -1}, (), deg)

    # inspection

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_laurent(self) -> bool:
        return not self.den

    def den_degree(self) -> int:
        return sum(k * m for k, m in self.den)

    def q_support(self) -> tuple:
        if not self.num:
            return (0, 0)
        return (min(self.num), max(self.num))

    def coefficients(self) -> list:
        return sorted(self.num.items())

    def eval_at_one(self) -> SymFunc:
        """Value at q = 1 of a Laurent polynomial."""
        if self.den:
            raise ValueError("evaluation at q = 1 needs a Laurent polynomial")
        return lp_eval_one(self.num, self.deg)

    def pole_order_at(self, order: int) -> int:
        """Structural pole order at a primitive root of unity of the given order."""
        return sum(m for k, m in self.den if k % order == 0)

    def min_lambda_degree(self):
        degs = [c.min_degree() for c in self.num.values()]
        return min(degs) if degs else None

    # arithmetic

    def _lift(self, other) -> QRat:
        if isinstance(other, QRat):
            if other.deg != self.deg:
                raise TruncationMismatch(f"truncation degrees differ: {self.deg} vs {other.deg}")
            return other
        if isinstance(other, (SymFunc, int, Rational)):
            return QRat.const(other, self.deg)
        raise TypeError(f"cannot combine QRat with {type(other).__name__}")

    def _mr(self, other: QRat) -> int:
        return max(self.max_root, other.max_root)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            num = lp_add(self.num, other.num)
            den = self.den
        else:
            den = _den_merge(self.den, other.den, "max")
            na = lp_mul_rat(self.num, _den_as_dict(_den_merge(den, self.den, "diff")))
            nb = lp_mul_rat(other.num, _den_as_dict(_den_merge(den, other.den, "diff")))
            num = lp_add(na, nb)
        if not num:
            return QRat.zero(self.deg)
        num, den = _reduce(num, den, self.deg)
        return QRat._raw(num, den, self.deg, self._mr(other))

    __radd__ = __add__

    def __neg__(self) -> QRat:
        return QRat._raw(lp_neg(self.num), self.den, self.deg, self.max_root)

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if isinstance(other, SymFunc):
            return self.scale(other)
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        num = lp_mul(self.num, other.num)
        if not num:
            return QRat.zero(self.deg)
        den = _den_merge(self.den, other.den, "sum")
        num, den = _reduce(num, den, self.deg)
        return QRat._raw(num, den, self.deg, self._mr(other))

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c) -> QRat:
        if isinstance(c, SymFunc) and c.deg != self.deg:
            raise TruncationMismatch(f"truncation degrees differ: {self.deg} vs {c.deg}")
        num = lp_scale(self.num, c)
        if isinstance(c, SymFunc) and num:
            num, den = _reduce(num, self.den, self.deg)
        else:
            den = self.den
        return QRat._raw(num, den, self.deg, self.max_root)

    def __pow__(self, n: int) -> QRat:
        if n < 0:
            return QRat.const(1, self.deg) / (self ** (-n))
        result = QRat.const(1, self.deg)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division of a QRat by zero")
            return self.scale(Fraction(1) / Fraction(other))
        other = self._lift(other)
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self._lift(other) * self.reciprocal()

    def reciprocal(self) -> QRat:
        """``1/self``; the augmentation of the numerator must factor into
        cyclotomic polynomials of order at most ``max_root`` (times a monomial)."""
        if not self.num:
            raise ZeroDivisionError("reciprocal of zero")
        deg = self.deg
        aug = {e: c.augment() for e, c in self.num.items() if c.augment()}
        if not aug:
            raise UnsupportedDenominator("denominator has zero augmentation (not invertible)")
        inv_aug = _invert_rational_laurent(aug, deg, self.max_root)
        nil = {e: c - SymFunc.const(c.augment(), deg) for e, c in self.num.items()}
        nil = QRat(lp_clean(nil), (), deg, self.max_root)
        ratio = nil * inv_aug
        total = QRat.const(1, deg)
        term = QRat.const(1, deg)
        for _ in range(deg):
            term = -(term * ratio)
            if not term:
                break
            total = total + term
        den_part = QRat(_den_as_dict(self.den), (), deg, self.max_root)
        return den_part * inv_aug * total

    def adams(self, r: int) -> QRat:
        """Ψ^r: Adams operation on coefficients together with q -> q^r."""
        if r < 1:
            raise ValueError("Adams operations are indexed by positive integers")
        num = lp_clean({r * e: c.adams(r) for e, c in self.num.items()})
        den = tuple((r * k, m) for k, m in self.den)
        for k, _ in den:
            if k > self.max_root:
                raise RootOrderError(f"factor (1 - q^{k}) exceeds maximum root order {self.max_root}")
        if not num:
            return QRat.zero(self.deg)
        num, den = _reduce(num, den, self.deg)
        return QRat._raw(num, den, self.deg, self.max_root)

    def invert_q(self) -> QRat:
        """``f(1/q)``, rewritten over the same kind of denominator."""
        # 1 - q^-k = -q^-k (1 - q^k)
        num = {-e: c for e, c in self.num.items()}
        shift = 0
        sign = 1
        for k, m in self.den:
            shift += k * m
            sign *= (-1) ** m
        num = lp_shift(num, shift)
        if sign < 0:
            num = lp_neg(num)
        return QRat(num, self.den, self.deg, self.max_root)

    def map_coefficients(self, fn) -> QRat:
        num = lp_clean({e: fn(c) for e, c in self.num.items()})
        return QRat(num, self.den, self.deg, self.max_root)

    def homogeneous(self, k: int) -> QRat:
        """Part of λ-degree exactly k (weighted degree of the coefficients)."""
        return self.map_coefficients(lambda c: c.homogeneous(k))

    def truncate(self, k: int) -> QRat:
        return self.map_coefficients(lambda c: c.truncate(k))

    def augment(self) -> QRat:
        return self.truncate(0)

    def exp(self) -> QRat:
        """Exponential of an element whose coefficients all lie in the augmentation ideal."""
        if any(c.augment() for c in self.num.values()):
            raise AugmentationError("exp needs coefficients with zero augmentation")
        result = QRat.const(1, self.deg)
        power = QRat.const(1, self.deg)
        for n in range(1, self.deg + 1):
            power = power * self
            if not power:
                break
            result = result + power.scale(Fraction(1, factorial(n)))
        return result

    def with_max_root(self, max_root: int) -> QRat:
        return QRat(self.num, self.den, self.deg, max_root, reduce=False)

    # comparison and display

    def __eq__(self, other) -> bool:
        if isinstance(other, (SymFunc, int, Rational)):
            other = QRat.const(other, self.deg)
        if not isinstance(other, QRat):
            return NotImplemented
        if self.deg != other.deg:
            return False
        if self.den == other.den:
            return self.num == other.num
        lhs = lp_mul_rat(self.num, _den_as_dict(other.den))
        rhs = lp_mul_rat(other.num, _den_as_dict(self.den))
        return lhs == rhs

    __hash__ = None

    def num_str(self) -> str:
        return laurent_str(self.num)

    def den_str(self) -> str:
        parts = []
        for k, m in self.den:
            f = "(1-q)" if k == 1 else f"(1-q^{k})"
            parts.append(f if m == 1 else f"{f}^{m}")
        return "*".join(parts)

    def __str__(self) -> str:
        n = self.num_str()
        if not self.den:
            return n
        return f"({n})/({self.den_str()})"

    def __repr__(self) -> str:
        return f"QRat[{self.deg}]({self})"


def laurent_str(num: dict) -> str:
    if not num:
        return "0"
    parts = []
    for e, c in sorted(num.items()):
        cs = str(c)
        if e == 0:
            parts.append(cs)
            continue
        qs = "q" if e == 1 else f"q^{e}" if e > 0 else f"q^({e})"
        if cs == "1":
            parts.append(qs)
        elif cs == "-1":
            parts.append("-" + qs)
        elif len(c.terms) == 1 and "+" not in cs and " - " not in cs:
            parts.append(f"{cs}*{qs}")
        else:
            parts.append(f"({cs})*{qs}")
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def _reduce(num: dict, den: tuple, deg: int) -> tuple:
    """Cancel (1 - q^k) factors, or replace them by (1 - q^d), d | k, when num allows."""
    if not num or not den:
        return num, den
    den_d = dict(den)
    changed = True
    while changed:
        changed = False
        for k in sorted(den_d, reverse=True):
            if den_d.get(k, 0) == 0:
                continue
            quo = lp_divexact_rat(num, list(_one_minus(k)), deg)
            if quo is not None:
                num = quo
                den_d[k] -= 1
                if not den_d[k]:
                    del den_d[k]
                changed = True
                break
            for d in range(k - 1, 0, -1):
                if k % d:
                    continue
                cof = [Fraction(0)] * (k - d + 1)
                for i in range(0, k, d):
                    cof[i] = Fraction(1)
                quo = lp_divexact_rat(num, cof, deg)
                if quo is not None:
                    num = quo
                    den_d[k] -= 1
                    if not den_d[k]:
                        del den_d[k]
                    den_d[d] = den_d.get(d, 0) + 1
                    changed = True
                    break
            if changed:
                break
    return num, tuple(sorted(den_d.items()))


def _invert_rational_laurent(aug: dict, deg: int, max_root: int) -> QRat:
    """1/A for a rational Laurent polynomial A = c q^s prod Phi_d^e_d, d <= max_root."""
    s = min(aug)
    poly = [Fraction(0)] * (max(aug) - s + 1)
    for e, c in aug.items():
        poly[e - s] = Fraction(c)
    exps: dict = {}
    for d in range(1, max_root + 1):
        phi = list(_phi(d))
        while len(poly) > 1:
            quo, rem = poly_divmod(poly, phi)
            if rem:
                break
            poly = quo
            exps[d] = exps.get(d, 0) + 1
    if len(poly) != 1:
        raise UnsupportedDenominator(
            "denominator has a pole away from the roots of unity of order <= %d" % max_root)
    c = poly[0]
    # 1/Phi_d = -prod_{e | d, e < d} Phi_e / (1 - q^d)
    num = [Fraction(1)]
    den = []
    sign = 1
    for d, e in exps.items():
        cof = [Fraction(1)]
        for dd in range(1, d):
            if d % dd == 0:
                cof = poly_mul(cof, list(_phi(dd)))
        for _ in range(e):
            num = poly_mul(num, cof)
        sign *= (-1) ** e
        den.append((d, e))
    numd = {i - s: SymFunc.const(sign * x / c, deg) for i, x in enumerate(num) if x}
    return QRat(numd, tuple(den), deg, max_root)


def q_arith(op: str, f: QRat, g) -> QRat:
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "scale":
        return f.scale(g)
    raise ValueError(f"unknown operation {op!r}")


def polarize(f: QRat) -> tuple:
    """Split ``f = f_plus + f_minus`` with f_plus a Laurent polynomial and
    f_minus proper, regular at q = 0 and vanishing at infinity."""
    deg = f.deg
    if not f.num:
        return QRat.zero(deg), QRat.zero(deg)
    if not f.den:
        return f, QRat.zero(deg)
    dp = list(den_poly(f.den))
    lo = min(f.num)
    plus: dict = {}
    if lo < 0:
        s = -lo
        poly = lp_shift(f.num, s)
        # principal part at q = 0: power series of poly/den up to q^(s-1)
        series = []
        for i in range(s):
            acc = poly.get(i, SymFunc.zero(deg))
            for j in range(1, min(i, len(dp) - 1) + 1):
                if dp[j] and series[i - j]:
                    acc = acc - series[i - j].scale(dp[j])
            series.append(acc)
        low = {i: c for i, c in enumerate(series) if c}
        rem = lp_add(poly, lp_neg(lp_mul_rat(low, {i: c for i, c in enumerate(dp) if c})))
        if rem and min(rem) < s:
            raise ArithmeticError("principal part at q = 0 was not stripped")
        rem = lp_shift(rem, -s)
        plus = lp_shift(low, -s)
    else:
        rem = dict(f.num)
    quo, r = lp_divmod_rat(rem, dp, deg)
    plus = lp_add(plus, quo)
    minus = QRat(r, f.den, deg, f.max_root)
    return QRat(plus, (), deg, f.max_root), minus
