"""Truncated λ-algebra of symmetric functions in the Newton power sums.

An element is a polynomial in ``N1, ..., ND`` with exact rational
coefficients, where ``deg N_k = k`` and every monomial of weighted degree
above the truncation degree ``D`` is discarded.  The Adams operation
``adams(r, .)`` is the ring endomorphism ``N_k -> N_{rk}``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Rational
from typing import Iterable, Mapping

from .errors import AugmentationError, TruncationMismatch

DEFAULT_DEGREE = 4

Monomial = tuple  # exponent vector (e_1, ..., e_D) of N_1 ... N_D


@lru_cache(maxsize=None)
def _weight(mono: Monomial) -> int:
    return sum((i + 1) * e for i, e in enumerate(mono))


@lru_cache(maxsize=None)
def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def _mono_adams(r: int, mono: Monomial):
    """Image of a monomial under N_k -> N_{rk}, or None when it leaves the truncation."""
    d = len(mono)
    out = [0] * d
    for i, e in enumerate(mono):
        if e:
            k = r * (i + 1)
            if k > d:
                return None
            out[k - 1] += e
    out = tuple(out)
    return out if _weight(out) <= d else None


def _coerce_scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"not an exact rational scalar: {c!r}")


class SymFunc:
    """Element of the truncated λ-algebra; immutable, canonical, hashable."""

    __slots__ = ("deg", "_terms", "_hash")

    def __init__(self, deg: int, terms: Mapping[Monomial, object] | None = None):
        if deg < 1:
            raise ValueError("truncation degree must be positive")
        self.deg = deg
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != deg:
                raise ValueError(f"monomial {mono} has wrong length for degree {deg}")
            if any(e < 0 for e in mono):
                raise ValueError("negative exponent in monomial")
            c = _coerce_scalar(c)
            if c and _weight(mono) <= deg:
                clean[mono] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, deg: int, terms: dict) -> SymFunc:
        # terms already canonical: no zeros, weights within range
        obj = cls.__new__(cls)
        obj.deg = deg
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, deg: int = DEFAULT_DEGREE) -> SymFunc:
        return cls._raw(deg, {})

    @classmethod
    def const(cls, c, deg: int = DEFAULT_DEGREE) -> SymFunc:
        c = _coerce_scalar(c)
        return cls._raw(deg, {(0,) * deg: c} if c else {})

    @classmethod
    def one(cls, deg: int = DEFAULT_DEGREE) -> SymFunc:
        return cls.const(1, deg)

    @classmethod
    def gen(cls, k: int, deg: int = DEFAULT_DEGREE) -> SymFunc:
        """The power sum ``N_k`` (zero when ``k > deg``)."""
        if k < 1:
            raise ValueError("generators are N1, N2, ...")
        if k > deg:
            return cls.zero(deg)
        mono = [0] * deg
        mono[k - 1] = 1
        return cls._raw(deg, {tuple(mono): Fraction(1)})

    @classmethod
    def from_powers(cls, powers: Mapping[int, int], coef=1, deg: int = DEFAULT_DEGREE) -> SymFunc:
        """``coef * prod N_k^e`` from a ``{k: e}`` table."""
        mono = [0] * deg
        for k, e in powers.items():
            if e == 0:
                continue
            if k > deg:
                return cls.zero(deg)
            mono[k - 1] = e
        return cls(deg, {tuple(mono): coef})

    # inspection

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def augment(self) -> Fraction:
        return self._terms.get((0,) * self.deg, Fraction(0))

    def min_degree(self):
        """Lowest weighted degree present, or None for zero."""
        if not self._terms:
            return None
        return min(_weight(m) for m in self._terms)

    def max_degree(self):
        if not self._terms:
            return None
        return max(_weight(m) for m in self._terms)

    def homogeneous(self, k: int) -> SymFunc:
        return SymFunc._raw(self.deg, {m: c for m, c in self._terms.items() if _weight(m) == k})

    def select(self, keep) -> SymFunc:
        """Keep the monomials whose weighted degree satisfies ``keep``."""
        return SymFunc._raw(self.deg, {m: c for m, c in self._terms.items() if keep(_weight(m))})

    def degrees(self) -> set:
        return {_weight(m) for m in self._terms}

    def truncate(self, k: int) -> SymFunc:
        """Drop every monomial of weighted degree above ``k``."""
        return SymFunc._raw(self.deg, {m: c for m, c in self._terms.items() if _weight(m) <= k})

    def with_degree(self, deg: int) -> SymFunc:
        """Re-embed into another truncation degree (dropping what no longer fits)."""
        out = {}
        for m, c in self._terms.items():
            if len(m) > deg and any(m[deg:]):
                continue
            mono = m[:deg] + (0,) * (deg - len(m))
            if _weight(mono) <= deg:
                out[mono] = c
        return SymFunc._raw(deg, out)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    # arithmetic

    def _check(self, other: SymFunc) -> None:
        if other.deg != self.deg:
            raise TruncationMismatch(f"truncation degrees differ: {self.deg} vs {other.deg}")

    def _lift(self, other) -> SymFunc:
        if isinstance(other, SymFunc):
            self._check(other)
            return other
        return SymFunc.const(_coerce_scalar(other), self.deg)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return SymFunc._raw(self.deg, out)

    __radd__ = __add__

    def __neg__(self) -> SymFunc:
        return SymFunc._raw(self.deg, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> SymFunc:
        c = _coerce_scalar(c)
        if not c:
            return SymFunc._raw(self.deg, {})
        return SymFunc._raw(self.deg, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        d = self.deg
        out: dict = {}
        b_items = list(other._terms.items())
        for ma, ca in self._terms.items():
            wa = _weight(ma)
            for mb, cb in b_items:
                if wa + _weight(mb) > d:
                    continue
                m = _mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return SymFunc._raw(d, {m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        c = _coerce_scalar(other)
        if not c:
            raise ZeroDivisionError("division of a symmetric function by zero")
        return self.scale(1 / c)

    def __pow__(self, n: int) -> SymFunc:
        if n < 0:
            raise ValueError("negative powers are not defined in general")
        result = SymFunc.one(self.deg)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def adams(self, r: int) -> SymFunc:
        if r < 1:
            raise ValueError("Adams operations are indexed by positive integers")
        if r == 1:
            return self
        out: dict = {}
        for m, c in self._terms.items():
            img = _mono_adams(r, m)
            if img is not None:
                out[img] = out.get(img, 0) + c
        return SymFunc._raw(self.deg, {m: c for m, c in out.items() if c})

    def exp(self) -> SymFunc:
        if self.augment() != 0:
            raise AugmentationError("exp needs an argument with zero augmentation")
        result = SymFunc.one(self.deg)
        power = SymFunc.one(self.deg)
        for n in range(1, self.deg + 1):
            power = power * self
            if not power:
                break
            result = result + power.scale(Fraction(1, factorial(n)))
        return result

    def log(self) -> SymFunc:
        if self.augment() != 1:
            raise AugmentationError("log needs an argument with augmentation 1")
        x = self - 1
        result = SymFunc.zero(self.deg)
        power = SymFunc.one(self.deg)
        for n in range(1, self.deg + 1):
            power = power * x
            if not power:
                break
            result = result + power.scale(Fraction((-1) ** (n + 1), n))
        return result

    def inverse(self) -> SymFunc:
        """Multiplicative inverse; exists iff the augmentation is nonzero."""
        a = self.augment()
        if not a:
            raise AugmentationError("element with zero augmentation is not invertible")
        n = self.scale(1 / a) - 1
        result = SymFunc.one(self.deg)
        power = SymFunc.one(self.deg)
        for k in range(1, self.deg + 1):
            power = power * (-n)
            if not power:
                break
            result = result + power
        return result.scale(1 / a)

    # comparison and display

    def __eq__(self, other) -> bool:
        if isinstance(other, SymFunc):
            return self.deg == other.deg and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == SymFunc.const(other, self.deg)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.deg, frozenset(self._terms.items())))
        return self._hash

    def sorted_terms(self) -> list:
        """Monomials in canonical order: by weighted degree, then exponent vector."""
        return sorted(self._terms.items(), key=lambda mc: (_weight(mc[0]), mc[0][::-1]))

    def __repr__(self) -> str:
        return f"SymFunc({self.deg}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(mono):
                if e == 1:
                    factors.append(f"N{i + 1}")
                elif e:
                    factors.append(f"N{i + 1}^{e}")
            body = "*".join(factors)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not body:
                text = str(a)
            elif a == 1:
                text = body
            elif a.denominator == 1:
                text = f"{a.numerator}*{body}"
            elif a.numerator == 1:
                text = f"{body}/{a.denominator}"
            else:
                text = f"{a.numerator}*{body}/{a.denominator}"
            parts.append((sign, text))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out


def sym_sum(items: Iterable[SymFunc], deg: int) -> SymFunc:
    out: dict = {}
    for a in items:
        if a.deg != deg:
            raise TruncationMismatch(f"truncation degrees differ: {deg} vs {a.deg}")
        for m, c in a._terms.items():
            out[m] = out.get(m, 0) + c
    return SymFunc._raw(deg, {m: c for m, c in out.items() if c})


def sym_arith(op: str, a: SymFunc, b) -> SymFunc:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown operation {op!r}")


def adams(r: int, a: SymFunc) -> SymFunc:
    return a.adams(r)


def augment(a: SymFunc) -> Fraction:
    return a.augment()


def exp_log(mode: str, a: SymFunc) -> SymFunc:
    if mode == "exp":
        return a.exp()
    if mode == "log":
        return a.log()
    raise ValueError(f"unknown mode {mode!r}")
