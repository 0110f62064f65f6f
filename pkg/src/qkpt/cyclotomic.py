"""Exact arithmetic in the cyclotomic fields Q(zeta_m).

Elements are coordinate vectors in the power basis ``1, z, ..., z^(phi(m)-1)``
with ``z`` a root of the m-th cyclotomic polynomial.  Polynomials over Q are
plain lists of Fractions, lowest degree first.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

from .errors import CycloDivisionByZero, OrderMismatch, RootOrderError

DEFAULT_MAX_ORDER = 6


# dense polynomial helpers over Q

def _trim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def poly_divmod(a: list, b: list) -> tuple:
    a = [Fraction(x) for x in _trim(a)]
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = Fraction(b[-1])
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return _trim(q), _trim(a[: len(b) - 1])


@lru_cache(maxsize=None)
def _phi(m: int) -> tuple:
    # q^m - 1 divided by every Phi_d, d | m, d < m
    num = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            num, rem = poly_divmod(num, list(_phi(d)))
            if rem:
                raise ArithmeticError(f"cyclotomic division left a remainder at m={m}, d={d}")
    return tuple(num)


def cyclo_poly(m: int, max_order: int = DEFAULT_MAX_ORDER) -> list:
    """The m-th cyclotomic polynomial, coefficients lowest degree first."""
    if not 1 <= m <= max_order:
        raise RootOrderError(f"root order {m} outside 1..{max_order}")
    return list(_phi(m))


def totient(m: int) -> int:
    return len(_phi(m)) - 1


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple:
    """Coordinates of z^i for 0 <= i < m (z^m = 1)."""
    phi = _phi(m)
    n = len(phi) - 1
    rows = []
    for i in range(m):
        x = [Fraction(0)] * i + [Fraction(1)]
        _, r = poly_divmod(x, list(phi))
        rows.append(tuple(r + [Fraction(0)] * (n - len(r))))
    return tuple(rows)


def _reduce(m: int, poly: list) -> tuple:
    """Reduce a polynomial in z modulo Phi_m to a coordinate tuple."""
    n = totient(m)
    out = [Fraction(0)] * n
    table = _power_table(m)
    for i, c in enumerate(poly):
        if c:
            row = table[i % m]
            for k in range(n):
                if row[k]:
                    out[k] += c * row[k]
    return tuple(out)


class CycloNum:
    """Element of Q(zeta_m); immutable."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs=()):
        if m < 1:
            raise ValueError("order must be positive")
        n = totient(m)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > n:
            coeffs = list(_reduce(m, coeffs))
        self.m = m
        self.coeffs = tuple(coeffs + [Fraction(0)] * (n - len(coeffs)))

    @classmethod
    def rational(cls, m: int, c) -> CycloNum:
        return cls(m, [Fraction(c)])

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> CycloNum:
        """``zeta_m^k`` for any integer k."""
        obj = cls.__new__(cls)
        obj.m = m
        obj.coeffs = _power_table(m)[k % m]
        return obj

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def _lift(self, other) -> CycloNum:
        if isinstance(other, CycloNum):
            if other.m != self.m:
                raise OrderMismatch(f"cyclotomic orders differ: {self.m} vs {other.m}")
            return other
        if isinstance(other, (int, Rational)):
            return CycloNum.rational(self.m, other)
        raise TypeError(f"cannot combine CycloNum with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return _make(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        return _make(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return _make(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            c = Fraction(other)
            return _make(self.m, tuple(a * c for a in self.coeffs))
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return _make(self.m, _reduce(self.m, poly_mul(list(self.coeffs), list(other.coeffs))))

    __rmul__ = __mul__

    def inv(self) -> CycloNum:
        if self.is_zero():
            raise CycloDivisionByZero("inverse of zero in a cyclotomic field")
        # extended Euclid: s*a + t*Phi = 1
        phi = list(_phi(self.m))
        r0, r1 = phi, _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            qt, rem = poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, poly_sub(s0, poly_mul(qt, s1))
        c = r1[0]
        return _make(self.m, _reduce(self.m, [x / c for x in s1]))

    def __truediv__(self, other):
        other = self._lift(other)
        return self * other.inv()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inv()

    def __pow__(self, n: int) -> CycloNum:
        if n < 0:
            return self.inv() ** (-n)
        result = CycloNum.rational(self.m, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloNum):
            return self.m == other.m and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.m, self.coeffs))

    def __repr__(self) -> str:
        return f"CycloNum({self.m}, {self})"

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            z = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not z:
                parts.append(str(c))
            elif c == 1:
                parts.append(z)
            elif c == -1:
                parts.append("-" + z)
            else:
                parts.append(f"{c}*{z}")
        return " + ".join(parts).replace("+ -", "- ") or "0"


def _make(m: int, coeffs: tuple) -> CycloNum:
    obj = CycloNum.__new__(CycloNum)
    obj.m = m
    obj.coeffs = coeffs
    return obj


def cyclo_arith(op: str, a: CycloNum, b=None) -> CycloNum:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "pow":
        return a ** int(b)
    raise ValueError(f"unknown operation {op!r}")


def root_order(m: int, j: int) -> int:
    """Multiplicative order of zeta_m^j."""
    return m // gcd(j % m, m) if m > 1 else 1


def primitive_roots(m: int) -> list:
    """Exponents j with zeta_m^j primitive, in increasing order."""
    if m == 1:
        return [0]
    return [j for j in range(1, m) if gcd(j, m) == 1]
