"""Seeded random generators shared by the property tests."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from qkpt import QRat, SymFunc


def rational(rng: random.Random, span: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def monomials(deg: int, lowest: int = 0) -> list:
    """Exponent tables {k: e} of every monomial with weighted degree in [lowest, deg]."""
    out = []
    for exps in product(*(range(deg // k + 1) for k in range(1, deg + 1))):
        w = sum((k + 1) * e for k, e in enumerate(exps))
        if lowest <= w <= deg:
            out.append({k + 1: e for k, e in enumerate(exps) if e})
    return out


def symfunc(rng: random.Random, deg: int, lowest: int = 0, upto: int | None = None,
            density: float = 0.5) -> SymFunc:
    out = SymFunc.zero(deg)
    for mono in monomials(upto if upto is not None else deg, lowest):
        if rng.random() < density:
            out = out + SymFunc.from_powers(mono, rational(rng), deg)
    return out


def positive(rng: random.Random, deg: int, upto: int | None = None) -> SymFunc:
    """Nonzero element of the augmentation ideal."""
    while True:
        s = symfunc(rng, deg, lowest=1, upto=upto)
        if s:
            return s


def laurent(rng: random.Random, deg: int, lo: int = -2, hi: int = 2, lowest: int = 0,
            upto: int | None = None) -> QRat:
    return QRat.laurent({e: symfunc(rng, deg, lowest, upto) for e in range(lo, hi + 1)}, deg)


def unit_laurent(rng: random.Random, deg: int, lo: int = -2, hi: int = 2) -> QRat:
    """Laurent polynomial p with augmentation of p(1) equal to 1."""
    while True:
        p = laurent(rng, deg, lo, hi, upto=2)
        a = p.eval_at_one().augment() if p else 0
        if a:
            return p.scale(1 / a)


def qrat(rng: random.Random, deg: int, max_k: int = 4) -> QRat:
    num = laurent(rng, deg, -2, 3)
    den = [(k, rng.randint(0, 2)) for k in range(1, max_k + 1) if rng.random() < 0.5]
    return QRat(num.num, den, deg)
