"""JSON encoding of the core value types.

Every rational is written as a ``"p/q"`` string so that round trips are exact.
Encoders return plain dicts/lists; ``dumps`` fixes key order and spacing so
identical values always produce identical text.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .adelic import AdelicReport
from .cyclotomic import CycloNum, totient
from .jfun import BigJSolution
from .lambda_ring import SymFunc
from .localseries import EXACT, CycloSym, LocalSeries
from .moduli_oracle import CycleType, TraceReport
from .qseries import QRat


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_frac(s) -> Fraction:
    if isinstance(s, int) and not isinstance(s, bool):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"expected a fraction string, got {s!r}")
    return Fraction(s)


def sym_to_json(s: SymFunc) -> dict:
    terms = []
    for mono, c in s.sorted_terms():
        terms.append({"mono": {str(k + 1): e for k, e in enumerate(mono) if e}, "coef": _frac(c)})
    return {"deg": s.deg, "terms": terms}


def sym_from_json(d: dict) -> SymFunc:
    deg = int(d["deg"])
    out = SymFunc.zero(deg)
    for t in d["terms"]:
        powers = {int(k): int(e) for k, e in t["mono"].items()}
        if any(k < 1 or e < 0 for k, e in powers.items()):
            raise ValueError(f"bad monomial {t['mono']}")
        out = out + SymFunc.from_powers(powers, _parse_frac(t["coef"]), deg)
    return out


def cyclo_to_json(c: CycloNum) -> dict:
    return {"m": c.m, "coeffs": [_frac(x) for x in c.coeffs]}


def cyclo_from_json(d: dict) -> CycloNum:
    m = int(d["m"])
    coeffs = [_parse_frac(x) for x in d["coeffs"]]
    if len(coeffs) != totient(m):
        raise ValueError(f"order {m} needs {totient(m)} coordinates")
    return CycloNum(m, coeffs)


def cyclosym_to_json(c: CycloSym) -> list:
    return [sym_to_json(p) for p in c.parts]


def cyclosym_from_json(m: int, d: list) -> CycloSym:
    return CycloSym(m, [sym_from_json(p) for p in d])


def qrat_to_json(f: QRat) -> dict:
    return {
        "deg": f.deg,
        "num": {str(e): sym_to_json(c) for e, c in sorted(f.num.items())},
        "den": [[k, m] for k, m in f.den],
    }


def qrat_from_json(d: dict, max_root: int | None = None) -> QRat:
    num = {int(e): sym_from_json(c) for e, c in d["num"].items()}
    if "deg" in d:
        deg = int(d["deg"])
    elif num:
        deg = next(iter(num.values())).deg
    else:
        raise ValueError("zero QRat needs an explicit 'deg'")
    den = [(int(k), int(m)) for k, m in d["den"]]
    return QRat(num, den, deg, max_root)


def series_to_json(s: LocalSeries) -> dict:
    return {
        "m": s.m,
        "j": s.j,
        "vmin": s.vmin,
        "deg": s.deg,
        "coeffs": [cyclosym_to_json(c) for c in s.coeffs],
        "prec": [None if p >= EXACT else p for p in s.prec],
    }


def series_from_json(d: dict) -> LocalSeries:
    m = int(d["m"])
    coeffs = [cyclosym_from_json(m, c) for c in d["coeffs"]]
    deg = int(d["deg"]) if "deg" in d else None
    prec = d.get("prec")
    if prec is not None:
        prec = tuple(EXACT if p is None else int(p) for p in prec)
    return LocalSeries(m, int(d["j"]), int(d["vmin"]), coeffs, deg=deg, prec=prec)


def solution_to_json(s: BigJSolution) -> dict:
    return {"t": qrat_to_json(s.t), "nu": sym_to_json(s.nu), "p": qrat_to_json(s.p),
            "f": qrat_to_json(s.f)}


def solution_from_json(d: dict) -> BigJSolution:
    return BigJSolution(qrat_from_json(d["t"]), sym_from_json(d["nu"]), qrat_from_json(d["p"]),
                        qrat_from_json(d["f"]))


def report_to_json(r: AdelicReport) -> dict:
    return {
        "test_i": {"pass": r.test_i, "tau": None if r.tau is None else sym_to_json(r.tau)},
        "test_ii": [{"m": m, "j": j, "pass": ok} for (m, j), ok in sorted(r.test_ii.items())],
        "test_iii": r.test_iii,
        "overall": r.overall,
        "failing": r.failing_tests(),
        "reasons": dict(sorted(r.reasons.items())),
    }


def report_from_json(d: dict) -> AdelicReport:
    tau = d["test_i"]["tau"]
    return AdelicReport(
        bool(d["test_i"]["pass"]),
        None if tau is None else sym_from_json(tau),
        {(int(e["m"]), int(e["j"])): bool(e["pass"]) for e in d["test_ii"]},
        bool(d["test_iii"]),
        dict(d.get("reasons", {})),
    )


def trace_to_json(r: TraceReport) -> dict:
    return {
        "n": r.n,
        "classes": [{"type": list(c.parts), "size": size, "contribution": qrat_to_json(q)}
                    for c, size, q in r.classes],
        "average": qrat_to_json(r.average),
    }


def trace_from_json(d: dict) -> TraceReport:
    classes = [(CycleType(e["type"]), int(e["size"]), qrat_from_json(e["contribution"]))
               for e in d["classes"]]
    return TraceReport(int(d["n"]), classes, qrat_from_json(d["average"]))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False)
