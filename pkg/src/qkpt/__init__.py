"""Exact computations for genus-0 permutation-equivariant quantum K-theory of the point."""

from .adelic import AdelicReport, check_all, extract_tau, test_ii_at_root
from .cyclotomic import CycloNum, cyclo_arith, cyclo_poly
from .jfun import BigJSolution, reconstruct_bigJ, small_j, tau_of_nu
from .lambda_ring import SymFunc, adams, augment, exp_log, sym_arith
from .localseries import CycloSym, LocalSeries, adams_q, localize, residue_pairing, subst_mth_root
from .moduli_oracle import (
    CycleType,
    FixedPointDatum,
    TraceReport,
    cycle_type_trace,
    equivariant_bigJ_oracle,
    fake_correlator,
    lefschetz_trace,
    string_identity_check,
)
from .parser import parse_input
from .qseries import QRat, polarize, q_arith

__all__ = [
    "AdelicReport", "BigJSolution", "CycleType", "CycloNum", "CycloSym", "FixedPointDatum",
    "LocalSeries", "QRat", "SymFunc", "TraceReport", "adams", "adams_q", "augment", "check_all",
    "cyclo_arith", "cyclo_poly", "cycle_type_trace", "equivariant_bigJ_oracle", "exp_log",
    "extract_tau", "fake_correlator", "lefschetz_trace", "localize", "parse_input", "polarize",
    "q_arith", "reconstruct_bigJ", "residue_pairing", "small_j", "string_identity_check",
    "subst_mth_root", "sym_arith", "tau_of_nu", "test_ii_at_root",
]
