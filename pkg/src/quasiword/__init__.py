"""Quasiperiodic words: generators, codes, exact subword counts and growth rates."""

__version__ = "0.1.0"

from .errors import BudgetExceeded, InvalidWordError, InvariantViolation, NotACodeError, QuasiwordError
from .quasiperiod import QuasiperiodAnalysis, analyze, compute_P, compute_star_root, membership_Qq
from .spectral import GrowthReport, IntPolynomial, growth_report, lambda_q, pisot_constant
from .words import Alphabet, QChain, extract_q_chain, is_quasiperiodic, periods

__all__ = [
    "Alphabet",
    "BudgetExceeded",
    "GrowthReport",
    "IntPolynomial",
    "InvalidWordError",
    "InvariantViolation",
    "NotACodeError",
    "QChain",
    "QuasiperiodAnalysis",
    "QuasiwordError",
    "analyze",
    "compute_P",
    "compute_star_root",
    "extract_q_chain",
    "growth_report",
    "is_quasiperiodic",
    "lambda_q",
    "membership_Qq",
    "periods",
    "pisot_constant",
]
