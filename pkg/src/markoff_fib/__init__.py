"""Markoff triples built from Fibonacci numbers: evaluation, trees, enumeration, audits."""

from .bounds import BoundTable, bound_table, quotient_bounds, round_sigfig
from .classify import PositivityClass, Trichotomy, positivity_class, trichotomy
from .enumeration import EnumerationReport, enumerate_fib_triples, solve_for_m
from .fib import fib, fib_index, is_fibonacci
from .karamata import KaramataParams, karamata_L, karamata_sandwich_check, karamata_U
from .markoff import (
    FibTriple,
    MarkoffTree,
    NotAnMTriple,
    Triple,
    fib_m,
    generate_tree,
    is_minimal,
    m_of,
    vieta_children,
    vieta_parent,
)
from .qsqrt5 import QSqrt5
from .audit import audit_proof_bounds
from .report import AuditCheck, AuditReport

__all__ = [
    "AuditCheck", "AuditReport", "BoundTable", "EnumerationReport", "FibTriple",
    "KaramataParams", "MarkoffTree", "NotAnMTriple", "PositivityClass", "QSqrt5",
    "Trichotomy", "Triple", "audit_proof_bounds", "bound_table", "enumerate_fib_triples",
    "fib", "fib_index", "fib_m", "generate_tree", "is_fibonacci", "is_minimal",
    "karamata_L", "karamata_U", "karamata_sandwich_check", "m_of", "positivity_class",
    "quotient_bounds", "round_sigfig", "solve_for_m", "trichotomy", "vieta_children",
    "vieta_parent",
]
