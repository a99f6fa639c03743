"""Golden-ratio sandwich bounds L, U with L*phi^(2c)/5 <= m(a,b,c) <= U*phi^(2c)/5."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .markoff import FibTriple, fib_m
from .qsqrt5 import QSqrt5
from .report import AuditCheck, AuditReport

# 3/sqrt5 and 9/sqrt5
THREE_OVER_SQRT5 = QSqrt5(0, Fraction(3, 5))
NINE_OVER_SQRT5 = QSqrt5(0, Fraction(9, 5))

phi_pow = QSqrt5.phi_pow


@dataclass(frozen=True)
class KaramataParams:
    """Triples covered: A <= a <= b, c = a + b + t, c >= C."""

    A: int
    t: int
    C: int

    def __post_init__(self) -> None:
        if self.A < 2 or self.C < 2 or self.t < 1:
            raise ValueError(f"need A, C >= 2 and t >= 1, got {self}")

    def __str__(self) -> str:
        return f"({self.A},{self.t},{self.C})"


def _params(p) -> KaramataParams:
    return p if isinstance(p, KaramataParams) else KaramataParams(*p)


def _tail(A: int, t: int, C: int) -> QSqrt5:
    return phi_pow(-2 * t - 2 * A) + phi_pow(2 * A - 2 * C)


def karamata_L(p: KaramataParams | tuple[int, int, int]) -> QSqrt5:
    p = _params(p)
    A, t, C = p.A, p.t, p.C
    return (
        1
        - THREE_OVER_SQRT5 * phi_pow(-t)
        + (1 - THREE_OVER_SQRT5 * phi_pow(t)) * _tail(A, t, C)
        - (6 + THREE_OVER_SQRT5 * phi_pow(t) + NINE_OVER_SQRT5) * phi_pow(-2 * C)
    )


def karamata_U(p: KaramataParams | tuple[int, int, int]) -> QSqrt5:
    p = _params(p)
    A, t, C = p.A, p.t, p.C
    return (
        1
        - THREE_OVER_SQRT5 * phi_pow(-t)
        + (1 + THREE_OVER_SQRT5 * phi_pow(t)) * _tail(A, t, C)
        + 9 * phi_pow(-2 * C)
    )


def covered_triples(p: KaramataParams, c_max: int):
    """All index triples the bound applies to with c <= c_max, ordered by (c, a)."""
    for c in range(max(p.C, 2 * p.A + p.t), c_max + 1):
        for a in range(p.A, (c - p.t) // 2 + 1):
            yield FibTriple.strict(a, c - p.t - a, c)


def karamata_sandwich_check(p: KaramataParams | tuple[int, int, int], c_max: int) -> AuditReport:
    """Check L <= 5m/phi^(2c) <= U exactly on every covered triple with c <= c_max."""
    p = _params(p)
    if c_max < p.C:
        raise ValueError(f"c_max = {c_max} is below C = {p.C}")
    L, U = karamata_L(p), karamata_U(p)
    dom = f"A={p.A}, t={p.t}, {p.C}<=c<={c_max}"
    lo = AuditCheck(f"karamata{p}.lower", ">=", L, f"L{p} ~ {float(L):.6g}", dom)
    hi = AuditCheck(f"karamata{p}.upper", "<=", U, f"U{p} ~ {float(U):.6g}", dom)
    for ft in covered_triples(p, c_max):
        ratio = 5 * fib_m(ft) * phi_pow(-2 * ft.c)
        lo.observe(tuple(ft), ratio)
        hi.observe(tuple(ft), ratio)
    return AuditReport([lo, hi])
