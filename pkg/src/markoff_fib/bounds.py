"""Quotient bounds k_{N,a} <= F(n)/F(n+a) <= K_{N,a} and their printed tables."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, Decimal, localcontext
from fractions import Fraction
from typing import Literal

from .fib import fib

Direction = Literal["down", "up"]


def quotient_bounds(N: int, a: int) -> tuple[Fraction, Fraction]:
    """Return ``(k, K)``: min and max of F(N)/F(N+a) and F(N+1)/F(N+1+a)."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    q0 = Fraction(fib(N), fib(N + a))
    q1 = Fraction(fib(N + 1), fib(N + 1 + a))
    return min(q0, q1), max(q0, q1)


def round_sigfig(x: Fraction, p: int, direction: Direction) -> str:
    """Round ``x`` to ``p`` significant figures toward -inf ("down") or +inf ("up").

    The result is a plain decimal string that keeps trailing zeros,
    e.g. ``round_sigfig(Fraction(1, 2), 4, "down") == "0.5000"``.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if direction not in ("down", "up"):
        raise ValueError(f"direction must be 'down' or 'up', got {direction!r}")
    x = Fraction(x)
    if x == 0:
        return format(Decimal(0).quantize(Decimal(1).scaleb(1 - p)), "f")
    rounding = ROUND_FLOOR if direction == "down" else ROUND_CEILING
    with localcontext() as ctx:
        ctx.prec = p
        ctx.rounding = rounding
        # Decimal division is correctly rounded under the context
        q = Decimal(x.numerator) / Decimal(x.denominator)
        q = q.quantize(Decimal(1).scaleb(q.adjusted() - p + 1))
    return format(q, "f")


@dataclass(frozen=True)
class BoundTable:
    n_range: tuple[int, int]
    a_range: tuple[int, int]
    sigfigs: int
    direction: Direction
    entries: tuple[tuple[str, ...], ...]

    @property
    def ns(self) -> range:
        return range(self.n_range[0], self.n_range[1] + 1)

    @property
    def as_(self) -> range:
        return range(self.a_range[0], self.a_range[1] + 1)

    def cell(self, N: int, a: int) -> str:
        return self.entries[N - self.n_range[0]][a - self.a_range[0]]

    def exact(self, N: int, a: int) -> Fraction:
        k, K = quotient_bounds(N, a)
        return k if self.direction == "down" else K

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["N", *self.as_])
        for N, row in zip(self.ns, self.entries):
            w.writerow([N, *row])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "direction": self.direction,
            "sigfigs": self.sigfigs,
            "n_range": list(self.n_range),
            "a_range": list(self.a_range),
            "rows": {
                str(N): {str(a): cell for a, cell in zip(self.as_, row)}
                for N, row in zip(self.ns, self.entries)
            },
            "exact": {
                str(N): {
                    str(a): f"{q.numerator}/{q.denominator}"
                    for a in self.as_
                    for q in [self.exact(N, a)]
                }
                for N in self.ns
            },
        }

    def to_text(self) -> str:
        width = max(len(c) for row in self.entries for c in row)
        head = "N\\a".ljust(4) + " ".join(str(a).rjust(width) for a in self.as_)
        lines = [head]
        for N, row in zip(self.ns, self.entries):
            lines.append(str(N).ljust(4) + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines) + "\n"


def bound_table(
    n_range: tuple[int, int],
    a_range: tuple[int, int],
    sigfigs: int = 4,
    direction: Direction = "down",
) -> BoundTable:
    """Directed-rounded table of k_{N,a} ("down") or K_{N,a} ("up")."""
    n0, n1 = n_range
    a0, a1 = a_range
    if n1 < n0 or a1 < a0:
        raise ValueError(f"empty range: N in {n_range}, a in {a_range}")
    if n0 < 1 or a0 < 1:
        raise ValueError("N and a must start at 1 or above")
    if sigfigs < 1:
        raise ValueError(f"sigfigs must be >= 1, got {sigfigs}")
    pick = 0 if direction == "down" else 1
    entries = tuple(
        tuple(
            round_sigfig(quotient_bounds(N, a)[pick], sigfigs, direction)
            for a in range(a0, a1 + 1)
        )
        for N in range(n0, n1 + 1)
    )
    return BoundTable((n0, n1), (a0, a1), sigfigs, direction, entries)
