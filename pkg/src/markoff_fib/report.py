"""Result records for exact inequality checks."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Union

from .qsqrt5 import QSqrt5

Exact = Union[int, Fraction, QSqrt5]

_RELATIONS: dict[str, Callable[[int], bool]] = {
    "<": lambda s: s < 0,
    "<=": lambda s: s <= 0,
    ">": lambda s: s > 0,
    ">=": lambda s: s >= 0,
    "==": lambda s: s == 0,
}


def exact_str(v: Exact) -> str:
    if isinstance(v, QSqrt5):
        if v.is_rational():
            v = v.a
        else:
            return f"{_frac_str(v.a)} + ({_frac_str(v.b)})*sqrt5"
    return _frac_str(Fraction(v))


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _sign(v: Exact) -> int:
    if isinstance(v, QSqrt5):
        return v.sign()
    return (v > 0) - (v < 0)


@dataclass
class AuditCheck:
    """One inequality ``value <relation> bound`` checked at every point of a finite range.

    ``worst`` is the value closest to violating the claim (the max for
    ``<``/``<=``, the min for ``>``/``>=``) and ``worst_at`` the point where it
    occurs. Non-gating checks are recorded but do not affect any verdict.
    ``needed`` marks checks the classification argument depends on directly;
    ``tier`` is "constant" for a stated numeric bound and "sign" for the bare
    sign requirement derived from it.
    """

    name: str
    relation: str
    bound: Exact
    bound_text: str
    domain: str
    points: int = 0
    worst: Exact | None = None
    worst_at: object = None
    passed: bool = True
    gating: bool = True
    note: str = ""
    tier: str = "constant"
    needed: bool = True

    def observe(self, at, value: Exact) -> None:
        self.points += 1
        diff = value - self.bound
        if not _RELATIONS[self.relation](_sign(diff)):
            self.passed = False
        if self.worst is None or self._worse(value):
            self.worst, self.worst_at = value, at

    def _worse(self, value: Exact) -> bool:
        if self.relation in ("<", "<="):
            return _sign(value - self.worst) > 0
        if self.relation in (">", ">="):
            return _sign(value - self.worst) < 0
        return _sign(value - self.bound) != 0 and _sign(self.worst - self.bound) == 0

    def claim(self) -> str:
        return f"{self.relation} {self.bound_text}"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "claim": self.claim(),
            "bound_exact": exact_str(self.bound),
            "domain": self.domain,
            "points": self.points,
            "worst": None if self.worst is None else exact_str(self.worst),
            "worst_approx": None if self.worst is None else f"{float(self.worst):.6g}",
            "worst_at": _jsonable(self.worst_at),
            "passed": self.passed,
            "gating": self.gating,
            "tier": self.tier,
            "needed": self.needed,
            "note": self.note,
        }


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v


@dataclass
class AuditReport:
    checks: list[AuditCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.gating)

    @property
    def sound(self) -> bool:
        return all(c.passed for c in self.checks if c.needed)

    def failures(self) -> list[AuditCheck]:
        return [c for c in self.checks if c.gating and not c.passed]

    def extend(self, checks: Iterable[AuditCheck]) -> None:
        self.checks.extend(checks)

    def __getitem__(self, name: str) -> AuditCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def to_json(self) -> dict:
        return {"passed": self.passed, "sound": self.sound, "checks": [c.to_json() for c in self.checks]}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "claim", "domain", "points", "worst_approx", "worst_at",
                    "passed", "gating", "tier", "needed"])
        for c in self.checks:
            j = c.to_json()
            w.writerow([c.name, c.claim(), c.domain, c.points, j["worst_approx"], j["worst_at"],
                        c.passed, c.gating, c.tier, c.needed])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            if not c.gating:
                status += " (informational)"
            worst = "-" if c.worst is None else f"{float(c.worst):.6g}"
            lines.append(f"{status:<22} {c.name:<34} {c.claim():<22} {c.domain:<24} worst={worst} at {c.worst_at}")
        if self.passed:
            lines.append("all stated bounds hold")
        else:
            lines.append(f"{len(self.failures())} stated bound(s) FAILED")
        lines.append("every inequality the argument needs holds" if self.sound
                     else "an inequality the argument needs FAILED")
        return "\n".join(lines) + "\n"
