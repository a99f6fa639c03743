"""Sign and minimality classification of Fibonacci index triples."""

from __future__ import annotations

from enum import Enum

from .markoff import FibTriple, fib_m


class PositivityClass(str, Enum):
    POSITIVE_MINIMAL = "PositiveMinimal"
    POSITIVE_NON_MINIMAL = "PositiveNonMinimal"
    ZERO = "Zero"
    NEGATIVE = "Negative"

    @property
    def positive(self) -> bool:
        return self in (PositivityClass.POSITIVE_MINIMAL, PositivityClass.POSITIVE_NON_MINIMAL)


class Trichotomy(str, Enum):
    LE = "LE"  # F(c) < 3F(a)F(b), i.e. c <= a+b outside (2,2,4)
    GT = "GT"
    EQ = "EQ"


def positivity_class(ft: FibTriple) -> PositivityClass:
    """Classify (a, b, c) by the sign of m(a, b, c) and minimality.

    m > 0 exactly when c >= a+b+1 (always minimal) or (a, b, c) = (2, b, b+2)
    with b even; of that family only (2, 2, 4) is minimal. The remaining
    triples are split into Zero and Negative by evaluating m.
    """
    if not isinstance(ft, FibTriple):
        ft = FibTriple(*ft)
    a, b, c = ft
    if c >= a + b + 1 or (a, b, c) == (2, 2, 4):
        return PositivityClass.POSITIVE_MINIMAL
    if a == 2 and c == b + 2 and b % 2 == 0:
        return PositivityClass.POSITIVE_NON_MINIMAL
    m = fib_m(ft)
    if m == 0:
        return PositivityClass.ZERO
    if m < 0:
        return PositivityClass.NEGATIVE
    raise ArithmeticError(f"m{ft} = {m} > 0 outside the positive families")


def trichotomy(a: int, b: int, c: int) -> Trichotomy:
    """Compare F(c) with 3F(a)F(b) from the indices alone."""
    for name, v in (("a", a), ("b", b), ("c", c)):
        if v < 2:
            raise ValueError(f"index {name} must be >= 2, got {v}")
    if (min(a, b), max(a, b), c) == (2, 2, 4):
        return Trichotomy.EQ
    if c >= a + b + 1:
        return Trichotomy.GT
    return Trichotomy.LE

