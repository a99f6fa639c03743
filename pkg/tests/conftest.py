from decimal import Decimal, getcontext

import pytest

getcontext().prec = 250


def naive_fib(n_max: int) -> list[int]:
    out = [0, 1]
    for _ in range(n_max - 1):
        out.append(out[-1] + out[-2])
    return out[: n_max + 1]


@pytest.fixture(scope="session")
def F() -> list[int]:
    return naive_fib(700)


SQRT5 = Decimal(5).sqrt()
PHI = (1 + SQRT5) / 2


def dec(q) -> Decimal:
    """Decimal approximation of an int, Fraction or QSqrt5."""
    if hasattr(q, "b") and hasattr(q, "a") and not hasattr(q, "numerator"):
        return dec(q.a) + dec(q.b) * SQRT5
    return Decimal(q.numerator) / Decimal(q.denominator) if hasattr(q, "denominator") else Decimal(q)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
