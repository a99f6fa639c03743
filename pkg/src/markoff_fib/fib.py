"""Fibonacci numbers and the identities the classification leans on."""

from __future__ import annotations

from functools import lru_cache

from .qsqrt5 import SQRT5, QSqrt5


def _check_index(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"Fibonacci index must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"Fibonacci index must be >= 0, got {n}")


def _doubling(n: int) -> tuple[int, int]:
    # returns (F(n), F(n+1))
    if n == 0:
        return 0, 1
    f, g = _doubling(n >> 1)
    f2 = f * (2 * g - f)
    g2 = f * f + g * g
    if n & 1:
        return g2, f2 + g2
    return f2, g2


@lru_cache(maxsize=4096)
def fib(n: int) -> int:
    """Return F(n) with F(0) = 0, F(1) = 1, by fast doubling."""
    _check_index(n)
    return _doubling(n)[0]


def fib_list(n_max: int) -> list[int]:
    """F(0), ..., F(n_max) by plain iteration."""
    _check_index(n_max)
    out = [0, 1]
    while len(out) <= n_max:
        out.append(out[-1] + out[-2])
    return out[: n_max + 1]


def fib_index(v: int) -> int | None:
    """Index ``n`` with ``F(n) == v``, or ``None`` if ``v`` is not Fibonacci.

    The value 1 occurs twice (F(1) = F(2) = 1); it maps to 2, the smallest
    index allowed in a Fibonacci triple.
    """
    if v < 0:
        raise ValueError(f"value must be >= 0, got {v}")
    if v == 0:
        return 0
    if v == 1:
        return 2
    # invariant: f = F(n), g = F(n + 1)
    n, f, g = 2, 1, 2
    while g < v:
        n += 1
        f, g = g, f + g
    return n + 1 if g == v else None


def is_fibonacci(v: int) -> bool:
    return v >= 0 and fib_index(v) is not None


def vajda_sides(n: int, i: int, j: int) -> tuple[int, int]:
    """Both sides of F(n+i)F(n+j) - F(n)F(n+i+j) = (-1)^n F(i)F(j).

    The two sides are computed independently; the caller compares them.
    """
    for name, v in (("n", n), ("i", i), ("j", j)):
        if v < 1:
            raise ValueError(f"{name} must be >= 1, got {v}")
    left = fib(n + i) * fib(n + j) - fib(n) * fib(n + i + j)
    right = (-1) ** n * fib(i) * fib(j)
    return left, right


def binet_envelope(n: int) -> tuple[QSqrt5, QSqrt5]:
    """Exact bounds ``(phi**n - 1)/sqrt5 <= F(n) <= (phi**n + 1)/sqrt5``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    p = QSqrt5.phi_pow(n)
    return (p - 1) / SQRT5, (p + 1) / SQRT5
