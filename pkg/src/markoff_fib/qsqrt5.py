"""Exact arithmetic in the real quadratic field Q(sqrt 5)."""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union

Scalar = Union[int, Fraction]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class QSqrt5:
    """An element ``a + b*sqrt(5)`` with rational ``a`` and ``b``.

    Instances are immutable. Ordering is exact: the sign of ``a + b*sqrt(5)``
    is decided from the signs of ``a`` and ``b`` and a comparison of ``a**2``
    against ``5*b**2``, so no floating point is involved.
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a: Scalar = 0, b: Scalar = 0) -> None:
        self._a = Fraction(a)
        self._b = Fraction(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def _coerce(cls, other) -> QSqrt5 | None:
        if isinstance(other, QSqrt5):
            return other
        if isinstance(other, (int, Rational)):
            return cls(Fraction(other))
        return None

    @classmethod
    def phi_pow(cls, n: int) -> QSqrt5:
        """Closed form of ``phi**n`` through Fibonacci numbers.

        ``phi**n = F(n-1) + F(n)*phi`` for ``n >= 0`` and
        ``phi**-n = (-1)**n * (F(n+1) - F(n)*phi)``.
        """
        from .fib import fib

        if n >= 0:
            lo, hi = (fib(n - 1) if n else 1), fib(n)
        else:
            k = -n
            s = -1 if k % 2 else 1
            lo, hi = s * fib(k + 1), -s * fib(k)
        # lo + hi*phi = (lo + hi/2) + (hi/2)*sqrt5
        return cls(lo + Fraction(hi, 2), Fraction(hi, 2))

    def sign(self) -> int:
        sa, sb = _sign(self._a), _sign(self._b)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: the larger of a**2 and 5*b**2 wins
        d = self._a * self._a - 5 * self._b * self._b
        return sa * _sign(d)

    def conjugate(self) -> QSqrt5:
        return QSqrt5(self._a, -self._b)

    def norm(self) -> Fraction:
        return self._a * self._a - 5 * self._b * self._b

    def is_rational(self) -> bool:
        return self._b == 0

    def __repr__(self) -> str:
        return f"QSqrt5({self._a}, {self._b})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        sign = "-" if self._b < 0 else "+"
        return f"{self._a} {sign} {abs(self._b)}*sqrt5"

    def __float__(self) -> float:
        # display only; never used for decisions
        return float(self._a) + float(self._b) * 5 ** 0.5

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __neg__(self) -> QSqrt5:
        return QSqrt5(-self._a, -self._b)

    def __pos__(self) -> QSqrt5:
        return self

    def __abs__(self) -> QSqrt5:
        return -self if self.sign() < 0 else self

    def __add__(self, other) -> QSqrt5:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __sub__(self, other) -> QSqrt5:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self._a - o._a, self._b - o._b)

    def __rsub__(self, other) -> QSqrt5:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> QSqrt5:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self._a, self._b, o._a, o._b
        return QSqrt5(a * c + 5 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> QSqrt5:
        n = self.norm()
        if n == 0:
            # a**2 == 5 b**2 has no rational solution besides 0
            raise ZeroDivisionError("inverse of zero in Q(sqrt5)")
        return QSqrt5(self._a / n, -self._b / n)

    def __truediv__(self, other) -> QSqrt5:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> QSqrt5:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> QSqrt5:
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = QSqrt5(1)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


SQRT5 = QSqrt5(0, 1)
PHI = QSqrt5(Fraction(1, 2), Fraction(1, 2))
PHI_BAR = QSqrt5(Fraction(1, 2), Fraction(-1, 2))
