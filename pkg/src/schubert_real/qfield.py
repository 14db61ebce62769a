"""Arithmetic in quadratic number fields Q(sqrt(D))."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from sympy import factorint

from .errors import ValidationError


@lru_cache(maxsize=4096)
def squarefree_part(n: int) -> tuple[int, int]:
    """Write ``n = k**2 * d`` with ``d`` squarefree; return ``(d, k)``.

    The sign goes into ``d`` and ``k > 0``.  ``n = 0`` gives ``(0, 0)``.
    """
    if n == 0:
        return 0, 0
    d, k = (-1 if n < 0 else 1), 1
    for prime, e in factorint(abs(n)).items():
        prime, e = int(prime), int(e)
        k *= prime ** (e // 2)
        if e % 2:
            d *= prime
    return d, k


def squarefree_rational(x: Fraction) -> tuple[int, Fraction]:
    """Write a rational ``x = k**2 * D`` with ``D`` a squarefree integer."""
    x = Fraction(x)
    # p/q = p*q / q^2
    d, k = squarefree_part(x.numerator * x.denominator)
    return d, Fraction(k, x.denominator)


def is_squarefree(d: int) -> bool:
    return d != 0 and squarefree_part(d)[0] == d


class QuadraticNumber:
    """``a + b*sqrt(D)`` with rational ``a``, ``b`` and squarefree integer ``D``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d: int = 1):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = int(d)
        if self.d == 1 and self.b:
            self.a += self.b
            self.b = Fraction(0)

    def _coerce(self, other) -> QuadraticNumber:
        if isinstance(other, QuadraticNumber):
            if other.d != self.d and other.b and self.b:
                raise ValidationError(f"mixing Q(sqrt({self.d})) and Q(sqrt({other.d}))")
            return other
        return QuadraticNumber(other, 0, self.d)

    def _field(self, other: QuadraticNumber) -> int:
        return self.d if self.b or not other.b else other.d

    def __add__(self, other):
        o = self._coerce(other)
        return QuadraticNumber(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        d = self._field(o)
        return QuadraticNumber(self.a * o.a + d * self.b * o.b,
                               self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> QuadraticNumber:
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("zero has no inverse")
        return QuadraticNumber(self.a / nrm, -self.b / nrm, self.d)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __eq__(self, other):
        if not isinstance(other, QuadraticNumber):
            try:
                other = QuadraticNumber(other, 0, self.d)
            except (TypeError, ValueError):
                return NotImplemented
        if self.b or other.b:
            return (self.d, self.a, self.b) == (other.d, other.a, other.b)
        return self.a == other.a

    def __hash__(self):
        return hash((self.a, self.b, self.d if self.b else None))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __float__(self):
        if self.d < 0 and self.b:
            raise TypeError("non-real quadratic number")
        return float(self.a) + float(self.b) * float(self.d) ** 0.5

    def __repr__(self):
        return f"QuadraticNumber({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.d})"
