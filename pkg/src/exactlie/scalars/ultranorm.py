from __future__ import annotations

import functools
from fractions import Fraction


@functools.total_ordering
class UltraNorm:
    """Exact value ``p**exponent`` (rational exponent), or zero.

    Ultrametric norms over Q_p only ever take such values, so comparisons,
    products and maxima are done on exponents without any rounding.
    """

    __slots__ = ("p", "exponent")

    def __init__(self, p: int, exponent=None):
        object.__setattr__(self, "p", p)
        object.__setattr__(
            self, "exponent", None if exponent is None else Fraction(exponent)
        )

    def __setattr__(self, name, value):
        raise AttributeError("UltraNorm values are immutable")

    @classmethod
    def zero(cls, p: int) -> UltraNorm:
        return cls(p, None)

    @classmethod
    def one(cls, p: int) -> UltraNorm:
        return cls(p, 0)

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def _check(self, other: UltraNorm):
        if not isinstance(other, UltraNorm):
            raise TypeError(f"cannot compare UltraNorm with {type(other).__name__}")
        if other.p != self.p:
            raise ValueError(f"norms for different primes {self.p} and {other.p}")

    def __mul__(self, other):
        if isinstance(other, UltraNorm):
            self._check(other)
            if self.is_zero or other.is_zero:
                return UltraNorm.zero(self.p)
            return UltraNorm(self.p, self.exponent + other.exponent)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, UltraNorm):
            self._check(other)
            if other.is_zero:
                raise ZeroDivisionError("division by the zero norm")
            if self.is_zero:
                return self
            return UltraNorm(self.p, self.exponent - other.exponent)
        return NotImplemented

    def __pow__(self, k):
        k = Fraction(k)
        if self.is_zero:
            if k <= 0:
                raise ZeroDivisionError("nonpositive power of the zero norm")
            return self
        return UltraNorm(self.p, self.exponent * k)

    def __eq__(self, other):
        if not isinstance(other, UltraNorm):
            return NotImplemented
        return self.p == other.p and self.exponent == other.exponent

    def __lt__(self, other):
        self._check(other)
        if other.is_zero:
            return False
        if self.is_zero:
            return True
        return self.exponent < other.exponent

    def __hash__(self):
        return hash((self.p, self.exponent))

    def __float__(self):
        return 0.0 if self.is_zero else float(self.p) ** float(self.exponent)

    def exact_value(self) -> Fraction:
        """The value as a rational; only defined for integer exponents."""
        if self.is_zero:
            return Fraction(0)
        if self.exponent.denominator != 1:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.p) ** int(self.exponent)

    def __str__(self):
        if self.is_zero:
            return "0"
        return f"{self.p}^({self.exponent})"

    def __repr__(self):
        return f"UltraNorm({self})"
