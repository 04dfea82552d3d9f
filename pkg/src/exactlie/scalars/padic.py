"""p-adic numbers at fixed relative precision.

A nonzero value is stored as ``p**v * u`` with ``u`` a unit modulo
``p**N``.  Adding values of different valuations keeps the smaller
valuation and drops the digits of the other operand that fall below
``p**(v + N)``; a sum whose mantissa vanishes becomes *zero at precision*.
"""

from __future__ import annotations

from fractions import Fraction

from .primes import inv_mod, valuation
from .ultranorm import UltraNorm


class Padic:
    __slots__ = ("p", "N", "v", "u", "exact")

    def __init__(self, p: int, N: int, v: int | None, u: int, exact: bool = True):
        if N < 1:
            raise ValueError("precision must be a positive integer")
        if v is None:
            u = 0
        else:
            u %= p**N
            if u == 0 or u % p == 0:
                raise ValueError(f"mantissa {u} is not a unit modulo {p}^{N}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "u", u)
        # only meaningful for zero: False marks a cancellation result
        object.__setattr__(self, "exact", exact if v is None else True)

    def __setattr__(self, name, value):
        raise AttributeError("Padic values are immutable")

    @classmethod
    def zero(cls, p: int, N: int, exact: bool = True) -> Padic:
        return cls(p, N, None, 0, exact)

    @classmethod
    def one(cls, p: int, N: int) -> Padic:
        return cls(p, N, 0, 1)

    @property
    def is_zero(self) -> bool:
        return self.v is None

    @property
    def modulus(self) -> int:
        return self.p**self.N

    def _coerce(self, other) -> Padic | None:
        if isinstance(other, Padic):
            if other.p != self.p:
                raise ValueError(f"cannot mix Q_{self.p} and Q_{other.p}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return padic_of_rational(other, self.p, self.N)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return padic_add(self, o)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        return Padic(self.p, self.N, self.v, -self.u)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return padic_add(self, -o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return padic_add(o, -self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return padic_mul(self, o)

    __rmul__ = __mul__

    def inverse(self) -> Padic:
        return padic_inv(self)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return padic_mul(self, padic_inv(o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return padic_mul(o, padic_inv(self))

    def __pow__(self, k: int):
        if k < 0:
            return padic_inv(self) ** (-k)
        result = Padic.one(self.p, self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return self.is_zero and o.is_zero
        n = min(self.N, o.N)
        return self.v == o.v and (self.u - o.u) % self.p**n == 0

    def __hash__(self):
        # equality is taken at the smaller precision, so the mantissa is left out
        return hash((self.p, self.v))

    def __bool__(self):
        return not self.is_zero

    def to_rational(self) -> Fraction:
        """The canonical rational representative ``u * p**v``."""
        if self.is_zero:
            return Fraction(0)
        return Fraction(self.u) * Fraction(self.p) ** self.v

    def abs(self) -> UltraNorm:
        if self.is_zero:
            return UltraNorm.zero(self.p)
        return UltraNorm(self.p, -self.v)

    def with_precision(self, N: int) -> Padic:
        if N > self.N:
            raise ValueError("cannot raise precision of a p-adic value")
        if self.is_zero:
            return Padic.zero(self.p, N, self.exact)
        return Padic(self.p, N, self.v, self.u)

    def __repr__(self):
        if self.is_zero:
            tag = "" if self.exact else ", at-precision"
            return f"Padic(0; p={self.p}, N={self.N}{tag})"
        return f"Padic(p={self.p}, N={self.N}, v={self.v}, u={self.u})"

    def __str__(self):
        return f"padic({self.to_rational()}; {self.p}, {self.N})"


def padic_of_rational(x, p: int, N: int) -> Padic:
    x = Fraction(x)
    if x == 0:
        return Padic.zero(p, N)
    a, b = x.numerator, x.denominator
    va, vb = valuation(a, p), valuation(b, p)
    a //= p**va
    b //= p**vb
    m = p**N
    return Padic(p, N, va - vb, a * inv_mod(b, m))


def padic_abs(x, p: int) -> UltraNorm:
    """|x|_p for a rational ``x``."""
    x = Fraction(x)
    if x == 0:
        return UltraNorm.zero(p)
    return UltraNorm(p, valuation(x.denominator, p) - valuation(x.numerator, p))


def _same_field(a: Padic, b: Padic) -> int:
    if a.p != b.p:
        raise ValueError(f"cannot mix Q_{a.p} and Q_{b.p}")
    return min(a.N, b.N)


def padic_add(a: Padic, b: Padic) -> Padic:
    N = _same_field(a, b)
    if a.is_zero:
        return b.with_precision(N)
    if b.is_zero:
        return a.with_precision(N)
    p = a.p
    m = min(a.v, b.v)
    mod = p**N
    s = (a.u * p ** (a.v - m) + b.u * p ** (b.v - m)) % mod
    if s == 0:
        return Padic.zero(p, N, exact=False)
    k = valuation(s, p)
    return Padic(p, N, m + k, s // p**k)


def padic_mul(a: Padic, b: Padic) -> Padic:
    N = _same_field(a, b)
    if a.is_zero or b.is_zero:
        return Padic.zero(a.p, N, exact=a.exact and b.exact)
    return Padic(a.p, N, a.v + b.v, a.u * b.u)


def padic_inv(a: Padic) -> Padic:
    if a.is_zero:
        kind = "exact zero" if a.exact else "zero at precision"
        raise ZeroDivisionError(f"{kind} is not invertible in Q_{a.p}")
    return Padic(a.p, a.N, -a.v, inv_mod(a.u, a.modulus))
