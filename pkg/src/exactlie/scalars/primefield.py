from __future__ import annotations

from fractions import Fraction

from .primes import inv_mod


class Fp:
    """Residue class modulo a prime ``p``.

    The modulus is trusted here; use :func:`exactlie.scalars.prime_field`
    to get a checked descriptor.
    """

    __slots__ = ("p", "r")

    def __init__(self, r, p: int):
        if isinstance(r, Fraction):
            r = r.numerator * inv_mod(r.denominator, p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "r", int(r) % p)

    def __setattr__(self, name, value):
        raise AttributeError("Fp values are immutable")

    def _coerce(self, other) -> Fp | None:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError(f"cannot mix F_{self.p} and F_{other.p}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Fp(other, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.r + o.r, self.p)

    __radd__ = __add__

    def __neg__(self):
        return Fp(-self.r, self.p)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.r - o.r, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(o.r - self.r, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.r * o.r, self.p)

    __rmul__ = __mul__

    def inverse(self) -> Fp:
        if self.r == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return Fp(inv_mod(self.r, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Fp(pow(self.r, k, self.p), self.p)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        if o is None:
            return NotImplemented
        return self.r == o.r

    def __hash__(self):
        return hash((self.r, self.p))

    def __bool__(self):
        return self.r != 0

    def __int__(self):
        return self.r

    def __repr__(self):
        return f"Fp({self.r}, {self.p})"

    def __str__(self):
        return str(self.r)
