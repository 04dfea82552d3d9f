from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Quaternion:
    """Quaternion ``c1 + ci*i + cj*j + ck*k`` with exact rational coordinates."""

    c1: Fraction = Fraction(0)
    ci: Fraction = Fraction(0)
    cj: Fraction = Fraction(0)
    ck: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("c1", "ci", "cj", "ck"):
            object.__setattr__(self, name, _q(getattr(self, name)))

    @classmethod
    def real(cls, x) -> Quaternion:
        return cls(x, 0, 0, 0)

    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c1, self.ci, self.cj, self.ck)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Quaternion):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Quaternion(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quaternion(*(a + b for a, b in zip(self.coords(), o.coords())))

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.c1, -self.ci, -self.cj, -self.ck)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quat_mul(self, o)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quat_mul(o, self)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quat_mul(self, quat_inv(o))

    def inverse(self) -> Quaternion:
        return quat_inv(self)

    def conjugate(self) -> Quaternion:
        return quat_conj(self)

    def is_real(self) -> bool:
        return self.ci == self.cj == self.ck == 0

    def __bool__(self):
        return any(self.coords())

    def __str__(self):
        out = str(self.c1)
        for c, unit in zip(self.coords()[1:], "ijk"):
            out += ("-" if c < 0 else "+") + f"{abs(c)}{unit}"
        return out


def quat_mul(x: Quaternion, y: Quaternion) -> Quaternion:
    a1, b1, c1, d1 = x.coords()
    a2, b2, c2, d2 = y.coords()
    return Quaternion(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def quat_conj(x: Quaternion) -> Quaternion:
    return Quaternion(x.c1, -x.ci, -x.cj, -x.ck)


def quat_norm_sq(x: Quaternion) -> Fraction:
    return x.c1**2 + x.ci**2 + x.cj**2 + x.ck**2


def quat_inv(x: Quaternion) -> Quaternion:
    n = quat_norm_sq(x)
    if n == 0:
        raise ZeroDivisionError("the zero quaternion is not invertible")
    c = quat_conj(x)
    return Quaternion(*(a / n for a in c.coords()))


@dataclass(frozen=True)
class Gaussian:
    """Exact complex rational ``re + im*i``."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _q(self.re))
        object.__setattr__(self, "im", _q(self.im))

    @staticmethod
    def _coerce(other):
        if isinstance(other, Gaussian):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Gaussian(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Gaussian(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Gaussian(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> Gaussian:
        return Gaussian(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        return self.re**2 + self.im**2

    def inverse(self) -> Gaussian:
        n = self.norm_sq()
        if n == 0:
            raise ZeroDivisionError("0 is not invertible")
        return Gaussian(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __bool__(self):
        return bool(self.re or self.im)

    def __str__(self):
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"
