"""Ring descriptors.

Elements carry their own ``+ - *`` operators; a descriptor supplies what
the elements cannot: the identities, a zero test, units and inverses,
the characteristic, an optional involution and literal printing.
Polynomials, power series and matrices are generic over any descriptor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .padic import Padic, padic_of_rational
from .primefield import Fp
from .primes import check_prime
from .quaternion import Gaussian, Quaternion, quat_conj


class UnsupportedOperation(TypeError):
    """The ring lacks the structure an operation needs."""


class Ring:
    commutative: bool = True
    characteristic: int = 0
    is_field: bool = False

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def coerce(self, x):
        """Map an int or Fraction (or a native element) into the ring."""
        return x

    def from_int(self, k: int):
        return self.coerce(k)

    def from_rational(self, q: Fraction):
        if self.characteristic != 0:
            raise UnsupportedOperation(f"{self} has characteristic {self.characteristic}")
        return self.coerce(Fraction(q))

    def is_zero(self, x) -> bool:
        return x == self.zero()

    def is_unit(self, x) -> bool:
        raise UnsupportedOperation(f"{self} has no invertibility test")

    def inverse(self, x):
        raise UnsupportedOperation(f"{self} has no inverse")

    def exact_div(self, a, b):
        """``a / b`` when ``b`` divides ``a``; used by fraction-free elimination."""
        return a * self.inverse(b)

    def star(self, x):
        """Default involution: the identity (commutative rings only)."""
        if not self.commutative:
            raise UnsupportedOperation(f"{self} has no default involution")
        return x

    def fmt(self, x) -> str:
        return str(x)


@dataclass(frozen=True)
class FieldDescriptor(Ring):
    """One of the scalar fields: ``Q``, ``Fp`` (prime field) or ``Qp`` (p-adic)."""

    tag: str
    p: int | None = None
    N: int | None = None

    is_field = True

    def __post_init__(self):
        if self.tag == "Q":
            if self.p is not None or self.N is not None:
                raise ValueError("the rationals take no prime or precision")
        elif self.tag == "Fp":
            check_prime(self.p)
            if self.N is not None:
                raise ValueError("a prime field takes no precision")
        elif self.tag == "Qp":
            check_prime(self.p)
            if not isinstance(self.N, int) or self.N < 1:
                raise ValueError("p-adic precision must be a positive integer")
        else:
            raise ValueError(f"unknown field tag {self.tag!r}")

    @property
    def characteristic(self) -> int:
        return self.p if self.tag == "Fp" else 0

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def coerce(self, x):
        if self.tag == "Q":
            if isinstance(x, Fraction):
                return x
            return Fraction(x)
        if self.tag == "Fp":
            if isinstance(x, Fp):
                return x
            return Fp(x, self.p)
        if isinstance(x, Padic):
            return x
        return padic_of_rational(x, self.p, self.N)

    def is_zero(self, x) -> bool:
        if isinstance(x, Padic):
            return x.is_zero
        return x == 0

    def is_unit(self, x) -> bool:
        return not self.is_zero(x)

    def inverse(self, x):
        if self.is_zero(x):
            raise ZeroDivisionError(f"0 is not invertible in {self}")
        if self.tag == "Q":
            return 1 / x
        return x.inverse()

    def to_json(self) -> dict:
        out: dict = {"tag": self.tag}
        if self.p is not None:
            out["p"] = self.p
        if self.N is not None:
            out["N"] = self.N
        return out

    @classmethod
    def from_json(cls, data: dict) -> FieldDescriptor:
        return cls(data["tag"], data.get("p"), data.get("N"))

    def fmt(self, x) -> str:
        return str(self.coerce(x))

    def __str__(self):
        if self.tag == "Q":
            return "Q"
        if self.tag == "Fp":
            return f"F_{self.p}"
        return f"Q_{self.p}(N={self.N})"


def rationals() -> FieldDescriptor:
    return FieldDescriptor("Q")


def prime_field(p: int) -> FieldDescriptor:
    return FieldDescriptor("Fp", p)


def padic_field(p: int, N: int) -> FieldDescriptor:
    return FieldDescriptor("Qp", p, N)


def field_characteristic(f: FieldDescriptor) -> int:
    return f.characteristic


class IntegerRing(Ring):
    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return x.numerator
        return int(x)

    def from_rational(self, q):
        raise UnsupportedOperation("Z does not contain 1/n")

    def is_unit(self, x) -> bool:
        return x in (1, -1)

    def inverse(self, x):
        if not self.is_unit(x):
            raise ZeroDivisionError(f"{x} is not a unit in Z")
        return x

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        return q

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("Z")

    def __str__(self):
        return "Z"


class QuaternionRing(Ring):
    """Rational quaternions; noncommutative, with conjugation as involution."""

    commutative = False
    is_field = True

    def zero(self):
        return Quaternion()

    def one(self):
        return Quaternion(1)

    def coerce(self, x):
        if isinstance(x, Quaternion):
            return x
        return Quaternion(x)

    def is_zero(self, x) -> bool:
        return not x

    def is_unit(self, x) -> bool:
        return bool(x)

    def inverse(self, x):
        return x.inverse()

    def star(self, x):
        return quat_conj(x)

    def __eq__(self, other):
        return isinstance(other, QuaternionRing)

    def __hash__(self):
        return hash("H")

    def __str__(self):
        return "H"


class GaussianRing(Ring):
    """Exact complex rationals Q(i) with complex conjugation."""

    is_field = True

    def zero(self):
        return Gaussian()

    def one(self):
        return Gaussian(1)

    def coerce(self, x):
        if isinstance(x, Gaussian):
            return x
        return Gaussian(x)

    def is_zero(self, x) -> bool:
        return not x

    def is_unit(self, x) -> bool:
        return bool(x)

    def inverse(self, x):
        return x.inverse()

    def star(self, x):
        return x.conjugate()

    def __eq__(self, other):
        return isinstance(other, GaussianRing)

    def __hash__(self):
        return hash("Q(i)")

    def __str__(self):
        return "Q(i)"
