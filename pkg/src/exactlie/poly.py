"""Sparse multivariate polynomials and total-degree truncated power series.

Coefficients come from any :class:`~exactlie.scalars.Ring`; the
indeterminates commute with each other and with every coefficient, so a
noncommutative coefficient ring (quaternions, matrices) is allowed.
Terms are kept in a dict keyed by multi-index and iterated in graded
lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .scalars import Ring, UnsupportedOperation

MultiIndex = tuple[int, ...]


def degree(alpha: MultiIndex) -> int:
    return sum(alpha)


def add_index(alpha: MultiIndex, beta: MultiIndex) -> MultiIndex:
    return tuple(a + b for a, b in zip(alpha, beta))


def lower_index(alpha: MultiIndex, j: int) -> MultiIndex:
    """``r_j(alpha)``: decrement the j-th entry (0-based), floored at 0."""
    return alpha[:j] + (max(alpha[j] - 1, 0),) + alpha[j + 1 :]


def grlex_key(alpha: MultiIndex):
    return (sum(alpha), alpha)


class Polynomial:
    __slots__ = ("ring", "nvars", "_terms")

    def __init__(self, ring: Ring, nvars: int, terms: Mapping[MultiIndex, object] | None = None):
        if nvars < 1:
            raise ValueError("a polynomial needs at least one indeterminate")
        clean = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != nvars or any(a < 0 for a in alpha):
                raise ValueError(f"bad multi-index {alpha} for {nvars} variables")
            c = ring.coerce(c)
            if not ring.is_zero(c):
                clean[alpha] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    @classmethod
    def _raw(cls, ring, nvars, terms):
        obj = object.__new__(cls)
        object.__setattr__(obj, "ring", ring)
        object.__setattr__(obj, "nvars", nvars)
        object.__setattr__(obj, "_terms", terms)
        return obj

    @classmethod
    def zero(cls, ring: Ring, nvars: int) -> Polynomial:
        return cls._raw(ring, nvars, {})

    @classmethod
    def constant(cls, ring: Ring, nvars: int, c) -> Polynomial:
        return cls(ring, nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, ring: Ring, nvars: int, j: int) -> Polynomial:
        """The indeterminate ``t_j`` (1-based)."""
        if not 1 <= j <= nvars:
            raise IndexError(f"variable t{j} out of range 1..{nvars}")
        alpha = tuple(1 if m == j - 1 else 0 for m in range(nvars))
        return cls._raw(ring, nvars, {alpha: ring.one()})

    @classmethod
    def monomial(cls, ring: Ring, alpha: MultiIndex, c=None) -> Polynomial:
        return cls(ring, len(alpha), {tuple(alpha): ring.one() if c is None else c})

    def terms(self) -> list[tuple[MultiIndex, object]]:
        """Nonzero terms in ascending graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]))

    def coeff(self, alpha: MultiIndex):
        return self._terms.get(tuple(alpha), self.ring.zero())

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(a) for a in self._terms), default=-1)

    def min_degree(self) -> int | None:
        return min((sum(a) for a in self._terms), default=None)

    def constant_term(self):
        return self.coeff((0,) * self.nvars)

    def _check(self, other: Polynomial):
        if other.nvars != self.nvars or other.ring != self.ring:
            raise ValueError(
                f"polynomial mismatch: {self.nvars} vars over {self.ring} "
                f"vs {other.nvars} vars over {other.ring}"
            )

    def _lift(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (PowerSeries,)):
            return None
        try:
            return Polynomial.constant(self.ring, self.nvars, other)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for alpha, c in o._terms.items():
            if alpha in out:
                s = out[alpha] + c
                if self.ring.is_zero(s):
                    del out[alpha]
                else:
                    out[alpha] = s
            else:
                out[alpha] = c
        return Polynomial._raw(self.ring, self.nvars, out)

    def __radd__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + self

    def __neg__(self):
        return Polynomial._raw(self.ring, self.nvars, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return poly_mul(self, o)

    def __rmul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return poly_mul(o, self)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of polynomials are not defined")
        out = Polynomial.constant(self.ring, self.nvars, self.ring.one())
        for _ in range(k):
            out = poly_mul(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (
                self.nvars == other.nvars
                and self.ring == other.ring
                and self._terms == other._terms
            )
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self == o

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms)))

    def map_coeffs(self, fn: Callable) -> Polynomial:
        return Polynomial(self.ring, self.nvars, {a: fn(c) for a, c in self._terms.items()})

    def truncate(self, D: int) -> Polynomial:
        return Polynomial._raw(
            self.ring, self.nvars, {a: c for a, c in self._terms.items() if sum(a) <= D}
        )

    def __repr__(self):
        return f"Polynomial({self}; nvars={self.nvars}, ring={self.ring})"

    def __str__(self):
        return format_polynomial(self)


def _monomial_str(alpha: MultiIndex) -> str:
    parts = []
    for j, a in enumerate(alpha, start=1):
        if a == 1:
            parts.append(f"t{j}")
        elif a > 1:
            parts.append(f"t{j}^{a}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    """Canonical text: descending graded-lex, e.g. ``3/2*t1^2*t2 + t3``."""
    if f.is_zero():
        return "0"
    pieces = []
    for alpha, c in reversed(f.terms()):
        mono = _monomial_str(alpha)
        text = f.ring.fmt(c)
        negative = False
        if isinstance(c, (int, Fraction)):
            negative = c < 0
            text = str(abs(c))
        elif any(ch in text[1:] for ch in "+-") or " " in text:
            text = f"({text})"
        if mono:
            body = mono if text == "1" else f"{text}*{mono}"
        else:
            body = text
        pieces.append(("-" if negative else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def poly_mul(f: Polynomial, g: Polynomial, max_degree: int | None = None) -> Polynomial:
    """Product with ``t^a t^b = t^(a+b)``; coefficients keep left/right order."""
    f._check(g)
    ring = f.ring
    out: dict = {}
    for alpha, a in f._terms.items():
        da = sum(alpha)
        for beta, b in g._terms.items():
            if max_degree is not None and da + sum(beta) > max_degree:
                continue
            gamma = add_index(alpha, beta)
            c = a * b
            if gamma in out:
                out[gamma] = out[gamma] + c
            else:
                out[gamma] = c
    return Polynomial._raw(ring, f.nvars, {k: v for k, v in out.items() if not ring.is_zero(v)})


def partial(j: int, f: Polynomial) -> Polynomial:
    """Formal derivative in ``t_j`` (1-based)."""
    if not 1 <= j <= f.nvars:
        raise IndexError(f"partial index {j} out of range 1..{f.nvars}")
    i = j - 1
    out = {}
    for alpha, c in f._terms.items():
        if alpha[i]:
            d = alpha[i] * c
            if not f.ring.is_zero(d):
                out[lower_index(alpha, i)] = d
    return Polynomial._raw(f.ring, f.nvars, out)


def homogeneous_part(f: Polynomial, ell: int) -> Polynomial:
    return Polynomial._raw(
        f.ring, f.nvars, {a: c for a, c in f._terms.items() if sum(a) == ell}
    )


def homogeneous_parts(f: Polynomial) -> dict[int, Polynomial]:
    return {ell: homogeneous_part(f, ell) for ell in sorted({sum(a) for a in f._terms})}


@dataclass(frozen=True)
class PolynomialRing(Ring):
    base: Ring
    nvars: int

    @property
    def commutative(self) -> bool:
        return self.base.commutative

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    def zero(self):
        return Polynomial.zero(self.base, self.nvars)

    def one(self):
        return Polynomial.constant(self.base, self.nvars, self.base.one())

    def coerce(self, x):
        if isinstance(x, Polynomial):
            return x
        return Polynomial.constant(self.base, self.nvars, x)

    def from_rational(self, q):
        return self.coerce(self.base.from_rational(q))

    def is_zero(self, x) -> bool:
        return x.is_zero()

    def is_unit(self, x) -> bool:
        # units of a polynomial ring over a domain are the constant units
        return x.degree == 0 and self.base.is_unit(x.constant_term())

    def inverse(self, x):
        if not self.is_unit(x):
            raise ZeroDivisionError(f"{x} is not a unit in {self}")
        return self.coerce(self.base.inverse(x.constant_term()))

    def star(self, x):
        return x.map_coeffs(self.base.star)

    def __str__(self):
        names = ",".join(f"t{j}" for j in range(1, self.nvars + 1))
        return f"{self.base}[{names}]"


class PowerSeries:
    """Formal power series known through total degree ``D``."""

    __slots__ = ("poly", "D")

    def __init__(self, poly: Polynomial, D: int):
        if D < 0:
            raise ValueError("truncation order must be nonnegative")
        object.__setattr__(self, "poly", poly.truncate(D))
        object.__setattr__(self, "D", D)

    def __setattr__(self, name, value):
        raise AttributeError("power series are immutable")

    @classmethod
    def from_terms(cls, ring: Ring, nvars: int, D: int, terms: Mapping) -> PowerSeries:
        return cls(Polynomial(ring, nvars, terms), D)

    @classmethod
    def constant(cls, ring: Ring, nvars: int, D: int, c) -> PowerSeries:
        return cls(Polynomial.constant(ring, nvars, c), D)

    @classmethod
    def var(cls, ring: Ring, nvars: int, D: int, j: int) -> PowerSeries:
        return cls(Polynomial.var(ring, nvars, j), D)

    @property
    def ring(self) -> Ring:
        return self.poly.ring

    @property
    def nvars(self) -> int:
        return self.poly.nvars

    def coeff(self, alpha):
        if sum(alpha) > self.D:
            raise ValueError(f"degree {sum(alpha)} is beyond the truncation order {self.D}")
        return self.poly.coeff(alpha)

    def constant_term(self):
        return self.poly.constant_term()

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def _check(self, other: PowerSeries):
        if other.D != self.D:
            raise ValueError(f"truncation mismatch: D={self.D} vs D={other.D}")
        self.poly._check(other.poly)

    def _lift(self, other) -> PowerSeries | None:
        if isinstance(other, PowerSeries):
            self._check(other)
            return other
        if isinstance(other, Polynomial):
            return PowerSeries(other, self.D) if other.nvars == self.nvars else None
        try:
            return PowerSeries.constant(self.ring, self.nvars, self.D, other)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PowerSeries(self.poly + o.poly, self.D)

    def __radd__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + self

    def __neg__(self):
        return PowerSeries(-self.poly, self.D)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PowerSeries(self.poly - o.poly, self.D)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return series_mul(self, o)

    def __rmul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return series_mul(o, self)

    def __pow__(self, k: int):
        if k < 0:
            return series_inverse(self) ** (-k)
        out = PowerSeries.constant(self.ring, self.nvars, self.D, self.ring.one())
        for _ in range(k):
            out = series_mul(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.D == other.D and self.poly == other.poly
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self == o

    def __hash__(self):
        return hash((self.D, self.poly))

    def __repr__(self):
        return f"PowerSeries({self.poly} + O(deg>{self.D}))"

    def __str__(self):
        return f"{self.poly} + O({self.D + 1})"


def series_mul(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    f._check(g)
    return PowerSeries(poly_mul(f.poly, g.poly, max_degree=f.D), f.D)


def series_inverse(f: PowerSeries) -> PowerSeries:
    """Inverse through the geometric series of ``1 - c0^-1 f``.

    ``f = c0 (1 - q)`` with ``q`` of zero constant term, so
    ``f^-1 = (sum_k q^k) c0^-1`` where ``q^k`` vanishes beyond ``k = D``.
    """
    ring = f.ring
    c0 = f.constant_term()
    try:
        if not ring.is_unit(c0):
            raise ZeroDivisionError(f"constant term {ring.fmt(c0)} is not invertible")
    except UnsupportedOperation:
        raise ZeroDivisionError(f"{ring} cannot invert the constant term") from None
    c0_inv = ring.inverse(c0)
    one = PowerSeries.constant(ring, f.nvars, f.D, ring.one())
    q = one - PowerSeries.constant(ring, f.nvars, f.D, c0_inv) * f
    total = one
    power = one
    for _ in range(f.D):
        power = series_mul(power, q)
        if power.is_zero():
            break
        total = total + power
    return total * PowerSeries.constant(ring, f.nvars, f.D, c0_inv)


def series_star(f: PowerSeries, star: Callable | None = None) -> PowerSeries:
    """Apply an involution to every coefficient (ring's own by default)."""
    star = f.ring.star if star is None else star
    return PowerSeries(f.poly.map_coeffs(star), f.D)


@dataclass(frozen=True)
class SeriesRing(Ring):
    base: Ring
    nvars: int
    D: int

    @property
    def commutative(self) -> bool:
        return self.base.commutative

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    def zero(self):
        return PowerSeries(Polynomial.zero(self.base, self.nvars), self.D)

    def one(self):
        return PowerSeries.constant(self.base, self.nvars, self.D, self.base.one())

    def coerce(self, x):
        if isinstance(x, PowerSeries):
            return x
        if isinstance(x, Polynomial):
            return PowerSeries(x, self.D)
        return PowerSeries.constant(self.base, self.nvars, self.D, x)

    def from_rational(self, q):
        return self.coerce(self.base.from_rational(q))

    def is_zero(self, x) -> bool:
        return x.is_zero()

    def is_unit(self, x) -> bool:
        return self.base.is_unit(x.constant_term())

    def inverse(self, x):
        return series_inverse(x)

    def star(self, x):
        return series_star(x, self.base.star)

    def __str__(self):
        names = ",".join(f"t{j}" for j in range(1, self.nvars + 1))
        return f"{self.base}[[{names}]]_{self.D}"


def all_indices(nvars: int, max_degree: int) -> Iterable[MultiIndex]:
    """Every multi-index of total degree at most ``max_degree``, graded-lex."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for a in range(remaining + 1):
            rec(prefix + [a], remaining - a, slots - 1)

    rec([], max_degree, nvars)
    return sorted(out, key=grlex_key)
