"""Exponentials: formal power series, float complex matrices, p-adic values.

Also holds the checker for ``det(exp M) == exp(tr M)`` in all three
settings and the factorial valuation bound behind p-adic convergence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from .matrices import Matrix, MatrixRing, det, mat_mul, trace
from .poly import PowerSeries, SeriesRing, series_mul
from .scalars import FieldDescriptor, Padic, UnsupportedOperation, padic_of_rational


class DomainError(ValueError):
    """Argument outside the region where the exponential series converges."""


def vp_factorial(n: int, p: int) -> int:
    """Exponent of ``p`` in ``n!`` (Legendre's sum of ``floor(n / p**j)``)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total, q = 0, p
    while q <= n:
        total += n // q
        q *= p
    return total


# -- formal power series ---------------------------------------------------


def exp_series(f: PowerSeries) -> PowerSeries:
    """``sum_{m<=D} f^m / m!`` for ``f`` with zero constant term."""
    ring = f.ring
    if ring.characteristic != 0:
        raise UnsupportedOperation(f"exp needs characteristic 0, {ring} has {ring.characteristic}")
    if not ring.is_zero(f.constant_term()):
        raise DomainError("exp_series needs a zero constant term")
    one = PowerSeries.constant(ring, f.nvars, f.D, ring.one())
    total = one
    power = one
    for m in range(1, f.D + 1):
        power = series_mul(power, f)
        if power.is_zero():
            break
        total = total + power * ring.from_rational(Fraction(1, math.factorial(m)))
    return total


def exp_series_matrix(m: Matrix) -> Matrix:
    """Exponential of a matrix of power series with zero constant terms.

    ``m^k`` has no terms below degree ``k``, so the sum stops at ``k = D``.
    """
    ring = m.ring
    if not isinstance(ring, SeriesRing):
        raise TypeError("exp_series_matrix needs a matrix over a SeriesRing")
    if ring.characteristic != 0:
        raise UnsupportedOperation("exp needs characteristic 0")
    for row in m.rows:
        for x in row:
            if not ring.base.is_zero(x.constant_term()):
                raise DomainError("matrix entries must have zero constant term")
    total = Matrix.identity(ring, m.n)
    power = total
    for k in range(1, ring.D + 1):
        power = mat_mul(power, m)
        if power.is_zero():
            break
        c = ring.from_rational(Fraction(1, math.factorial(k)))
        total = total + power * c
    return total


# -- float complex matrices ------------------------------------------------


def opnorm_inf(a: np.ndarray) -> float:
    """Operator norm induced by the max norm: largest absolute row sum."""
    return float(np.abs(a).sum(axis=1).max()) if a.size else 0.0


EXP_TAIL_TOL = 1e-16
EXP_MAX_TERMS = 400


def exp_complex_matrix(a, return_terms: bool = False):
    """Plain Taylor summation in ascending order with a certified tail.

    Stops after term ``m`` once the remainder bound
    ``r^(m+1)/(m+1)! * 1/(1 - r/(m+2))`` (``r`` the operator norm) drops
    below ``1e-16 * exp(r)``.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("exp_complex_matrix needs a square matrix")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    n = a.shape[0]
    r = opnorm_inf(a)
    if r > 700:
        raise OverflowError(f"operator norm {r} overflows exp")
    scale = math.exp(r)
    total = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    m = 0
    nxt = r  # r^(m+1) / (m+1)!, the bound on the first omitted term
    while r > 0:
        m += 1
        if m > EXP_MAX_TERMS:
            raise OverflowError("exponential series did not converge")
        term = term @ a / m
        total = total + term
        nxt = nxt * r / (m + 1)
        ratio = r / (m + 2)
        if ratio < 1 and nxt / (1 - ratio) < EXP_TAIL_TOL * scale:
            break
    if not np.all(np.isfinite(total)):
        raise OverflowError("matrix exponential overflowed")
    return (total, m) if return_terms else total


# -- p-adic ----------------------------------------------------------------


def padic_exp_min_valuation(p: int) -> int:
    """Smallest valuation with ``|a|_p < p^(-1/(p-1))``: 1 for odd p, 2 for p = 2."""
    return 2 if p == 2 else 1


def _terms_needed(v: int, p: int, N: int) -> int:
    """First ``m`` after which every term ``a^k/k!`` has valuation >= N.

    Uses ``v_p(k!) <= (k-1)/(p-1)``, so the term valuation is at least
    ``k*v - (k-1)/(p-1)``, which increases in ``k`` inside the domain.
    """
    m = 1
    while Fraction(m * v) - Fraction(m - 1, p - 1) < N:
        m += 1
    return m


def exp_padic(a: Padic) -> Padic:
    p, N = a.p, a.N
    if a.is_zero:
        return Padic.one(p, N)
    if a.v < padic_exp_min_valuation(p):
        raise DomainError(f"|a|_{p} = {a.abs()} is outside the exponential's domain")
    total = Padic.one(p, N)
    power = Padic.one(p, N)
    for m in range(1, _terms_needed(a.v, p, N) + 1):
        power = power * a
        total = total + power * padic_of_rational(Fraction(1, math.factorial(m)), p, N)
    return total


def _padic_matrix_params(t: Matrix) -> tuple[int, int, int | None]:
    ring = t.ring
    if not (isinstance(ring, FieldDescriptor) and ring.tag == "Qp"):
        raise TypeError("expected a matrix over a p-adic field")
    vals = [x.v for row in t.rows for x in row if not x.is_zero]
    return ring.p, ring.N, min(vals) if vals else None


def exp_padic_matrix(t: Matrix) -> Matrix:
    """Entrywise-converged exponential; the domain test is on the max-entry norm."""
    p, N, vmin = _padic_matrix_params(t)
    ident = Matrix.identity(t.ring, t.n)
    if vmin is None:
        return ident
    if vmin < padic_exp_min_valuation(p):
        raise DomainError(f"operator norm {p}^({-vmin}) is outside the exponential's domain")
    total = ident
    power = ident
    for m in range(1, _terms_needed(vmin, p, N) + 1):
        power = mat_mul(power, t)
        total = total + power * padic_of_rational(Fraction(1, math.factorial(m)), p, N)
    return total


# -- det(exp) vs exp(tr) ---------------------------------------------------


@dataclass
class ExpReport:
    mode: str
    left: Any
    right: Any
    equal: bool | None = None
    difference: float | None = None
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.equal) if self.difference is None else self.difference < self.params.get("tol", 1e-9)

    def to_json(self) -> dict:
        out: dict = {"mode": self.mode, "left": _jsonable(self.left), "right": _jsonable(self.right), "params": self.params}
        if self.difference is None:
            out["equal"] = self.equal
        else:
            out["difference"] = self.difference
        return out


def _jsonable(x):
    if isinstance(x, complex):
        return [repr(x.real), repr(x.imag)]
    return str(x)


def det_exp_tr_report(m, mode: str, tol: float = 1e-9) -> ExpReport:
    if mode == "float":
        a = np.asarray(m, dtype=complex)
        left = complex(np.linalg.det(exp_complex_matrix(a)))
        right = complex(np.exp(np.trace(a)))
        diff = abs(left - right)
        return ExpReport("float", left, right, difference=diff, params={"n": a.shape[0], "tol": tol})
    if mode == "series":
        if not isinstance(m.ring, SeriesRing) or not m.ring.commutative:
            raise TypeError("series mode needs a matrix over a commutative SeriesRing")
        left = det(exp_series_matrix(m))
        right = exp_series(trace(m))
        return ExpReport("series", left, right, equal=left == right, params={"n": m.n, "D": m.ring.D})
    if mode == "padic":
        p, N, _ = _padic_matrix_params(m)
        left = det(exp_padic_matrix(m))
        right = exp_padic(trace(m))
        return ExpReport("padic", left, right, equal=left == right, params={"n": m.n, "p": p, "N": N})
    raise ValueError(f"unknown mode {mode!r}")


def series_matrix_ring(base, nvars: int, D: int, n: int) -> MatrixRing:
    return MatrixRing(SeriesRing(base, nvars, D), n)
