"""Vector p-norms over floats and exact ultrametric norms over Q_p."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exp import opnorm_inf
from .matrices import Matrix, mat_apply
from .scalars import FieldDescriptor, Padic, UltraNorm, padic_field

REL_SLACK = 1e-12


class NormDomainError(ValueError):
    pass


# -- float side ------------------------------------------------------------


def pnorm(v, p: float) -> float:
    v = np.asarray(v)
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    if p < 1:
        raise ValueError(f"p-norms need p >= 1, got {p}")
    a = np.abs(v).astype(float)
    if a.size == 0:
        return 0.0
    if math.isinf(p):
        return float(a.max())
    if p == 1:
        return float(a.sum())
    # factor out the max entry to avoid overflow in a**p
    top = a.max()
    if top == 0:
        return 0.0
    return float(top * np.sum((a / top) ** p) ** (1.0 / p))


@dataclass
class CheckReport:
    passed: bool
    details: dict = field(default_factory=dict)


def _inv(p: float) -> float:
    return 0.0 if math.isinf(p) else 1.0 / p


def pnorm_inequality_check(v, p: float, q: float, slack: float = REL_SLACK) -> CheckReport:
    """``|v|_q <= |v|_p <= n^(1/p - 1/q) |v|_q`` for ``1 <= p <= q <= inf``."""
    if not 1 <= p <= q:
        raise ValueError("need 1 <= p <= q")
    v = np.asarray(v)
    n = v.size
    np_, nq = pnorm(v, p), pnorm(v, q)
    factor = n ** (_inv(p) - _inv(q)) if n else 1.0
    first = nq <= np_ * (1 + slack)
    second = np_ <= factor * nq * (1 + slack)
    return CheckReport(
        first and second,
        {"norm_p": np_, "norm_q": nq, "factor": factor, "q_le_p": first, "p_le_factor_q": second},
    )


def float_opnorm(a) -> float:
    return opnorm_inf(np.asarray(a, dtype=complex))


def neumann_inverse(x, terms: int) -> np.ndarray:
    """Partial sum ``sum_{j<=terms} x^j`` approximating ``(I - x)^-1``."""
    x = np.asarray(x, dtype=complex)
    r = float_opnorm(x)
    if r >= 1:
        raise NormDomainError(f"operator norm {r} is not below 1")
    n = x.shape[0]
    total = np.eye(n, dtype=complex)
    power = np.eye(n, dtype=complex)
    for _ in range(terms):
        power = power @ x
        total = total + power
    return total


def neumann_residual_bound(r: float, terms: int) -> float:
    return r ** (terms + 1) / (1 - r)


def neumann_residual_check(x, terms: int) -> CheckReport:
    """``|(I - x) S - I| <= r^(terms+1) / (1 - r)`` plus a rounding allowance.

    The bound holds in exact arithmetic; evaluating the residual in floats
    adds roughly ``(terms + n) * eps * |I - x| * |S|``, which is allowed for.
    """
    x = np.asarray(x, dtype=complex)
    n = x.shape[0]
    s = neumann_inverse(x, terms)
    eye = np.eye(n)
    r = float_opnorm(x)
    resid = float_opnorm((eye - x) @ s - eye)
    bound = neumann_residual_bound(r, terms)
    rounding = (terms + n + 2) * np.finfo(float).eps * (1 + r) * float_opnorm(s)
    return CheckReport(
        resid <= bound + rounding,
        {"residual": resid, "bound": bound, "rounding": rounding, "norm": r, "terms": terms},
    )


def submult_check(a, b, slack: float = REL_SLACK) -> CheckReport:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError("shape mismatch")
    lhs = float_opnorm(a @ b)
    rhs = float_opnorm(a) * float_opnorm(b)
    return CheckReport(lhs <= rhs * (1 + slack), {"lhs": lhs, "rhs": rhs})


# -- ultrametric side ------------------------------------------------------


@dataclass(frozen=True)
class WeightedUltraNorm:
    """``|x| = max_j p^(q_j) |x_j|_p``; all-zero exponents give the max norm."""

    p: int
    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(Fraction(q) for q in self.exponents))

    @classmethod
    def unweighted(cls, p: int, n: int) -> WeightedUltraNorm:
        return cls(p, (0,) * n)

    @classmethod
    def shift_weights(cls, p: int, n: int) -> WeightedUltraNorm:
        """Weights ``p^(-(j-1)/n)`` for j = 1..n."""
        return cls(p, tuple(Fraction(-(j - 1), n) for j in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.exponents)

    def weight(self, j: int) -> UltraNorm:
        return UltraNorm(self.p, self.exponents[j])


def _check_prime(x: Padic, p: int):
    if x.p != p:
        raise ValueError(f"Q_{x.p} value used with a norm over Q_{p}")


def ultra_vecnorm(x: Sequence[Padic], w: WeightedUltraNorm) -> UltraNorm:
    if len(x) != w.n:
        raise ValueError(f"vector of length {len(x)} for a norm on Q_p^{w.n}")
    best = UltraNorm.zero(w.p)
    for j, xj in enumerate(x):
        _check_prime(xj, w.p)
        best = max(best, w.weight(j) * xj.abs())
    return best


@dataclass(frozen=True)
class OpNormResult:
    norm: UltraNorm
    witness: int  # 0-based column l with |T e_l| / |e_l| equal to the norm


def ultra_opnorm_witness(t: Matrix, w: WeightedUltraNorm) -> OpNormResult:
    """Exact operator norm ``max_{j,l} w_j |a_{jl}|_p / w_l`` and the column attaining it."""
    if t.n != w.n:
        raise ValueError("matrix and norm dimensions differ")
    best = UltraNorm.zero(w.p)
    where = 0
    for l in range(t.n):
        col = UltraNorm.zero(w.p)
        for j in range(t.n):
            a = t.rows[j][l]
            _check_prime(a, w.p)
            col = max(col, w.weight(j) * a.abs())
        col = col / w.weight(l)
        if col > best:
            best, where = col, l
    return OpNormResult(best, where)


def ultra_opnorm(t: Matrix, w: WeightedUltraNorm | None = None) -> UltraNorm:
    if w is None:
        w = WeightedUltraNorm.unweighted(t.ring.p, t.n)
    return ultra_opnorm_witness(t, w).norm


def column_ratio(t: Matrix, w: WeightedUltraNorm, l: int) -> UltraNorm:
    """``|T e_l| / |e_l|`` computed by applying the matrix."""
    ring = t.ring
    e = [ring.one() if i == l else ring.zero() for i in range(t.n)]
    return ultra_vecnorm(mat_apply(t, e), w) / ultra_vecnorm(e, w)


def shift_operator(n: int, p: int, N: int = 8) -> Matrix:
    """``y_1 = p x_n`` and ``y_j = x_{j-1}`` for ``2 <= j <= n``; ``T^n = p I``."""
    if n < 2:
        raise ValueError("the shift operator needs n >= 2")
    ring: FieldDescriptor = padic_field(p, N)
    rows = [[ring.zero()] * n for _ in range(n)]
    rows[0][n - 1] = ring.coerce(p)
    for j in range(1, n):
        rows[j][j - 1] = ring.one()
    return Matrix(ring, rows)
