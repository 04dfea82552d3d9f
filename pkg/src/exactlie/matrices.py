"""Square matrices over a pluggable ring."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Sequence

from .scalars import Ring, UnsupportedOperation

MAX_DET_DIM = 12


class Matrix:
    __slots__ = ("ring", "n", "rows")

    def __init__(self, ring: Ring, rows: Sequence[Sequence]):
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrices must be square and nonempty")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(tuple(ring.coerce(x) for x in r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("matrices are immutable")

    @classmethod
    def identity(cls, ring: Ring, n: int) -> Matrix:
        return cls(ring, [[ring.one() if j == l else ring.zero() for l in range(n)] for j in range(n)])

    @classmethod
    def zeros(cls, ring: Ring, n: int) -> Matrix:
        return cls(ring, [[ring.zero()] * n for _ in range(n)])

    @classmethod
    def unit(cls, ring: Ring, n: int, j: int, l: int) -> Matrix:
        """Matrix unit ``E_{j,l}`` (1-based)."""
        return cls(
            ring,
            [[ring.one() if (a, b) == (j - 1, l - 1) else ring.zero() for b in range(n)] for a in range(n)],
        )

    @classmethod
    def diag(cls, ring: Ring, entries: Sequence) -> Matrix:
        n = len(entries)
        return cls(ring, [[entries[j] if j == l else ring.zero() for l in range(n)] for j in range(n)])

    def __getitem__(self, jl):
        j, l = jl
        return self.rows[j][l]

    def _check(self, other: Matrix):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected a Matrix, got {type(other).__name__}")
        if other.n != self.n or other.ring != self.ring:
            raise ValueError(f"shape/ring mismatch: {self.n}x{self.n} over {self.ring} vs {other.n}x{other.n} over {other.ring}")

    def map(self, fn: Callable) -> Matrix:
        return Matrix(self.ring, [[fn(x) for x in r] for r in self.rows])

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        return Matrix(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self.map(lambda x: -x)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        # scalar on the right
        c = self.ring.coerce(other)
        return self.map(lambda x: x * c)

    def __rmul__(self, other):
        c = self.ring.coerce(other)
        return self.map(lambda x: c * x)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        out = Matrix.identity(self.ring, self.n)
        for _ in range(k):
            out = mat_mul(out, self)
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.n == other.n and self.ring == other.ring and all(
            self.ring.is_zero(a - b) for r, s in zip(self.rows, other.rows) for a, b in zip(r, s)
        )

    def __hash__(self):
        return hash((self.n, self.rows))

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(x) for r in self.rows for x in r)

    def transpose(self) -> Matrix:
        return Matrix(self.ring, [list(c) for c in zip(*self.rows)])

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def __repr__(self):
        return f"Matrix({format_matrix(self)}; ring={self.ring})"

    def __str__(self):
        return format_matrix(self)


def format_matrix(m: Matrix) -> str:
    """Row-major JSON-style text with string literal entries."""
    import json

    return json.dumps([[m.ring.fmt(x) for x in r] for r in m.rows])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    a._check(b)
    n, ring = a.n, a.ring
    cols = list(zip(*b.rows))
    out = []
    for r in a.rows:
        row = []
        for c in cols:
            acc = ring.zero()
            for x, y in zip(r, c):
                acc = acc + x * y
            row.append(acc)
        out.append(row)
    return Matrix(ring, out)


def mat_apply(t: Matrix, x: Sequence) -> tuple:
    """``y_j = sum_l t_{j,l} x_l``."""
    if len(x) != t.n:
        raise ValueError(f"vector of length {len(x)} for a {t.n}x{t.n} matrix")
    ring = t.ring
    out = []
    for r in t.rows:
        acc = ring.zero()
        for a, xl in zip(r, x):
            acc = acc + a * xl
        out.append(acc)
    return tuple(out)


def trace(t: Matrix):
    acc = t.ring.zero()
    for j in range(t.n):
        acc = acc + t.rows[j][j]
    return acc


def _cofactor_det(rows, ring):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = ring.zero()
    for l in range(n):
        if ring.is_zero(rows[0][l]):
            continue
        minor = [r[:l] + r[l + 1 :] for r in rows[1:]]
        term = rows[0][l] * _cofactor_det(minor, ring)
        acc = acc + term if l % 2 == 0 else acc - term
    return acc


def _bareiss_det(rows, ring):
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if ring.is_zero(m[k][k]):
            swap = next((i for i in range(k + 1, n) if not ring.is_zero(m[i][k])), None)
            if swap is None:
                return ring.zero()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = ring.exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d


def det(t: Matrix):
    """Determinant over a commutative ring.

    Cofactor expansion up to 4x4; fraction-free Bareiss elimination up to
    12x12, which needs exact division in the ring.
    """
    ring = t.ring
    if not ring.commutative:
        raise UnsupportedOperation(f"determinant over the noncommutative ring {ring}")
    if t.n <= 4:
        return _cofactor_det(t.rows, ring)
    if t.n > MAX_DET_DIM:
        raise ValueError(f"determinant supported up to {MAX_DET_DIM}x{MAX_DET_DIM}")
    return _bareiss_det(t.rows, ring)


def leibniz_det(t: Matrix):
    """Determinant by the permutation expansion; O(n!) and kept as an oracle."""
    ring = t.ring
    acc = ring.zero()
    for perm in permutations(range(t.n)):
        inversions = sum(1 for i in range(t.n) for j in range(i + 1, t.n) if perm[i] > perm[j])
        term = ring.one()
        for j, l in enumerate(perm):
            term = term * t.rows[j][l]
        acc = acc - term if inversions % 2 else acc + term
    return acc


def is_invertible(t: Matrix) -> bool:
    return t.ring.is_unit(det(t))


def mat_inverse(t: Matrix) -> Matrix:
    """Gauss-Jordan on ``[t | I]`` over a commutative field."""
    from .linalg import rref

    ring, n = t.ring, t.n
    if not (ring.is_field and ring.commutative):
        raise UnsupportedOperation(f"matrix inverse over {ring} (not a commutative field)")
    aug = [list(t.rows[j]) + [ring.one() if l == j else ring.zero() for l in range(n)] for j in range(n)]
    red, pivots = rref(aug, ring)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return Matrix(ring, [r[n:] for r in red])


def gl_bracket(a: Matrix, b: Matrix) -> Matrix:
    return mat_mul(a, b) - mat_mul(b, a)


def sl_member(t: Matrix) -> bool:
    if not t.ring.commutative:
        raise UnsupportedOperation("sl(n) membership needs a commutative ring")
    return t.ring.is_zero(trace(t))


def conj_transpose(t: Matrix, star: Callable | None = None) -> Matrix:
    """Entry (j, l) of the result is ``star`` of entry (l, j)."""
    star = t.ring.star if star is None else star
    return Matrix(t.ring, [[star(t.rows[l][j]) for l in range(t.n)] for j in range(t.n)])


def is_antisymmetric(t: Matrix, star: Callable | None = None) -> bool:
    return conj_transpose(t, star) == -t


@dataclass(frozen=True)
class MatrixRing(Ring):
    base: Ring
    n: int

    @property
    def commutative(self) -> bool:
        return self.n == 1 and self.base.commutative

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    def zero(self):
        return Matrix.zeros(self.base, self.n)

    def one(self):
        return Matrix.identity(self.base, self.n)

    def coerce(self, x):
        if isinstance(x, Matrix):
            return x
        c = self.base.coerce(x)
        return Matrix.diag(self.base, [c] * self.n)

    def from_rational(self, q):
        return self.coerce(self.base.from_rational(q))

    def is_zero(self, x) -> bool:
        return x.is_zero()

    def is_unit(self, x) -> bool:
        if not self.base.commutative:
            raise UnsupportedOperation("unit test for matrices over a noncommutative ring")
        return is_invertible(x)

    def inverse(self, x):
        return mat_inverse(x)

    def star(self, x):
        return conj_transpose(x, self.base.star)

    def fmt(self, x) -> str:
        return format_matrix(x)

    def __str__(self):
        return f"M_{self.n}({self.base})"
