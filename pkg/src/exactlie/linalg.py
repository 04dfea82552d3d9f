"""Exact Gaussian elimination over a field (first nonzero pivot in row order)."""

from __future__ import annotations

from typing import Sequence

from .scalars import Ring


def rref(rows: Sequence[Sequence], field: Ring) -> tuple[list[list], list[int]]:
    m = [[field.coerce(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if not field.is_zero(m[i][c])), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inverse(m[r][c])
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence], field: Ring) -> int:
    return len(rref(rows, field)[1])


def nullspace(rows: Sequence[Sequence], ncols: int, field: Ring) -> list[list]:
    """Basis of ``{x : rows @ x = 0}``, one vector per free column."""
    reduced, pivots = rref(rows, field) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [field.zero()] * ncols
        x[f] = field.one()
        for row, pc in zip(reduced, pivots):
            x[pc] = -row[f]
        basis.append(x)
    return basis


def span_coordinates(basis: Sequence[Sequence], v: Sequence, field: Ring) -> list | None:
    """Coordinates of ``v`` in the independent ``basis``, or None if outside."""
    k = len(basis)
    if k == 0:
        return [] if all(field.is_zero(x) for x in v) else None
    # columns are basis vectors, augmented with v
    aug = [[basis[i][c] for i in range(k)] + [v[c]] for c in range(len(v))]
    reduced, pivots = rref(aug, field)
    if k in pivots:
        return None
    coords = [field.zero()] * k
    for row, pc in zip(reduced, pivots):
        coords[pc] = row[k]
    return coords
