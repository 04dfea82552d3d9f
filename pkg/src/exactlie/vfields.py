"""Polynomial vector fields ``sum_j p_j d/dt_j`` and their Lie bracket."""

from __future__ import annotations

import json
from typing import Sequence

from .matrices import Matrix
from .poly import Polynomial, format_polynomial, partial
from .scalars import UnsupportedOperation


class VectorFieldPoly:
    __slots__ = ("components",)

    def __init__(self, components: Sequence[Polynomial]):
        comps = tuple(components)
        if not comps:
            raise ValueError("a vector field needs at least one component")
        n = len(comps)
        ring = comps[0].ring
        for p in comps:
            if p.nvars != n:
                raise ValueError(f"component has {p.nvars} variables, expected {n}")
            if p.ring != ring:
                raise ValueError("components must share one coefficient ring")
        if not ring.commutative:
            raise UnsupportedOperation("vector fields need a commutative coefficient ring")
        object.__setattr__(self, "components", comps)

    def __setattr__(self, name, value):
        raise AttributeError("vector fields are immutable")

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def ring(self):
        return self.components[0].ring

    def _check(self, other: VectorFieldPoly):
        if other.n != self.n or other.ring != self.ring:
            raise ValueError("vector field mismatch")

    def __add__(self, other: VectorFieldPoly) -> VectorFieldPoly:
        self._check(other)
        return VectorFieldPoly([a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other: VectorFieldPoly) -> VectorFieldPoly:
        self._check(other)
        return VectorFieldPoly([a - b for a, b in zip(self.components, other.components)])

    def __neg__(self) -> VectorFieldPoly:
        return VectorFieldPoly([-a for a in self.components])

    def __rmul__(self, c) -> VectorFieldPoly:
        return VectorFieldPoly([c * a for a in self.components])

    def __eq__(self, other):
        if not isinstance(other, VectorFieldPoly):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components)

    def to_json(self) -> list[str]:
        return [format_polynomial(p) for p in self.components]

    def __str__(self):
        parts = [
            f"({format_polynomial(p)}) ∂{j}"
            for j, p in enumerate(self.components, start=1)
            if not p.is_zero()
        ]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"VectorFieldPoly({json.dumps(self.to_json())})"


def vf_apply(v: VectorFieldPoly, f: Polynomial) -> Polynomial:
    if f.nvars != v.n or f.ring != v.ring:
        raise ValueError("polynomial does not match the vector field")
    out = Polynomial.zero(f.ring, f.nvars)
    for j, p in enumerate(v.components, start=1):
        if not p.is_zero():
            out = out + p * partial(j, f)
    return out


def vf_bracket(v: VectorFieldPoly, w: VectorFieldPoly) -> VectorFieldPoly:
    """``r_j = sum_l p_l d_l(q_j) - q_l d_l(p_j)``."""
    v._check(w)
    return VectorFieldPoly([vf_apply(v, q) - vf_apply(w, p) for p, q in zip(v.components, w.components)])


def matrix_to_vf(m: Matrix) -> VectorFieldPoly:
    """Linear field with ``p_j = sum_l a_{j,l} t_l``.

    Matrix commutators go to minus the vector-field bracket.
    """
    if not m.ring.commutative:
        raise UnsupportedOperation("matrix_to_vf needs a commutative ring")
    n, ring = m.n, m.ring
    comps = []
    for j in range(n):
        terms = {}
        for l in range(n):
            alpha = tuple(1 if i == l else 0 for i in range(n))
            terms[alpha] = m.rows[j][l]
        comps.append(Polynomial(ring, n, terms))
    return VectorFieldPoly(comps)


def euler_field(ring, n: int) -> VectorFieldPoly:
    return VectorFieldPoly([Polynomial.var(ring, n, j) for j in range(1, n + 1)])
