"""Finite-dimensional algebras given by structure constants.

``StructureConstants.table[j][l][m]`` is the coefficient of ``e_m`` in the
product of ``e_j`` and ``e_l``.  The same table type serves associative
products and Lie brackets; which one it means is up to the caller.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .linalg import nullspace, rank, rref, span_coordinates
from .matrices import Matrix, mat_mul
from .scalars import FieldDescriptor


@dataclass(frozen=True)
class AlgElement:
    coords: tuple

    def __len__(self):
        return len(self.coords)

    def __add__(self, other: AlgElement) -> AlgElement:
        _same_dim(self, other)
        return AlgElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: AlgElement) -> AlgElement:
        _same_dim(self, other)
        return AlgElement(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> AlgElement:
        return AlgElement(tuple(-a for a in self.coords))

    def __rmul__(self, c) -> AlgElement:
        return AlgElement(tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(not a for a in self.coords)


def _same_dim(x: AlgElement, y: AlgElement):
    if len(x.coords) != len(y.coords):
        raise ValueError(f"dimension mismatch: {len(x.coords)} vs {len(y.coords)}")


@dataclass(frozen=True)
class StructureConstants:
    field: FieldDescriptor
    basis: tuple[str, ...]
    table: tuple  # n x n x n nested tuples of field scalars
    name: str = ""

    def __post_init__(self):
        n = len(self.basis)
        if n < 1:
            raise ValueError("an algebra needs a nonempty basis")
        if len(set(self.basis)) != n:
            raise ValueError("basis names must be distinct")
        t = self.table
        if len(t) != n or any(len(r) != n or any(len(c) != n for c in r) for r in t):
            raise ValueError(f"structure constants must have shape {n}x{n}x{n}")
        object.__setattr__(
            self,
            "table",
            tuple(tuple(tuple(self.field.coerce(x) for x in c) for c in r) for r in t),
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def sparse(self) -> tuple:
        """``sparse[j][l]`` lists the nonzero ``(m, c_jl^m)`` of the table."""
        f = self.field
        return tuple(
            tuple(tuple((m, x) for m, x in enumerate(c) if not f.is_zero(x)) for c in r)
            for r in self.table
        )

    @classmethod
    def from_products(
        cls,
        field: FieldDescriptor,
        basis: Sequence[str],
        products: dict[tuple[int, int], Sequence],
        name: str = "",
    ) -> StructureConstants:
        """Build from ``{(j, l): coords}`` (0-based); omitted pairs are zero."""
        n = len(basis)
        z = field.zero()
        table = [[[z] * n for _ in range(n)] for _ in range(n)]
        for (j, l), coords in products.items():
            if len(coords) != n:
                raise ValueError(f"product ({j}, {l}) has {len(coords)} coordinates, expected {n}")
            table[j][l] = list(coords)
        return cls(field, tuple(basis), table, name)

    def over(self, field: FieldDescriptor) -> StructureConstants:
        """Reinterpret rational constants in another field (e.g. reduce mod p)."""
        conv = [[[field.coerce(_as_rational(x)) for x in c] for c in r] for r in self.table]
        return StructureConstants(field, self.basis, conv, self.name)

    def element(self, coords: Iterable) -> AlgElement:
        coords = tuple(self.field.coerce(x) for x in coords)
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return AlgElement(coords)

    def basis_element(self, which: int | str) -> AlgElement:
        j = self.basis.index(which) if isinstance(which, str) else which
        return self.element(1 if m == j else 0 for m in range(self.dim))

    def zero(self) -> AlgElement:
        return self.element([0] * self.dim)

    def basis_elements(self) -> list[AlgElement]:
        return [self.basis_element(j) for j in range(self.dim)]

    def format_element(self, x: AlgElement) -> str:
        parts = []
        for c, name in zip(x.coords, self.basis):
            if not self.field.is_zero(c):
                parts.append(name if c == self.field.one() else f"{self.field.fmt(c)}*{name}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        brackets = []
        for j, l in product(range(self.dim), repeat=2):
            coords = self.table[j][l]
            if any(not self.field.is_zero(x) for x in coords):
                brackets.append({"j": j, "l": l, "coords": [self.field.fmt(x) for x in coords]})
        out = {
            "field": self.field.to_json(),
            "dim": self.dim,
            "basis": list(self.basis),
            "brackets": brackets,
        }
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: dict) -> StructureConstants:
        from .cli.parse import parse_scalar

        fld = FieldDescriptor.from_json(data["field"])
        basis = data["basis"]
        if data.get("dim", len(basis)) != len(basis):
            raise ValueError("dim does not match the number of basis names")
        products = {}
        for entry in data.get("brackets", []):
            j, l = entry["j"], entry["l"]
            if not (0 <= j < len(basis) and 0 <= l < len(basis)):
                raise ValueError(f"bracket index ({j}, {l}) out of range")
            products[(j, l)] = [parse_scalar(str(s), fld) for s in entry["coords"]]
        return cls.from_products(fld, basis, products, data.get("name", ""))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)


def _as_rational(x):
    from fractions import Fraction

    if isinstance(x, Fraction):
        return x
    if hasattr(x, "to_rational"):
        return x.to_rational()
    return Fraction(int(x))


def mult(sc: StructureConstants, x: AlgElement, y: AlgElement) -> AlgElement:
    """Bilinear extension of the table."""
    n = sc.dim
    if len(x) != n or len(y) != n:
        raise ValueError(f"dimension mismatch: algebra has dim {n}, got {len(x)} and {len(y)}")
    f = sc.field
    out = [f.zero()] * n
    for j, a in enumerate(x.coords):
        if f.is_zero(a):
            continue
        for l, b in enumerate(y.coords):
            if f.is_zero(b):
                continue
            ab = a * b
            for m, c in sc.sparse[j][l]:
                out[m] = out[m] + ab * c
    return AlgElement(tuple(out))


def bracket_from_assoc(a: AlgElement, b: AlgElement, sc: StructureConstants) -> AlgElement:
    """Commutator ``ab - ba`` for an associative table."""
    return mult(sc, a, b) - mult(sc, b, a)


def lie_table_from_assoc(sc: StructureConstants, name: str = "") -> StructureConstants:
    basis = sc.basis_elements()
    products = {
        (j, l): list(bracket_from_assoc(basis[j], basis[l], sc).coords)
        for j in range(sc.dim)
        for l in range(sc.dim)
    }
    return StructureConstants.from_products(sc.field, sc.basis, products, name or sc.name)


def jacobi_defect(sc: StructureConstants, x: AlgElement, y: AlgElement, z: AlgElement) -> AlgElement:
    b = lambda u, v: mult(sc, u, v)  # noqa: E731
    return b(x, b(y, z)) + b(y, b(z, x)) + b(z, b(x, y))


@dataclass
class LieReport:
    alternating: bool
    antisymmetric: bool
    jacobi: bool
    witnesses: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.alternating and self.antisymmetric and self.jacobi


def verify_lie(sc: StructureConstants) -> LieReport:
    """Check the Lie axioms on basis pairs and triples.

    By multilinearity this covers the whole space.  ``[e_j, e_j] = 0`` is
    checked directly because antisymmetry does not imply it in
    characteristic 2.
    """
    f = sc.field
    n = sc.dim
    witnesses = []
    alternating = antisymmetric = jacobi = True
    for j in range(n):
        if any(not f.is_zero(x) for x in sc.table[j][j]):
            alternating = False
            witnesses.append({"kind": "alternating", "pair": [j, j]})
    for j in range(n):
        # l == j included: in characteristic != 2 a nonzero [e_j, e_j] breaks antisymmetry too
        for l in range(j, n):
            if any(not f.is_zero(a + b) for a, b in zip(sc.table[j][l], sc.table[l][j])):
                antisymmetric = False
                witnesses.append({"kind": "antisymmetry", "pair": [j, l]})
    basis = sc.basis_elements()
    for j in range(n):
        for l in range(j + 1, n):
            for m in range(l + 1, n):
                d = jacobi_defect(sc, basis[j], basis[l], basis[m])
                if any(not f.is_zero(x) for x in d.coords):
                    jacobi = False
                    witnesses.append(
                        {"kind": "jacobi", "triple": [j, l, m], "defect": [f.fmt(x) for x in d.coords]}
                    )
    if not (alternating and antisymmetric):
        # jacobi on distinct triples alone is not enough without antisymmetry
        for j, l, m in product(range(n), repeat=3):
            if len({j, l, m}) == 3:
                continue
            d = jacobi_defect(sc, basis[j], basis[l], basis[m])
            if any(not f.is_zero(x) for x in d.coords):
                jacobi = False
                witnesses.append(
                    {"kind": "jacobi", "triple": [j, l, m], "defect": [f.fmt(x) for x in d.coords]}
                )
    return LieReport(alternating, antisymmetric, jacobi, witnesses)


def ad_matrix(sc: StructureConstants, x: AlgElement) -> Matrix:
    """Column l holds the coordinates of ``[x, e_l]``."""
    cols = [mult(sc, x, e).coords for e in sc.basis_elements()]
    return Matrix(sc.field, [[cols[l][m] for l in range(sc.dim)] for m in range(sc.dim)])


def apply_operator(d: Matrix, x: AlgElement) -> AlgElement:
    f = d.ring
    return AlgElement(
        tuple(_dot(f, d.rows[m], x.coords) for m in range(d.n))
    )


def _dot(f, row, coords):
    acc = f.zero()
    for a, b in zip(row, coords):
        if not (f.is_zero(a) or f.is_zero(b)):
            acc = acc + a * b
    return acc


class SubspaceBasis:
    """Linearly independent vectors; independence is checked on construction."""

    def __init__(self, sc: StructureConstants, vectors: Sequence[AlgElement]):
        vectors = [sc.element(v.coords if isinstance(v, AlgElement) else v) for v in vectors]
        if vectors and rank([v.coords for v in vectors], sc.field) != len(vectors):
            raise ValueError("subspace vectors are linearly dependent")
        self.sc = sc
        self.vectors = tuple(vectors)

    @classmethod
    def spanned_by(cls, sc: StructureConstants, vectors: Sequence[AlgElement]) -> SubspaceBasis:
        """Reduce an arbitrary spanning list to an echelon basis."""
        rows = [v.coords for v in vectors]
        reduced, _ = rref(rows, sc.field) if rows else ([], [])
        return cls(sc, [AlgElement(tuple(r)) for r in reduced])

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def contains(self, x: AlgElement) -> bool:
        return span_coordinates([v.coords for v in self.vectors], x.coords, self.sc.field) is not None

    def __repr__(self):
        names = ", ".join(self.sc.format_element(v) for v in self.vectors)
        return f"SubspaceBasis[{names}]"


def center_basis(sc: StructureConstants) -> SubspaceBasis:
    """Nullspace of the stacked system ``[x, e_l] = 0`` for all l."""
    n = sc.dim
    # row (l, m): coefficient of x_j in the m-th coordinate of [x, e_l]
    rows = [[sc.table[j][l][m] for j in range(n)] for l in range(n) for m in range(n)]
    vecs = nullspace(rows, n, sc.field)
    return SubspaceBasis(sc, [AlgElement(tuple(v)) for v in vecs])


def derived_ideal_basis(sc: StructureConstants) -> SubspaceBasis:
    basis = sc.basis_elements()
    brackets = [mult(sc, a, b) for a in basis for b in basis]
    return SubspaceBasis.spanned_by(sc, brackets)


def is_ideal(sub: SubspaceBasis, sc: StructureConstants) -> bool:
    return all(sub.contains(mult(sc, e, s)) for e in sc.basis_elements() for s in sub)


def is_subalgebra(sub: SubspaceBasis, sc: StructureConstants) -> bool:
    return all(sub.contains(mult(sc, a, b)) for a in sub for b in sub)


def quotient_is_abelian(sc: StructureConstants, sub: SubspaceBasis) -> bool:
    """Every product lands in ``sub``."""
    return all(sub.contains(mult(sc, a, b)) for a in sc.basis_elements() for b in sc.basis_elements())


def is_derivation(d: Matrix, sc: StructureConstants) -> bool:
    """Leibniz law ``d(e_j e_l) = d(e_j) e_l + e_j d(e_l)`` on basis pairs."""
    n = sc.dim
    if d.n != n:
        raise ValueError(f"operator is {d.n}x{d.n}, algebra has dim {n}")
    f = sc.field
    # column k of d as sparse (a, d_ak)
    cols = [[(a, d.rows[a][k]) for a in range(n) if not f.is_zero(d.rows[a][k])] for k in range(n)]
    for j, l in product(range(n), repeat=2):
        acc = [f.zero()] * n
        for k, c in sc.sparse[j][l]:
            for a, x in cols[k]:
                acc[a] = acc[a] + x * c
        for a, x in cols[j]:
            for m, c in sc.sparse[a][l]:
                acc[m] = acc[m] - x * c
        for b, x in cols[l]:
            for m, c in sc.sparse[j][b]:
                acc[m] = acc[m] - x * c
        if any(not f.is_zero(v) for v in acc):
            return False
    return True


def operator_bracket(a: Matrix, b: Matrix) -> Matrix:
    return mat_mul(a, b) - mat_mul(b, a)
