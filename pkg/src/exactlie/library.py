"""Bundled algebras.

Lie tables are generated from commutators of explicit matrices, so each
bundled file is checked against its own construction.  Run
``python -m exactlie.library`` to regenerate ``data/algebras/``.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .algebra import StructureConstants
from .linalg import span_coordinates
from .matrices import Matrix, gl_bracket, mat_mul
from .scalars import FieldDescriptor, rationals

DATA_DIR = Path(__file__).with_name("data") / "algebras"
LIBRARY_ENV = "EXACTLIE_LIBRARY"

BUNDLED = ("so3", "sl2", "heisenberg", "gl1", "gl2", "gl3", "gl4", "abelian2", "abelian3", "broken")


def _flat(m: Matrix) -> list:
    return [x for r in m.rows for x in r]


def table_from_matrices(
    names: Sequence[str],
    mats: Sequence[Matrix],
    product=gl_bracket,
    name: str = "",
) -> StructureConstants:
    """Structure constants of ``span(mats)`` under ``product`` (commutator by default)."""
    field = mats[0].ring
    basis = [_flat(m) for m in mats]
    products = {}
    for j, a in enumerate(mats):
        for l, b in enumerate(mats):
            c = span_coordinates(basis, _flat(product(a, b)), field)
            if c is None:
                raise ValueError(f"product of {names[j]} and {names[l]} leaves the span")
            products[(j, l)] = c
    return StructureConstants.from_products(field, names, products, name)


def _unit(n, j, l, field):
    return Matrix.unit(field, n, j, l)


def gl_matrices(n: int, field: FieldDescriptor | None = None):
    field = field or rationals()
    names = [f"E{j}{l}" for j in range(1, n + 1) for l in range(1, n + 1)]
    mats = [_unit(n, j, l, field) for j in range(1, n + 1) for l in range(1, n + 1)]
    return names, mats


def gl(n: int) -> StructureConstants:
    names, mats = gl_matrices(n)
    return table_from_matrices(names, mats, name=f"gl{n}")


def matrix_algebra(n: int) -> StructureConstants:
    """The associative algebra M_n(Q) on the matrix units."""
    names, mats = gl_matrices(n)
    return table_from_matrices(names, mats, product=mat_mul, name=f"M{n}")


def sl2() -> StructureConstants:
    q = rationals()
    h = Matrix(q, [[1, 0], [0, -1]])
    e = Matrix(q, [[0, 1], [0, 0]])
    f = Matrix(q, [[0, 0], [1, 0]])
    return table_from_matrices(["h", "e", "f"], [h, e, f], name="sl2")


def so3() -> StructureConstants:
    q = rationals()
    e1 = Matrix(q, [[0, 0, 0], [0, 0, -1], [0, 1, 0]])
    e2 = Matrix(q, [[0, 0, 1], [0, 0, 0], [-1, 0, 0]])
    e3 = Matrix(q, [[0, -1, 0], [1, 0, 0], [0, 0, 0]])
    return table_from_matrices(["e1", "e2", "e3"], [e1, e2, e3], name="so3")


def heisenberg() -> StructureConstants:
    q = rationals()
    x = _unit(3, 1, 2, q)
    y = _unit(3, 2, 3, q)
    z = _unit(3, 1, 3, q)
    return table_from_matrices(["x", "y", "z"], [x, y, z], name="heisenberg")


def abelian(n: int) -> StructureConstants:
    return StructureConstants.from_products(rationals(), [f"a{j}" for j in range(1, n + 1)], {}, f"abelian{n}")


def broken() -> StructureConstants:
    """Antisymmetric but not Lie: the Jacobi sum on (e1, e2, e3) is e3."""
    q = rationals()
    e = lambda *c: [Fraction(x) for x in c]  # noqa: E731
    products = {
        (0, 1): e(0, 0, 1),
        (1, 0): e(0, 0, -1),
        (0, 2): e(1, 0, 0),
        (2, 0): e(-1, 0, 0),
    }
    return StructureConstants.from_products(q, ["e1", "e2", "e3"], products, "broken")


def build(name: str) -> StructureConstants:
    if name.startswith("gl") and name[2:].isdigit():
        n = int(name[2:])
        if not 1 <= n <= 4:
            raise ValueError("bundled gl(n) covers n <= 4")
        return gl(n)
    if name.startswith("abelian") and name[7:].isdigit():
        return abelian(int(name[7:]))
    builders = {"so3": so3, "sl2": sl2, "heisenberg": heisenberg, "broken": broken}
    if name not in builders:
        raise KeyError(f"unknown bundled algebra {name!r}")
    return builders[name]()


def library_dir() -> Path:
    return Path(os.environ.get(LIBRARY_ENV, DATA_DIR))


def load_algebra(ref: str) -> StructureConstants:
    """Load by path first, then by name from the bundled library directory."""
    path = Path(ref)
    if not path.is_file():
        path = library_dir() / f"{ref}.json"
        if not path.is_file():
            raise FileNotFoundError(f"no algebra file or bundled algebra named {ref!r}")
    with open(path) as fh:
        return StructureConstants.from_json(json.load(fh))


def write_library(directory: Path = DATA_DIR) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name in BUNDLED:
        path = directory / f"{name}.json"
        path.write_text(build(name).dumps() + "\n")
        written.append(path)
    return written


if __name__ == "__main__":
    for p in write_library():
        print(p)
