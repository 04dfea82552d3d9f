import json
import random
from fractions import Fraction

import pytest

from exactlie import randgen
from exactlie.algebra import (
    StructureConstants,
    SubspaceBasis,
    ad_matrix,
    bracket_from_assoc,
    center_basis,
    derived_ideal_basis,
    is_derivation,
    is_ideal,
    is_subalgebra,
    jacobi_defect,
    lie_table_from_assoc,
    mult,
    operator_bracket,
    quotient_is_abelian,
    verify_lie,
)
from exactlie.library import (
    BUNDLED,
    abelian,
    build,
    gl,
    gl_matrices,
    heisenberg,
    load_algebra,
    matrix_algebra,
    sl2,
    so3,
)
from exactlie.matrices import Matrix, gl_bracket
from exactlie.scalars import prime_field, rationals

Q = rationals()


def coords(x):
    return list(x.coords)


def test_sl2_table_matches_matrix_commutators():
    sc = sl2()
    h, e, f = sc.basis_elements()
    assert mult(sc, h, e) == 2 * e
    assert mult(sc, h, f) == -2 * f
    assert mult(sc, e, f) == h
    assert mult(sc, h, sc.zero()) == sc.zero()


def test_heisenberg_bracket():
    sc = heisenberg()
    x, y, z = sc.basis_elements()
    assert mult(sc, x, y) == z
    assert mult(sc, x, z) == sc.zero() and mult(sc, y, z) == sc.zero()


def test_bracket_from_assoc_gl2():
    m2 = matrix_algebra(2)
    e11, e12, e21, e22 = m2.basis_elements()
    assert bracket_from_assoc(e12, e21, m2) == e11 - e22
    assert bracket_from_assoc(e12, e12, m2) == m2.zero()
    ab = abelian(3)
    a1, a2, _ = ab.basis_elements()
    assert bracket_from_assoc(a1, a2, ab) == ab.zero()


def test_lie_table_from_assoc_is_gl():
    assert lie_table_from_assoc(matrix_algebra(2)).table == gl(2).table


def test_jacobi_defect_examples():
    sc = sl2()
    assert jacobi_defect(sc, *sc.basis_elements()) == sc.zero()
    so = so3()
    assert jacobi_defect(so, *so.basis_elements()) == so.zero()


def test_so3_table_is_cyclic():
    sc = so3()
    e1, e2, e3 = sc.basis_elements()
    assert mult(sc, e1, e2) == e3
    assert mult(sc, e2, e3) == e1
    assert mult(sc, e3, e1) == e2


def test_literal_broken_cyclic_table_still_satisfies_jacobi():
    """{[e1,e2]=e3, [e2,e3]=e1, [e3,e1]=-e2} extended antisymmetrically.

    Every cyclic term [a,[b,c]] on (e1,e2,e3) reduces to [x,x] for some
    basis vector, so the defect is zero; this is why the bundled broken
    table uses a different non-Lie table.
    """
    products = {
        (0, 1): [0, 0, 1],
        (1, 0): [0, 0, -1],
        (1, 2): [1, 0, 0],
        (2, 1): [-1, 0, 0],
        (2, 0): [0, -1, 0],
        (0, 2): [0, 1, 0],
    }
    sc = StructureConstants.from_products(Q, ["e1", "e2", "e3"], products)
    assert jacobi_defect(sc, *sc.basis_elements()) == sc.zero()


def test_broken_table_fails_with_witness():
    sc = load_algebra("broken")
    rep = verify_lie(sc)
    assert rep.antisymmetric and rep.alternating and not rep.jacobi
    assert not rep.passed
    assert {"kind": "jacobi", "triple": [0, 1, 2], "defect": ["0", "0", "1"]} in rep.witnesses
    e1, e2, e3 = sc.basis_elements()
    # brute-force expansion oracle: [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]]
    t1 = mult(sc, e1, mult(sc, e2, e3))  # [e2,e3]=0
    t2 = mult(sc, e2, mult(sc, e3, e1))  # [e2,-e1] = e3
    t3 = mult(sc, e3, mult(sc, e1, e2))  # [e3,e3] = 0
    assert coords(t1 + t2 + t3) == [0, 0, 1]


def test_nonalternating_table_fails_antisymmetry():
    sc = StructureConstants.from_products(Q, ["e1", "e2"], {(0, 0): [0, 1]})
    rep = verify_lie(sc)
    assert not rep.alternating and not rep.antisymmetric
    assert {"kind": "antisymmetry", "pair": [0, 0]} in rep.witnesses


def test_char2_needs_alternating_check():
    # symmetric nonzero [e1,e1] is "antisymmetric" mod 2 but not alternating
    sc = StructureConstants.from_products(prime_field(2), ["e1", "e2"], {(0, 0): [0, 1]})
    rep = verify_lie(sc)
    assert rep.antisymmetric and not rep.alternating and not rep.passed


@pytest.mark.parametrize("name", [n for n in BUNDLED if n != "broken"])
@pytest.mark.parametrize("field", [rationals(), prime_field(7), prime_field(2)], ids=str)
def test_bundled_algebras_are_lie(name, field):
    sc = load_algebra(name)
    if field != sc.field:
        sc = sc.over(field)
    assert verify_lie(sc).passed


@pytest.mark.parametrize("name", BUNDLED)
def test_bundled_files_match_generators(name):
    assert load_algebra(name) == build(name)


def test_ad_examples():
    sc = sl2()
    h, e, f = sc.basis_elements()
    assert ad_matrix(sc, h) == Matrix.diag(Q, [0, 2, -2])
    hz = heisenberg()
    assert ad_matrix(hz, hz.basis_elements()[2]).is_zero()
    ab = abelian(3)
    assert ad_matrix(ab, ab.element([1, 2, 3])).is_zero()


def test_center_examples():
    hz = heisenberg()
    c = center_basis(hz)
    assert len(c) == 1 and c.contains(hz.basis_elements()[2])
    assert len(center_basis(sl2())) == 0
    assert len(center_basis(abelian(2))) == 2
    # gl(3) has the scalar matrices as center
    g = gl(3)
    cg = center_basis(g)
    assert len(cg) == 1
    assert cg.contains(g.element([1, 0, 0, 0, 1, 0, 0, 0, 1]))


def test_derived_ideal_examples():
    hz = heisenberg()
    d = derived_ideal_basis(hz)
    assert len(d) == 1 and d.contains(hz.basis_elements()[2])
    assert len(derived_ideal_basis(abelian(3))) == 0
    assert len(derived_ideal_basis(sl2())) == 3
    # [gl3, gl3] = sl3
    assert len(derived_ideal_basis(gl(3))) == 8


def test_is_ideal_examples():
    hz = heisenberg()
    assert is_ideal(SubspaceBasis(hz, [hz.basis_elements()[2]]), hz)
    s = sl2()
    span_e = SubspaceBasis(s, [s.basis_elements()[1]])
    assert not is_ideal(span_e, s)
    assert is_subalgebra(span_e, s)
    assert is_ideal(SubspaceBasis(s, s.basis_elements()), s)


def test_subspace_rejects_dependent_vectors():
    s = sl2()
    h = s.basis_elements()[0]
    with pytest.raises(ValueError):
        SubspaceBasis(s, [h, 2 * h])


def test_derived_quotient_is_abelian():
    for sc in (heisenberg(), sl2(), gl(2), gl(3)):
        d = derived_ideal_basis(sc)
        assert is_ideal(d, sc) and quotient_is_abelian(sc, d)


def test_derivation_examples():
    s = sl2()
    assert is_derivation(ad_matrix(s, s.basis_elements()[0]), s)
    assert not is_derivation(Matrix.identity(Q, 3), s)
    assert is_derivation(Matrix.zeros(Q, 3), s)


def test_nonadjoint_derivation_of_heisenberg():
    # diag(1, 0, 1) scales x and z: D[x,y] = z = [Dx,y] + [x,Dy]
    hz = heisenberg()
    d = Matrix.diag(Q, [1, 0, 1])
    assert is_derivation(d, hz)
    assert not is_derivation(Matrix.diag(Q, [1, 0, 0]), hz)


@pytest.mark.parametrize("sc", [sl2(), gl(2), heisenberg(), so3()], ids=lambda s: s.name)
def test_adjoint_homomorphism_random(sc):
    rng = random.Random(7)
    for _ in range(30):
        x = sc.element(randgen.alg_coords(rng, Q, sc.dim))
        y = sc.element(randgen.alg_coords(rng, Q, sc.dim))
        ax, ay = ad_matrix(sc, x), ad_matrix(sc, y)
        assert ad_matrix(sc, mult(sc, x, y)) == operator_bracket(ax, ay)
        assert is_derivation(ax, sc)
        assert is_derivation(operator_bracket(ax, ay), sc)


def test_gl_table_matches_matrix_oracle():
    """Brackets read from the table agree with direct matrix commutators."""
    rng = random.Random(3)
    names, mats = gl_matrices(3)
    sc = gl(3)
    for _ in range(20):
        a = [randgen.rational(rng) for _ in range(9)]
        b = [randgen.rational(rng) for _ in range(9)]
        am = Matrix(Q, [a[0:3], a[3:6], a[6:9]])
        bm = Matrix(Q, [b[0:3], b[3:6], b[6:9]])
        c = gl_bracket(am, bm)
        assert coords(mult(sc, sc.element(a), sc.element(b))) == [x for r in c.rows for x in r]


def test_reduction_mod_p():
    sc = sl2().over(prime_field(2))
    h, e, f = sc.basis_elements()
    # [h, e] = 2e = 0 in characteristic 2, so h is central
    assert mult(sc, h, e) == sc.zero()
    assert len(center_basis(sc)) == 1


def test_json_roundtrip(tmp_path):
    sc = heisenberg()
    text = sc.dumps()
    again = StructureConstants.from_json(json.loads(text))
    assert again == sc
    assert again.dumps() == text
    p = tmp_path / "h.json"
    p.write_text(text)
    assert load_algebra(str(p)) == sc


def test_json_rejects_bad_index():
    data = json.loads(heisenberg().dumps())
    data["brackets"].append({"j": 7, "l": 0, "coords": ["0", "0", "0"]})
    with pytest.raises(ValueError):
        StructureConstants.from_json(data)


def test_library_env_override(tmp_path, monkeypatch):
    (tmp_path / "tiny.json").write_text(abelian(1).dumps())
    monkeypatch.setenv("EXACTLIE_LIBRARY", str(tmp_path))
    assert load_algebra("tiny").dim == 1
    with pytest.raises(FileNotFoundError):
        load_algebra("so3")


def test_format_element():
    sc = sl2()
    x = sc.element([Fraction(1, 2), 0, -3])
    assert "h" in sc.format_element(x) and "f" in sc.format_element(x)


def _leibniz_oracle(d, sc):
    from exactlie.algebra import apply_operator

    basis = sc.basis_elements()
    for a in basis:
        for b in basis:
            lhs = apply_operator(d, mult(sc, a, b))
            rhs = mult(sc, apply_operator(d, a), b) + mult(sc, a, apply_operator(d, b))
            if lhs != rhs:
                return False
    return True


@pytest.mark.parametrize("sc", [sl2(), heisenberg(), gl(2)], ids=lambda s: s.name)
def test_is_derivation_matches_direct_leibniz(sc):
    rng = random.Random(11)
    for _ in range(40):
        # sparse random operators hit both outcomes
        rows = [[rng.choice([0, 0, 0, 1, -1]) for _ in range(sc.dim)] for _ in range(sc.dim)]
        d = Matrix(Q, rows)
        assert is_derivation(d, sc) == _leibniz_oracle(d, sc)
