import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from exactlie import randgen
from exactlie.matrices import Matrix, mat_apply, mat_mul
from exactlie.norms import (
    NormDomainError,
    WeightedUltraNorm,
    column_ratio,
    float_opnorm,
    neumann_inverse,
    neumann_residual_bound,
    neumann_residual_check,
    pnorm,
    pnorm_inequality_check,
    shift_operator,
    submult_check,
    ultra_opnorm,
    ultra_opnorm_witness,
    ultra_vecnorm,
)
from exactlie.scalars import Padic, UltraNorm, padic_field, padic_of_rational

PS = [1.0, 1.5, 2.0, 3.0, math.inf]


# -- float p-norms -------------------------------------------------------------------


def test_pnorm_examples():
    assert pnorm([3, 4], 2) == 5
    assert pnorm([1, -2, 3], math.inf) == 3
    for p in (1, 1.5, 2, 3):
        assert math.isclose(pnorm(np.ones(7), p), 7 ** (1 / p), rel_tol=1e-14)
    with pytest.raises(ValueError):
        pnorm([1, 2], 0.5)


def test_pnorm_against_numpy():
    rng = random.Random(0)
    for _ in range(50):
        v = randgen.float_vector(rng, rng.randint(1, 16))
        for p in (1, 2, 3, math.inf):
            assert math.isclose(pnorm(v, p), np.linalg.norm(v, p), rel_tol=1e-13)


def test_pnorm_no_overflow():
    assert math.isclose(pnorm([1e200, 1e200], 2), math.sqrt(2) * 1e200, rel_tol=1e-14)


@given(
    st.lists(st.floats(-1e6, 1e6, allow_nan=False), min_size=1, max_size=16),
    st.sampled_from(PS),
    st.sampled_from(PS),
)
def test_pnorm_inequalities(v, p, q):
    p, q = min(p, q), max(p, q)
    assert pnorm_inequality_check(v, p, q).passed


def test_pnorm_inequality_equal_exponents():
    rep = pnorm_inequality_check([1.0, -2.0, 0.5], 2, 2)
    assert rep.passed and rep.details["factor"] == 1.0
    assert rep.details["norm_p"] == rep.details["norm_q"]


def test_pnorm_one_vs_inf():
    v = [3.0, -1.0, 2.0, 0.0]
    rep = pnorm_inequality_check(v, 1, math.inf)
    assert rep.details["norm_q"] <= rep.details["norm_p"] <= 4 * rep.details["norm_q"]


def test_float_opnorm_is_max_row_sum():
    a = np.array([[1, -2], [0.5, 0.25]])
    assert float_opnorm(a) == 3.0
    # induced norm: attained at the sign vector of the worst row
    x = np.sign(a[0])
    assert np.max(np.abs(a @ x)) == float_opnorm(a)


def test_submult_examples():
    i = np.eye(4)
    rep = submult_check(i, i)
    assert rep.passed and rep.details == {"lhs": 1.0, "rhs": 1.0}
    z = np.zeros((4, 4))
    assert submult_check(i, z).details == {"lhs": 0.0, "rhs": 0.0}
    rng = random.Random(1)
    for _ in range(50):
        a = randgen.complex_unit_disc(rng, (4, 4))
        b = randgen.complex_unit_disc(rng, (4, 4))
        assert submult_check(a, b).passed


def test_neumann_examples():
    assert np.array_equal(neumann_inverse(np.zeros((3, 3)), 10), np.eye(3))
    s = neumann_inverse(np.array([[0.5]]), 60)
    assert abs(s[0, 0] - 2) <= neumann_residual_bound(0.5, 60) * 2
    with pytest.raises(NormDomainError):
        neumann_inverse(np.eye(2), 5)


def test_neumann_against_solve():
    rng = random.Random(2)
    for _ in range(30):
        x = randgen.complex_unit_disc(rng, (3, 3))
        x = x * (0.4 / float_opnorm(x))
        s = neumann_inverse(x, 60)
        ref = np.linalg.solve(np.eye(3) - x, np.eye(3))
        assert float_opnorm(s - ref) < 1e-12
        assert float_opnorm((np.eye(3) - x) @ s - np.eye(3)) < 1e-12


def test_neumann_residual_bound_holds():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 4)
        x = randgen.complex_unit_disc(rng, (n, n))
        x = x * (rng.uniform(0.05, 0.9) / max(float_opnorm(x), 1e-300))
        terms = rng.randint(3, 40)
        rep = neumann_residual_check(x, terms)
        assert rep.passed
        assert rep.details["rounding"] < 1e-12


# -- ultrametric ----------------------------------------------------------------------


def pad(x, p=5, N=8):
    return padic_of_rational(Fraction(x), p, N)


def test_ultra_vecnorm_examples():
    w = WeightedUltraNorm.unweighted(5, 2)
    assert ultra_vecnorm([pad(1), pad(5)], w) == UltraNorm.one(5)
    assert ultra_vecnorm([Padic.zero(5, 8), Padic.zero(5, 8)], w).is_zero
    n = 4
    ws = WeightedUltraNorm.shift_weights(5, n)
    for j in range(n):
        e = [pad(1) if i == j else Padic.zero(5, 8) for i in range(n)]
        assert ultra_vecnorm(e, ws) == UltraNorm(5, Fraction(-j, n))


def test_ultra_opnorm_examples():
    f = padic_field(5, 8)
    assert ultra_opnorm(Matrix.zeros(f, 3)).is_zero
    assert ultra_opnorm(Matrix(f, [[5, 1], [25, 5]])) == UltraNorm.one(5)


def test_shift_operator_examples():
    s = shift_operator(3, 7)
    a, b, c = pad(2, 7), pad(3, 7), pad(Fraction(1, 4), 7)
    assert mat_apply(s, [a, b, c]) == (c * 7, a, b)
    assert ultra_opnorm(s) == UltraNorm.one(7)
    with pytest.raises(ValueError):
        shift_operator(1, 7)


@pytest.mark.parametrize("p", [3, 5, 7, 13])
@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_shift_operator_power_and_norm(p, n):
    s = shift_operator(n, p)
    f = s.ring
    assert s**n == Matrix.identity(f, n) * f.coerce(p)
    w = WeightedUltraNorm.shift_weights(p, n)
    res = ultra_opnorm_witness(s, w)
    assert res.norm == UltraNorm(p, Fraction(-1, n))
    assert column_ratio(s, w, res.witness) == res.norm
    # |T^n| = |p| = p^-1 is consistent with submultiplicativity
    assert ultra_opnorm(s**n, w) == UltraNorm(p, -1) <= res.norm**n


def test_weighted_opnorm_brute_force_over_basis_and_samples():
    """The opnorm dominates |Tx|/|x| for sampled x and is attained on a basis vector."""
    rng = random.Random(4)
    p, N, n = 5, 8, 3
    f = padic_field(p, N)
    w = WeightedUltraNorm(p, (0, Fraction(-1, 2), Fraction(1, 3)))
    for _ in range(40):
        t = randgen.padic_matrix(rng, f, n, -1, 2)
        res = ultra_opnorm_witness(t, w)
        ratios = [column_ratio(t, w, l) for l in range(n)]
        assert res.norm == max(ratios)
        for _ in range(10):
            x = [randgen.padic_entry(rng, p, N, -1) for _ in range(n)]
            nx = ultra_vecnorm(x, w)
            if nx.is_zero:
                continue
            assert ultra_vecnorm(mat_apply(t, x), w) <= res.norm * nx


def test_unweighted_opnorm_is_max_entry():
    rng = random.Random(5)
    for _ in range(60):
        p = rng.choice([3, 5, 7])
        f = padic_field(p, 6)
        n = rng.randint(1, 4)
        t = randgen.padic_matrix(rng, f, n, -2, 3)
        w = WeightedUltraNorm.unweighted(p, n)
        best = max((x.abs() for r in t.rows for x in r), default=UltraNorm.zero(p))
        res = ultra_opnorm_witness(t, w)
        assert res.norm == best
        assert column_ratio(t, w, res.witness) == best


def test_ultra_opnorm_submultiplicative():
    rng = random.Random(6)
    f = padic_field(5, 6)
    w = WeightedUltraNorm.shift_weights(5, 3)
    for _ in range(40):
        a = randgen.padic_matrix(rng, f, 3, -1, 2)
        b = randgen.padic_matrix(rng, f, 3, -1, 2)
        assert ultra_opnorm(mat_mul(a, b), w) <= ultra_opnorm(a, w) * ultra_opnorm(b, w)


def test_vector_strict_ultrametric():
    rng = random.Random(7)
    p, N, n = 3, 6, 3
    w = WeightedUltraNorm.shift_weights(p, n)
    for _ in range(200):
        x = [randgen.padic_entry(rng, p, N, -2) for _ in range(n)]
        y = [randgen.padic_entry(rng, p, N, -2) for _ in range(n)]
        nx, ny = ultra_vecnorm(x, w), ultra_vecnorm(y, w)
        nxy = ultra_vecnorm([a + b for a, b in zip(x, y)], w)
        assert nxy <= max(nx, ny)
        if nx != ny:
            assert nxy == max(nx, ny)


def test_mixed_primes_rejected():
    w = WeightedUltraNorm.unweighted(5, 1)
    with pytest.raises(ValueError):
        ultra_vecnorm([pad(1, 3)], w)
    with pytest.raises(ValueError):
        ultra_vecnorm([pad(1), pad(1)], w)
