"""Acceptance criteria, one test per criterion.

Each test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line; the lines are
also collected and repeated in the pytest terminal summary.  Suites run through
the same entry point the command line uses, and the check counts are
asserted so a suite cannot quietly run fewer trials than required.
"""

import os
import random
import subprocess
import sys

import pytest

from exactlie import randgen
from exactlie.algebra import verify_lie
from exactlie.cli.suites import SuiteSpec, run_suite
from exactlie.exp import exp_series
from exactlie.library import load_algebra
from exactlie.matrices import Matrix, MatrixRing
from exactlie.poly import Polynomial, PowerSeries, series_inverse, series_mul
from exactlie.scalars import prime_field, rationals

Q = rationals()
SEED = 42
RESULTS: list[str] = []


def report(n: int, ok: bool, detail: str = "") -> None:
    line = f"ACCEPTANCE {n:>2} {'PASS' if ok else 'FAIL'} {detail}".rstrip()
    RESULTS.append(line)
    print(line)
    assert ok, line


def run(name: str, **kw):
    return run_suite(SuiteSpec(name, seed=SEED, **kw))


def counts(rep, prefix: str) -> tuple[int, int]:
    run_, failed = 0, 0
    for label, c in rep.checks.items():
        if label == prefix or label.startswith(prefix + ":"):
            run_ += c["run"]
            failed += c["failed"]
    return run_, failed


def suite_ok(rep, expected: dict[str, int]) -> tuple[bool, str]:
    """Suite passed and each check family ran at least the required count."""
    parts, ok = [], rep.passed
    for prefix, need in expected.items():
        r, f = counts(rep, prefix)
        ok = ok and r >= need and f == 0
        parts.append(f"{prefix}={r - f}/{r}")
    return ok, " ".join(parts)


# 1 -------------------------------------------------------------------------


def test_c01_lie_axioms():
    fields = [Q, prime_field(7), prime_field(2)]
    names = ["so3", "sl2", "heisenberg", "gl1", "gl2", "gl3", "gl4"]
    bad = []
    for name in names:
        base = load_algebra(name)
        for f in fields:
            sc = base if f == base.field else base.over(f)
            if not verify_lie(sc).passed:
                bad.append(f"{name}/{f}")
    broken = verify_lie(load_algebra("broken"))
    witnessed = not broken.passed and bool(broken.witnesses)
    report(1, not bad and witnessed, f"tables={len(names) * len(fields) - len(bad)}/{len(names) * len(fields)} broken_witness={broken.witnesses[:1]}")


# 2 -------------------------------------------------------------------------


def test_c02_adjoint():
    rep = run("adjoint", trials=200)
    ok, detail = suite_ok(
        rep,
        {"homomorphism:sl2": 200, "homomorphism:gl3": 200, "ad-derivation:sl2": 200, "ad-derivation:gl3": 200},
    )
    report(2, ok, detail)


# 3 -------------------------------------------------------------------------


def test_c03_vector_fields():
    rep = run("vfield-bracket", trials=100)
    ok, detail = suite_ok(rep, {"operator-commutator": 100, "matrix-anti-homomorphism": 100})
    report(3, ok, detail)


# 4 -------------------------------------------------------------------------


def test_c04_det_exp_tr():
    rep = run("det-exp-tr", mode="all")
    ok, detail = suite_ok(rep, {"float": 100, "series": 50, "padic": 50})
    report(4, ok, detail)


# 5 -------------------------------------------------------------------------


def test_c05_factorial_valuation():
    rep = run("factorial-valuation")
    primes = [p for p in range(2, 98) if all(p % d for d in range(2, int(p**0.5) + 1))]
    need = {f"strict-bound:p={p}": 1 for p in primes}
    ok, _ = suite_ok(rep, need)
    r, f = counts(rep, "strict-bound")
    report(5, ok, f"primes={len(primes)} strict-bound={r - f}/{r}")


# 6 -------------------------------------------------------------------------


def test_c06_padic_exp():
    rep = run("padic-exp")
    need = {}
    for p in (5, 7):
        need |= {f"homomorphism:Q{p}": 100, f"inverse:Q{p}": 100, f"domain-rejection:Q{p}": 1}
    ok, detail = suite_ok(rep, need)
    report(6, ok, detail)


# 7 -------------------------------------------------------------------------


def test_c07_ultrametric_norms():
    rep = run("ultrametric-norms")
    grid = 4 * 5  # p in {3,5,7,13}, n in 2..6
    ok, detail = suite_ok(
        rep,
        {"shift-power": grid, "shift-opnorm": grid, "opnorm-max-entry": 200, "opnorm-attained": 200},
    )
    report(7, ok, detail)


# 8 -------------------------------------------------------------------------


def test_c08_norm_inequalities():
    rep = run("pnorm-inequalities", trials=10_000)
    ok, detail = suite_ok(rep, {"comparison": 10_000, "neumann-residual": 100})
    report(8, ok, detail)


# 9 -------------------------------------------------------------------------


def test_c09_quaternions():
    rep = run("quaternion", trials=10_000)
    ok, detail = suite_ok(
        rep,
        {"norm-multiplicative": 10_000, "conjugate-antimultiplicative": 10_000, "imaginary-square": 10_000},
    )
    report(9, ok, detail)


# 10 ------------------------------------------------------------------------


def _zero_const(rng, D):
    p = randgen.polynomial(rng, Q, 1, D, terms=3)
    return p - Polynomial.constant(Q, 1, p.constant_term())


def _matrix_series(coeff: Matrix, p: Polynomial, D: int) -> PowerSeries:
    ring = MatrixRing(Q, coeff.n)
    return PowerSeries(Polynomial(ring, 1, {k: coeff * c for k, c in p.terms()}), D)


def test_c10_power_series():
    D = 12
    t = PowerSeries.var(Q, 1, D, 1)
    one = PowerSeries.constant(Q, 1, D, 1)
    geometric = PowerSeries.from_terms(Q, 1, D, {(k,): 1 for k in range(D + 1)})
    inverse_ok = series_inverse(one - t) == geometric

    rng = random.Random(SEED)
    D = 8
    passed = 0
    # 50 pairs over Q in two variables (commutative coefficients)
    for _ in range(50):
        f = randgen.polynomial(rng, Q, 2, D, terms=4)
        g = randgen.polynomial(rng, Q, 2, D, terms=4)
        f = PowerSeries(f - Polynomial.constant(Q, 2, f.constant_term()), D)
        g = PowerSeries(g - Polynomial.constant(Q, 2, g.constant_term()), D)
        passed += exp_series(f + g) == series_mul(exp_series(f), exp_series(g))
    # 50 commuting pairs with 2x2 matrix coefficients: B is a polynomial in A
    for _ in range(50):
        a = randgen.field_matrix(rng, Q, 2)
        b = a * randgen.rational(rng) + Matrix.identity(Q, 2) * randgen.rational(rng)
        f, g = _matrix_series(a, _zero_const(rng, D), D), _matrix_series(b, _zero_const(rng, D), D)
        passed += exp_series(f + g) == series_mul(exp_series(f), exp_series(g))
    # control: the identity genuinely needs commutation
    e12, e21 = Matrix.unit(Q, 2, 1, 2), Matrix.unit(Q, 2, 2, 1)
    tt = Polynomial.var(Q, 1, 1)
    f, g = _matrix_series(e12, tt, D), _matrix_series(e21, tt, D)
    control = exp_series(f + g) != series_mul(exp_series(f), exp_series(g))

    report(10, inverse_ok and passed == 100 and control, f"geometric={inverse_ok} exp_pairs={passed}/100 noncommuting_control={control}")


# 11 ------------------------------------------------------------------------

DETERMINISM_RUNS = [
    ["lie-axioms"],
    ["adjoint", "--trials", "200"],
    ["derivations"],
    ["vfield-bracket", "--trials", "100"],
    ["det-exp-tr", "--mode", "all"],
    ["padic-exp"],
    ["ultrametric-norms"],
    ["factorial-valuation"],
    ["quaternion", "--trials", "10000"],
    ["pnorm-inequalities", "--trials", "10000"],
]


def _cli(args, hashseed):
    env = dict(os.environ, PYTHONHASHSEED=hashseed)
    cmd = [sys.executable, "-m", "exactlie", "verify", *args, "--seed", str(SEED), "--format", "json"]
    return subprocess.Popen(cmd, stdout=subprocess.PIPE, stderr=subprocess.PIPE, env=env)


def test_c11_cli_determinism():
    procs = [(args, _cli(args, "1"), _cli(args, "2")) for args in DETERMINISM_RUNS]
    same = 0
    mismatched = []
    for args, a, b in procs:
        out_a, _ = a.communicate()
        out_b, _ = b.communicate()
        if out_a and out_a == out_b and a.returncode == b.returncode == 0:
            same += 1
        else:
            mismatched.append(args[0])
    report(11, not mismatched, f"identical={same}/{len(DETERMINISM_RUNS)} {' '.join(mismatched)}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
