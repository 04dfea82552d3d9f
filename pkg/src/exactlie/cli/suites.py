"""Named verification suites.

Each suite draws its inputs from ``random.Random(seed)`` and returns a
:class:`SuiteReport`; identical specs give identical reports.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .. import randgen
from ..algebra import (
    ad_matrix,
    center_basis,
    derived_ideal_basis,
    is_derivation,
    is_ideal,
    mult,
    operator_bracket,
    quotient_is_abelian,
    verify_lie,
)
from ..exp import (
    DomainError,
    det_exp_tr_report,
    exp_padic,
    vp_factorial,
)
from ..library import load_algebra
from ..matrices import Matrix, gl_bracket, mat_mul
from ..norms import (
    WeightedUltraNorm,
    column_ratio,
    float_opnorm,
    neumann_residual_check,
    pnorm_inequality_check,
    shift_operator,
    ultra_opnorm,
    ultra_opnorm_witness,
    ultra_vecnorm,
)
from ..poly import PowerSeries, SeriesRing
from ..scalars import (
    Padic,
    Quaternion,
    UltraNorm,
    check_prime,
    padic_field,
    prime_field,
    quat_conj,
    quat_mul,
    quat_norm_sq,
    rationals,
)
from ..vfields import VectorFieldPoly, matrix_to_vf, vf_apply, vf_bracket

SUITES: dict[str, Callable] = {}

LIE_ALGEBRAS = ("so3", "sl2", "heisenberg", "gl1", "gl2", "gl3", "gl4", "abelian2", "abelian3")


class UsageError(ValueError):
    """Bad suite name or parameters (exit code 2)."""


@dataclass
class SuiteSpec:
    name: str
    seed: int = 0
    trials: int | None = None
    dim: int | None = None
    prime: int | None = None
    precision: int | None = None
    truncation: int | None = None
    algebra: str | None = None
    mode: str | None = None

    def params(self) -> dict:
        out = {
            "seed": self.seed,
            "trials": self.trials,
            "dim": self.dim,
            "prime": self.prime,
            "precision": self.precision,
            "truncation": self.truncation,
            "algebra": self.algebra,
            "mode": self.mode,
        }
        return {k: v for k, v in out.items() if v is not None}


@dataclass
class SuiteReport:
    suite: str
    params: dict
    passed: bool
    witnesses: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)
    timing: float = 0.0

    def to_json(self, include_timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "params": self.params,
            "pass": self.passed,
            "checks": self.checks,
        }
        if not self.passed:
            out["witness"] = sorted(self.witnesses, key=_canonical)
        if include_timing:
            out["timing"] = round(self.timing, 6)
        return out


def _canonical(w) -> str:
    import json

    return json.dumps(w, sort_keys=True, default=str)


class _Tally:
    """Counts checks per label and keeps the first few failures."""

    MAX_WITNESSES = 10

    def __init__(self):
        self.checks: dict[str, dict[str, int]] = {}
        self.witnesses: list = []

    def record(self, label: str, ok: bool, witness=None):
        c = self.checks.setdefault(label, {"run": 0, "failed": 0})
        c["run"] += 1
        if not ok:
            c["failed"] += 1
            if len(self.witnesses) < self.MAX_WITNESSES:
                self.witnesses.append({"check": label, "input": witness})

    @property
    def passed(self) -> bool:
        return all(c["failed"] == 0 for c in self.checks.values())


def suite(name: str):
    def deco(fn):
        SUITES[name] = fn
        return fn

    return deco


def _trials(spec: SuiteSpec, default: int) -> int:
    t = default if spec.trials is None else spec.trials
    if t < 1:
        raise UsageError("trials must be positive")
    return t


def _field_for(spec: SuiteSpec):
    if spec.prime is None or spec.prime == 0:
        return rationals()
    try:
        return prime_field(spec.prime)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _prime(spec: SuiteSpec, default: int) -> int:
    p = default if spec.prime is None else spec.prime
    try:
        return check_prime(p)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _load(ref: str):
    try:
        return load_algebra(ref)
    except (FileNotFoundError, KeyError) as exc:
        raise UsageError(str(exc)) from None


# -- suites ------------------------------------------------------------------


@suite("lie-axioms")
def _lie_axioms(spec: SuiteSpec, rng: random.Random, t: _Tally):
    names = [spec.algebra] if spec.algebra else list(LIE_ALGEBRAS)
    fields = [_field_for(spec)] if spec.prime is not None else [rationals(), prime_field(7), prime_field(2)]
    for name in names:
        base = _load(name)
        for fld in fields:
            sc = base if fld == base.field else base.over(fld)
            rep = verify_lie(sc)
            t.record(
                f"lie:{name}:{fld}",
                rep.passed,
                {"algebra": name, "field": str(fld), "failures": rep.witnesses},
            )


@suite("adjoint")
def _adjoint(spec: SuiteSpec, rng: random.Random, t: _Tally):
    names = [spec.algebra] if spec.algebra else ["sl2", "gl3"]
    fld = _field_for(spec)
    trials = _trials(spec, 200)
    for name in names:
        sc = _load(name)
        if fld != sc.field:
            sc = sc.over(fld)
        for _ in range(trials):
            x = sc.element(randgen.alg_coords(rng, fld, sc.dim))
            y = sc.element(randgen.alg_coords(rng, fld, sc.dim))
            ax, ay = ad_matrix(sc, x), ad_matrix(sc, y)
            ok = ad_matrix(sc, mult(sc, x, y)) == operator_bracket(ax, ay)
            wit = {"algebra": name, "x": [str(c) for c in x.coords], "y": [str(c) for c in y.coords]}
            t.record(f"homomorphism:{name}", ok, wit)
            t.record(f"ad-derivation:{name}", is_derivation(ax, sc), wit)
        for z in center_basis(sc):
            t.record(f"center-kernel:{name}", ad_matrix(sc, z).is_zero(), [str(c) for c in z.coords])
        d = derived_ideal_basis(sc)
        t.record(f"derived-ideal:{name}", is_ideal(d, sc) and quotient_is_abelian(sc, d), name)


@suite("derivations")
def _derivations(spec: SuiteSpec, rng: random.Random, t: _Tally):
    names = [spec.algebra] if spec.algebra else ["sl2", "heisenberg", "so3", "gl2"]
    fld = _field_for(spec)
    trials = _trials(spec, 50)
    for name in names:
        sc = _load(name)
        if fld != sc.field:
            sc = sc.over(fld)
        t.record(f"zero:{name}", is_derivation(Matrix.zeros(fld, sc.dim), sc), name)
        for _ in range(trials):
            x = sc.element(randgen.alg_coords(rng, fld, sc.dim))
            y = sc.element(randgen.alg_coords(rng, fld, sc.dim))
            d1, d2 = ad_matrix(sc, x), ad_matrix(sc, y)
            c = randgen.field_scalar(rng, fld)
            combo = d1 * c + d2
            wit = {"algebra": name, "x": [str(v) for v in x.coords], "y": [str(v) for v in y.coords]}
            t.record(f"linear-combination:{name}", is_derivation(combo, sc), wit)
            t.record(f"commutator:{name}", is_derivation(operator_bracket(d1, combo), sc), wit)


def _random_field(rng, ring, n, deg):
    return VectorFieldPoly([randgen.polynomial(rng, ring, n, deg, terms=3) for _ in range(n)])


@suite("vfield-bracket")
def _vfield_bracket(spec: SuiteSpec, rng: random.Random, t: _Tally):
    trials = _trials(spec, 100)
    q = rationals()
    max_n = spec.dim or 3
    for _ in range(trials):
        n = rng.randint(1, max_n)
        v, w = _random_field(rng, q, n, 3), _random_field(rng, q, n, 3)
        f = randgen.polynomial(rng, q, n, 3, terms=4)
        lhs = vf_apply(vf_bracket(v, w), f)
        rhs = vf_apply(v, vf_apply(w, f)) - vf_apply(w, vf_apply(v, f))
        t.record("operator-commutator", lhs == rhs, {"V": v.to_json(), "W": w.to_json(), "f": str(f)})
    for _ in range(trials):
        a = randgen.field_matrix(rng, q, 2)
        b = randgen.field_matrix(rng, q, 2)
        ok = matrix_to_vf(gl_bracket(a, b)) == -vf_bracket(matrix_to_vf(a), matrix_to_vf(b))
        t.record("matrix-anti-homomorphism", ok, {"A": str(a), "B": str(b)})
    for _ in range(max(1, trials // 5)):
        n = rng.randint(1, max_n)
        u, v, w = (_random_field(rng, q, n, 2) for _ in range(3))
        jac = (
            vf_bracket(u, vf_bracket(v, w))
            + vf_bracket(v, vf_bracket(w, u))
            + vf_bracket(w, vf_bracket(u, v))
        )
        t.record("jacobi", jac.is_zero(), {"U": u.to_json(), "V": v.to_json(), "W": w.to_json()})


def _series_matrix(rng, n, D):
    ring = SeriesRing(rationals(), 1, D)
    t1 = PowerSeries.var(rationals(), 1, D, 1)
    rows = [[t1 * randgen.rational(rng, 5, 4) for _ in range(n)] for _ in range(n)]
    return Matrix(ring, rows)


@suite("det-exp-tr")
def _det_exp_tr(spec: SuiteSpec, rng: random.Random, t: _Tally):
    modes = [spec.mode] if spec.mode and spec.mode != "all" else ["float", "series", "padic"]
    for mode in modes:
        if mode == "float":
            for _ in range(_trials(spec, 100)):
                n = spec.dim or rng.choice([2, 3, 4])
                a = randgen.complex_unit_disc(rng, (n, n))
                rep = det_exp_tr_report(a, "float")
                t.record("float", rep.difference < 1e-9, {"A": [[repr(x) for x in r] for r in a.tolist()]})
        elif mode == "series":
            D = spec.truncation or 6
            for _ in range(_trials(spec, 50)):
                n = spec.dim or rng.choice([2, 3])
                m = _series_matrix(rng, n, D)
                rep = det_exp_tr_report(m, "series")
                t.record("series", rep.equal, {"M": str(m), "D": D})
        elif mode == "padic":
            p = _prime(spec, 5)
            N = spec.precision or 6
            fld = padic_field(p, N)
            min_v = 2 if p == 2 else 1
            for _ in range(_trials(spec, 50)):
                n = spec.dim or 2
                m = randgen.padic_matrix(rng, fld, n, min_v)
                rep = det_exp_tr_report(m, "padic")
                t.record("padic", rep.equal, {"M": str(m)})
        else:
            raise UsageError(f"unknown det-exp-tr mode {mode!r}")


@suite("padic-exp")
def _padic_exp(spec: SuiteSpec, rng: random.Random, t: _Tally):
    primes = [_prime(spec, 5)] if spec.prime is not None else [5, 7]
    N = spec.precision or 6
    trials = _trials(spec, 100)
    for p in primes:
        min_v = 2 if p == 2 else 1
        one = Padic.one(p, N)
        for _ in range(trials):
            a = randgen.padic_with_valuation(rng, p, N, min_v)
            b = randgen.padic_with_valuation(rng, p, N, min_v)
            wit = {"p": p, "a": str(a), "b": str(b)}
            t.record(f"homomorphism:Q{p}", exp_padic(a + b) == exp_padic(a) * exp_padic(b), wit)
            t.record(f"inverse:Q{p}", exp_padic(a) * exp_padic(-a) == one, wit)
            u = randgen.padic_with_valuation(rng, p, N, 0, 0)
            try:
                exp_padic(u)
                rejected = False
            except DomainError:
                rejected = True
            t.record(f"domain-rejection:Q{p}", rejected, {"p": p, "a": str(u)})
        t.record(f"exp-zero:Q{p}", exp_padic(Padic.zero(p, N)) == one, p)


@suite("ultrametric-norms")
def _ultrametric(spec: SuiteSpec, rng: random.Random, t: _Tally):
    primes = [_prime(spec, 5)] if spec.prime is not None else [3, 5, 7, 13]
    max_n = spec.dim or 6
    N = spec.precision or 8
    for p in primes:
        for n in range(2, max_n + 1):
            s = shift_operator(n, p, N)
            fld = s.ring
            t.record("shift-power", s**n == Matrix.identity(fld, n) * fld.coerce(p), {"n": n, "p": p})
            w = WeightedUltraNorm.shift_weights(p, n)
            t.record("shift-opnorm", ultra_opnorm(s, w) == UltraNorm(p, Fraction(-1, n)), {"n": n, "p": p})
    trials = _trials(spec, 200)
    for _ in range(trials):
        p = rng.choice(primes)
        n = rng.randint(1, 4)
        fld = padic_field(p, N)
        m = randgen.padic_matrix(rng, fld, n, -2, 3)
        w = WeightedUltraNorm.unweighted(p, n)
        res = ultra_opnorm_witness(m, w)
        max_entry = max((x.abs() for r in m.rows for x in r), default=UltraNorm.zero(p))
        wit = {"p": p, "T": str(m)}
        t.record("opnorm-max-entry", res.norm == max_entry, wit)
        t.record("opnorm-attained", column_ratio(m, w, res.witness) == res.norm, wit)
        m2 = randgen.padic_matrix(rng, fld, n, -2, 3)
        t.record(
            "opnorm-submultiplicative",
            ultra_opnorm(mat_mul(m, m2), w) <= ultra_opnorm(m, w) * ultra_opnorm(m2, w),
            {"p": p, "S": str(m), "T": str(m2)},
        )
        x = [randgen.padic_entry(rng, p, N, -2) for _ in range(n)]
        y = [randgen.padic_entry(rng, p, N, -2) for _ in range(n)]
        nx, ny = ultra_vecnorm(x, w), ultra_vecnorm(y, w)
        nxy = ultra_vecnorm([a + b for a, b in zip(x, y)], w)
        ok = nxy <= max(nx, ny) and (nx == ny or nxy == max(nx, ny))
        t.record("vector-ultrametric", ok, {"x": [str(a) for a in x], "y": [str(b) for b in y]})


@suite("factorial-valuation")
def _factorial(spec: SuiteSpec, rng: random.Random, t: _Tally):
    top = spec.dim or 10_000
    primes = [p for p in range(2, 98) if all(p % q for q in range(2, int(p**0.5) + 1))]
    if spec.prime is not None:
        primes = [_prime(spec, 2)]
    for p in primes:
        bad = [n for n in range(1, top + 1) if not vp_factorial(n, p) * (p - 1) < n]
        t.record(f"strict-bound:p={p}", not bad, {"p": p, "n": bad[:5]})
        bad_exact = [
            n for n in range(0, min(top, 300) + 1)
            if _brute_vp_factorial(n, p) != vp_factorial(n, p)
        ]
        t.record(f"legendre-vs-brute:p={p}", not bad_exact, {"p": p, "n": bad_exact[:5]})


def _brute_vp_factorial(n: int, p: int) -> int:
    f = math.factorial(n)
    v = 0
    while f % p == 0:
        f //= p
        v += 1
    return v


@suite("quaternion")
def _quaternion(spec: SuiteSpec, rng: random.Random, t: _Tally):
    trials = _trials(spec, 10_000)
    for _ in range(trials):
        x, y = randgen.quaternion(rng), randgen.quaternion(rng)
        xy = quat_mul(x, y)
        wit = {"x": str(x), "y": str(y)}
        t.record("norm-multiplicative", quat_norm_sq(xy) == quat_norm_sq(x) * quat_norm_sq(y), wit)
        t.record("conjugate-antimultiplicative", quat_conj(xy) == quat_mul(quat_conj(y), quat_conj(x)), wit)
        w = Quaternion(0, x.ci, x.cj, x.ck)
        t.record("imaginary-square", quat_mul(w, w) == Quaternion(-quat_norm_sq(w)), {"w": str(w)})
        t.record("x-plus-conjugate-real", (x + quat_conj(x)).is_real(), {"x": str(x)})


@suite("pnorm-inequalities")
def _pnorm(spec: SuiteSpec, rng: random.Random, t: _Tally):
    trials = _trials(spec, 10_000)
    ps = [1.0, 1.5, 2.0, 3.0, math.inf]
    max_n = spec.dim or 16
    for _ in range(trials):
        n = rng.randint(1, max_n)
        v = randgen.float_vector(rng, n)
        p, q = sorted(rng.sample(ps, 2)) if rng.random() < 0.9 else (rng.choice(ps),) * 2
        rep = pnorm_inequality_check(v, p, q)
        t.record("comparison", rep.passed, {"v": [repr(x) for x in v], "p": repr(p), "q": repr(q)})
    for _ in range(max(1, trials // 100)):
        n = rng.randint(1, 4)
        x = np.array(randgen.complex_unit_disc(rng, (n, n)))
        target = rng.uniform(0.05, 0.9)
        x = x * (target / max(float_opnorm(x), 1e-300))
        terms = rng.randint(5, 60)
        rep = neumann_residual_check(x, terms)
        t.record("neumann-residual", rep.passed, {"terms": terms, "norm": repr(target)})

def run_suite(spec: SuiteSpec) -> SuiteReport:
    if spec.name not in SUITES:
        raise UsageError(f"unknown suite {spec.name!r}; choose from {', '.join(sorted(SUITES))}")
    rng = random.Random(spec.seed)
    tally = _Tally()
    start = time.perf_counter()
    SUITES[spec.name](spec, rng, tally)
    elapsed = time.perf_counter() - start
    return SuiteReport(spec.name, spec.params(), tally.passed, tally.witnesses, tally.checks, elapsed)

