"""Seeded random inputs for the verification suites and the tests.

Everything takes an explicit :class:`random.Random`; nothing reads
ambient entropy.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from .matrices import Matrix
from .poly import Polynomial, all_indices
from .scalars import FieldDescriptor, Padic, Quaternion, padic_of_rational


def rational(rng: random.Random, bound: int = 9, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def nonzero_rational(rng: random.Random, bound: int = 9, den: int = 6) -> Fraction:
    while True:
        x = rational(rng, bound, den)
        if x:
            return x


def quaternion(rng: random.Random, bound: int = 9, den: int = 6) -> Quaternion:
    return Quaternion(*(rational(rng, bound, den) for _ in range(4)))


def field_scalar(rng: random.Random, field: FieldDescriptor, bound: int = 5):
    if field.tag == "Fp":
        return field.coerce(rng.randrange(field.p))
    return field.coerce(rational(rng, bound, 3))


def alg_coords(rng: random.Random, field: FieldDescriptor, n: int, bound: int = 5) -> list:
    return [field_scalar(rng, field, bound) for _ in range(n)]


def polynomial(
    rng: random.Random,
    ring,
    nvars: int,
    max_degree: int,
    terms: int = 4,
    bound: int = 5,
) -> Polynomial:
    idx = all_indices(nvars, max_degree)
    chosen = rng.sample(idx, min(terms, len(idx)))
    return Polynomial(ring, nvars, {a: ring.coerce(rational(rng, bound, 3)) for a in chosen})


def field_matrix(rng: random.Random, field: FieldDescriptor, n: int, bound: int = 5) -> Matrix:
    return Matrix(field, [[field_scalar(rng, field, bound) for _ in range(n)] for _ in range(n)])


def padic_with_valuation(rng: random.Random, p: int, N: int, min_v: int, max_v: int | None = None) -> Padic:
    """A nonzero p-adic with valuation in ``[min_v, max_v]``."""
    max_v = min_v + 2 if max_v is None else max_v
    v = rng.randint(min_v, max_v)
    while True:
        u = rng.randrange(1, p**N)
        if u % p:
            break
    return padic_of_rational(Fraction(u) * Fraction(p) ** v, p, N)


def padic_entry(rng: random.Random, p: int, N: int, min_v: int, zero_prob: float = 0.2) -> Padic:
    if rng.random() < zero_prob:
        return Padic.zero(p, N)
    return padic_with_valuation(rng, p, N, min_v)


def padic_matrix(rng: random.Random, field: FieldDescriptor, n: int, min_v: int, max_v: int | None = None) -> Matrix:
    rows = [
        [
            Padic.zero(field.p, field.N)
            if rng.random() < 0.2
            else padic_with_valuation(rng, field.p, field.N, min_v, max_v)
            for _ in range(n)
        ]
        for _ in range(n)
    ]
    return Matrix(field, rows)


def complex_unit_disc(rng: random.Random, shape) -> np.ndarray:
    """Entries drawn uniformly from the closed unit disc."""
    size = int(np.prod(shape))
    vals = []
    for _ in range(size):
        r = rng.random() ** 0.5
        t = rng.uniform(0, 2 * np.pi)
        vals.append(complex(r * np.cos(t), r * np.sin(t)))
    return np.array(vals, dtype=complex).reshape(shape)


def float_vector(rng: random.Random, n: int) -> np.ndarray:
    scale = 10 ** rng.uniform(-3, 3)
    return np.array([rng.gauss(0, 1) * scale for _ in range(n)])
