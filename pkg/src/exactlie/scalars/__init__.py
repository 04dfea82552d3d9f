"""Exact scalar domains: rationals, prime fields, quaternions and p-adics."""

from fractions import Fraction

from .padic import Padic, padic_abs, padic_add, padic_inv, padic_mul, padic_of_rational
from .primefield import Fp
from .primes import check_prime, egcd, inv_mod, is_prime, valuation
from .quaternion import Gaussian, Quaternion, quat_conj, quat_inv, quat_mul, quat_norm_sq
from .rings import (
    FieldDescriptor,
    GaussianRing,
    IntegerRing,
    QuaternionRing,
    Ring,
    UnsupportedOperation,
    field_characteristic,
    padic_field,
    prime_field,
    rationals,
)
from .ultranorm import UltraNorm

BigRational = Fraction

__all__ = [
    "BigRational",
    "FieldDescriptor",
    "Fp",
    "Gaussian",
    "GaussianRing",
    "IntegerRing",
    "Padic",
    "Quaternion",
    "QuaternionRing",
    "Ring",
    "UltraNorm",
    "UnsupportedOperation",
    "check_prime",
    "egcd",
    "field_characteristic",
    "inv_mod",
    "is_prime",
    "padic_abs",
    "padic_add",
    "padic_field",
    "padic_inv",
    "padic_mul",
    "padic_of_rational",
    "prime_field",
    "quat_conj",
    "quat_inv",
    "quat_mul",
    "quat_norm_sq",
    "rationals",
    "valuation",
]
