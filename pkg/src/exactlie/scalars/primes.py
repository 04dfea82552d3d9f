"""Deterministic primality and small integer helpers."""

from __future__ import annotations

PRIME_LIMIT = 2**31

# Deterministic Miller-Rabin witnesses for n < 3,215,031,751.
_WITNESSES = (2, 3, 5, 7)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_prime(p: int) -> int:
    """Return ``p`` if it is a prime below 2**31, otherwise raise ValueError."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise TypeError(f"prime must be an int, got {type(p).__name__}")
    if p >= PRIME_LIMIT:
        raise ValueError(f"prime {p} exceeds the supported limit 2**31")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, x, y) with a*x + b*y == g == gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def inv_mod(a: int, m: int) -> int:
    g, x, _ = egcd(a % m, m)
    if g != 1:
        raise ZeroDivisionError(f"{a} is not invertible modulo {m}")
    return x % m


def valuation(n: int, p: int) -> int:
    """Exponent of ``p`` in the nonzero integer ``n``."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v
