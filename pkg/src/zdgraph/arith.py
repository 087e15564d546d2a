"""Small integer helpers: primality, factorization, sieving."""

from __future__ import annotations

import numpy as np

SIEVE_LIMIT = 10**7


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` by trial division, primes ascending."""
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, a)`` with ``n == p**a`` and ``a >= 1``, or None."""
    if n < 2:
        return None
    f = factorint(n)
    if len(f) != 1:
        return None
    ((p, a),) = f.items()
    return p, a


def is_composite(n: int) -> bool:
    return n > 3 and not is_prime(n)


def sieve(limit: int) -> np.ndarray:
    """Boolean primality table for ``0..limit``."""
    if limit > SIEVE_LIMIT:
        raise ValueError(f"sieve bound {SIEVE_LIMIT} exceeded")
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = False
    return flags
