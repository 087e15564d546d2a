"""Dense univariate polynomials over Z_p.

A polynomial is a tuple of coefficients in ``[0, p)``, constant term first,
with no trailing zeros; the zero polynomial is ``()``.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .arith import is_prime

Poly = tuple[int, ...]

MAX_FACTOR_DEGREE = 8


def trim(coeffs: Sequence[int], p: int) -> Poly:
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(f: Poly) -> int:
    """Degree of ``f``; -1 for the zero polynomial."""
    return len(f) - 1


def add(f: Poly, g: Poly, p: int) -> Poly:
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], p)


def sub(f: Poly, g: Poly, p: int) -> Poly:
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)], p)


def mul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out, p)


def power(f: Poly, e: int, p: int) -> Poly:
    result: Poly = (1,)
    for _ in range(e):
        result = mul(result, f, p)
    return result


def divmod_poly(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    """Quotient and remainder of ``f`` by nonzero ``g`` over Z_p."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    inv_lead = pow(g[-1], -1, p)
    rem = list(f)
    dg = degree(g)
    quot = [0] * max(len(f) - dg, 0)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k] * inv_lead % p
        if c:
            quot[k - dg] = c
            for i, b in enumerate(g):
                rem[k - dg + i] = (rem[k - dg + i] - c * b) % p
    return trim(quot, p), trim(rem[:dg], p)


def evaluate(f: Poly, a: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * a + c) % p
    return acc


def monic_polys(p: int, deg: int) -> Iterator[Poly]:
    """All monic polynomials of degree ``deg``, ordered lexicographically on the
    coefficient tuple read from the constant term up."""
    for low in itertools.product(range(p), repeat=deg):
        yield tuple(low) + (1,)


def is_irreducible(f: Poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    d = degree(f)
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for g in monic_polys(p, k):
            if not divmod_poly(f, g, p)[1]:
                return False
    return True


def least_irreducible(p: int, deg: int) -> Poly:
    """Lexicographically least monic irreducible of the given degree."""
    for f in monic_polys(p, deg):
        if is_irreducible(f, p):
            return f
    raise ValueError(f"no irreducible polynomial of degree {deg} over Z_{p}")  # pragma: no cover


def factor_poly_mod_p(p: int, f: Sequence[int]) -> list[tuple[Poly, int]]:
    """Factor a monic polynomial over Z_p into monic irreducibles.

    Returns ``(factor, multiplicity)`` pairs ordered by degree, then
    lexicographically.  Every factor is re-checked for irreducibility.

    >>> factor_poly_mod_p(2, (0, 1, 1))
    [((0, 1), 1), ((1, 1), 1)]
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    f = trim(f, p)
    if degree(f) < 1 or f[-1] != 1:
        raise ValueError("expected a monic polynomial of degree >= 1")
    if degree(f) > MAX_FACTOR_DEGREE:
        raise ValueError(f"degree {degree(f)} exceeds the factoring cap {MAX_FACTOR_DEGREE}")

    found: list[tuple[Poly, int]] = []
    rest = f
    k = 1
    while 2 * k <= degree(rest):
        for g in monic_polys(p, k):
            mult = 0
            while True:
                q, r = divmod_poly(rest, g, p)
                if r:
                    break
                rest, mult = q, mult + 1
            if mult:
                found.append((g, mult))
        k += 1
    if degree(rest) >= 1:
        # no factor of degree <= deg/2 remains, so the cofactor is irreducible
        found.append((rest, 1))
    found.sort(key=lambda gm: (degree(gm[0]), gm[0]))

    check: Poly = (1,)
    for g, m in found:
        if not is_irreducible(g, p):  # pragma: no cover
            raise AssertionError(f"factor {g} is reducible")
        check = mul(check, power(g, m, p), p)
    if check != f:  # pragma: no cover
        raise AssertionError("factorization does not multiply back to the input")
    return found


def format_poly(f: Poly, var: str = "x") -> str:
    """Render as e.g. ``x^2+2x+1``; zero renders as ``0``."""
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms)
