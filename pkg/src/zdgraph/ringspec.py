"""Ring specifications and the text grammar that produces them.

Grammar (whitespace is insignificant)::

    spec   := factor ("x" factor)*
    factor := "Z" int | "GF(" int ")" | "Z" prime "[x]/(" poly ")"
    poly   := monic polynomial in x, e.g. "x^2+x+1"
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Union

from . import polynomials as P
from .arith import is_prime, prime_power

DEFAULT_ORDER_CAP = 4096


class RingSpecError(ValueError):
    """Malformed or unsupported ring specification."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class OrderCapError(RingSpecError):
    pass


def order_cap() -> int:
    """Current element-count cap; ``ZDG_ORDER_CAP`` overrides the default."""
    raw = os.environ.get("ZDG_ORDER_CAP")
    return int(raw) if raw else DEFAULT_ORDER_CAP


@dataclass(frozen=True)
class Zn:
    modulus: int

    def __post_init__(self):
        if int(self.modulus) < 2:
            raise RingSpecError(f"Z_n needs n >= 2, got {self.modulus}")
        object.__setattr__(self, "modulus", int(self.modulus))

    @property
    def order(self) -> int:
        return self.modulus


@dataclass(frozen=True)
class QuotientPoly:
    """Z_p[x]/(f) with f monic, stored constant term first."""

    prime: int
    modulus_poly: tuple[int, ...]

    def __post_init__(self):
        p = int(self.prime)
        if not is_prime(p):
            raise RingSpecError(f"polynomial quotients need a prime base, got {p}")
        raw = tuple(int(c) for c in self.modulus_poly)
        if any(not 0 <= c < p for c in raw):
            raise RingSpecError(f"coefficients of {raw} must lie in [0, {p})")
        f = P.trim(raw, p)
        if P.degree(f) < 1:
            raise RingSpecError("modulus polynomial must have degree >= 1")
        if f[-1] != 1:
            raise RingSpecError(f"modulus polynomial {P.format_poly(f)} is not monic")
        object.__setattr__(self, "prime", p)
        object.__setattr__(self, "modulus_poly", f)

    @property
    def degree(self) -> int:
        return P.degree(self.modulus_poly)

    @property
    def order(self) -> int:
        return self.prime**self.degree


@dataclass(frozen=True)
class Product:
    factors: tuple["RingSpec", ...]

    def __post_init__(self):
        flat: list[RingSpec] = []
        for f in self.factors:
            if isinstance(f, Product):
                flat.extend(f.factors)
            elif isinstance(f, (Zn, QuotientPoly)):
                flat.append(f)
            else:
                raise TypeError(f"not a ring spec: {f!r}")
        if len(flat) < 2:
            raise RingSpecError("a product needs at least two factors")
        object.__setattr__(self, "factors", tuple(flat))

    @property
    def order(self) -> int:
        out = 1
        for f in self.factors:
            out *= f.order
        return out


RingSpec = Union[Zn, QuotientPoly, Product]


def order(spec: RingSpec) -> int:
    return spec.order


def check_order(spec: RingSpec, cap: int | None = None) -> None:
    cap = order_cap() if cap is None else cap
    if spec.order > cap:
        raise OrderCapError(f"ring of order {spec.order} exceeds the cap {cap}")


def factors_of(spec: RingSpec) -> tuple[RingSpec, ...]:
    return spec.factors if isinstance(spec, Product) else (spec,)


def format_spec(spec: RingSpec) -> str:
    """Canonical text for ``spec``; ``parse_ring_spec`` reads it back unchanged."""
    if isinstance(spec, Zn):
        return f"Z{spec.modulus}"
    if isinstance(spec, QuotientPoly):
        return f"Z{spec.prime}[x]/({P.format_poly(spec.modulus_poly)})"
    return " x ".join(format_spec(f) for f in spec.factors)


def galois_field(q: int) -> RingSpec:
    """GF(q): Z_p for prime q, otherwise Z_p[x]/(f) with the least irreducible f."""
    pp = prime_power(q)
    if pp is None:
        raise RingSpecError(f"GF({q}) needs a prime-power order")
    p, k = pp
    if k == 1:
        return Zn(p)
    if k > P.MAX_FACTOR_DEGREE:
        raise RingSpecError(f"GF({q}) extension degree {k} exceeds {P.MAX_FACTOR_DEGREE}")
    return QuotientPoly(p, P.least_irreducible(p, k))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> RingSpecError:
        return RingSpecError(f"{message} in {self.text!r}", self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str) -> None:
        for ch in literal:
            if self.peek() != ch:
                found = self.peek() or "end of input"
                raise self.error(f"expected {ch!r}, found {found!r}")
            self.pos += 1

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def spec(self) -> RingSpec:
        parts = [self.factor()]
        while self.peek() in ("x", "×"):
            self.pos += 1
            parts.append(self.factor())
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return parts[0] if len(parts) == 1 else Product(tuple(parts))

    def factor(self) -> RingSpec:
        start = self.pos
        if self.peek() == "G":
            self.expect("GF(")
            q = self.integer()
            self.expect(")")
            try:
                return galois_field(q)
            except RingSpecError as exc:
                raise RingSpecError(str(exc), start) from None
        self.expect("Z")
        n = self.integer()
        if self.peek() != "[":
            try:
                return Zn(n)
            except RingSpecError as exc:
                raise RingSpecError(str(exc), start) from None
        self.expect("[x]/(")
        if not is_prime(n):
            raise RingSpecError(f"polynomial quotients need a prime base, got {n}", start)
        poly_start = self.pos
        f = self.poly(n)
        self.expect(")")
        if not f or f[-1] != 1:
            raise RingSpecError(f"modulus polynomial {P.format_poly(f)} is not monic", poly_start)
        return QuotientPoly(n, f)

    def poly(self, p: int) -> P.Poly:
        coeffs: dict[int, int] = {}
        sign = -1 if self.accept("-") else 1
        while True:
            c, e = self.term()
            coeffs[e] = coeffs.get(e, 0) + sign * c
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                break
        top = max(coeffs)
        return P.trim([coeffs.get(i, 0) for i in range(top + 1)], p)

    def term(self) -> tuple[int, int]:
        c = 1
        has_coeff = self.peek().isdigit()
        if has_coeff:
            c = self.integer()
            self.accept("*")
        if self.peek() != "x":
            if not has_coeff:
                found = self.peek() or "end of input"
                raise self.error(f"expected a term in x, found {found!r}")
            return c, 0
        self.pos += 1
        e = self.integer() if self.accept("^") else 1
        return c, e


def parse_ring_spec(text: str) -> RingSpec:
    """Parse ring notation such as ``"Z2 x Z2[x]/(x^2)"`` or ``"Z4 x GF(4)"``.

    Raises RingSpecError (with a character position) on malformed input and
    OrderCapError when the ring is larger than the configured cap.
    """
    spec = _Parser(text).spec()
    check_order(spec)
    return spec

