"""Finite commutative ring arithmetic over enumerated elements.

Every element of a ring is identified with its position in the enumeration
order (index 0 is zero).  Arithmetic is vectorized over numpy index arrays.
Public functions also accept and return *payloads*:

* ``Zn(n)``: an int residue in ``[0, n)``;
* ``QuotientPoly(p, f)``: a coefficient tuple of length ``deg f``, constant
  term first;
* ``Product``: a tuple holding one payload per factor.

Enumeration is lexicographic on payloads, reading polynomial coefficients
from the leading one down, so ``Z2[x]/(x^2)`` lists ``0, 1, x, x+1``.
"""

from __future__ import annotations

import functools
import threading
from dataclasses import dataclass
from typing import Any

import numpy as np

from . import polynomials as P
from .arith import factorint
from .ringspec import Product, QuotientPoly, RingSpec, Zn, check_order, factors_of, order_cap

RingElement = Any

_CHUNK = 1 << 20


class _Leaf:
    order: int

    def one(self) -> int:
        return 1


class _ZnLeaf(_Leaf):
    def __init__(self, spec: Zn):
        self.n = spec.modulus
        self.order = spec.modulus

    def add(self, a, b):
        return (a + b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def payload(self, i: int) -> int:
        return int(i)

    def index(self, x) -> int:
        if not isinstance(x, (int, np.integer)) or not 0 <= x < self.n:
            raise ValueError(f"{x!r} is not a canonical element of Z{self.n}")
        return int(x)

    def label(self, i: int) -> str:
        return str(int(i))


class _PolyLeaf(_Leaf):
    def __init__(self, spec: QuotientPoly):
        self.p = spec.prime
        self.f = np.array(spec.modulus_poly, dtype=np.int64)
        self.d = spec.degree
        self.order = spec.order
        self.weights = self.p ** np.arange(self.d, dtype=np.int64)

    def digits(self, a):
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self.weights) % self.p

    def compose(self, digits):
        return (digits % self.p) @ self.weights

    def add(self, a, b):
        return self.compose(self.digits(a) + self.digits(b))

    def neg(self, a):
        return self.compose(-self.digits(a))

    def mul(self, a, b):
        da, db = np.broadcast_arrays(self.digits(a), self.digits(b))
        d = self.d
        conv = np.zeros(da.shape[:-1] + (2 * d - 1,), dtype=np.int64)
        for i in range(d):
            for j in range(d):
                conv[..., i + j] += da[..., i] * db[..., j]
        conv %= self.p
        # x^d = -(f_0 + ... + f_{d-1} x^{d-1})
        for k in range(2 * d - 2, d - 1, -1):
            top = conv[..., k]
            conv[..., k - d : k] -= top[..., None] * self.f[:d]
            conv[..., k - d : k] %= self.p
        return self.compose(conv[..., :d])

    def payload(self, i: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self.digits(i))

    def index(self, x) -> int:
        if not isinstance(x, tuple) or len(x) != self.d or any(not 0 <= c < self.p for c in x):
            raise ValueError(f"{x!r} is not a canonical element of this quotient ring")
        return int(np.dot(x, self.weights))

    def label(self, i: int) -> str:
        return P.format_poly(P.trim(self.payload(i), self.p))


def _leaf(spec: RingSpec) -> _Leaf:
    return _ZnLeaf(spec) if isinstance(spec, Zn) else _PolyLeaf(spec)


class FiniteRing:
    """Arithmetic engine for one ring spec.

    Build through :func:`get_ring` so the zero-divisor memo is shared.
    """

    def __init__(self, spec: RingSpec):
        check_order(spec)
        self.spec = spec
        self.leaves = [_leaf(f) for f in factors_of(spec)]
        self.radices = [leaf.order for leaf in self.leaves]
        self.order = spec.order
        # mixed radix, first factor most significant
        strides = [1] * len(self.leaves)
        for k in range(len(self.leaves) - 2, -1, -1):
            strides[k] = strides[k + 1] * self.radices[k + 1]
        self.strides = strides
        self.zero = 0
        self.one = self._compose([leaf.one() for leaf in self.leaves])
        self._zd_mask: np.ndarray | None = None
        self._lock = threading.Lock()

    # -- index plumbing -------------------------------------------------
    def _split(self, a):
        a = np.asarray(a, dtype=np.int64)
        return [(a // s) % r for s, r in zip(self.strides, self.radices)]

    def _compose(self, parts):
        out = 0
        for part, s in zip(parts, self.strides):
            out = out + np.asarray(part, dtype=np.int64) * s
        return out

    def _componentwise(self, op: str, *args):
        split = [self._split(a) for a in args]
        parts = [getattr(leaf, op)(*(s[k] for s in split)) for k, leaf in enumerate(self.leaves)]
        return self._compose(parts)

    # -- arithmetic on indices -------------------------------------------
    def add(self, a, b):
        if len(self.leaves) == 1:
            return np.asarray(self.leaves[0].add(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)))
        return self._componentwise("add", a, b)

    def mul(self, a, b):
        if len(self.leaves) == 1:
            return np.asarray(self.leaves[0].mul(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)))
        return self._componentwise("mul", a, b)

    def neg(self, a):
        if len(self.leaves) == 1:
            return np.asarray(self.leaves[0].neg(np.asarray(a, dtype=np.int64)))
        return self._componentwise("neg", a)

    def indices(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    # -- payloads --------------------------------------------------------
    def payload(self, i: int) -> RingElement:
        parts = [int(x) for x in self._split(i)]
        if len(self.leaves) == 1:
            return self.leaves[0].payload(parts[0])
        return tuple(leaf.payload(x) for leaf, x in zip(self.leaves, parts))

    def index(self, x: RingElement) -> int:
        if len(self.leaves) == 1:
            return self.leaves[0].index(x)
        if not isinstance(x, tuple) or len(x) != len(self.leaves):
            raise ValueError(f"{x!r} does not match the product shape")
        return int(self._compose([leaf.index(c) for leaf, c in zip(self.leaves, x)]))

    def label(self, i: int) -> str:
        parts = [int(x) for x in self._split(i)]
        if len(self.leaves) == 1:
            return self.leaves[0].label(parts[0])
        return "(" + ",".join(leaf.label(x) for leaf, x in zip(self.leaves, parts)) + ")"

    # -- zero divisors ---------------------------------------------------
    @property
    def zero_divisor_mask(self) -> np.ndarray:
        """Boolean mask over indices; ``True`` where some nonzero y kills x.

        Zero is included (0 * 1 = 0).  Computed once, then read-only.
        """
        if self._zd_mask is None:
            with self._lock:
                if self._zd_mask is None:
                    self._zd_mask = self._scan_zero_divisors()
        return self._zd_mask

    def _scan_zero_divisors(self) -> np.ndarray:
        n = self.order
        nonzero = np.arange(1, n, dtype=np.int64)
        mask = np.zeros(n, dtype=bool)
        rows = max(1, _CHUNK // max(n, 1))
        for start in range(0, n, rows):
            xs = np.arange(start, min(start + rows, n), dtype=np.int64)
            prod = self.mul(xs[:, None], nonzero[None, :])
            mask[start : start + len(xs)] = (prod == 0).any(axis=1)
        mask.flags.writeable = False
        return mask

    def zero_divisors_star(self) -> np.ndarray:
        idx = np.flatnonzero(self.zero_divisor_mask)
        return idx[idx != 0]

    def unit_mask(self) -> np.ndarray:
        return ~self.zero_divisor_mask


@functools.lru_cache(maxsize=None)
def _cached_ring(spec: RingSpec, cap: int) -> FiniteRing:
    return FiniteRing(spec)


def get_ring(spec: RingSpec) -> FiniteRing:
    """Shared engine for ``spec`` (cached per spec and order cap)."""
    cap = order_cap()
    check_order(spec, cap)
    return _cached_ring(spec, cap)


# ---------------------------------------------------------------------------
# payload-level operations


def elements(spec: RingSpec) -> list[RingElement]:
    """All elements in enumeration order; the zero element comes first."""
    ring = get_ring(spec)
    return [ring.payload(i) for i in range(ring.order)]


def add(spec: RingSpec, x: RingElement, y: RingElement) -> RingElement:
    ring = get_ring(spec)
    return ring.payload(int(ring.add(ring.index(x), ring.index(y))))


def mul(spec: RingSpec, x: RingElement, y: RingElement) -> RingElement:
    ring = get_ring(spec)
    return ring.payload(int(ring.mul(ring.index(x), ring.index(y))))


def neg(spec: RingSpec, x: RingElement) -> RingElement:
    ring = get_ring(spec)
    return ring.payload(int(ring.neg(ring.index(x))))


def is_zero_divisor(spec: RingSpec, x: RingElement) -> bool:
    ring = get_ring(spec)
    return bool(ring.zero_divisor_mask[ring.index(x)])


def zero_divisors_star(spec: RingSpec) -> list[RingElement]:
    ring = get_ring(spec)
    return [ring.payload(int(i)) for i in ring.zero_divisors_star()]


def element_label(spec: RingSpec, x: RingElement) -> str:
    ring = get_ring(spec)
    return ring.label(ring.index(x))


def zero_divisors_form_ideal(spec: RingSpec) -> bool:
    """Whether Z(R) is closed under addition and under multiplication by R."""
    ring = get_ring(spec)
    mask = ring.zero_divisor_mask
    zd = np.flatnonzero(mask)
    everything = ring.indices()
    rows = max(1, _CHUNK // max(ring.order, 1))
    for start in range(0, len(zd), rows):
        block = zd[start : start + rows, None]
        if not mask[ring.add(block, zd[None, :])].all():
            return False
        if not mask[ring.mul(block, everything[None, :])].all():
            return False
    return True


# ---------------------------------------------------------------------------
# decomposition into local factors


def _local_parts(spec: RingSpec) -> list[tuple[RingSpec, Any]]:
    """Local factors of a single (non-product) spec with a reduction map.

    The map sends a leaf index of ``spec`` to a leaf index of the factor.
    """
    if isinstance(spec, Zn):
        parts = []
        for p, k in factorint(spec.modulus).items():
            q = p**k
            parts.append((Zn(q), lambda a, q=q: a % q))
        return parts
    p, f = spec.prime, spec.modulus_poly
    factored = P.factor_poly_mod_p(p, f)
    if len(factored) == 1:
        g, m = factored[0]
        if P.degree(g) * m == 1:
            # Z_p[x]/(x - a) is Z_p; elements are constants already
            return [(Zn(p), lambda a: a)]
        return [(spec, lambda a: a)]
    leaf = _PolyLeaf(spec)
    parts = []
    for g, m in factored:
        gm = P.power(g, m, p)
        if P.degree(gm) == 1:
            root = (-gm[0]) % p
            weights = np.array([pow(root, i, p) for i in range(leaf.d)], dtype=np.int64)
            parts.append((Zn(p), lambda a, w=weights: (leaf.digits(a) @ w) % p))
        else:
            sub = QuotientPoly(p, gm)
            # row i holds the digits of x^i mod g^m
            sub_leaf = _PolyLeaf(sub)
            rems = [P.divmod_poly((0,) * i + (1,), gm, p)[1] for i in range(leaf.d)]
            basis = np.array(
                [list(r) + [0] * (sub.degree - len(r)) for r in rems], dtype=np.int64
            )
            parts.append(
                (sub, lambda a, b=basis, s=sub_leaf: s.compose((leaf.digits(a) @ b) % p))
            )
    return parts


@dataclass(frozen=True)
class Normalization:
    """A spec rewritten as a product of local rings, plus the CRT bijection.

    ``mapping[i]`` is the index in ``normalized`` of element ``i`` of ``source``.
    """

    source: RingSpec
    normalized: RingSpec
    mapping: np.ndarray

    def transport(self, x: RingElement) -> RingElement:
        src, dst = get_ring(self.source), get_ring(self.normalized)
        return dst.payload(int(self.mapping[src.index(x)]))


@functools.lru_cache(maxsize=None)
def normalization(spec: RingSpec) -> Normalization:
    ring = get_ring(spec)
    all_parts: list[tuple[RingSpec, Any, int]] = []
    for k, factor in enumerate(factors_of(spec)):
        for local, fn in _local_parts(factor):
            all_parts.append((local, fn, k))
    locals_ = tuple(local for local, _, _ in all_parts)
    normalized = locals_[0] if len(locals_) == 1 else Product(locals_)
    target = get_ring(normalized)
    split = ring._split(ring.indices())
    images = [np.asarray(fn(split[k]), dtype=np.int64) for _, fn, k in all_parts]
    mapping = target._compose(images)
    mapping = np.asarray(mapping, dtype=np.int64)
    mapping.flags.writeable = False
    return Normalization(spec, normalized, mapping)


def normalize(spec: RingSpec) -> RingSpec:
    """Decompose ``spec`` into a product of local rings (CRT)."""
    return normalization(spec).normalized


def local_factors(spec: RingSpec) -> tuple[RingSpec, ...]:
    return factors_of(normalize(spec))


def verify_isomorphism(norm: Normalization) -> bool:
    """Exhaustive check that the CRT map is a bijective ring homomorphism."""
    src, dst = get_ring(norm.source), get_ring(norm.normalized)
    phi = norm.mapping
    if len(np.unique(phi)) != src.order or src.order != dst.order:
        return False
    if phi[0] != 0 or phi[src.one] != dst.one:
        return False
    xs = src.indices()
    rows = max(1, _CHUNK // src.order)
    for start in range(0, src.order, rows):
        a = xs[start : start + rows, None]
        b = xs[None, :]
        if not np.array_equal(phi[src.add(a, b)], dst.add(phi[a], phi[b])):
            return False
        if not np.array_equal(phi[src.mul(a, b)], dst.mul(phi[a], phi[b])):
            return False
    return True


# ---------------------------------------------------------------------------
# structural profile


@dataclass(frozen=True)
class RingProfile:
    order: int
    characteristic: int
    is_local: bool
    is_field: bool
    is_reduced: bool
    is_boolean: bool
    maximal_ideal_count: int
    num_zero_divisors_star: int
    local_factor_count: int
    field_factor_count: int

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def characteristic(spec: RingSpec) -> int:
    ring = get_ring(spec)
    acc, k = ring.one, 1
    while acc != 0:
        acc = int(ring.add(acc, ring.one))
        k += 1
    return k


def nilpotent_mask(spec: RingSpec) -> np.ndarray:
    """Nilpotent elements, found by iterating powers until 0 or a repeat."""
    ring = get_ring(spec)
    n = ring.order
    nil = np.zeros(n, dtype=bool)
    nil[0] = True
    # units are never nilpotent; only nonzero zero-divisors need the walk
    cand = ring.zero_divisors_star()
    if len(cand) == 0:
        return nil
    seen = np.zeros((len(cand), n), dtype=bool)
    rows = np.arange(len(cand))
    base = cand.copy()
    cur = cand.copy()
    seen[rows, cur] = True
    while len(rows):
        cur = ring.mul(cur, base)
        hit_zero = cur == 0
        nil[cand[rows[hit_zero]]] = True
        repeat = seen[rows, cur] & ~hit_zero
        keep = ~(hit_zero | repeat)
        rows, cur, base = rows[keep], cur[keep], base[keep]
        seen[rows, cur] = True
    return nil


def is_reduced(spec: RingSpec) -> bool:
    return int(nilpotent_mask(spec).sum()) == 1


def is_boolean(spec: RingSpec) -> bool:
    ring = get_ring(spec)
    xs = ring.indices()
    return bool(np.array_equal(ring.mul(xs, xs), xs))


@functools.lru_cache(maxsize=None)
def ring_profile(spec: RingSpec) -> RingProfile:
    ring = get_ring(spec)
    zd_star = len(ring.zero_divisors_star())
    factors = local_factors(spec)
    field_factors = sum(1 for f in factors if len(get_ring(f).zero_divisors_star()) == 0)
    local = len(factors) == 1
    return RingProfile(
        order=ring.order,
        characteristic=characteristic(spec),
        is_local=local,
        is_field=local and zd_star == 0,
        is_reduced=is_reduced(spec),
        is_boolean=is_boolean(spec),
        maximal_ideal_count=len(factors),
        num_zero_divisors_star=zd_star,
        local_factor_count=len(factors),
        field_factor_count=field_factors,
    )

