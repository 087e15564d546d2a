"""Instance-wise verification of the structural results about the extended
zero-divisor graph, plus the K_n realizability search over Z_k.
"""

from __future__ import annotations

import functools
import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .arith import SIEVE_LIMIT, factorint, is_composite, is_prime, prime_power, sieve
from .graphs import GraphKind, ZeroDivisorGraph, build_all, build_graph
from .metrics import (
    AnalysisReport,
    analyze,
    diameter,
    distance_matrix,
    every_vertex_in_triangle,
    girth,
    is_complete,
    is_connected,
    is_hypotriangulated,
    square_property,
    triangle_witnesses,
    universal_vertices,
)
from .ringspec import Product, RingSpec, Zn, format_spec, order_cap
from .rings import RingProfile, get_ring, local_factors, ring_profile, zero_divisors_form_ideal

log = logging.getLogger(__name__)

THEOREM_IDS = (
    "thm-diameter",
    "thm-girth",
    "thm-complete-char",
    "cor-reduced-two-maximal",
    "cor-zn-complete",
    "thm-gamma-eq-tilde",
    "cor-gamma-eq-tilde-local",
    "cor-zn-gamma-eq-tilde",
    "thm-zstar-eq-tilde",
    "cor-zn-zstar-eq-tilde",
    "rem-complete-converse",
    "thm-universal-vertex",
    "thm-triangle",
    "thm-square",
    "thm-hypotriangulated",
)


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    applicable: bool
    holds: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def predict_complete(profile: RingProfile) -> bool:
    """Completeness of the extended graph predicted from ring structure alone:
    local, a product of two fields, or boolean."""
    two_fields = profile.local_factor_count == 2 and profile.field_factor_count == 2
    return profile.is_local or two_fields or profile.is_boolean


def _zn_modulus(spec: RingSpec) -> int | None:
    return spec.modulus if isinstance(spec, Zn) else None


def _is_z2_squared(spec: RingSpec) -> bool:
    factors = local_factors(spec)
    return len(factors) == 2 and all(f == Zn(2) for f in factors)


def _mm_zero(spec: RingSpec) -> bool:
    """All products of two zero-divisors vanish (m^2 = 0 when R is local)."""
    ring = get_ring(spec)
    zd = np.flatnonzero(ring.zero_divisor_mask)
    return bool((ring.mul(zd[:, None], zd[None, :]) == 0).all())


def _power_of(base: int, value: int) -> int | None:
    """m >= 1 with base**m == value, else None."""
    m, acc = 0, 1
    while acc < value:
        acc *= base
        m += 1
    return m if acc == value and m >= 1 else None


def _verdict(tid: str, applicable: bool, holds: bool = False, **detail) -> TheoremVerdict:
    return TheoremVerdict(tid, applicable, bool(holds) if applicable else False, detail)


def _far_pair(G: ZeroDivisorGraph) -> list[str] | None:
    d = distance_matrix(G)
    idx = np.argwhere(d > 2)
    if len(idx) == 0:
        return None
    a, b = idx[0]
    return [G.labels[a], G.labels[b]]


def verify_ring(spec: RingSpec, graphs: dict[GraphKind, ZeroDivisorGraph] | None = None) -> list[TheoremVerdict]:
    """Check every result against one ring; one verdict per theorem id.

    Verdicts whose hypotheses fail are returned with ``applicable=False``.
    """
    profile = ring_profile(spec)
    graphs = graphs or build_all(spec)
    gamma, zstar, tilde = graphs[GraphKind.GAMMA], graphs[GraphKind.ZSTAR], graphs[GraphKind.TILDE]
    V = tilde.n
    non_field = not profile.is_field
    n = _zn_modulus(spec)
    zn_composite = n is not None and is_composite(n)
    out: list[TheoremVerdict] = []

    # diameter and girth
    diam = diameter(tilde)
    conn = is_connected(tilde)
    out.append(
        _verdict(
            "thm-diameter", non_field, conn and diam <= 2,
            diameter=_num(diam), connected=conn,
            counterexample=None if conn and diam <= 2 else _far_pair(tilde),
        )
    )
    g = girth(tilde)
    out.append(_verdict("thm-girth", non_field and V >= 3, g == 3, girth=_num(g), vertices=V))

    # completeness characterizations
    tilde_complete = is_complete(tilde)
    predicted = predict_complete(profile)
    out.append(
        _verdict(
            "thm-complete-char", non_field, tilde_complete == predicted,
            complete=tilde_complete, predicted=predicted,
            local=profile.is_local, boolean=profile.is_boolean,
            local_factors=profile.local_factor_count, field_factors=profile.field_factor_count,
        )
    )
    reduced_gate = profile.is_reduced and non_field and not profile.is_boolean
    out.append(
        _verdict(
            "cor-reduced-two-maximal", reduced_gate,
            tilde_complete == (profile.maximal_ideal_count == 2),
            complete=tilde_complete, maximal_ideals=profile.maximal_ideal_count,
        )
    )
    if zn_composite:
        f = factorint(n)
        expected = len(f) == 1 or (len(f) == 2 and all(e == 1 for e in f.values()))
    else:
        expected = False
    out.append(_verdict("cor-zn-complete", zn_composite, tilde_complete == expected, n=n, complete=tilde_complete, predicted=expected))

    # Gamma versus the extended graph
    gamma_eq = bool(np.array_equal(gamma.adjacency, tilde.adjacency))
    gamma_complete = is_complete(gamma)
    out.append(
        _verdict("thm-gamma-eq-tilde", non_field, gamma_eq == gamma_complete, equal=gamma_eq, gamma_complete=gamma_complete)
    )
    local_branch = False
    detail: dict = {}
    if gamma_eq and non_field:
        char = profile.characteristic
        pp = prime_power(char)
        char_ok = pp is not None and pp[1] in (1, 2)
        count_ok = pp is not None and _power_of(pp[0], V + 1) is not None
        mm_zero = _mm_zero(spec)
        local_branch = profile.is_local and mm_zero and char_ok and count_ok
        detail = dict(
            z2_squared=_is_z2_squared(spec), local=profile.is_local, m_squared_zero=mm_zero,
            characteristic=char, vertices=V,
        )
    out.append(
        _verdict(
            "cor-gamma-eq-tilde-local", gamma_eq and non_field,
            _is_z2_squared(spec) or local_branch, **detail,
        )
    )
    if zn_composite:
        pp = prime_power(n)
        expected = pp is not None and pp[1] == 2
    out.append(_verdict("cor-zn-gamma-eq-tilde", zn_composite, gamma_eq == expected, n=n, equal=gamma_eq))

    # Z*(Gamma) versus the extended graph
    zstar_eq = bool(np.array_equal(zstar.adjacency, tilde.adjacency))
    ideal = zero_divisors_form_ideal(spec)
    zstar_complete = is_complete(zstar)
    out.append(
        _verdict(
            "thm-zstar-eq-tilde", non_field,
            zstar_eq == profile.is_local == ideal == zstar_complete,
            equal=zstar_eq, local=profile.is_local, zd_ideal=ideal, zstar_complete=zstar_complete,
        )
    )
    if zn_composite:
        expected = prime_power(n) is not None
    out.append(_verdict("cor-zn-zstar-eq-tilde", zn_composite, zstar_eq == expected, n=n, equal=zstar_eq))

    # completeness of either spanning subgraph forces completeness of the union
    converse_fails = tilde_complete and not gamma_complete and not zstar_complete
    out.append(
        _verdict(
            "rem-complete-converse", non_field,
            not (gamma_complete or zstar_complete) or tilde_complete,
            tilde_complete=tilde_complete, gamma_complete=gamma_complete,
            zstar_complete=zstar_complete, converse_counterexample=converse_fails,
        )
    )

    # local structure
    uni = universal_vertices(tilde)
    out.append(_verdict("thm-universal-vertex", non_field, bool(uni), universal=uni))
    tri_ok = every_vertex_in_triangle(tilde)
    missing = None
    if not tri_ok:
        missing = [v for v, w in triangle_witnesses(tilde).items() if w is None]
    out.append(_verdict("thm-triangle", non_field and V >= 3, tri_ok, vertices_without_triangle=missing))
    out.append(_verdict("thm-square", non_field, square_property(tilde)))
    out.append(_verdict("thm-hypotriangulated", non_field, is_hypotriangulated(tilde)))
    return out


def _num(x: float) -> int | str:
    return "inf" if x == math.inf else int(x)


# ---------------------------------------------------------------------------
# K_n realizability over Z_k


@functools.lru_cache(maxsize=8)
def _prime_table(limit: int) -> np.ndarray:
    return sieve(limit)


def goldbach_pairs(m: int) -> list[tuple[int, int]]:
    """Pairs p < q of primes with p + q = m (p == q excluded)."""
    if m % 2:
        raise ValueError(f"{m} is odd")
    if m < 6:
        raise ValueError(f"{m} is below 6")
    if m > SIEVE_LIMIT:
        raise ValueError(f"{m} exceeds the sieve bound {SIEVE_LIMIT}")
    flags = _prime_table(max(m, 1 << 16))
    ps = np.flatnonzero(flags[: m // 2 + 1])
    ps = ps[flags[m - ps] & (ps < m - ps)]
    return [(int(p), m - int(p)) for p in ps]


@dataclass(frozen=True)
class Certificate:
    k: int
    reason: str  # "prime-power" or "two-primes"
    p: int
    exponent_or_q: int
    verified: bool | None  # None: k above the construction cap

    def to_dict(self) -> dict:
        out = {"k": self.k, "verified": self.verified}
        if self.reason == "prime-power":
            out["reason"] = {"PrimePower": {"p": self.p, "alpha": self.exponent_or_q}}
        else:
            out["reason"] = {"TwoPrimes": {"p": self.p, "q": self.exponent_or_q}}
        return out


@dataclass(frozen=True)
class RealizationResult:
    n: int
    realizable: bool
    certificates: list[Certificate]
    search_bound_used: int

    @property
    def ks(self) -> list[int]:
        return [c.k for c in self.certificates]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "realizable": self.realizable,
            "certificates": [c.to_dict() for c in self.certificates],
            "search_bound_used": self.search_bound_used,
        }


@functools.lru_cache(maxsize=None)
def _zk_vertex_count(k: int) -> int:
    return len(get_ring(Zn(k)).zero_divisors_star())


@functools.lru_cache(maxsize=None)
def _zk_complete(k: int) -> bool:
    return is_complete(build_graph(Zn(k), GraphKind.TILDE))


def _check_zk(k: int, n: int) -> bool | None:
    if k > order_cap():
        return None
    return _zk_vertex_count(k) == n and _zk_complete(k)


def kn_realizable(n: int) -> RealizationResult:
    """Which Z_k have extended graph K_n, via the parity-split criterion.

    Even n: k = p^(a+1) when n + 1 = p^a, and k = pq for each split of n + 2
    into two distinct primes.  Odd n: k = 2^(a+1) when n + 1 = 2^a, and
    k = 2n when n is prime.  Certificates with k within the order cap are
    rebuilt and checked.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    raw: list[tuple[int, str, int, int]] = []
    pp = prime_power(n + 1)
    if pp is not None:
        p, a = pp
        if n % 2 == 0 or p == 2:
            k = p ** (a + 1)
            if k <= SIEVE_LIMIT:
                raw.append((k, "prime-power", p, a))
    if n % 2 == 0:
        if n + 2 >= 6 and n + 2 <= SIEVE_LIMIT:
            for p, q in goldbach_pairs(n + 2):
                raw.append((p * q, "two-primes", p, q))
    elif is_prime(n):
        raw.append((2 * n, "two-primes", 2, n))
    certs = [Certificate(k, r, p, e, _check_zk(k, n)) for k, r, p, e in sorted(raw)]
    return RealizationResult(n, bool(certs), certs, SIEVE_LIMIT)


def kn_brute_scan(n: int, k_max: int) -> list[int]:
    """All composite k <= k_max whose Z_k has extended graph K_n, by construction."""
    if k_max > order_cap():
        raise ValueError(f"k_max {k_max} exceeds the order cap {order_cap()}")
    found = []
    for k in range(4, k_max + 1):
        if not is_composite(k):
            continue
        if _zk_vertex_count(k) == n and _zk_complete(k):
            found.append(k)
    return found


# ---------------------------------------------------------------------------
# catalog sweeps


@dataclass
class RingReport:
    name: str
    spec_text: str
    profile: RingProfile | None
    analyses: dict[str, AnalysisReport]
    verdicts: list[TheoremVerdict]
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "spec": self.spec_text,
            "profile": self.profile.to_dict() if self.profile else None,
            "analyses": {k: a.to_dict() for k, a in self.analyses.items()},
            "verdicts": [v.to_dict() for v in self.verdicts],
            "error": self.error,
        }


@dataclass
class SuiteReport:
    rings: list[RingReport]

    @property
    def failures(self) -> list[dict]:
        out = []
        for r in self.rings:
            if r.error:
                out.append({"ring": r.name, "theorem_id": "error", "detail": r.error})
            for v in r.verdicts:
                if v.applicable and not v.holds:
                    out.append({"ring": r.name, "theorem_id": v.theorem_id, "detail": v.detail})
        return out

    @property
    def ok(self) -> bool:
        return not self.failures

    def counts(self) -> dict:
        verdicts = [v for r in self.rings for v in r.verdicts]
        applicable = [v for v in verdicts if v.applicable]
        return {
            "rings": len(self.rings),
            "verdicts": len(verdicts),
            "applicable": len(applicable),
            "held": sum(v.holds for v in applicable),
            "failed": sum(not v.holds for v in applicable),
            "errors": sum(1 for r in self.rings if r.error),
        }

    def to_dict(self) -> dict:
        return {
            "rings": [r.to_dict() for r in self.rings],
            "aggregate": self.counts(),
            "failures": self.failures,
            "ok": self.ok,
        }


def _run_one(entry: tuple[str, RingSpec], with_analysis: bool) -> RingReport:
    name, spec = entry
    text = format_spec(spec)
    try:
        graphs = build_all(spec)
        analyses = {k.value: analyze(g) for k, g in graphs.items()} if with_analysis else {}
        return RingReport(name, text, ring_profile(spec), analyses, verify_ring(spec, graphs))
    except Exception as exc:  # noqa: BLE001 - a bad ring must not abort the sweep
        log.warning("ring %s failed: %s", name, exc)
        return RingReport(name, text, None, {}, [], error=f"{type(exc).__name__}: {exc}")


def _entries(catalog) -> list[tuple[str, RingSpec]]:
    entries = getattr(catalog, "entries", catalog)
    out = []
    for item in entries:
        if isinstance(item, tuple):
            out.append(item)
        else:
            out.append((format_spec(item), item))
    return out


def run_catalog(catalog, with_analysis: bool = True, jobs: int = 1) -> SuiteReport:
    """Verify every ring of a catalog (or a plain list of specs).

    Rings are independent; with ``jobs > 1`` they run in worker processes and
    the report keeps catalog order.
    """
    entries = _entries(catalog)
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rings = list(pool.map(_run_one, entries, [with_analysis] * len(entries)))
    else:
        rings = [_run_one(e, with_analysis) for e in entries]
    return SuiteReport(rings)


def product_sweep(factors: Sequence[RingSpec], max_order: int, sizes: Sequence[int] = (2, 3)) -> list[RingSpec]:
    """Products of ``sizes`` factors (with repetition, unordered) up to an order."""
    out = []
    for r in sizes:
        for combo in itertools.combinations_with_replacement(factors, r):
            spec = Product(tuple(combo))
            if spec.order <= max_order:
                out.append(spec)
    return out
