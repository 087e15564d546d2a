import math

import pytest
from sympy import factorint, isprime

from zdgraph import theorems as T
from zdgraph.catalog import builtin_catalog
from zdgraph.graphs import build_graph
from zdgraph.metrics import is_complete
from zdgraph.ringspec import Zn, parse_ring_spec
from zdgraph.rings import ring_profile

P = parse_ring_spec


def verdicts(text):
    return {v.theorem_id: v for v in T.verify_ring(P(text))}


def zk_is_complete_kn(k):
    """Plain-integer check that the extended graph of Z_k is complete; returns n or None."""
    verts = [x for x in range(1, k) if math.gcd(x, k) > 1]
    for i, x in enumerate(verts):
        for y in verts[i + 1 :]:
            if (x * y) % k and math.gcd(x + y, k) == 1:
                return None
    return len(verts)


# -- completeness predicate -------------------------------------------------


@pytest.mark.parametrize(
    "text,expected",
    [
        ("Z4", True), ("Z6", True), ("Z9", True), ("Z12", False), ("Z2 x Z2", True),
        ("Z2 x Z2 x Z2", True), ("Z2 x Z4", False), ("Z3 x Z3", True), ("Z2[x]/(x^2)", True),
        ("GF(4) x Z3", True), ("Z2 x Z2 x Z3", False),
    ],
)
def test_predict_complete(text, expected):
    assert T.predict_complete(ring_profile(P(text))) is expected
    assert is_complete(build_graph(P(text), "tilde")) is expected


# -- verify_ring ------------------------------------------------------------


def test_verify_ring_covers_every_id():
    got = T.verify_ring(P("Z12"))
    assert [v.theorem_id for v in got] == list(T.THEOREM_IDS)


@pytest.mark.parametrize("entry", builtin_catalog().entries, ids=lambda e: e[0])
def test_builtin_applicable_verdicts_hold(entry):
    _, spec = entry
    for v in T.verify_ring(spec):
        assert not v.applicable or v.holds, (v.theorem_id, v.detail)


def test_field_has_no_applicable_graph_verdicts():
    for v in T.verify_ring(P("GF(9)")):
        assert not v.applicable and not v.holds


def test_zn_family_gates():
    v = verdicts("Z9")
    assert v["cor-zn-gamma-eq-tilde"].applicable and v["cor-zn-gamma-eq-tilde"].detail["equal"]
    assert v["cor-zn-zstar-eq-tilde"].detail["equal"]
    v = verdicts("Z2 x Z4")
    assert not v["cor-zn-complete"].applicable


def test_z6_completeness_converse():
    v = verdicts("Z6")["rem-complete-converse"]
    assert v.detail["tilde_complete"] and not v.detail["gamma_complete"] and not v.detail["zstar_complete"]
    assert v.detail["converse_counterexample"]


def test_reduced_two_maximal():
    assert verdicts("Z2 x Z3")["cor-reduced-two-maximal"].detail["complete"]
    v = verdicts("Z2 x Z3 x Z5")["cor-reduced-two-maximal"]
    assert v.applicable and v.holds and not v.detail["complete"]
    assert not verdicts("Z2 x Z2 x Z2")["cor-reduced-two-maximal"].applicable


def test_gamma_eq_tilde_local_branch():
    v = verdicts("Z2[x]/(x^2)")["cor-gamma-eq-tilde-local"]
    assert v.applicable and v.holds and v.detail["m_squared_zero"]
    v = verdicts("Z2 x Z2")["cor-gamma-eq-tilde-local"]
    assert v.applicable and v.detail["z2_squared"]


# -- Goldbach and K_n -------------------------------------------------------


def test_goldbach_pairs_50():
    assert T.goldbach_pairs(50) == [(3, 47), (7, 43), (13, 37), (19, 31)]


@pytest.mark.parametrize("m", [6, 8, 12, 100, 998])
def test_goldbach_pairs_oracle(m):
    expected = [(p, m - p) for p in range(2, m // 2 + 1) if p < m - p and isprime(p) and isprime(m - p)]
    assert T.goldbach_pairs(m) == expected


def test_goldbach_errors():
    for bad in (7, 4):
        with pytest.raises(ValueError):
            T.goldbach_pairs(bad)


@pytest.mark.parametrize(
    "n,ks",
    [(1, [4]), (2, [9]), (5, [10]), (7, [14, 16]), (9, []), (11, [22]), (12, [33, 169]), (48, [141, 301, 343, 481, 589])],
)
def test_kn_examples(n, ks):
    res = T.kn_realizable(n)
    assert res.ks == ks
    assert res.realizable == bool(ks)
    assert all(c.verified for c in res.certificates)


def test_kn_certificate_reasons():
    res = T.kn_realizable(12)
    reasons = {c.k: c.to_dict()["reason"] for c in res.certificates}
    assert reasons[169] == {"PrimePower": {"p": 13, "alpha": 1}}
    assert reasons[33] == {"TwoPrimes": {"p": 3, "q": 11}}


def test_kn_certificates_match_factorization():
    for n in range(1, 61):
        for c in T.kn_realizable(n).certificates:
            f = factorint(c.k)
            if c.reason == "prime-power":
                assert f == {c.p: c.exponent_or_q + 1}
            else:
                assert f == {c.p: 1, c.exponent_or_q: 1}


def test_brute_scan_matches_integer_oracle():
    found = {}
    for k in range(4, 201):
        if isprime(k):
            continue
        n = zk_is_complete_kn(k)
        if n is not None:
            found.setdefault(n, []).append(k)
    for n in range(1, 40):
        assert T.kn_brute_scan(n, 200) == found.get(n, [])


def test_kn_input_errors():
    with pytest.raises(ValueError):
        T.kn_realizable(0)
    with pytest.raises(ValueError):
        T.kn_brute_scan(3, 10**6)


def test_kn_large_k_unverified():
    # 2^13 is above the default order cap, so the certificate is not rebuilt
    res = T.kn_realizable(4095)
    assert res.ks == [8192]
    assert res.certificates[0].verified is None


# -- sweeps -----------------------------------------------------------------


def test_run_catalog_empty():
    report = T.run_catalog([])
    assert report.ok and report.counts()["rings"] == 0


def test_run_catalog_single():
    report = T.run_catalog([("Z4", Zn(4))])
    assert report.ok
    d = report.to_dict()
    assert d["aggregate"]["rings"] == 1
    assert d["rings"][0]["analyses"]["tilde"]["diameter"] == 0


def test_run_catalog_parallel_keeps_order():
    specs = [Zn(n) for n in (12, 8, 9, 10)]
    serial = T.run_catalog(specs, with_analysis=False)
    parallel = T.run_catalog(specs, with_analysis=False, jobs=2)
    assert [r.name for r in parallel.rings] == [r.name for r in serial.rings] == ["Z12", "Z8", "Z9", "Z10"]
    assert parallel.counts() == serial.counts()


def test_product_sweep():
    sweep = T.product_sweep([Zn(2), Zn(3)], 12)
    assert [s.order for s in sweep] == [4, 6, 9, 8, 12]
