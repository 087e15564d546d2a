"""Finite commutative rings and the graphs on their nonzero zero-divisors."""

from .catalog import Catalog, builtin_catalog, generate_zn_range, load_catalog
from .graphs import GraphKind, ZeroDivisorGraph, build_graph, export_dot, graphs_isomorphic
from .metrics import INFINITY, AnalysisReport, analyze
from .ringspec import DEFAULT_ORDER_CAP, Product, QuotientPoly, RingSpec, Zn, format_spec, parse_ring_spec
from .rings import normalize, ring_profile, zero_divisors_star
from .theorems import kn_realizable, run_catalog, verify_ring

__all__ = [
    "AnalysisReport",
    "Catalog",
    "DEFAULT_ORDER_CAP",
    "GraphKind",
    "INFINITY",
    "Product",
    "QuotientPoly",
    "RingSpec",
    "ZeroDivisorGraph",
    "Zn",
    "analyze",
    "build_graph",
    "builtin_catalog",
    "export_dot",
    "format_spec",
    "generate_zn_range",
    "graphs_isomorphic",
    "kn_realizable",
    "load_catalog",
    "normalize",
    "parse_ring_spec",
    "ring_profile",
    "run_catalog",
    "verify_ring",
    "zero_divisors_star",
]
