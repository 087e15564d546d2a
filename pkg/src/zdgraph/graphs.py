"""The three graphs on the nonzero zero-divisors of a finite ring.

* ``GAMMA``: x ~ y iff xy = 0 (the zero-divisor graph);
* ``ZSTAR``: x ~ y iff x + y is a zero-divisor;
* ``TILDE``: x ~ y iff either holds (the extended zero-divisor graph).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .ringspec import RingSpec, format_spec
from .rings import get_ring

MAX_ISO_VERTICES = 64


class GraphKind(enum.Enum):
    GAMMA = "gamma"
    ZSTAR = "zstar"
    TILDE = "tilde"

    @classmethod
    def parse(cls, text: str) -> "GraphKind":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown graph kind {text!r}; use gamma, zstar or tilde") from None


@dataclass(frozen=True, eq=False)
class ZeroDivisorGraph:
    """A simple undirected graph with string vertex labels.

    ``adjacency`` is a read-only symmetric boolean matrix with a false diagonal.
    ``elements`` holds the ring indices of the vertices when the graph came
    from a ring (empty for hand-built graphs).
    """

    kind: GraphKind | None
    labels: tuple[str, ...]
    adjacency: np.ndarray
    ring_spec_text: str = ""
    elements: tuple[int, ...] = field(default=())

    def __post_init__(self):
        adj = np.array(self.adjacency, dtype=bool)
        n = len(self.labels)
        if adj.shape != (n, n):
            raise ValueError(f"adjacency shape {adj.shape} does not match {n} labels")
        if not np.array_equal(adj, adj.T) or adj.diagonal().any():
            raise ValueError("adjacency must be symmetric with an empty diagonal")
        if len(set(self.labels)) != n:
            raise ValueError("vertex labels must be distinct")
        adj.flags.writeable = False
        object.__setattr__(self, "adjacency", adj)

    @property
    def n(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise KeyError(f"unknown vertex {label!r}") from None

    def edges(self) -> list[tuple[str, str]]:
        """Adjacent pairs ``(u, v)`` with u before v in vertex order."""
        i, j = np.nonzero(np.triu(self.adjacency, 1))
        return [(self.labels[a], self.labels[b]) for a, b in zip(i, j)]

    def edge_set(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(e) for e in self.edges())

    @property
    def edge_count(self) -> int:
        return int(np.triu(self.adjacency, 1).sum())

    def neighbors(self, label: str) -> list[str]:
        row = self.adjacency[self.index_of(label)]
        return [self.labels[k] for k in np.flatnonzero(row)]

    def has_edge(self, u: str, v: str) -> bool:
        return bool(self.adjacency[self.index_of(u), self.index_of(v)])


def from_edges(labels: Sequence, edges: Sequence[tuple]) -> ZeroDivisorGraph:
    """Hand-built graph, mainly for tests and examples."""
    labels = tuple(str(x) for x in labels)
    pos = {lab: k for k, lab in enumerate(labels)}
    adj = np.zeros((len(labels), len(labels)), dtype=bool)
    for u, v in edges:
        a, b = pos[str(u)], pos[str(v)]
        if a == b:
            raise ValueError(f"self-loop at {u!r}")
        adj[a, b] = adj[b, a] = True
    return ZeroDivisorGraph(None, labels, adj)


def from_adjacency(adj: np.ndarray, labels: Sequence | None = None) -> ZeroDivisorGraph:
    adj = np.asarray(adj, dtype=bool)
    labels = tuple(str(x) for x in (labels if labels is not None else range(len(adj))))
    return ZeroDivisorGraph(None, labels, adj)


def _adjacency(spec: RingSpec, kind: GraphKind) -> tuple[np.ndarray, np.ndarray]:
    ring = get_ring(spec)
    verts = ring.zero_divisors_star()
    a, b = verts[:, None], verts[None, :]
    if kind is GraphKind.GAMMA:
        adj = ring.mul(a, b) == 0
    elif kind is GraphKind.ZSTAR:
        adj = ring.zero_divisor_mask[ring.add(a, b)]
    else:
        adj = (ring.mul(a, b) == 0) | ring.zero_divisor_mask[ring.add(a, b)]
    adj = np.array(adj, dtype=bool).reshape(len(verts), len(verts))
    np.fill_diagonal(adj, False)
    return verts, adj


def build_graph(spec: RingSpec, kind: GraphKind | str) -> ZeroDivisorGraph:
    """Graph of the given kind on Z(R)*, vertices in enumeration order.

    A field has no nonzero zero-divisors and yields the empty graph.
    """
    if isinstance(kind, str):
        kind = GraphKind.parse(kind)
    ring = get_ring(spec)
    verts, adj = _adjacency(spec, kind)
    labels = tuple(ring.label(int(v)) for v in verts)
    return ZeroDivisorGraph(kind, labels, adj, format_spec(spec), tuple(int(v) for v in verts))


def build_all(spec: RingSpec) -> dict[GraphKind, ZeroDivisorGraph]:
    return {kind: build_graph(spec, kind) for kind in GraphKind}


def relabel(G: ZeroDivisorGraph, mapping: dict[str, str]) -> ZeroDivisorGraph:
    labels = tuple(mapping[lab] for lab in G.labels)
    return ZeroDivisorGraph(G.kind, labels, G.adjacency, G.ring_spec_text, G.elements)


# ---------------------------------------------------------------------------
# isomorphism


def _invariants(adj: np.ndarray) -> list[tuple]:
    deg = adj.sum(axis=1)
    return [(int(deg[v]), tuple(sorted(int(d) for d in deg[adj[v]]))) for v in range(len(adj))]


def graphs_isomorphic(G: ZeroDivisorGraph, H: ZeroDivisorGraph) -> dict[str, str] | None:
    """Find an adjacency-preserving bijection from G's labels to H's.

    Backtracking over vertices of G, most constrained first; candidates are
    restricted to vertices of H with the same degree and the same multiset
    of neighbor degrees.  Returns None when the graphs are not isomorphic.
    """
    if G.n > MAX_ISO_VERTICES or H.n > MAX_ISO_VERTICES:
        raise ValueError(f"isomorphism search is limited to {MAX_ISO_VERTICES} vertices")
    if G.n != H.n or G.edge_count != H.edge_count:
        return None
    A, B = G.adjacency, H.adjacency
    inv_g, inv_h = _invariants(A), _invariants(B)
    if sorted(inv_g) != sorted(inv_h):
        return None
    n = G.n
    if n == 0:
        return {}

    candidates = [[w for w in range(n) if inv_h[w] == inv_g[v]] for v in range(n)]

    # order: fewest candidates first, then grow along edges so that each new
    # vertex is checked against already-placed neighbors as early as possible
    order: list[int] = []
    placed = np.zeros(n, dtype=bool)
    while len(order) < n:
        pool = [v for v in range(n) if not placed[v]]
        linked = [v for v in pool if A[v, order].any()] if order else []
        pick_from = linked or pool
        v = min(pick_from, key=lambda u: (len(candidates[u]), -int(A[u].sum()), u))
        order.append(v)
        placed[v] = True

    image = [-1] * n
    used = np.zeros(n, dtype=bool)

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        prev = order[:depth]
        want = A[v, prev]
        for w in candidates[v]:
            if used[w]:
                continue
            if depth and not np.array_equal(B[w, [image[u] for u in prev]], want):
                continue
            image[v] = w
            used[w] = True
            if extend(depth + 1):
                return True
            used[w] = False
            image[v] = -1
        return False

    if not extend(0):
        return None
    return {G.labels[v]: H.labels[image[v]] for v in range(n)}


def is_isomorphism(G: ZeroDivisorGraph, H: ZeroDivisorGraph, mapping: dict[str, str]) -> bool:
    """Check a label bijection maps edges to edges and non-edges to non-edges."""
    if sorted(mapping) != sorted(G.labels) or sorted(mapping.values()) != sorted(H.labels):
        return False
    perm = [H.index_of(mapping[lab]) for lab in G.labels]
    return bool(np.array_equal(G.adjacency, H.adjacency[np.ix_(perm, perm)]))


# ---------------------------------------------------------------------------
# DOT

_DOT_ID = re.compile(r"^(?:[A-Za-z_][A-Za-z_0-9]*|-?(?:\.[0-9]+|[0-9]+(?:\.[0-9]*)?))$")


def _dot_id(label: str) -> str:
    if _DOT_ID.match(label):
        return label
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(G: ZeroDivisorGraph) -> str:
    """DOT text: one node line per vertex, one ``u -- v`` line per edge."""
    kind = G.kind.value if G.kind else "graph"
    title = f"{kind}({G.ring_spec_text})" if G.ring_spec_text else kind
    lines = [f"graph {_dot_id(title)} {{"]
    lines += [f"  {_dot_id(lab)};" for lab in G.labels]
    lines += [f"  {_dot_id(u)} -- {_dot_id(v)};" for u, v in G.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
