"""Distance, girth, completeness and chordality for small dense graphs.

Graphs here have at most a few thousand vertices, so most routines work on
the dense adjacency matrix directly.  ``INFINITY`` (``math.inf``) stands for
an unreachable pair or an acyclic graph.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import asdict, dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .graphs import ZeroDivisorGraph

INFINITY = math.inf


def _common_counts(A: np.ndarray) -> np.ndarray:
    """``C[u, w]`` = number of common neighbors (exact in float32 below 2**24)."""
    F = A.astype(np.float32)
    return (F @ F).astype(np.int64)


def _bfs(A: np.ndarray, source: int) -> np.ndarray:
    dist = np.full(len(A), -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.zeros(len(A), dtype=bool)
    frontier[source] = True
    level = 0
    while frontier.any():
        level += 1
        nxt = A[frontier].any(axis=0) & (dist < 0)
        dist[nxt] = level
        frontier = nxt
    return dist


def distance(G: ZeroDivisorGraph, u: str, v: str) -> float:
    d = int(_bfs(G.adjacency, G.index_of(u))[G.index_of(v)])
    return INFINITY if d < 0 else d


def distance_matrix(G: ZeroDivisorGraph) -> np.ndarray:
    """All-pairs BFS distances as floats, ``inf`` for unreachable pairs."""
    n = G.n
    A = G.adjacency.astype(np.float32)
    dist = np.full((n, n), np.inf)
    reached = np.eye(n, dtype=bool)
    dist[reached] = 0
    frontier = reached.copy()
    level = 0
    while frontier.any():
        level += 1
        nxt = ((frontier.astype(np.float32) @ A) > 0) & ~reached
        dist[nxt] = level
        reached |= nxt
        frontier = nxt
    return dist


def is_connected(G: ZeroDivisorGraph) -> bool:
    if G.n <= 1:
        return True
    return bool((_bfs(G.adjacency, 0) >= 0).all())


def diameter(G: ZeroDivisorGraph) -> float:
    """Largest distance between distinct vertices; 0 for 0 or 1 vertices."""
    if G.n <= 1:
        return 0
    d = distance_matrix(G).max()
    return INFINITY if np.isinf(d) else int(d)


def girth(G: ZeroDivisorGraph) -> float:
    A = G.adjacency
    if G.n < 3:
        return INFINITY
    C = _common_counts(A)
    if (C[A] > 0).any():
        return 3
    off = C.copy()
    np.fill_diagonal(off, 0)
    if (off >= 2).any():
        return 4
    # triangle- and square-free: BFS from every root
    adj = [np.flatnonzero(row) for row in A]
    best = INFINITY
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in adj[x]:
                y = int(y)
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def is_complete(G: ZeroDivisorGraph) -> bool:
    return int(G.adjacency.sum()) == G.n * (G.n - 1)


def universal_vertices(G: ZeroDivisorGraph) -> list[str]:
    deg = G.adjacency.sum(axis=1)
    return [G.labels[k] for k in np.flatnonzero(deg == G.n - 1)]


def triangle_witnesses(G: ZeroDivisorGraph) -> dict[str, tuple[str, str] | None]:
    """For each vertex v, some pair (a, b) with v-a-b-v a triangle, else None."""
    A = G.adjacency
    C = _common_counts(A)
    out: dict[str, tuple[str, str] | None] = {}
    for v in range(G.n):
        hits = np.flatnonzero(A[v] & (C[v] > 0))
        if len(hits) == 0:
            out[G.labels[v]] = None
            continue
        a = int(hits[0])
        b = int(np.flatnonzero(A[v] & A[a])[0])
        out[G.labels[v]] = (G.labels[a], G.labels[b])
    return out


def every_vertex_in_triangle(G: ZeroDivisorGraph) -> bool:
    A = G.adjacency
    C = _common_counts(A)
    return bool((A & (C > 0)).any(axis=1).all())


def _non_adjacent_pairs(A: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    mask = ~A
    np.fill_diagonal(mask, False)
    return np.nonzero(np.triu(mask, 1))


def square_property(G: ZeroDivisorGraph) -> bool:
    """Every non-adjacent pair x, y has distinct z, t with x-z-y-t-x a 4-cycle.

    The square need not be induced: a z-t edge is allowed.
    """
    A = G.adjacency
    C = _common_counts(A)
    i, j = _non_adjacent_pairs(A)
    return bool((C[i, j] >= 2).all())


def square_witnesses(G: ZeroDivisorGraph) -> dict[tuple[str, str], tuple[str, str] | None]:
    A = G.adjacency
    out: dict[tuple[str, str], tuple[str, str] | None] = {}
    for x, y in zip(*_non_adjacent_pairs(A)):
        common = np.flatnonzero(A[x] & A[y])
        key = (G.labels[x], G.labels[y])
        out[key] = (G.labels[common[0]], G.labels[common[1]]) if len(common) >= 2 else None
    return out


def is_hypotriangulated(G: ZeroDivisorGraph) -> bool:
    """Each 2-path x-z-y has x ~ y or a second midpoint t != z."""
    A = G.adjacency
    C = _common_counts(A)
    i, j = _non_adjacent_pairs(A)
    return bool((C[i, j] != 1).all())


# ---------------------------------------------------------------------------
# chordality


def mcs_order(A: np.ndarray) -> list[int]:
    """Maximum cardinality search visit order (ties broken by lowest index)."""
    n = len(A)
    weight = np.zeros(n, dtype=np.int64)
    done = np.zeros(n, dtype=bool)
    order = []
    for _ in range(n):
        masked = np.where(done, -1, weight)
        v = int(np.argmax(masked))
        order.append(v)
        done[v] = True
        weight[A[v] & ~done] += 1
    return order


def _peo_violation(A: np.ndarray, visit: list[int]) -> int | None:
    """First vertex whose earlier-visited neighbors are not a clique.

    The reverse of an MCS visit order is a perfect elimination ordering iff
    the graph is chordal.
    """
    rank = np.empty(len(A), dtype=np.int64)
    rank[visit] = np.arange(len(A))
    for v in reversed(visit):
        earlier = np.flatnonzero(A[v] & (rank < rank[v]))
        if len(earlier) > 1:
            sub = A[np.ix_(earlier, earlier)]
            if int(sub.sum()) != len(earlier) * (len(earlier) - 1):
                return v
    return None


def _cycle_through(A: np.ndarray, v: int) -> list[int] | None:
    """A chordless cycle of length >= 4 through v, if one exists.

    Such a cycle is v, a, (path inside one component of G - N[v]), b with a, b
    non-adjacent neighbors of v; a shortest a-b path through the component
    closes it without chords.
    """
    nbrs = np.flatnonzero(A[v])
    if len(nbrs) < 2:
        return None
    outside = np.ones(len(A), dtype=bool)
    outside[nbrs] = False
    outside[v] = False
    rest = np.flatnonzero(outside)
    if len(rest) == 0:
        return None
    _, comp = connected_components(csr_matrix(A[np.ix_(rest, rest)]), directed=False)
    for c in range(comp.max() + 1):
        members = rest[comp == c]
        touching = nbrs[A[np.ix_(nbrs, members)].any(axis=1)]
        if len(touching) < 2:
            continue
        sub = A[np.ix_(touching, touching)]
        loose = np.argwhere(~sub & ~np.eye(len(touching), dtype=bool))
        if len(loose) == 0:
            continue
        a, b = int(touching[loose[0][0]]), int(touching[loose[0][1]])
        allowed = np.zeros(len(A), dtype=bool)
        allowed[members] = True
        allowed[b] = True
        parent = {a: -1}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                break
            for y in np.flatnonzero(A[x] & allowed):
                y = int(y)
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        path = [b]
        while path[-1] != a:
            path.append(parent[path[-1]])
        path.reverse()
        return [v] + path
    return None


def _chordless_cycle(A: np.ndarray) -> list[int] | None:
    visit = mcs_order(A)
    bad = _peo_violation(A, visit)
    if bad is None:
        return None
    for v in [bad] + [u for u in range(len(A)) if u != bad]:
        cycle = _cycle_through(A, v)
        if cycle is not None:
            return cycle
    raise AssertionError("PEO check failed but no chordless cycle was found")  # pragma: no cover


def is_chordal(G: ZeroDivisorGraph) -> bool:
    return _peo_violation(G.adjacency, mcs_order(G.adjacency)) is None


def chordless_cycle_witness(G: ZeroDivisorGraph) -> list[str] | None:
    """A verified chordless cycle of length >= 4, or None if G is chordal."""
    cycle = _chordless_cycle(G.adjacency)
    if cycle is None:
        return None
    labels = [G.labels[k] for k in cycle]
    if not verify_cycle_chordless(G, labels):  # pragma: no cover
        raise AssertionError(f"extracted cycle {labels} is not chordless")
    return labels


def verify_cycle_chordless(G: ZeroDivisorGraph, cycle: list[str]) -> bool:
    """Consecutive vertices (cyclically) adjacent, all other pairs not."""
    if len(cycle) < 4:
        raise ValueError("a chordless cycle needs at least 4 vertices")
    idx = [G.index_of(str(v)) for v in cycle]
    if len(set(idx)) != len(idx):
        raise ValueError(f"repeated vertex in {cycle}")
    k = len(idx)
    for a in range(k):
        for b in range(a + 1, k):
            consecutive = b == a + 1 or (a == 0 and b == k - 1)
            if bool(G.adjacency[idx[a], idx[b]]) != consecutive:
                return False
    return True


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AnalysisReport:
    vertex_count: int
    edge_count: int
    is_connected: bool
    diameter: float
    girth: float
    is_complete: bool
    universal_vertices: list[str]
    every_vertex_in_triangle: bool
    square_property_holds: bool
    is_hypotriangulated: bool
    is_chordal: bool
    chordless_cycle_witness: list[str] | None

    def to_dict(self) -> dict:
        out = asdict(self)
        for key in ("diameter", "girth"):
            if out[key] == INFINITY:
                out[key] = "inf"
        return out


def analyze(G: ZeroDivisorGraph) -> AnalysisReport:
    witness = chordless_cycle_witness(G)
    return AnalysisReport(
        vertex_count=G.n,
        edge_count=G.edge_count,
        is_connected=is_connected(G),
        diameter=diameter(G),
        girth=girth(G),
        is_complete=is_complete(G),
        universal_vertices=universal_vertices(G),
        every_vertex_in_triangle=every_vertex_in_triangle(G),
        square_property_holds=square_property(G),
        is_hypotriangulated=is_hypotriangulated(G),
        is_chordal=witness is None,
        chordless_cycle_witness=witness,
    )
