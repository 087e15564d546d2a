# # Three graphs on the zero-divisors of a ring
#
# Every ring here is finite and commutative.  Its nonzero zero-divisors are
# the vertices of three graphs: the zero-divisor graph (xy = 0), the
# restricted total graph (x + y is a zero-divisor), and their union, the
# extended zero-divisor graph.

# %%
from zdgraph import GraphKind, analyze, build_graph, parse_ring_spec, ring_profile
from zdgraph.graphs import build_all

# %% [markdown]
# Start with Z_6.  Its nonzero zero-divisors are 2, 3 and 4.

# %%
z6 = parse_ring_spec("Z6")
for kind, G in build_all(z6).items():
    print(f"{kind.value:>6}: {G.edges()}")

# %% [markdown]
# Neither part is complete, yet the union is a triangle.  The same check on
# Z_2 x Z_4 gives a union with two missing edges.

# %%
G = build_graph(parse_ring_spec("Z2 x Z4"), GraphKind.TILDE)
print(G.labels)
print(G.edge_count, "edges")
missing = [(u, v) for i, u in enumerate(G.labels) for v in G.labels[i + 1:] if not G.has_edge(u, v)]
print("missing:", missing)

# %% [markdown]
# `analyze` collects the usual invariants in one report.

# %%
report = analyze(G)
for key, value in report.to_dict().items():
    print(f"{key:>26}: {value}")

# %% [markdown]
# The ring profile explains what we see: Z_2 x Z_4 is not local, so the
# restricted total graph cannot equal the union.

# %%
print(ring_profile(parse_ring_spec("Z2 x Z4")))
