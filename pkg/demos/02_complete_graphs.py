# # When is the extended graph complete?
#
# For Z_n the answer depends only on the factorization of n: complete for
# prime powers and for products of two distinct primes.  Below we check that
# directly and then ask the inverse question: which Z_k give K_n?

# %%
import numpy as np

from zdgraph import Zn, kn_realizable
from zdgraph.arith import factorint, is_prime
from zdgraph.graphs import build_graph
from zdgraph.metrics import is_complete

# %%
rows = []
for n in range(4, 61):
    if is_prime(n):
        continue  # prime: no zero-divisors
    G = build_graph(Zn(n), "tilde")
    rows.append((n, G.n, is_complete(G), factorint(n)))

complete = [n for n, _, c, _ in rows if c]
print("complete for n =", complete)

# %% [markdown]
# Vertex counts of the complete cases.  A prime power p^a has p^(a-1) - 1
# nonzero zero-divisors, pq has p + q - 2.

# %%
counts = np.array([[n, v] for n, v, c, _ in rows if c])
print(counts.T)

# %% [markdown]
# Going the other way: for each n, the certificates list every k with
# extended graph of Z_k equal to K_n.

# %%
for n in (5, 7, 9, 11, 12, 48):
    res = kn_realizable(n)
    print(n, res.ks if res.realizable else "not realizable")

# %% [markdown]
# Each certificate says why: a prime power, or a split of n + 2 into two
# primes.

# %%
for cert in kn_realizable(48).certificates:
    print(cert.to_dict())
