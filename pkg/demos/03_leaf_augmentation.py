"""Leaf node augmentation on a thirteen-node molecule-like graph.

Run: python demos/03_leaf_augmentation.py
"""

# %%
import numpy as np

from nullaug import AugmentationConfig, Graph, Strategy, eligible_leaf_edges, lna_augment
from nullaug.attributes import leaf_count

# node v_k is id k - 1; v1..v4 and v11..v13 are leaves
named = [(1, 5), (2, 5), (3, 6), (4, 7), (11, 9), (12, 9), (13, 10),
         (5, 6), (5, 7), (5, 8), (6, 7), (7, 8), (8, 9), (8, 10)]
g = Graph(13, [(a - 1, b - 1) for a, b in named])


def show(edges):
    return [(f"v{u + 1}", f"v{w + 1}") for u, w in edges]


# %% [markdown]
# A leaf edge is eligible only if its anchor keeps degree two or more after
# losing it. v13 hangs off v10, which has degree two, so it is out. v9 has two
# leaves but can give up only one of them.

# %%
eligible = eligible_leaf_edges(g)
print("eligible leaf edges:", show(eligible))

# %% [markdown]
# With alpha = 0.2 one of the five is moved. Seed 0 picks v3, whose anchor v6
# has v5 as its highest-degree other neighbour.

# %%
res = lna_augment(g, AugmentationConfig(Strategy.LNA, alpha=0.2), np.random.default_rng(0))
print("removed:", show(sorted(g.edges - res.graph.edges)))
print("added:  ", show(sorted(res.graph.edges - g.edges)))
print("leaf count before/after:", leaf_count(g), leaf_count(res.graph))
