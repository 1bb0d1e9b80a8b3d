"""Feature-guided rewiring with best-of-T candidate selection.

Run: python demos/04_approximate_augmentation.py
"""

# %%
import numpy as np

from nullaug import AugmentationConfig, Graph, Strategy, ada_augment, is_connected
from nullaug.approx import STRATEGY_FEATURES

rng = np.random.default_rng(11)
n = 20
edges = {(i, i + 1) for i in range(n - 1)}
while len(edges) < 30:
    a, b = sorted(int(x) for x in rng.choice(n, size=2, replace=False))
    edges.add((a, b))
g = Graph(n, edges)

# %% [markdown]
# Each ADA variant builds T candidates. A candidate applies ceil(alpha * m)
# rewires that never split the graph, recomputing node values after each one.
# The candidate whose mean value moved least is returned.

# %%
for strategy, feature in STRATEGY_FEATURES.items():
    res = ada_augment(g, AugmentationConfig(strategy, alpha=0.2, iterations=5), rng)
    devs = ", ".join(f"{c.deviation:.2e}" for c in res.candidates)
    print(f"{strategy.value:7s} F={feature.graph_value(g):.4f} -> {feature.graph_value(res.graph):.4f} "
          f"(candidates: {devs}; chose #{res.chosen}, connected={is_connected(res.graph)})")
