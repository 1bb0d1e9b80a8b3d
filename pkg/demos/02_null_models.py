"""0k, 1k and 2k rewiring and what each one keeps.

Run: python demos/02_null_models.py
"""

# %%
import numpy as np

from nullaug import AugmentationConfig, Graph, Strategy, run_null_model
from nullaug.attributes import joint_degree_counts

rng = np.random.default_rng(3)
edges = {(i, i + 1) for i in range(11)} | {(0, 5), (2, 8), (3, 10), (6, 11)}
g = Graph(12, edges)
print(f"input: n={g.n} m={g.m} degrees={g.degrees()}")

# %% [markdown]
# Each order rewires ceil(alpha * m) edges. 0k keeps only n and m, 1k keeps
# every node degree, and 2k also keeps the degree pair at each edge.

# %%
for strategy in (Strategy.ZERO_K, Strategy.ONE_K, Strategy.TWO_K):
    res = run_null_model(g, AugmentationConfig(strategy, alpha=0.2), rng)
    out = res.graph
    print(f"{strategy.value}: {res.swaps}/{res.target} rewires, {res.attempts} attempts, "
          f"degrees kept={out.degrees() == g.degrees()}, "
          f"joint counts kept={joint_degree_counts(out) == joint_degree_counts(g)}, "
          f"edges changed={len(g.edges - out.edges)}")
