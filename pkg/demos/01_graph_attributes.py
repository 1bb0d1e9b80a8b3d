"""Structural attributes of a few small graphs.

Run: python demos/01_graph_attributes.py
"""

# %% [markdown]
# Every augmentation strategy promises to keep some attributes fixed and to
# nudge others as little as possible. We start by computing them.

# %%
from nullaug import Graph, attribute_vector, degree_distribution, joint_degree_distribution
from nullaug.graph import complete_graph, path_graph, star_graph

shapes = {
    "triangle": complete_graph(3),
    "path P4": path_graph(4),
    "star S3": star_graph(3),
    "triangle + pendant": Graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)]),
}

for name, g in shapes.items():
    v = attribute_vector(g)
    print(f"{name:20s} D={v.avg_degree:.3f} P_L={v.leaf_prop:.3f} C={v.clustering:.4f} "
          f"B={v.betweenness:.4f} Cc={v.closeness:.4f} E={v.eigenvector:.5f}")

# %% [markdown]
# The degree distribution is a probability mass function. The joint degree
# values weight each endpoint-degree pair by its edge count; on a path they
# do not sum to one, so preservation checks use the raw counts instead.

# %%
p3 = path_graph(3)
print("P_D(P3) =", degree_distribution(p3))
jdd = joint_degree_distribution(p3)
print("J_D(P3) =", jdd.values, "raw counts =", dict(jdd.counts))
