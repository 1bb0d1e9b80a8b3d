"""Structural graph attributes: degree statistics and node centralities.

Per-node values (``*_values``) are numpy arrays indexed by node id; the
graph-level attribute is their mean. Conventions:

* clustering of a node with degree < 2 is 0;
* betweenness counts unordered source/target pairs and is not normalized;
* closeness of node i is ``c_i / sum_j d_ij`` over the ``c_i`` nodes of its
  component (``n / sum_j d_ij`` on connected graphs, 0 for isolated nodes);
* eigenvector centrality is the Perron vector of the adjacency matrix with
  unit Euclidean norm and nonnegative entries.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import astuple, dataclass, fields

import numpy as np

from .errors import ConvergenceError, DegenerateSpectrumError, InvalidInputError
from .graph import Graph


def _require_nodes(g: Graph, minimum: int = 1) -> None:
    if g.n < minimum:
        raise InvalidInputError(f"need at least {minimum} node(s), graph has {g.n}")


def average_degree(g: Graph) -> float:
    _require_nodes(g)
    return 2.0 * g.m / g.n


def max_degree(g: Graph) -> int:
    _require_nodes(g)
    return max(g.degrees())


def degree_distribution(g: Graph) -> dict[int, float]:
    """Map each occurring degree k to the fraction of nodes with degree k."""
    _require_nodes(g)
    counts = Counter(g.degrees())
    return {k: counts[k] / g.n for k in sorted(counts)}


def leaf_count(g: Graph) -> int:
    return sum(1 for d in g.degrees() if d == 1)


def leaf_proportion(g: Graph) -> float:
    _require_nodes(g)
    return leaf_count(g) / g.n


@dataclass(frozen=True)
class JointDegreeDistribution:
    """Edge counts and weighted frequencies per unordered endpoint-degree pair.

    ``values[(k1, k2)] = mu * counts[(k1, k2)] / (2m)`` with ``mu = 2`` when
    ``k1 == k2`` and 1 otherwise. Note the values need not sum to 1.
    """

    values: dict
    counts: Counter


def joint_degree_counts(g: Graph) -> Counter:
    deg = g.degrees()
    return Counter(
        (min(deg[u], deg[v]), max(deg[u], deg[v])) for u, v in g.edges
    )


def joint_degree_distribution(g: Graph) -> JointDegreeDistribution:
    if g.m == 0:
        raise InvalidInputError("joint degree distribution needs at least one edge")
    counts = joint_degree_counts(g)
    values = {
        key: (2 if key[0] == key[1] else 1) * c / (2 * g.m)
        for key, c in sorted(counts.items())
    }
    return JointDegreeDistribution(values, counts)


# ---------------------------------------------------------------------------
# Node centralities


def clustering_values(g: Graph) -> np.ndarray:
    _require_nodes(g)
    a = g.adjacency_matrix()
    k = a.sum(axis=1)
    links = ((a @ a) * a).sum(axis=1) / 2.0
    denom = k * (k - 1)
    return np.divide(2.0 * links, denom, out=np.zeros(g.n), where=k >= 2)


def _shortest_path_levels(a: np.ndarray):
    """BFS from every source at once.

    Returns ``(sigma, levels)``: shortest-path counts and per-depth boolean
    masks (row = source, ``levels[d][s, v]`` iff ``dist(s, v) == d``).
    """
    n = a.shape[0]
    frontier = np.eye(n)
    sigma = frontier.copy()
    unvisited = 1.0 - frontier
    levels = [frontier > 0]
    while True:
        reach = frontier @ a
        reach *= unvisited
        new = reach > 0
        if not new.any():
            break
        sigma += reach
        unvisited -= new
        levels.append(new)
        frontier = reach
    return sigma, levels


def betweenness_values(g: Graph) -> np.ndarray:
    """Unnormalized betweenness over unordered pairs (Brandes accumulation)."""
    _require_nodes(g)
    a = g.adjacency_matrix()
    sigma, levels = _shortest_path_levels(a)
    inv_sigma = 1.0 / np.where(sigma > 0, sigma, 1.0)
    delta = np.zeros_like(sigma)
    for depth in range(len(levels) - 1, 0, -1):
        q = levels[depth] * (1.0 + delta) * inv_sigma
        delta += levels[depth - 1] * sigma * (q @ a)
    return (delta.sum(axis=0) - np.diag(delta)) / 2.0


def closeness_values(g: Graph) -> np.ndarray:
    _require_nodes(g, 2)
    _, levels = _shortest_path_levels(g.adjacency_matrix())
    total = np.zeros(g.n)
    comp = np.ones(g.n)
    for depth in range(1, len(levels)):
        count = levels[depth].sum(axis=1)
        total += depth * count
        comp += count
    return np.divide(comp, total, out=np.zeros(g.n), where=total > 0)


def eigenvector_values(g: Graph, max_iter: int = 1000, tol: float = 1e-10) -> np.ndarray:
    """Principal adjacency eigenvector by power iteration.

    Each step averages the iterate with its image under the adjacency
    matrix (i.e. powers ``A + I``), which removes the sign oscillation of
    bipartite graphs. The power is raised by repeated squaring so slowly
    mixing graphs such as long paths still converge within the budget.
    """
    _require_nodes(g)
    if g.m == 0:
        raise DegenerateSpectrumError("adjacency matrix of an edgeless graph has no principal direction")
    step = g.adjacency_matrix() + np.eye(g.n)
    start = np.full(g.n, 1.0 / np.sqrt(g.n))
    x = step @ start
    x /= np.linalg.norm(x)
    for _ in range(max_iter):
        step = step @ step
        step /= step.max()
        nxt = step @ start
        nxt /= np.linalg.norm(nxt)
        if np.max(np.abs(nxt - x)) < tol:
            return np.abs(nxt)
        x = nxt
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


def avg_clustering(g: Graph) -> float:
    return float(clustering_values(g).mean())


def avg_betweenness(g: Graph) -> float:
    return float(betweenness_values(g).mean())


def avg_closeness(g: Graph) -> float:
    return float(closeness_values(g).mean())


def avg_eigenvector(g: Graph) -> float:
    return float(eigenvector_values(g).mean())


# ---------------------------------------------------------------------------
# Attribute vectors


@dataclass(frozen=True)
class AttributeVector:
    n: int
    m: int
    avg_degree: float
    leaf_prop: float
    max_degree: int
    clustering: float
    betweenness: float
    closeness: float
    eigenvector: float

    def as_array(self) -> np.ndarray:
        return np.array(astuple(self), dtype=float)

    @classmethod
    def names(cls) -> list[str]:
        return [f.name for f in fields(cls)]


def attribute_vector(g: Graph) -> AttributeVector:
    _require_nodes(g, 2)
    if g.m == 0:
        raise InvalidInputError("attribute vector needs at least one edge")
    return AttributeVector(
        n=g.n,
        m=g.m,
        avg_degree=average_degree(g),
        leaf_prop=leaf_proportion(g),
        max_degree=max_degree(g),
        clustering=avg_clustering(g),
        betweenness=avg_betweenness(g),
        closeness=avg_closeness(g),
        eigenvector=avg_eigenvector(g),
    )


CSV_HEADER = ["graph_id", *AttributeVector.names(), "label"]


def write_attribute_csv(rows, stream=None) -> str:
    """Write ``(graph_id, AttributeVector, label)`` rows as CSV.

    Returns the text; also writes it to ``stream`` when given.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for graph_id, vec, label in rows:
        writer.writerow([graph_id, *(repr(v) if isinstance(v, float) else v for v in astuple(vec)), label])
    text = buf.getvalue()
    if stream is not None:
        stream.write(text)
    return text


def read_attribute_csv(stream) -> list[tuple[int, AttributeVector, int]]:
    reader = csv.reader(stream)
    header = next(reader)
    if header != CSV_HEADER:
        raise InvalidInputError(f"unexpected attribute CSV header {header}")
    out = []
    for row in reader:
        gid, *vals, label = row
        kinds = [f.type for f in fields(AttributeVector)]
        parsed = [int(v) if k in ("int", int) else float(v) for v, k in zip(vals, kinds)]
        out.append((int(gid), AttributeVector(*parsed), int(label)))
    return out
