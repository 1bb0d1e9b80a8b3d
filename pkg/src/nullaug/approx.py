"""Approximate data augmentation (ADA) guided by a node centrality.

Each rewire removes a random edge ``(v1, v2)`` between non-leaf nodes and
reattaches its higher-valued endpoint ``u`` to the node whose value is
closest to that of the lower-valued endpoint ``w``. Rewires that would
split the graph are cancelled. ``T`` independent candidates are built and
the one whose mean feature value deviates least from the input wins.
"""

from __future__ import annotations

import enum
from collections import deque
from typing import Callable

import numpy as np

from . import attributes
from .config import AugmentationConfig, AugmentResult, CandidateLog, Strategy
from .errors import AttemptsExhaustedError, AugmentationFailedError, NoCandidateError
from .graph import Graph, RewireOp, apply_rewire, connected_components

# Feature values closer than this are treated as equal for tie-breaking.
TIE_TOL = 1e-12


class NodeFeature(enum.Enum):
    CLUSTERING = "clustering"
    BETWEENNESS = "betweenness"
    CLOSENESS = "closeness"
    EIGENVECTOR = "eigenvector"

    @property
    def node_fn(self) -> Callable[[Graph], np.ndarray]:
        return _NODE_FNS[self]

    def node_values(self, g: Graph) -> np.ndarray:
        return self.node_fn(g)

    def graph_value(self, g: Graph) -> float:
        return float(self.node_fn(g).mean())


_NODE_FNS = {
    NodeFeature.CLUSTERING: attributes.clustering_values,
    NodeFeature.BETWEENNESS: attributes.betweenness_values,
    NodeFeature.CLOSENESS: attributes.closeness_values,
    NodeFeature.EIGENVECTOR: attributes.eigenvector_values,
}

STRATEGY_FEATURES = {
    Strategy.ADA_C: NodeFeature.CLUSTERING,
    Strategy.ADA_BC: NodeFeature.BETWEENNESS,
    Strategy.ADA_CC: NodeFeature.CLOSENESS,
    Strategy.ADA_EC: NodeFeature.EIGENVECTOR,
}


def non_leaf_edges(g: Graph) -> list[tuple[int, int]]:
    adj = g.adjacency
    return [(a, b) for a, b in g.edge_list if len(adj[a]) > 1 and len(adj[b]) > 1]


def _orient(values: np.ndarray, a: int, b: int) -> tuple[int, int]:
    """Return ``(u, w)``: larger-valued endpoint first, smaller id on ties."""
    if values[a] - values[b] > TIE_TOL:
        return a, b
    if values[b] - values[a] > TIE_TOL:
        return b, a
    return (a, b) if a < b else (b, a)


def closest_node(g: Graph, values: np.ndarray, u: int, w: int) -> int | None:
    """Node (not u, w or a neighbor of u) whose value is nearest ``values[w]``."""
    gap = np.abs(values - values[w])
    excluded = [u, w, *g.adjacency[u]]
    gap[excluded] = np.inf
    best = gap.min()
    if not np.isfinite(best):
        return None
    return int(np.flatnonzero(gap <= best + TIE_TOL)[0])


def propose_ada_rewire(g: Graph, values: np.ndarray, rng: np.random.Generator) -> RewireOp:
    """Sample one rewire (without the connectivity check)."""
    edges = non_leaf_edges(g)
    if not edges:
        raise NoCandidateError("every edge has a leaf endpoint")
    a, b = edges[rng.integers(len(edges))]
    u, w = _orient(values, a, b)
    target = closest_node(g, values, u, w)
    if target is None:
        raise NoCandidateError(f"node {u} is adjacent to every other node")
    return RewireOp.of([(u, w)], [(u, target)])


def _still_joined(g: Graph, u: int, w: int, target: int) -> bool:
    """Whether u and w stay connected after replacing (u, w) by (u, target)."""
    adj = g.adjacency
    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        nbrs = adj[x]
        if x == target:
            nbrs = nbrs | {u}
        for y in nbrs:
            if (x == w and y == u) or (x == u and y == w):
                continue
            if y == u:
                return True
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return False


def _keeps_components(g: Graph, u: int, w: int, target: int, n_components: int) -> bool:
    if _still_joined(g, u, w, target):
        return True
    if n_components == 1:
        return False
    # disconnected input: the split may be offset by a merge elsewhere
    op = RewireOp.of([(u, w)], [(u, target)])
    return len(connected_components(apply_rewire(g, op))) <= n_components


def _ada_step(g, values, rng, budget, n_components):
    edges = non_leaf_edges(g)
    if not edges:
        raise NoCandidateError("every edge has a leaf endpoint")
    if all(len(g.adjacency[_orient(values, a, b)[0]]) == g.n - 1 for a, b in edges):
        raise NoCandidateError("no edge has a valid reconnection target")
    # graph and values are fixed within a step, so a rejected edge stays rejected
    rejected = set()
    for attempt in range(1, budget + 1):
        k = int(rng.integers(len(edges)))
        if k in rejected:
            continue
        u, w = _orient(values, *edges[k])
        target = closest_node(g, values, u, w)
        if target is not None and _keeps_components(g, u, w, target, n_components):
            return RewireOp.of([(u, w)], [(u, target)]), attempt
        rejected.add(k)
        if len(rejected) == len(edges):
            raise AttemptsExhaustedError(
                f"all {len(edges)} candidate edges would split the graph (after {attempt} attempts)"
            )
    raise AttemptsExhaustedError(f"no connectivity-preserving rewire in {budget} attempts")


def ada_rewire_step(
    g: Graph,
    feature: NodeFeature,
    rng: np.random.Generator,
    max_attempts: int | None = None,
    values: np.ndarray | None = None,
) -> RewireOp:
    """Sample rewires until one keeps the graph's components together.

    ``values`` may pass precomputed node feature values for ``g``.
    """
    if values is None:
        values = feature.node_values(g)
    budget = max(1, 100 * g.m) if max_attempts is None else max_attempts
    n_components = len(connected_components(g))
    return _ada_step(g, values, rng, budget, n_components)[0]


def ada_augment(g: Graph, cfg: AugmentationConfig, rng: np.random.Generator) -> AugmentResult:
    """Best of ``cfg.iterations`` candidates, each with ``ceil(alpha*m)`` rewires.

    Node values are recomputed after every accepted rewire. The returned
    result lists every candidate's swap count and deviation ``|F' - F|``.
    """
    feature = STRATEGY_FEATURES.get(cfg.strategy)
    if feature is None:
        raise ValueError(f"{cfg.strategy.value} is not an ADA strategy")
    if g.m == 0:
        raise AugmentationFailedError("ADA needs at least one edge")
    initial = feature.node_values(g)
    reference = float(initial.mean())
    target = cfg.swap_target(g.m)
    budget = cfg.attempt_budget(g.m)
    n_components = len(connected_components(g))

    candidates: list[CandidateLog] = []
    graphs: list[Graph | None] = []
    for index, sub_rng in enumerate(rng.spawn(cfg.iterations)):
        current = g
        values = initial
        swaps = attempts = 0
        error = None
        while swaps < target:
            try:
                op, used = _ada_step(current, values, sub_rng, budget, n_components)
            except (NoCandidateError, AttemptsExhaustedError) as exc:
                error = str(exc)
                break
            attempts += used
            current = apply_rewire(current, op)
            values = feature.node_values(current)
            swaps += 1
        completed = error is None
        deviation = abs(float(values.mean()) - reference) if completed else None
        candidates.append(CandidateLog(index, swaps, attempts, completed, deviation, error))
        graphs.append(current if completed else None)

    done = [c for c in candidates if c.completed]
    if not done:
        raise AugmentationFailedError(
            f"{cfg.strategy.value}: all {cfg.iterations} candidates failed", candidates
        )
    best = min(done, key=lambda c: (c.deviation, c.index))
    return AugmentResult(
        graph=graphs[best.index],
        strategy=cfg.strategy,
        target=target,
        swaps=best.swaps,
        attempts=sum(c.attempts for c in candidates),
        warnings=len(candidates) - len(done),
        candidates=candidates,
        chosen=best.index,
    )
