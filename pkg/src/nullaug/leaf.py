"""Leaf node augmentation (LNA).

A fraction of leaf edges ``(u, w)`` is moved so that the leaf ``u`` hangs
off the highest-degree neighbor of ``w`` instead. Only leaf edges whose
removal keeps ``w`` at degree >= 2 are eligible, so no new leaves appear.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from .config import AugmentationConfig, AugmentResult, Strategy
from .graph import Graph, RewireOp, apply_rewire

log = logging.getLogger(__name__)


def eligible_leaf_edges(g: Graph) -> list[tuple[int, int]]:
    """Leaf edges ``(leaf, anchor)`` that can be removed without creating a leaf.

    Leaves are scanned in ascending id. Each kept edge lowers the anchor's
    remaining degree by one, so an anchor with several leaves keeps at most
    ``degree - 2`` of them.
    """
    deg = g.degrees()
    remaining = list(deg)
    kept = []
    for u in range(g.n):
        if deg[u] != 1:
            continue
        (w,) = g.adjacency[u]
        if remaining[w] - 1 > 1:
            remaining[w] -= 1
            kept.append((u, w))
    return kept


def reconnection_target(g: Graph, leaf: int, anchor: int) -> int | None:
    """Highest-degree neighbor of ``anchor`` other than ``leaf`` (smallest id on ties)."""
    best = None
    best_deg = -1
    for v in sorted(g.adjacency[anchor]):
        if v == leaf:
            continue
        d = len(g.adjacency[v])
        if d > best_deg:
            best, best_deg = v, d
    return best


def lna_augment(g: Graph, cfg: AugmentationConfig, rng: np.random.Generator) -> AugmentResult:
    """Rewire ``floor(alpha * |eligible|)`` randomly chosen leaf edges.

    Returns the input unchanged with ``skipped=True`` when that count is 0.
    Candidates whose reconnection target is missing or is itself a leaf
    (it would stop being one) are skipped and the next sampled edge is used.
    """
    eligible = eligible_leaf_edges(g)
    quota = math.floor(round(cfg.alpha * len(eligible), 9))
    if quota == 0:
        return AugmentResult(graph=g, strategy=Strategy.LNA, target=0, swaps=0, skipped=True)

    deleted, added = [], []
    skipped = tried = 0
    for idx in rng.permutation(len(eligible)):
        if len(deleted) == quota:
            break
        tried += 1
        u, w = eligible[idx]
        target = reconnection_target(g, u, w)
        if target is None or len(g.adjacency[target]) < 2 or target in g.adjacency[u]:
            skipped += 1
            continue
        deleted.append((u, w))
        added.append((u, target))

    if not deleted:
        log.warning("lna: no usable leaf edge among %d eligible", len(eligible))
        return AugmentResult(graph=g, strategy=Strategy.LNA, target=quota, swaps=0,
                             attempts=tried, warnings=quota, skipped=True)
    out = apply_rewire(g, RewireOp.of(deleted, added))
    return AugmentResult(
        graph=out,
        strategy=Strategy.LNA,
        target=quota,
        swaps=len(deleted),
        attempts=tried,
        warnings=skipped + (quota - len(deleted)),
    )
