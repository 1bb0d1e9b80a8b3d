"""Single entry point that dispatches to the strategy implementations."""

from __future__ import annotations

import numpy as np

from .approx import ada_augment
from .config import AugmentationConfig, AugmentResult, Strategy
from .dataset import GraphDataset, LabeledGraph
from .errors import NullAugError
from .graph import Graph
from .leaf import lna_augment
from .null_models import run_null_model


def graph_rng(seed: int, index: int) -> np.random.Generator:
    """Random source for graph ``index`` of a dataset: seeded with ``seed XOR index``."""
    return np.random.default_rng(int(seed) ^ int(index))


def augment(g: Graph, cfg: AugmentationConfig, rng: np.random.Generator | None = None) -> AugmentResult:
    """Augment one graph with ``cfg.strategy``.

    Without ``rng``, a generator seeded from ``cfg.seed`` is used.
    """
    if rng is None:
        rng = np.random.default_rng(cfg.seed)
    if cfg.strategy.is_null_model:
        return run_null_model(g, cfg, rng)
    if cfg.strategy is Strategy.LNA:
        return lna_augment(g, cfg, rng)
    return ada_augment(g, cfg, rng)


def augment_dataset(ds: GraphDataset, cfg: AugmentationConfig):
    """Augment every graph of ``ds`` once, each with its own derived seed.

    Returns ``(augmented, outcomes)``. ``augmented`` keeps each graph's label
    and holds the original graph wherever augmentation failed or was
    skipped. ``outcomes[i]`` is the :class:`AugmentResult`, or the
    exception raised for graph ``i``.
    """
    graphs, outcomes = [], []
    for index, lg in enumerate(ds.graphs):
        try:
            res = augment(lg.graph, cfg, graph_rng(cfg.seed, index))
        except NullAugError as exc:
            outcomes.append(exc)
            graphs.append(lg)
            continue
        outcomes.append(res)
        graphs.append(LabeledGraph(res.graph, lg.label))
    return GraphDataset(graphs, f"{ds.name}_aug_{cfg.strategy.value}", ds.label_alphabet), outcomes
