"""Train/val/test splitting, a k-NN attribute baseline, and gain metrics.

The pipeline per strategy: split the dataset, augment the training graphs
once each, optionally filter the augmented graphs, merge them into the
training set, and compare k-NN test accuracy with and without them.
"""

from __future__ import annotations

import csv
import io
import logging
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .attributes import (
    AttributeVector,
    attribute_vector,
    average_degree,
    closeness_values,
    leaf_proportion,
)
from .augment import augment_dataset
from .config import AugmentationConfig, AugmentResult, Strategy
from .dataset import GraphDataset
from .errors import (
    InvalidInputError,
    LabelError,
    NullAugError,
    StratificationError,
    UndefinedGainError,
)
from .graph import Graph

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitSpec:
    train_fraction: float = 0.7
    val_fraction: float = 0.1
    test_fraction: float = 0.2
    seed: int = 0
    stratified: bool = True

    def __post_init__(self):
        fracs = (self.train_fraction, self.val_fraction, self.test_fraction)
        if min(fracs) <= 0:
            raise InvalidInputError(f"split fractions must be positive, got {fracs}")
        if abs(sum(fracs) - 1.0) > 1e-9:
            raise InvalidInputError(f"split fractions must sum to 1, got {sum(fracs)}")

    @classmethod
    def parse(cls, ratio: str, seed: int = 0, stratified: bool = True) -> "SplitSpec":
        """Build from an ``a:b:c`` ratio string such as ``7:1:2``."""
        try:
            parts = [float(p) for p in ratio.split(":")]
        except ValueError:
            raise InvalidInputError(f"bad split ratio {ratio!r}") from None
        if len(parts) != 3 or min(parts) <= 0:
            raise InvalidInputError(f"split ratio needs three positive parts, got {ratio!r}")
        total = sum(parts)
        return cls(parts[0] / total, parts[1] / total, parts[2] / total, seed, stratified)

    def sizes(self, n: int) -> tuple[int, int, int]:
        """Held-out splits get ``ceil(fraction * n)``; train takes the rest."""
        n_val = math.ceil(round(self.val_fraction * n, 9))
        n_test = math.ceil(round(self.test_fraction * n, 9))
        return n - n_val - n_test, n_val, n_test


def split_dataset(ds: GraphDataset, spec: SplitSpec) -> tuple[GraphDataset, GraphDataset, GraphDataset]:
    n_train, n_val, n_test = spec.sizes(len(ds))
    if n_train < 1:
        raise InvalidInputError(f"dataset of {len(ds)} graphs is too small to split")
    rng = np.random.default_rng(spec.seed)
    if spec.stratified:
        by_label = defaultdict(list)
        for i, lg in enumerate(ds.graphs):
            by_label[lg.label].append(i)
        small = {lab: len(idx) for lab, idx in by_label.items() if len(idx) < 3}
        if small:
            raise StratificationError(f"classes with fewer than 3 graphs: {small}")
        # interleave classes so every prefix of the order is close to class-balanced
        keyed = []
        for label in sorted(by_label):
            members = rng.permutation(by_label[label])
            size = len(members)
            keyed += [((r + 0.5) / size, label, int(i)) for r, i in enumerate(members)]
        order = [i for _, _, i in sorted(keyed)]
    else:
        order = [int(i) for i in rng.permutation(len(ds))]
    test = sorted(order[:n_test])
    val = sorted(order[n_test:n_test + n_val])
    train = sorted(order[n_test + n_val:])
    return (
        ds.subset(train, f"{ds.name}_train"),
        ds.subset(val, f"{ds.name}_val"),
        ds.subset(test, f"{ds.name}_test"),
    )


def merge_train(train: GraphDataset, aug: GraphDataset) -> GraphDataset:
    """Training set extended by the augmented graphs (labels kept)."""
    foreign = aug.label_alphabet - train.label_alphabet
    if foreign:
        raise LabelError(f"augmented labels {sorted(foreign)} not in training alphabet")
    if len(aug) > len(train):
        raise InvalidInputError(f"{len(aug)} augmented graphs for {len(train)} training graphs")
    return GraphDataset(list(train.graphs) + list(aug.graphs), train.name, train.label_alphabet)


def accept_all(graph: Graph) -> bool:
    return True


def filter_hook(aug: GraphDataset, predicate: Callable[[Graph], bool] = accept_all) -> GraphDataset:
    """Keep the augmented graphs accepted by ``predicate``, in order.

    Plug an external quality filter in here; the default keeps everything.
    """
    kept = [lg for lg in aug.graphs if predicate(lg.graph)]
    return GraphDataset(kept, aug.name, aug.label_alphabet)


# ---------------------------------------------------------------------------
# k-NN baseline


def graph_features(g: Graph) -> AttributeVector:
    """:func:`attribute_vector`, with zero centralities for edgeless graphs."""
    if g.n >= 2 and g.m >= 1:
        return attribute_vector(g)
    closeness = float(closeness_values(g).mean()) if g.n >= 2 else 0.0
    return AttributeVector(
        n=g.n, m=g.m, avg_degree=average_degree(g), leaf_prop=leaf_proportion(g),
        max_degree=max(g.degrees()), clustering=0.0, betweenness=0.0,
        closeness=closeness, eigenvector=0.0,
    )


def feature_matrix(ds: GraphDataset) -> np.ndarray:
    return np.array([graph_features(lg.graph).as_array() for lg in ds.graphs]).reshape(len(ds), -1)


def knn_predict(train_x, train_y, test_x, k: int) -> list[int]:
    """Majority vote of the ``k`` nearest rows after z-scoring on ``train_x``.

    Vote ties go to the smaller summed distance, then the smaller label.
    """
    train_x = np.asarray(train_x, dtype=float)
    test_x = np.asarray(test_x, dtype=float)
    if not 1 <= k <= len(train_x):
        raise InvalidInputError(f"k={k} must lie in [1, {len(train_x)}]")
    mean = train_x.mean(axis=0)
    std = train_x.std(axis=0)
    keep = std > 1e-12
    if not keep.all():
        log.warning("dropping %d zero-variance feature column(s)", int((~keep).sum()))
    a = (train_x[:, keep] - mean[keep]) / std[keep]
    b = (test_x[:, keep] - mean[keep]) / std[keep]
    preds = []
    for row in b:
        dist = np.sqrt(((a - row) ** 2).sum(axis=1))
        nearest = np.lexsort((np.arange(len(dist)), dist))[:k]
        votes: dict[int, list] = {}
        for i in nearest:
            entry = votes.setdefault(int(train_y[i]), [0, 0.0])
            entry[0] += 1
            entry[1] += float(dist[i])
        label = min(votes, key=lambda lab: (-votes[lab][0], votes[lab][1], lab))
        preds.append(label)
    return preds


def knn_baseline_accuracy(train: GraphDataset, test: GraphDataset, k: int = 3) -> float:
    if len(train) == 0:
        raise InvalidInputError("training set is empty")
    if len(test) == 0:
        raise InvalidInputError("test set is empty")
    preds = knn_predict(feature_matrix(train), train.labels, feature_matrix(test), k)
    return sum(p == y for p, y in zip(preds, test.labels)) / len(test)


# ---------------------------------------------------------------------------
# Metrics


def relative_gain(acc_aug: float, acc_ori: float) -> float:
    """``(acc_aug - acc_ori) / acc_ori`` as a fraction."""
    if acc_ori == 0:
        raise UndefinedGainError("relative gain is undefined when the original accuracy is 0")
    return (acc_aug - acc_ori) / acc_ori


def success_rate(pairs: Iterable[tuple[float, float]]) -> float:
    """Fraction of ``(acc_aug, acc_ori)`` pairs with a strict improvement."""
    pairs = list(pairs)
    if not pairs:
        raise InvalidInputError("success rate of an empty list")
    return sum(aug > ori for aug, ori in pairs) / len(pairs)


# ---------------------------------------------------------------------------
# Reports


REPORT_HEADER = ["strategy", "acc_ori", "acc_aug", "relative_gain", "success"]


@dataclass
class StrategyRow:
    strategy: str
    acc_ori: float
    acc_aug: float
    relative_gain: float
    success: bool
    error: str | None = None
    augmented: int = 0


@dataclass
class EvalReport:
    rows: list[StrategyRow] = field(default_factory=list)
    split_sizes: tuple[int, int, int] = (0, 0, 0)

    @property
    def success_rate(self) -> float:
        scored = [(r.acc_aug, r.acc_ori) for r in self.rows if r.strategy != "none" and r.error is None]
        return success_rate(scored) if scored else 0.0

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(REPORT_HEADER)
        for r in self.rows:
            writer.writerow([r.strategy, repr(r.acc_ori), repr(r.acc_aug), repr(r.relative_gain), int(r.success)])
        return buf.getvalue()


def _augmented_only(aug: GraphDataset, outcomes) -> GraphDataset:
    kept = [
        lg for lg, res in zip(aug.graphs, outcomes)
        if isinstance(res, AugmentResult) and not res.skipped
    ]
    return GraphDataset(kept, aug.name, aug.label_alphabet)


def evaluate(
    ds: GraphDataset,
    strategies: Iterable[Strategy | str],
    *,
    alpha: float = 0.2,
    iterations: int = 5,
    split: SplitSpec | None = None,
    seed: int = 0,
    k: int = 3,
    repeats: int = 1,
    predicate: Callable[[Graph], bool] = accept_all,
) -> EvalReport:
    """Compare k-NN accuracy with and without each augmentation strategy.

    Only graphs that were actually augmented (not skipped or failed) enter
    the augmented set. With ``repeats > 1`` the split seed is varied
    (``split.seed + r``) and accuracies are averaged. The first row,
    ``none``, is the un-augmented baseline.
    """
    strategies = [s if isinstance(s, Strategy) else Strategy.parse(s) for s in strategies]
    split = split or SplitSpec(seed=seed)
    acc_ori: list[float] = []
    acc_aug: dict[Strategy, list[float]] = {s: [] for s in strategies}
    counts: dict[Strategy, int] = {s: 0 for s in strategies}
    errors: dict[Strategy, str] = {}
    sizes = (0, 0, 0)
    for r in range(repeats):
        spec = SplitSpec(split.train_fraction, split.val_fraction, split.test_fraction,
                         split.seed + r, split.stratified)
        train, val, test = split_dataset(ds, spec)
        sizes = (len(train), len(val), len(test))
        acc_ori.append(knn_baseline_accuracy(train, test, k))
        for strategy in strategies:
            if strategy in errors:
                continue
            cfg = AugmentationConfig(strategy, alpha, iterations, seed + r)
            try:
                aug, outcomes = augment_dataset(train, cfg)
                if all(isinstance(res, NullAugError) for res in outcomes):
                    raise NullAugError(f"augmentation failed for all {len(outcomes)} training graphs")
                aug = filter_hook(_augmented_only(aug, outcomes), predicate)
                merged = merge_train(train, aug)
                acc_aug[strategy].append(knn_baseline_accuracy(merged, test, k))
                counts[strategy] += len(aug)
            except NullAugError as exc:
                errors[strategy] = str(exc)
                log.error("strategy %s failed: %s", strategy.value, exc)

    base = float(np.mean(acc_ori))
    report = EvalReport(split_sizes=sizes)
    report.rows.append(StrategyRow("none", base, base, 0.0, False))
    for strategy in strategies:
        if strategy in errors:
            report.rows.append(StrategyRow(strategy.value, base, float("nan"), float("nan"), False,
                                           error=errors[strategy]))
            continue
        acc = float(np.mean(acc_aug[strategy]))
        gain = relative_gain(acc, base) if base > 0 else float("nan")
        report.rows.append(StrategyRow(strategy.value, base, acc, gain, acc > base,
                                       augmented=counts[strategy]))
    return report
