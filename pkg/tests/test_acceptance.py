"""Acceptance criteria, one test each; the terminal summary prints a pass/fail line per criterion."""

from __future__ import annotations

import csv
import io
import math
import time
from collections import Counter
from pathlib import Path

import networkx as nx
import numpy as np
import pytest

import oracles
from graphgen import connected_corpus, leaf_example_graph, mixed_corpus, separable_dataset
from nullaug import (
    AugmentationConfig,
    Graph,
    Strategy,
    augment,
    avg_betweenness,
    avg_closeness,
    avg_clustering,
    avg_eigenvector,
    eligible_leaf_edges,
    lna_augment,
    read_tudataset,
    relative_gain,
    success_rate,
    write_tudataset,
)
from nullaug.approx import STRATEGY_FEATURES
from nullaug.attributes import joint_degree_counts, leaf_count
from nullaug.cli import main
from nullaug.errors import AugmentationFailedError
from nullaug.evaluation import SplitSpec, knn_baseline_accuracy, split_dataset

MUTAG = Path(__file__).parent / "data" / "MUTAG"
ADA = [Strategy.ADA_C, Strategy.ADA_BC, Strategy.ADA_CC, Strategy.ADA_EC]


def _is_simple(g: Graph) -> bool:
    return all(0 <= u < v < g.n for u, v in g.edges) and 2 * g.m == sum(g.degrees())


@pytest.mark.criterion(1, "preservation suite (500 graphs x 20 seeds, < 60 s)")
def test_preservation_suite():
    graphs = mixed_corpus(500, seed=2024)
    seeds = range(20)
    violations: list[str] = []
    failed = Counter()
    runs = Counter()
    start = time.perf_counter()
    for gi, g in enumerate(graphs):
        deg = g.degrees()
        jdd = joint_degree_counts(g)
        leaves = leaf_count(g)
        for seed in seeds:
            # one ADA selector per (graph, seed), single candidate: the
            # preservation contract does not depend on T
            ada = ADA[(gi + seed) % 4]
            for strategy in (Strategy.ZERO_K, Strategy.ONE_K, Strategy.TWO_K, Strategy.LNA, ada):
                cfg = AugmentationConfig(strategy, alpha=0.2, iterations=1, seed=seed)
                try:
                    out = augment(g, cfg, np.random.default_rng([gi, seed])).graph
                except AugmentationFailedError:
                    failed[strategy.value] += 1
                    continue
                runs[strategy.value] += 1
                tag = f"graph {gi} seed {seed} {strategy.value}"
                if (out.n, out.m) != (g.n, g.m) or not _is_simple(out):
                    violations.append(f"{tag}: size or simplicity")
                if strategy in (Strategy.ONE_K, Strategy.TWO_K) and out.degrees() != deg:
                    violations.append(f"{tag}: degree sequence")
                if strategy is Strategy.TWO_K and oracles.joint_degree_counts(out) != jdd:
                    violations.append(f"{tag}: joint degree counts")
                if strategy is Strategy.LNA and leaf_count(out) != leaves:
                    violations.append(f"{tag}: leaf count")
    elapsed = time.perf_counter() - start
    print(f"criterion 1: {sum(runs.values())} outputs checked, failures {dict(failed)}, "
          f"{len(violations)} violations, {elapsed:.1f} s")
    assert violations == []
    for strategy in ("0k", "1k", "2k", "lna"):
        assert runs[strategy] > 0.8 * 500 * 20
    assert sum(runs[s.value] for s in ADA) > 0.8 * 500 * 20
    assert elapsed < 60


def _connected_atlas():
    return [g for g in nx.graph_atlas_g()[1:] if nx.is_connected(g)]


@pytest.mark.criterion(2, "attribute oracles on all connected graphs with n <= 7")
def test_attribute_oracles():
    atlas = _connected_atlas()
    assert len(atlas) == 996  # connected graphs on 1..7 nodes up to isomorphism
    worst = {"clustering": 0.0, "betweenness": 0.0, "closeness": 0.0, "eigenvector": 0.0}
    checked = 0
    for h in atlas:
        g = Graph(h.number_of_nodes(), h.edges())
        if g.n < 2:
            continue
        checked += 1
        worst["clustering"] = max(worst["clustering"], abs(avg_clustering(g) - np.mean(oracles.clustering(g))))
        worst["betweenness"] = max(worst["betweenness"], abs(avg_betweenness(g) - np.mean(oracles.betweenness(g))))
        worst["closeness"] = max(worst["closeness"], abs(avg_closeness(g) - np.mean(oracles.closeness(g))))
        worst["eigenvector"] = max(worst["eigenvector"], abs(avg_eigenvector(g) - oracles.eigenvector(g).mean()))
    print(f"criterion 2: {checked} graphs, worst errors {worst}")
    assert worst["clustering"] <= 1e-9
    assert worst["betweenness"] <= 1e-9
    assert worst["closeness"] <= 1e-9
    assert worst["eigenvector"] <= 1e-6


@pytest.mark.criterion(3, "ADA contract (200 connected graphs x 4 selectors)")
def test_ada_contract():
    graphs = connected_corpus(200, seed=7)
    violations = []
    for gi, g in enumerate(graphs):
        assert oracles.connected(g)
        for strategy in ADA:
            cfg = AugmentationConfig(strategy, alpha=0.2, iterations=5, seed=gi)
            tag = f"graph {gi} {strategy.value}"
            try:
                res = augment(g, cfg, np.random.default_rng(gi))
            except AugmentationFailedError as exc:
                violations.append(f"{tag}: failed ({exc})")
                continue
            target = math.ceil(round(0.2 * g.m, 9))
            feature = STRATEGY_FEATURES[strategy]
            deviation = abs(feature.graph_value(res.graph) - feature.graph_value(g))
            logged = [c.deviation for c in res.candidates if c.completed]
            if not oracles.connected(res.graph):
                violations.append(f"{tag}: disconnected output")
            if len(res.candidates) != 5 or not logged:
                violations.append(f"{tag}: candidate log")
                continue
            if deviation > min(logged) + 1e-12:
                violations.append(f"{tag}: deviation {deviation} above best logged {min(logged)}")
            if res.swaps != target or res.target != target:
                violations.append(f"{tag}: {res.swaps} swaps, expected {target}")
            changed = len(g.edges - res.graph.edges)
            if changed > target:
                violations.append(f"{tag}: {changed} edges changed for {target} swaps")
    print(f"criterion 3: {len(graphs) * 4} runs, {len(violations)} violations")
    assert violations == []


@pytest.mark.criterion(4, "leaf rewiring worked example")
def test_leaf_worked_example():
    g = leaf_example_graph()
    v = lambda k: k - 1  # noqa: E731
    eligible = eligible_leaf_edges(g)
    leaves = {u for u, _ in eligible}
    assert len(eligible) == 5
    assert v(13) not in leaves
    assert len(leaves & {v(11), v(12)}) == 1
    assert {v(1), v(2), v(3), v(4)} <= leaves
    assert leaf_count(g) == 7

    res = lna_augment(g, AugmentationConfig(Strategy.LNA, alpha=0.2), np.random.default_rng(0))
    expected = (g.edges - {(v(3), v(6))}) | {(v(3), v(5))}
    assert res.swaps == 1
    assert res.graph.edges == expected
    assert leaf_count(res.graph) == 7


@pytest.mark.criterion(5, "MUTAG facts and write/read round trip")
def test_mutag_facts(tmp_path):
    ds = read_tudataset(MUTAG, "MUTAG")
    assert len(ds) == 188
    assert len(ds.label_alphabet) == 2
    assert abs(np.mean([lg.graph.n for lg in ds]) - 17.93) <= 0.01
    write_tudataset(ds, tmp_path)
    back = read_tudataset(tmp_path, "MUTAG")
    assert [lg.graph for lg in back] == [lg.graph for lg in ds]
    assert back.labels == ds.labels
    assert back.label_alphabet == ds.label_alphabet


@pytest.mark.criterion(6, "relative gain and success rate")
def test_metrics():
    assert relative_gain(0.853, 0.827) == pytest.approx(0.0314, abs=1e-4)
    assert success_rate([(0.6, 0.5), (0.5, 0.5), (0.4, 0.5)]) == 1 / 3


@pytest.mark.criterion(7, "per-graph runtime at MUTAG scale")
def test_runtime_mutag_scale():
    graphs = [lg.graph for lg in read_tudataset(MUTAG, "MUTAG")]
    means = {}
    for strategy in (Strategy.ONE_K, Strategy.TWO_K, Strategy.LNA, Strategy.ADA_BC):
        cfg = AugmentationConfig(strategy, alpha=0.2, iterations=5, seed=1)
        start = time.perf_counter()
        for i, g in enumerate(graphs):
            try:
                augment(g, cfg, np.random.default_rng(i))
            except AugmentationFailedError:
                pass
        means[strategy.value] = (time.perf_counter() - start) / len(graphs)
    print("criterion 7: mean seconds per graph", {k: f"{v:.5f}" for k, v in means.items()})
    assert means["1k"] < 0.05
    assert means["2k"] < 0.05
    assert means["lna"] < 0.05
    assert means["ada-bc"] < 5.0


@pytest.mark.criterion(8, "end-to-end eval smoke run")
def test_eval_smoke(tmp_path, capsys):
    fixture = separable_dataset(20, seed=3)
    train, _, test = split_dataset(fixture, SplitSpec(seed=0))
    assert knn_baseline_accuracy(train, test, k=3) == 1.0

    ds = separable_dataset(30, seed=11)
    write_tudataset(ds, tmp_path / "SYNTH")
    report = tmp_path / "report.csv"
    start = time.perf_counter()
    code = main([
        "eval", "--data", str(tmp_path / "SYNTH"), "--name", "SYNTH",
        "--strategies", ",".join(s.value for s in Strategy),
        "--alpha", "0.2", "--iterations", "5", "--seed", "7", "--out", str(report),
    ])
    elapsed = time.perf_counter() - start
    assert code == 0
    assert elapsed < 300
    rows = list(csv.reader(io.StringIO(report.read_text())))
    assert rows[0] == ["strategy", "acc_ori", "acc_aug", "relative_gain", "success"]
    assert [r[0] for r in rows[1:]] == ["none"] + [s.value for s in Strategy]
    for name, ori, aug, gain, success in rows[1:]:
        ori, aug, gain = float(ori), float(aug), float(gain)
        assert 0 <= ori <= 1 and 0 <= aug <= 1
        assert gain == pytest.approx((aug - ori) / ori, abs=1e-12)
        assert success in ("0", "1")
    assert float(rows[1][1]) == 1.0
    print(f"criterion 8: eval finished in {elapsed:.1f} s")
