"""Graph-classification datasets in the TUDataset flat-file layout.

A dataset ``NAME`` in directory ``D`` consists of

* ``D/NAME_A.txt``: one ``i,j`` line per directed edge, 1-based global node ids;
* ``D/NAME_graph_indicator.txt``: line ``i`` holds the 1-based graph id of node ``i``;
* ``D/NAME_graph_labels.txt``: line ``k`` holds the integer class of graph ``k``.

Other side files (node labels, attributes, ...) are ignored.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DatasetConsistencyError, DatasetFormatError
from .graph import Graph

log = logging.getLogger(__name__)

_REQUIRED = ("A", "graph_indicator", "graph_labels")


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    label: int


@dataclass
class GraphDataset:
    graphs: list[LabeledGraph]
    name: str = "dataset"
    label_alphabet: frozenset = field(default=None)

    def __post_init__(self):
        if self.label_alphabet is None:
            self.label_alphabet = frozenset(lg.label for lg in self.graphs)
        else:
            self.label_alphabet = frozenset(self.label_alphabet)

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)

    def __getitem__(self, idx):
        return self.graphs[idx]

    @property
    def labels(self) -> list[int]:
        return [lg.label for lg in self.graphs]

    def subset(self, indices, name: str | None = None) -> "GraphDataset":
        return GraphDataset([self.graphs[i] for i in indices], name or self.name, self.label_alphabet)


def _read_ints(path: Path) -> list[int]:
    out = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                out.append(int(line))
            except ValueError:
                raise DatasetFormatError(f"{path}:{lineno}: expected an integer, got {line!r}") from None
    return out


def read_tudataset(directory, name: str) -> GraphDataset:
    directory = Path(directory)
    paths = {key: directory / f"{name}_{key}.txt" for key in _REQUIRED}
    for path in paths.values():
        if not path.is_file():
            raise FileNotFoundError(f"missing dataset file: {path}")
    for extra in sorted(directory.glob(f"{name}_*.txt")):
        if extra not in paths.values():
            log.warning("ignoring side file %s", extra.name)

    indicator = _read_ints(paths["graph_indicator"])
    labels = _read_ints(paths["graph_labels"])
    n_graphs = len(labels)
    if not indicator or not labels:
        raise DatasetConsistencyError(f"dataset {name!r} in {directory} is empty")

    local = [0] * len(indicator)
    sizes = [0] * n_graphs
    for node, gid in enumerate(indicator):
        if not 1 <= gid <= n_graphs:
            raise DatasetConsistencyError(
                f"{paths['graph_indicator']}:{node + 1}: graph id {gid} has no label "
                f"({n_graphs} label lines)"
            )
        local[node] = sizes[gid - 1]
        sizes[gid - 1] += 1
    empty = [k + 1 for k, s in enumerate(sizes) if s == 0]
    if empty:
        raise DatasetConsistencyError(f"graphs without nodes in indicator: {empty[:10]}")

    edge_sets: list[set] = [set() for _ in range(n_graphs)]
    with open(paths["A"]) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                i, j = (int(tok) for tok in line.split(","))
            except ValueError:
                raise DatasetFormatError(f"{paths['A']}:{lineno}: expected 'i,j', got {line!r}") from None
            if not (1 <= i <= len(indicator) and 1 <= j <= len(indicator)):
                raise DatasetConsistencyError(f"{paths['A']}:{lineno}: node id out of range in {line!r}")
            if i == j:
                raise DatasetFormatError(f"{paths['A']}:{lineno}: self-loop on node {i}")
            gi, gj = indicator[i - 1], indicator[j - 1]
            if gi != gj:
                raise DatasetConsistencyError(
                    f"{paths['A']}:{lineno}: edge joins graph {gi} and graph {gj}"
                )
            a, b = local[i - 1], local[j - 1]
            edge_sets[gi - 1].add((a, b) if a < b else (b, a))

    graphs = [LabeledGraph(Graph(sizes[k], edge_sets[k]), labels[k]) for k in range(n_graphs)]
    return GraphDataset(graphs, name)


def write_tudataset(ds: GraphDataset, directory, name: str | None = None) -> Path:
    """Write ``ds`` under ``directory`` (created if needed); returns the directory."""
    name = name or ds.name
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    a_lines, indicator_lines, label_lines = [], [], []
    offset = 1
    for gid, lg in enumerate(ds.graphs, 1):
        g = lg.graph
        for v in range(g.n):
            indicator_lines.append(f"{gid}\n")
            for w in sorted(g.adjacency[v]):
                a_lines.append(f"{v + offset},{w + offset}\n")
        label_lines.append(f"{lg.label}\n")
        offset += g.n
    for key, lines in (("A", a_lines), ("graph_indicator", indicator_lines), ("graph_labels", label_lines)):
        path = directory / f"{name}_{key}.txt"
        try:
            with open(path, "w", newline="\n") as fh:
                fh.writelines(lines)
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc}") from exc
    return directory


def dataset_summary(ds: GraphDataset) -> dict:
    """Graph count, class count, and mean node/edge counts."""
    n = len(ds.graphs)
    return {
        "graphs": n,
        "classes": len(ds.label_alphabet),
        "avg_nodes": sum(lg.graph.n for lg in ds.graphs) / n if n else 0.0,
        "avg_edges": sum(lg.graph.m for lg in ds.graphs) / n if n else 0.0,
    }
