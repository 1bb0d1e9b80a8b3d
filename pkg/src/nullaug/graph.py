"""Immutable undirected simple graphs and edge rewiring."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import InvalidInputError, InvalidNodeError, RewireConflictError

Edge = tuple[int, int]


def canonical(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph on nodes ``0..n-1``.

    Edges are stored as ``(min, max)`` tuples. Instances are immutable;
    use :func:`apply_rewire` to obtain modified copies.
    """

    __slots__ = ("_n", "_edges", "_adj", "_matrix", "_edge_list")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        n = int(n)
        if n < 0:
            raise InvalidInputError(f"node count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        canon: set[Edge] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidNodeError(f"edge ({u}, {v}) references a node outside [0, {n})")
            if u == v:
                raise InvalidInputError(f"self-loop on node {u}")
            e = canonical(u, v)
            if e in canon:
                raise InvalidInputError(f"duplicate edge {e}")
            canon.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._edges = frozenset(canon)
        self._adj = tuple(frozenset(a) for a in adj)
        self._matrix = None
        self._edge_list = None

    @classmethod
    def _trusted(cls, n: int, edges: frozenset, adj: tuple) -> "Graph":
        g = cls.__new__(cls)
        g._n = n
        g._edges = edges
        g._adj = adj
        g._matrix = None
        g._edge_list = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> frozenset:
        return self._edges

    @property
    def adjacency(self) -> tuple:
        return self._adj

    def neighbors(self, v: int) -> frozenset:
        self._check_node(v)
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return canonical(u, v) in self._edges

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def sorted_edges(self) -> list[Edge]:
        return list(self.edge_list)

    @property
    def edge_list(self) -> tuple:
        """Edges in sorted order (cached); used for index-based sampling."""
        if self._edge_list is None:
            self._edge_list = tuple(sorted(self._edges))
        return self._edge_list

    def adjacency_matrix(self) -> np.ndarray:
        """Dense float adjacency matrix (cached, read-only)."""
        if self._matrix is None:
            a = np.zeros((self._n, self._n))
            if self._edges:
                idx = np.array(sorted(self._edges))
                a[idx[:, 0], idx[:, 1]] = 1.0
                a[idx[:, 1], idx[:, 0]] = 1.0
            a.flags.writeable = False
            self._matrix = a
        return self._matrix

    def relabel(self, perm) -> "Graph":
        """Return the graph with node ``v`` renamed to ``perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self._n)):
            raise InvalidInputError("relabeling must be a permutation of the node ids")
        return Graph(self._n, ((perm[u], perm[v]) for u, v in self._edges))

    def _check_node(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise InvalidNodeError(f"node {v} not in [0, {self._n})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


@dataclass(frozen=True)
class RewireOp:
    """Edges to delete from and add to a graph, applied as one step."""

    deleted: frozenset = field(default_factory=frozenset)
    added: frozenset = field(default_factory=frozenset)

    @classmethod
    def of(cls, deleted: Iterable[tuple[int, int]] = (), added: Iterable[tuple[int, int]] = ()) -> "RewireOp":
        return cls(frozenset(canonical(*e) for e in deleted), frozenset(canonical(*e) for e in added))

    def inverse(self) -> "RewireOp":
        return RewireOp(self.added, self.deleted)


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def _bfs_reach(adj, start: int) -> list[bool]:
    seen = [False] * len(adj)
    seen[start] = True
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise InvalidInputError("connectivity is undefined for the empty graph")
    return all(_bfs_reach(g.adjacency, 0))


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted node lists, ordered by smallest member."""
    label = [-1] * g.n
    comps = []
    for s in range(g.n):
        if label[s] >= 0:
            continue
        label[s] = len(comps)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if label[w] < 0:
                    label[w] = label[s]
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def apply_rewire(g: Graph, op: RewireOp) -> Graph:
    """Return a new graph with edge set ``(E - op.deleted) | op.added``."""
    for u, v in op.deleted:
        if (u, v) not in g.edges:
            raise RewireConflictError(f"cannot delete absent edge ({u}, {v})")
    remaining = g.edges - op.deleted
    for u, v in op.added:
        if u == v:
            raise RewireConflictError(f"cannot add self-loop on node {u}")
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise RewireConflictError(f"edge ({u}, {v}) references a node outside [0, {g.n})")
        if (u, v) in remaining:
            raise RewireConflictError(f"cannot add existing edge ({u}, {v})")
    if not op.deleted and not op.added:
        return g
    adj = list(g.adjacency)
    touched = {x for e in op.deleted | op.added for x in e}
    for x in touched:
        adj[x] = set(adj[x])
    for u, v in op.deleted:
        adj[u].discard(v)
        adj[v].discard(u)
    for u, v in op.added:
        adj[u].add(v)
        adj[v].add(u)
    for x in touched:
        adj[x] = frozenset(adj[x])
    return Graph._trusted(g.n, remaining | op.added, tuple(adj))


# Small named graphs used throughout tests and demos.

def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and ``leaves`` leaves."""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))
