"""Simple undirected graphs: storage, edge-list ingestion, ego sampling.

Graphs are stored in CSR form (``indptr``/``indices``) with every adjacency
list sorted and free of duplicates and self-loops.  They are immutable once
built; all numeric modules work on the dense internal ids ``0..n-1`` and use
``labels`` only for reporting.
"""

from __future__ import annotations

import io
import logging
import re
import warnings
from collections import deque
from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass, field
from typing import NamedTuple, TextIO

import numpy as np
import scipy.sparse as sp

from .errors import EdgeListError

logger = logging.getLogger(__name__)

__all__ = [
    "Bipartition",
    "Graph",
    "bfs_distances",
    "connected_components",
    "degree_sequence",
    "ego_subgraph",
    "from_edges",
    "induced_subgraph",
    "is_bipartite",
    "load_edge_list",
    "read_edge_list",
    "write_edge_list",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph in CSR layout.

    Attributes
    ----------
    indptr : ndarray of int64, shape (n + 1,)
    indices : ndarray of int32, shape (2 e,)
        Neighbors of node ``i`` are ``indices[indptr[i]:indptr[i + 1]]``,
        strictly increasing.
    labels : tuple or None
        ``labels[i]`` is the external id of internal node ``i``.
    """

    indptr: np.ndarray
    indices: np.ndarray
    labels: tuple | None = None
    _label_index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)

    @property
    def node_count(self) -> int:
        return len(self.indptr) - 1

    @property
    def edge_count(self) -> int:
        return len(self.indices) // 2

    n = node_count
    e = edge_count

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    @property
    def adjacency(self) -> list[np.ndarray]:
        return [self.neighbors(i) for i in range(self.node_count)]

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def edges(self) -> np.ndarray:
        """Edge array of shape (e, 2) with ``u < v`` in each row, lexicographically sorted."""
        src = np.repeat(np.arange(self.node_count), self.degrees())
        mask = src < self.indices
        return np.column_stack([src[mask], self.indices[mask]])

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        k = np.searchsorted(nb, v)
        return bool(k < len(nb) and nb[k] == v)

    def label(self, i: int) -> Hashable:
        return i if self.labels is None else self.labels[i]

    def index_of(self, label: Hashable) -> int:
        """Internal id of an external label."""
        if self.labels is None:
            i = int(label)
            if not 0 <= i < self.node_count:
                raise KeyError(label)
            return i
        if self._label_index is None:
            object.__setattr__(self, "_label_index", {lab: i for i, lab in enumerate(self.labels)})
        return self._label_index[label]

    def adjacency_matrix(self, dtype=np.float64, sparse: bool = True):
        data = np.ones(len(self.indices), dtype=dtype)
        A = sp.csr_matrix((data, self.indices, self.indptr), shape=(self.node_count, self.node_count))
        return A if sparse else A.toarray()

    def __repr__(self):
        return f"Graph(n={self.node_count}, e={self.edge_count})"


def from_edges(n: int, edges: Iterable[Sequence[int]], labels: Sequence[Hashable] | None = None) -> Graph:
    """Build a :class:`Graph` on nodes ``0..n-1``; duplicates and self-loops are dropped."""
    arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
    arr = arr.reshape(-1, 2)
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise ValueError(f"edge endpoint outside 0..{n - 1}")
    arr = arr[arr[:, 0] != arr[:, 1]]
    both = np.concatenate([arr, arr[:, ::-1]])
    if len(both):
        both = np.unique(both, axis=0)  # sorts by (row, col) and dedups
    counts = np.bincount(both[:, 0], minlength=n) if len(both) else np.zeros(n, dtype=np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    indices = both[:, 1].astype(np.int32) if len(both) else np.zeros(0, dtype=np.int32)
    return Graph(indptr, indices, tuple(labels) if labels is not None else None)


_SPLIT = re.compile(r"[,\s]+")


def _parse_token(tok: str) -> Hashable:
    try:
        return int(tok)
    except ValueError:
        return tok


def load_edge_list(text: str | TextIO, delimiter: str | None = None, comment: str = "#") -> Graph:
    """Parse an edge list into a :class:`Graph`.

    Each non-blank, non-comment line must hold exactly two node tokens,
    separated by whitespace and/or commas (or by ``delimiter`` when given).
    External ids are remapped to ``0..n-1`` in first-seen order and kept in
    ``Graph.labels``.  Duplicate edges are merged; self-loop lines are
    dropped and reported through a single :class:`UserWarning`.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    ids: dict[Hashable, int] = {}
    edges: list[tuple[int, int]] = []
    loops = 0
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or (comment and line.startswith(comment)):
            continue
        toks = line.split(delimiter) if delimiter else _SPLIT.split(line)
        toks = [t.strip() for t in toks if t.strip()]
        if len(toks) != 2:
            raise EdgeListError(lineno, line, f"expected 2 node tokens, got {len(toks)}")
        u, v = (_parse_token(t) for t in toks)
        iu = ids.setdefault(u, len(ids))
        if u == v:
            loops += 1
            continue
        iv = ids.setdefault(v, len(ids))
        edges.append((iu, iv))
    if loops:
        warnings.warn(f"dropped {loops} self-loop line(s)", UserWarning, stacklevel=2)
    g = from_edges(len(ids), edges, labels=list(ids))
    if len(edges) != g.edge_count:
        logger.info("merged %d duplicate edge line(s)", len(edges) - g.edge_count)
    return g


def read_edge_list(path, **kwargs) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return load_edge_list(fh, **kwargs)


def write_edge_list(g: Graph, stream: TextIO, use_labels: bool = True) -> None:
    for u, v in g.edges():
        a, b = (g.label(u), g.label(v)) if use_labels else (u, v)
        stream.write(f"{a} {b}\n")


def bfs_distances(g: Graph, seed: int, radius: int | None = None) -> dict[int, int]:
    """Hop distances from ``seed`` in BFS discovery order, truncated at ``radius``."""
    dist = {seed: 0}
    queue = deque([seed])
    while queue:
        u = queue.popleft()
        d = dist[u]
        if radius is not None and d >= radius:
            continue
        for v in g.neighbors(u):
            v = int(v)
            if v not in dist:
                dist[v] = d + 1
                queue.append(v)
    return dist


def induced_subgraph(g: Graph, nodes: Sequence[int]) -> Graph:
    """Subgraph induced on ``nodes``; new node ``k`` is ``nodes[k]`` (labels carried over)."""
    nodes = np.asarray(nodes, dtype=np.int64)
    remap = np.full(g.node_count, -1, dtype=np.int64)
    remap[nodes] = np.arange(len(nodes))
    edges = []
    for k, u in enumerate(nodes):
        nb = remap[g.neighbors(u)]
        nb = nb[nb > k]
        edges.extend((k, int(j)) for j in nb)
    labels = [g.label(int(u)) for u in nodes]
    return from_edges(len(nodes), edges, labels=labels)


def ego_subgraph(g: Graph, seed: int, radius: int) -> Graph:
    """Induced subgraph on every node within ``radius`` hops of ``seed``.

    Nodes are numbered in BFS discovery order, so the seed becomes node 0.
    Isolated nodes cannot occur except for the seed itself.
    """
    if not 0 <= seed < g.node_count:
        raise ValueError(f"seed {seed} out of range for graph with {g.node_count} nodes")
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    return induced_subgraph(g, list(bfs_distances(g, seed, radius)))


def connected_components(g: Graph) -> list[list[int]]:
    seen = np.zeros(g.node_count, dtype=bool)
    comps = []
    for s in range(g.node_count):
        if not seen[s]:
            comp = list(bfs_distances(g, s))
            seen[comp] = True
            comps.append(comp)
    return comps


class Bipartition(NamedTuple):
    bipartite: bool
    coloring: np.ndarray | None


def is_bipartite(g: Graph) -> Bipartition:
    color = np.full(g.node_count, -1, dtype=np.int8)
    for s in range(g.node_count):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return Bipartition(False, None)
    return Bipartition(True, color)


def degree_sequence(g: Graph) -> list[int]:
    return g.degrees().tolist()
