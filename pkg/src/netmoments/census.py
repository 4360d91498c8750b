"""Subgraph census: degrees and per-node triangle, quadrangle and pentagon counts.

These counts are exactly the local quantities that fix the first five
spectral moments of the adjacency matrix (see :mod:`netmoments.spectral`).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph

__all__ = [
    "StructuralCensus",
    "census",
    "pentagon_counts",
    "quadrangle_counts",
    "triangle_counts",
]

AGGREGATE_FIELDS = ("n", "e", "Delta", "Q", "Pi", "W2", "C_dt")


def _csr(g: Graph):
    return g.indptr.astype(np.int64), g.indices.astype(np.int64)


def triangle_counts(g: Graph) -> np.ndarray:
    """Number of 3-cycles through each node."""
    return _kernels.triangle_counts(*_csr(g))


def quadrangle_counts(g: Graph) -> np.ndarray:
    """Number of 4-cycles through each node.

    Each 4-cycle through ``i`` is determined by its vertex opposite ``i``
    together with a pair of common neighbors, so
    ``q_i = sum_{j != i} C(|N(i) & N(j)|, 2)``.
    """
    return _kernels.quadrangle_counts(*_csr(g))


def pentagon_counts(g: Graph) -> np.ndarray:
    """Number of 5-cycles through each node (exact path enumeration)."""
    return _kernels.pentagon_counts(*_csr(g))


@dataclass(frozen=True)
class StructuralCensus:
    """Per-node and aggregate substructure counts of one graph.

    Aggregates are Python ints.  Per-node arrays are int64.
    """

    n: int
    e: int
    degree: np.ndarray
    triangles_per_node: np.ndarray
    quadrangles_per_node: np.ndarray
    pentagons_per_node: np.ndarray

    @property
    def Delta(self) -> int:
        return int(self.triangles_per_node.sum()) // 3

    @property
    def Q(self) -> int:
        return int(self.quadrangles_per_node.sum()) // 4

    @property
    def Pi(self) -> int:
        return int(self.pentagons_per_node.sum()) // 5

    @property
    def W2(self) -> int:
        d = self.degree.astype(np.int64)
        return int((d * d).sum())

    @property
    def C_dt(self) -> int:
        return int((self.degree.astype(np.int64) * self.triangles_per_node).sum())

    def aggregates(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in AGGREGATE_FIELDS}

    def to_dict(self, per_node: bool = False) -> dict:
        out: dict = self.aggregates()
        if per_node:
            out["degree"] = self.degree.tolist()
            out["triangles_per_node"] = self.triangles_per_node.tolist()
            out["quadrangles_per_node"] = self.quadrangles_per_node.tolist()
            out["pentagons_per_node"] = self.pentagons_per_node.tolist()
        return out


def census(g: Graph) -> StructuralCensus:
    indptr, indices = _csr(g)
    return StructuralCensus(
        n=g.node_count,
        e=g.edge_count,
        degree=np.diff(indptr),
        triangles_per_node=_kernels.triangle_counts(indptr, indices),
        quadrangles_per_node=_kernels.quadrangle_counts(indptr, indices),
        pentagons_per_node=_kernels.pentagon_counts(indptr, indices),
    )
