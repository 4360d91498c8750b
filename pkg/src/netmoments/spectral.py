"""Spectral moments from the census, closed-walk counts, and exact extreme eigenvalues.

The k-th spectral moment ``m_k = (1/n) sum_i lambda_i**k`` equals the number
of closed k-walks divided by ``n``.  Closed-walk counts for ``k <= 5`` are
integer combinations of census quantities:

    walks_2 = 2 e
    walks_3 = 6 Delta
    walks_4 = 8 Q + 2 W2 - 2 e
    walks_5 = 10 Pi + 10 C_dt - 30 Delta

:func:`closed_walk_counts` computes the same numbers by repeated sparse
products and serves as an independent check.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .census import StructuralCensus
from .errors import UndefinedMomentError
from .graph import Graph, connected_components, induced_subgraph, is_bipartite

__all__ = [
    "MomentSequence",
    "SpectralComparison",
    "SpectrumExtremes",
    "closed_walk_counts",
    "extreme_eigenvalues",
    "moments_from_aggregates",
    "moments_from_census",
    "spectral_comparison",
    "walk_counts_from_census",
]

MAX_ORDER = 5


@dataclass(frozen=True)
class MomentSequence:
    """Spectral moments ``m_0 = 1, m_1, ..., m_5`` of an ``n``-node graph.

    ``walk_counts`` holds the exact integers ``n * m_k`` (with ``n`` in slot 0)
    when the moments come from a census; it is ``None`` for moments built
    from rounded or perturbed aggregates.
    """

    n: int
    m: tuple[float, ...]
    walk_counts: tuple[int, ...] | None = None

    def __getitem__(self, k: int) -> float:
        return self.m[k]

    @property
    def exact(self) -> bool:
        return self.walk_counts is not None

    def rational(self, k: int) -> Fraction:
        """``m_k`` as an exact fraction (only for census-derived sequences)."""
        if self.walk_counts is None:
            return Fraction(self.m[k])
        return Fraction(self.walk_counts[k], self.n)

    def to_dict(self) -> dict:
        out = {"n": self.n}
        out.update({f"m{k}": self.m[k] for k in range(1, len(self.m))})
        if self.walk_counts is not None:
            out["walk_counts"] = list(self.walk_counts[1:])
        return out


def walk_counts_from_census(c: StructuralCensus) -> tuple[int, ...]:
    """Closed k-walk counts for k = 0..5 (slot 0 holds n)."""
    return (
        c.n,
        0,
        2 * c.e,
        6 * c.Delta,
        8 * c.Q + 2 * c.W2 - 2 * c.e,
        10 * c.Pi + 10 * c.C_dt - 30 * c.Delta,
    )


def moments_from_census(c: StructuralCensus) -> MomentSequence:
    if c.n == 0:
        raise UndefinedMomentError("spectral moments are undefined for a graph with no nodes")
    walks = walk_counts_from_census(c)
    return MomentSequence(c.n, tuple(w / c.n for w in walks), walks)


def moments_from_aggregates(n, e, Delta, Q, Pi, W2, C_dt) -> MomentSequence:
    """Moments from (possibly fractional or rounded) aggregate counts.

    Used for published per-node averages and for finite-difference
    perturbations, where the counts need not be integers.
    """
    if n <= 0:
        raise UndefinedMomentError("spectral moments are undefined for a graph with no nodes")
    walks = (n, 0.0, 2 * e, 6 * Delta, 8 * Q + 2 * W2 - 2 * e, 10 * Pi + 10 * C_dt - 30 * Delta)
    return MomentSequence(n, tuple(float(w) / n for w in walks))


def closed_walk_counts(g: Graph, k_max: int = MAX_ORDER, block: int = 512) -> list[int]:
    """Number of closed walks of length ``k = 1..k_max``.

    Applies the sparse adjacency matrix ``k_max`` times to blocks of
    coordinate vectors and sums the returning entries.  Exact in int64.
    """
    if k_max > MAX_ORDER:
        raise ValueError(f"closed walks are only supported up to length {MAX_ORDER}")
    n = g.node_count
    A = g.adjacency_matrix(dtype=np.int64)
    totals = [0] * k_max
    for start in range(0, n, block):
        cols = np.arange(start, min(start + block, n))
        X = np.zeros((n, len(cols)), dtype=np.int64)
        X[cols, np.arange(len(cols))] = 1
        for k in range(k_max):
            X = A @ X
            totals[k] += int(X[cols, np.arange(len(cols))].sum())
    return totals


class SpectrumExtremes(NamedTuple):
    lambda_min: float
    lambda_max: float


def _adjacency_eigenvalues(g: Graph) -> np.ndarray:
    return np.linalg.eigvalsh(g.adjacency_matrix(sparse=False))


def extreme_eigenvalues(g: Graph) -> SpectrumExtremes:
    """Smallest and largest adjacency eigenvalues (dense symmetric solver)."""
    if g.node_count == 0:
        raise UndefinedMomentError("graph has no nodes")
    w = _adjacency_eigenvalues(g)
    return SpectrumExtremes(float(w[0]), float(w[-1]))


class SpectralComparison(NamedTuple):
    neg_inv_lambda_min: float
    inv_rho: float
    strict: bool


def spectral_comparison(g: Graph) -> SpectralComparison:
    """Compare the two uniqueness thresholds ``-1/lambda_min`` and ``1/rho``.

    ``-1/lambda_min >= 1/rho`` always holds.  ``strict`` is True when no
    component with at least one edge is bipartite, which guarantees the
    inequality is strict.  A False flag makes no claim either way.
    """
    if g.edge_count == 0:
        raise UndefinedMomentError("threshold ratios are undefined for an edgeless graph")
    lo, hi = extreme_eigenvalues(g)
    strict = True
    for comp in connected_components(g):
        if len(comp) > 1 and is_bipartite(induced_subgraph(g, comp)).bipartite:
            strict = False
            break
    return SpectralComparison(-1.0 / lo, 1.0 / hi, strict)


def moments_from_spectrum(eigenvalues: Sequence[float]) -> MomentSequence:
    """Moments of an explicit eigenvalue list (test and demo helper)."""
    lam = np.asarray(eigenvalues, dtype=float)
    return MomentSequence(len(lam), tuple(float(np.mean(lam**k)) for k in range(MAX_ORDER + 1)))
