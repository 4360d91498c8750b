"""Seeded synthetic graphs standing in for crawled social data."""

from __future__ import annotations

import networkx as nx
import numpy as np

from .graph import Graph, from_edges


def from_networkx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return from_edges(h.number_of_nodes(), list(h.edges()))


def small_world_random_mix(n: int = 5000, seed: int = 0) -> Graph:
    """Three equal blocks (Watts-Strogatz, Holme-Kim clustered power law,
    Erdos-Renyi) joined by sparse random bridges.

    The blocks give ego networks with very different sizes, clustering and
    degree spreads, which is what the bound-quality experiment needs.
    """
    rng = np.random.default_rng(seed)
    sizes = [n // 3, n // 3, n - 2 * (n // 3)]
    parts = [
        nx.watts_strogatz_graph(sizes[0], 8, 0.1, seed=int(rng.integers(2**31))),
        nx.powerlaw_cluster_graph(sizes[1], 3, 0.5, seed=int(rng.integers(2**31))),
        nx.gnp_random_graph(sizes[2], 6.0 / sizes[2], seed=int(rng.integers(2**31))),
    ]
    edges = []
    offset = 0
    for part in parts:
        edges.extend((u + offset, v + offset) for u, v in part.edges())
        offset += part.number_of_nodes()
    bridges = rng.integers(0, n, size=(n // 10, 2))
    edges.extend(map(tuple, bridges.tolist()))
    return from_edges(n, edges)


def clustered_power_law(n: int = 2500, m: int = 9, p: float = 0.3, seed: int = 1) -> Graph:
    """Holme-Kim graph; ``n=2500, m=9`` gives about 22,400 edges and heavy hubs."""
    return from_networkx(nx.powerlaw_cluster_graph(n, m, p, seed=seed))


def random_graph(n: int, p: float, seed) -> Graph:
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < p
    return from_edges(n, np.column_stack([iu[keep], ju[keep]]))
