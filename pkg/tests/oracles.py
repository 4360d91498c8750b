"""Brute-force reference implementations, independent of the package code paths."""

from collections import deque
from itertools import combinations, permutations, product

import networkx as nx
import numpy as np

from netmoments.graph import from_edges


def graph_from_nx(h):
    h = nx.convert_node_labels_to_integers(h)
    return from_edges(h.number_of_nodes(), list(h.edges()))


def edge_set(g):
    return {frozenset((int(u), int(v))) for u, v in g.edges()}


def cycles_per_node(g, k):
    """Per-node count of k-cycles by testing every k-subset and cyclic ordering."""
    n = g.node_count
    adj = np.zeros((n, n), dtype=bool)
    for u, v in g.edges():
        adj[u, v] = adj[v, u] = True
    counts = np.zeros(n, dtype=np.int64)
    for sub in combinations(range(n), k):
        first, rest = sub[0], sub[1:]
        found = 0
        for perm in permutations(rest):
            order = (first,) + perm
            if all(adj[order[i], order[(i + 1) % k]] for i in range(k)):
                found += 1
        # each undirected cycle is seen in both directions
        cyc = found // 2
        for v in sub:
            counts[v] += cyc
    return counts


def walk_traces(g, k_max=5):
    """``trace(A^k)`` by dense integer matrix powers."""
    A = np.zeros((g.node_count, g.node_count), dtype=np.int64)
    for u, v in g.edges():
        A[u, v] = A[v, u] = 1
    out, P = [], np.eye(g.node_count, dtype=np.int64)
    for _ in range(k_max):
        P = P @ A
        out.append(int(np.trace(P)))
    return out


def bfs_ball(g, seed, radius):
    dist = {seed: 0}
    q = deque([seed])
    while q:
        u = q.popleft()
        for v in g.neighbors(u):
            v = int(v)
            if v not in dist:
                dist[v] = dist[u] + 1
                q.append(v)
    return {v for v, d in dist.items() if d <= radius}


def has_two_coloring(g):
    """Exhaustive search over all 2^n colorings."""
    es = list(g.edges())
    for colors in product((0, 1), repeat=g.node_count):
        if all(colors[u] != colors[v] for u, v in es):
            return True
    return False


def random_graph(rng, n, p):
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < p
    return from_edges(n, np.column_stack([iu[keep], ju[keep]]))


def small_graph_corpus(n_random8=200, seed=0):
    """All graphs up to 7 nodes (graph atlas) plus random 8-node graphs."""
    graphs = [graph_from_nx(h) for h in nx.graph_atlas_g()[1:]]
    rng = np.random.default_rng(seed)
    graphs += [random_graph(rng, 8, p) for p in rng.uniform(0.1, 0.9, n_random8)]
    return graphs


def random_corpus(count=200, seed=1):
    """Random graphs with n in [4, 12] and p in {0.2, 0.5, 0.8}."""
    rng = np.random.default_rng(seed)
    return [
        random_graph(rng, int(rng.integers(4, 13)), float(rng.choice([0.2, 0.5, 0.8]))) for _ in range(count)
    ]
