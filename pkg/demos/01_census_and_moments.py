"""
Subgraph census and spectral moments
====================================

Count triangles, quadrangles and pentagons on a small graph and turn the
counts into the first five spectral moments, then check them against the
eigenvalues.
"""

import networkx as nx
import numpy as np

from netmoments import census, closed_walk_counts, load_edge_list, moments_from_census
from netmoments.synthetic import from_networkx

# an edge list can come from a string, a stream or a file path
g = load_edge_list(
    """
    # a house with a roof: square 0-1-2-3 plus apex 4
    0 1
    1 2
    2 3
    3 0
    2 4
    3 4
    """
)
c = census(g)
print("aggregates:", c.aggregates())
print("triangles per node:", c.triangles_per_node.tolist())

# moments are closed-walk counts divided by n
m = moments_from_census(c)
print("m1..m5:", [round(v, 4) for v in m.m[1:]])
print("walk counts:", list(m.walk_counts[1:]), "oracle:", closed_walk_counts(g, 5))

# the same numbers from the spectrum
lam = np.linalg.eigvalsh(g.adjacency_matrix(sparse=False))
print("from eigenvalues:", [round(float(np.mean(lam**k)), 4) for k in range(1, 6)])

# Petersen graph: girth 5, so only pentagons show up
pet = census(from_networkx(nx.petersen_graph()))
print("Petersen: Delta=%d Q=%d Pi=%d" % (pet.Delta, pet.Q, pet.Pi))
