"""
Eigenvalue bounds from five moments
===================================

The moments describe the spectral measure of the graph.  Positivity of the
Hankel and localizing matrices confines its support, which gives an inner
bracket [alpha, beta] with lambda_min <= alpha and beta <= lambda_max.
"""

import networkx as nx

from netmoments import (
    bisect_bounds,
    bounds_analytic,
    census,
    extreme_eigenvalues,
    hankel_matrices,
    moments_from_census,
)
from netmoments.synthetic import clustered_power_law, from_networkx

# the 5-cycle: second-order bounds recover both extremes exactly
m = moments_from_census(census(from_networkx(nx.cycle_graph(5))))
print(hankel_matrices(m, 2).R_even)
b = bounds_analytic(m, 2)
print("C5  alpha=%.6f beta=%.6f" % (b.alpha, b.beta))

# complete graphs have only two distinct eigenvalues; order 2 falls back
for k in (4, 6):
    b = bounds_analytic(moments_from_census(census(from_networkx(nx.complete_graph(k)))), 2)
    print("K%d  alpha=%g beta=%g degenerate=%s order=%d" % (k, b.alpha, b.beta, b.degenerate, b.order))

# a clustered scale-free graph: order 1 is loose, order 2 tighter
g = clustered_power_law(800, 4, 0.4, seed=3)
m = moments_from_census(census(g))
lo, hi = extreme_eigenvalues(g)
b1, b2 = bounds_analytic(m, 1), bounds_analytic(m, 2)
print("exact      [%.4f, %.4f]" % (lo, hi))
print("order 2    [%.4f, %.4f]" % (b2.alpha, b2.beta))
print("order 1    [%.4f, %.4f]" % (b1.alpha, b1.beta))

# bisection on the semidefinite constraint lands on the same numbers
bb = bisect_bounds(m, 2)
print("bisection  [%.4f, %.4f] in %d steps" % (bb.alpha, bb.beta, bb.iterations))
