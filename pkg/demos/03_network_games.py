"""
Equilibria of a game with local substitutes
===========================================

Each agent plays x_i = max(0, 1 - delta * sum of neighbours' actions).  We
enumerate all equilibria, check stability, certify uniqueness from the
spectrum and run best-response dynamics.
"""

import numpy as np

from netmoments import (
    GameConfig,
    best_response_dynamics,
    enumerate_equilibria,
    from_edges,
    uniqueness_certificate,
)

# two agents: one interior equilibrium below delta = 1, three above
dyad = from_edges(2, [(0, 1)])
for delta in (0.5, 1.5):
    for r in enumerate_equilibria(GameConfig(dyad, delta)):
        print("delta=%.1f x=%s stable=%s" % (delta, np.round(r.x, 4), r.stable))

# a star with four leaves: unique below delta = 1/2, yet the center idles
star = from_edges(5, [(0, k) for k in range(1, 5)])
cfg = GameConfig(star, 0.45)
cert = uniqueness_certificate(cfg)
print(cert.status.value, "threshold=%.3f estimate=%.3f" % (cert.threshold_exact, cert.threshold_estimate))
(eq,) = enumerate_equilibria(cfg)
print("star equilibrium:", eq.x, "active:", eq.active_set)

# dynamics from a random start reach the same point
res = best_response_dynamics(cfg, np.random.default_rng(0).random(5))
print("converged=%s after %d steps to %s" % (res.converged, res.n_steps, np.round(res.limit.x, 6)))

# from near the unstable interior of the dyad the play drifts to a corner
res = best_response_dynamics(GameConfig(dyad, 1.5), [0.401, 0.399])
print("dyad from (0.401, 0.399) ->", np.round(res.limit.x, 6))
