"""Spectral moments, eigenvalue bounds and linear-best-response network games."""

from .bounds import (
    HankelPair,
    SupportBounds,
    alpha_bisect,
    beta_bisect,
    bisect_bounds,
    bound_sensitivity,
    bounds_analytic,
    bounds_analytic_s2,
    hankel_matrices,
    localizing_matrix,
    support_bounds,
)
from .census import (
    StructuralCensus,
    census,
    pentagon_counts,
    quadrangle_counts,
    triangle_counts,
)
from .errors import (
    BoundsError,
    EdgeListError,
    GameError,
    NetMomentsError,
    UndefinedMomentError,
)
from .game import (
    ActionProfile,
    CournotParams,
    GameConfig,
    UniquenessStatus,
    best_response,
    best_response_dynamics,
    enumerate_equilibria,
    interior_equilibrium,
    kkt_residual,
    payoff,
    potential,
    stability_check,
    uniqueness_certificate,
)
from .graph import (
    Graph,
    degree_sequence,
    ego_subgraph,
    from_edges,
    is_bipartite,
    load_edge_list,
    read_edge_list,
)
from .spectral import (
    MomentSequence,
    closed_walk_counts,
    extreme_eigenvalues,
    moments_from_aggregates,
    moments_from_census,
    spectral_comparison,
)

__all__ = [
    "ActionProfile",
    "BoundsError",
    "CournotParams",
    "EdgeListError",
    "GameConfig",
    "GameError",
    "Graph",
    "HankelPair",
    "MomentSequence",
    "NetMomentsError",
    "StructuralCensus",
    "SupportBounds",
    "UndefinedMomentError",
    "UniquenessStatus",
    "alpha_bisect",
    "best_response",
    "best_response_dynamics",
    "beta_bisect",
    "bisect_bounds",
    "bound_sensitivity",
    "bounds_analytic",
    "bounds_analytic_s2",
    "census",
    "closed_walk_counts",
    "degree_sequence",
    "ego_subgraph",
    "enumerate_equilibria",
    "extreme_eigenvalues",
    "from_edges",
    "hankel_matrices",
    "interior_equilibrium",
    "is_bipartite",
    "kkt_residual",
    "load_edge_list",
    "localizing_matrix",
    "moments_from_aggregates",
    "moments_from_census",
    "payoff",
    "pentagon_counts",
    "potential",
    "quadrangle_counts",
    "read_edge_list",
    "spectral_comparison",
    "stability_check",
    "support_bounds",
    "triangle_counts",
    "uniqueness_certificate",
]

__version__ = "0.1.0"
