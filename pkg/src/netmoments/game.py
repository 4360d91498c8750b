"""Network games with linear best responses.

Agent ``i`` best-responds with ``f_i(x) = max(0, 1 - delta * sum_j a_ij x_j)``
(stand-alone action normalized to 1).  A Nash equilibrium is a fixed point
``x = f(x)`` in ``[0, 1]^n``.  For an active set ``S`` the equilibrium
conditions are

    (I + delta A_S) x_S = 1,        x_S > 0,
    delta A_{N\\S, S} x_S >= 1      (every inactive agent is priced out),

so the full equilibrium set is found by checking all ``2^n`` active sets.
Equilibria are also the KKT points of maximizing the potential
``phi(x) = sum_i (x_i - x_i^2 / 2) - (delta / 2) x' A x`` over ``x >= 0``.
"""

from __future__ import annotations

import enum
import itertools
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import spsolve

from .bounds import bounds_analytic
from .census import census
from .errors import BoundsError, GameError
from .graph import Graph, induced_subgraph
from .spectral import extreme_eigenvalues, moments_from_census

logger = logging.getLogger(__name__)

__all__ = [
    "ActionProfile",
    "CournotParams",
    "DynamicsResult",
    "EquilibriumRecord",
    "EquilibriumSet",
    "GameConfig",
    "UniquenessCertificate",
    "UniquenessStatus",
    "best_response",
    "best_response_dynamics",
    "best_responses",
    "enumerate_equilibria",
    "interior_equilibrium",
    "kkt_residual",
    "payoff",
    "potential",
    "potential_gradient",
    "stability_check",
    "uniqueness_certificate",
]

ACTIVITY_TOL = 1e-10
INEQ_TOL = 1e-9
STAB_TOL = 1e-9
FIXED_POINT_TOL = 1e-9
COND_LIMIT = 1e12
DEDUP_TOL = 1e-8
DEFAULT_MAX_N = 25


@dataclass(frozen=True)
class CournotParams:
    """Linear inverse demand ``a - b (q_i + 2 delta sum_j a_ij q_j)``, marginal cost ``d``."""

    a: float
    b: float
    d: float

    def __post_init__(self):
        if self.b <= 0:
            raise GameError("Cournot slope b must be positive")
        if self.a <= self.d:
            raise GameError("Cournot intercept a must exceed marginal cost d")

    @property
    def standalone(self) -> float:
        """Output of a firm with no neighbors, ``(a - d) / (2 b)``."""
        return (self.a - self.d) / (2 * self.b)


@dataclass(frozen=True)
class GameConfig:
    graph: Graph
    delta: float
    cournot: CournotParams | None = None
    _A: object = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.delta >= 0:
            raise GameError(f"delta must be >= 0, got {self.delta}")
        object.__setattr__(self, "_A", self.graph.adjacency_matrix())

    @property
    def A(self):
        """Sparse adjacency matrix (float)."""
        return self._A

    @property
    def n(self) -> int:
        return self.graph.node_count


@dataclass(frozen=True)
class ActionProfile:
    x: np.ndarray
    activity_tol: float = ACTIVITY_TOL

    def __post_init__(self):
        object.__setattr__(self, "x", np.asarray(self.x, dtype=float))

    @property
    def active_set(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.x > self.activity_tol))

    def __len__(self):
        return len(self.x)


def _vec(x) -> np.ndarray:
    return x.x if isinstance(x, ActionProfile) else np.asarray(x, dtype=float)


def _neighbor_sums(x: np.ndarray, cfg: GameConfig) -> np.ndarray:
    return cfg.A @ x


def payoff(i: int, x, cfg: GameConfig) -> float:
    """Cournot payoff of agent ``i`` at normalized profile ``x``.

    Normalized actions are scaled to quantities by the stand-alone output
    ``(a - d) / (2 b)`` before evaluating the payoff.
    """
    if cfg.cournot is None:
        raise GameError("payoff needs Cournot parameters (a, b, d)")
    a, b, d = cfg.cournot.a, cfg.cournot.b, cfg.cournot.d
    q = _vec(x) * cfg.cournot.standalone
    nb = float((cfg.A[[i]] @ q)[0])
    return float(q[i] * (a - b * (q[i] + 2 * cfg.delta * nb)) - d * q[i])


def best_responses(x, cfg: GameConfig) -> np.ndarray:
    return np.maximum(0.0, 1.0 - cfg.delta * _neighbor_sums(_vec(x), cfg))


def best_response(i: int, x, cfg: GameConfig) -> float:
    nb = float((cfg.A[[i]] @ _vec(x))[0])
    return max(0.0, 1.0 - cfg.delta * nb)


def potential(x, cfg: GameConfig) -> float:
    x = _vec(x)
    return float(np.sum(x - 0.5 * x * x) - 0.5 * cfg.delta * x @ (cfg.A @ x))


def potential_gradient(x, cfg: GameConfig) -> np.ndarray:
    x = _vec(x)
    return 1.0 - x - cfg.delta * _neighbor_sums(x, cfg)


def kkt_residual(x, cfg: GameConfig, activity_tol: float = ACTIVITY_TOL) -> np.ndarray:
    """Per-agent KKT violation for ``max phi(x) s.t. x >= 0``.

    Active agents need a zero gradient; inactive ones a nonpositive one.
    """
    x = _vec(x)
    g = potential_gradient(x, cfg)
    return np.where(x > activity_tol, np.abs(g), np.maximum(0.0, g))


def fixed_point_residual(x, cfg: GameConfig) -> float:
    x = _vec(x)
    if len(x) == 0:
        return 0.0
    return float(np.max(np.abs(best_responses(x, cfg) - x)))


# stability ----------------------------------------------------------------------


def _stability(x: np.ndarray, cfg: GameConfig) -> tuple[bool, str | None]:
    active = np.flatnonzero(x > ACTIVITY_TOL)
    inactive = np.flatnonzero(x <= ACTIVITY_TOL)
    # inactive agents must be strictly priced out
    if len(inactive):
        pressure = cfg.delta * _neighbor_sums(x, cfg)[inactive]
        if np.any(pressure <= 1.0 + STAB_TOL):
            tied = np.any(np.abs(pressure - 1.0) <= max(STAB_TOL, INEQ_TOL))
            return False, "boundary" if tied else None
    if len(active) >= 2:
        lam = extreme_eigenvalues(induced_subgraph(cfg.graph, active)).lambda_min
        # delta < -1/lam  <=>  1 + delta * lam > 0 (vacuous when lam == 0)
        if 1.0 + cfg.delta * lam <= STAB_TOL:
            return False, None
    return True, None


def stability_check(x, cfg: GameConfig) -> bool:
    """Local asymptotic stability of an equilibrium under ``dx/dt = f(x) - x``.

    Stable iff ``delta < -1/lambda_min(A_S)`` on the active subgraph and every
    inactive agent has ``delta * sum_j a_ij x_j > 1`` strictly.
    """
    x = _vec(x)
    if fixed_point_residual(x, cfg) > FIXED_POINT_TOL:
        raise GameError("stability_check needs an equilibrium profile")
    return _stability(x, cfg)[0]


# enumeration --------------------------------------------------------------------


@dataclass(frozen=True)
class EquilibriumRecord:
    profile: ActionProfile
    stable: bool
    kkt_residual: np.ndarray
    annotation: str | None = None

    @property
    def x(self) -> np.ndarray:
        return self.profile.x

    @property
    def active_set(self) -> tuple[int, ...]:
        return self.profile.active_set

    def to_dict(self) -> dict:
        return {
            "x": self.x.tolist(),
            "active_set": list(self.active_set),
            "stable": self.stable,
            "kkt_max": float(self.kkt_residual.max(initial=0.0)),
            "annotation": self.annotation,
        }


@dataclass
class EquilibriumSet:
    """Equilibria in subset order, plus the active sets skipped as near-singular."""

    records: list[EquilibriumRecord]
    singular_subsets: list[tuple[int, ...]]

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __getitem__(self, k):
        return self.records[k]

    def to_dict(self) -> dict:
        return {
            "equilibria": [r.to_dict() for r in self.records],
            "delta_singular_count": len(self.singular_subsets),
        }


def enumerate_equilibria(cfg: GameConfig, max_n: int = DEFAULT_MAX_N) -> EquilibriumSet:
    """All Nash equilibria by checking every active set.

    Subsets are visited by increasing size, lexicographically within a
    size.  Active sets whose system ``I + delta A_S`` has condition number
    above ``1e12`` are skipped and listed in ``singular_subsets``.
    """
    n = cfg.n
    if n > max_n:
        raise GameError(
            f"refusing to enumerate 2^{n} active sets (n={n} > max_n={max_n}); raise max_n explicitly"
        )
    A = cfg.graph.adjacency_matrix(sparse=False)
    delta = cfg.delta
    records: list[EquilibriumRecord] = []
    singular = []
    for size in range(n + 1):
        for S in itertools.combinations(range(n), size):
            S = list(S)
            M = np.eye(size) + delta * A[np.ix_(S, S)]
            if size and np.linalg.cond(M) > COND_LIMIT:
                singular.append(tuple(S))
                logger.debug("skipping near-singular active set %s", S)
                continue
            xS = np.linalg.solve(M, np.ones(size)) if size else np.zeros(0)
            if np.any(xS <= ACTIVITY_TOL):
                if np.any((xS > 0) & (xS <= ACTIVITY_TOL)):
                    logger.info("rejecting active set %s with ambiguous tiny action", S)
                continue
            rest = np.setdiff1d(np.arange(n), S)
            if len(rest) and np.any(delta * (A[np.ix_(rest, S)] @ xS) < 1.0 - INEQ_TOL):
                continue
            x = np.zeros(n)
            x[S] = xS
            if fixed_point_residual(x, cfg) > FIXED_POINT_TOL:
                logger.warning("active set %s passed the conditions but is not a fixed point", S)
                continue
            if any(np.max(np.abs(r.x - x)) < DEDUP_TOL for r in records):
                continue
            stable, note = _stability(x, cfg)
            records.append(EquilibriumRecord(ActionProfile(x), stable, kkt_residual(x, cfg), note))
    return EquilibriumSet(records, singular)


# uniqueness ---------------------------------------------------------------------


def _lambda_min(g: Graph) -> float:
    return extreme_eigenvalues(g).lambda_min


def interior_equilibrium(cfg: GameConfig) -> ActionProfile:
    """The all-active equilibrium ``(I + delta A)^{-1} 1``.

    Refuses unless ``delta < -1/lambda_min(A)``.  Below that threshold the
    equilibrium is unique but not necessarily all-active (a star with ``k``
    leaves and ``1/k < delta < 1/sqrt(k)`` idles its center); when the linear
    solution has a nonpositive entry it is not an equilibrium and a
    :class:`GameError` is raised instead.
    """
    n = cfg.n
    if cfg.graph.edge_count and cfg.delta > 0:
        threshold = -1.0 / _lambda_min(cfg.graph)
        if not cfg.delta < threshold:
            raise GameError(
                f"delta={cfg.delta} is not below the uniqueness threshold -1/lambda_min={threshold:.12g}"
            )
    M = (sp.identity(n, format="csc") + cfg.delta * cfg.A).tocsc()
    x = np.atleast_1d(spsolve(M, np.ones(n))) if n else np.zeros(0)
    if np.any(x <= ACTIVITY_TOL):
        raise GameError(
            "the unique equilibrium is not all-active: (I + delta A)^-1 1 has "
            f"{int(np.sum(x <= ACTIVITY_TOL))} nonpositive entries; use enumerate_equilibria"
        )
    return ActionProfile(x)


class UniquenessStatus(str, enum.Enum):
    UNIQUE_BY_LAMBDA_MIN = "UniqueByLambdaMin"
    UNIQUE_BY_SPECTRAL_RADIUS = "UniqueBySpectralRadius"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class UniquenessCertificate:
    """Uniqueness status from exact extremes.

    ``threshold_estimate`` is ``-1/alpha_2`` from the moment bounds.  Because
    ``alpha_2 >= lambda_min`` it can only overestimate ``-1/lambda_min``, so it
    never affects ``status``.
    """

    status: UniquenessStatus
    delta: float
    threshold_exact: float
    threshold_spectral_radius: float
    threshold_estimate: float | None

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "delta": self.delta,
            "threshold_exact": self.threshold_exact,
            "threshold_spectral_radius": self.threshold_spectral_radius,
            "threshold_estimate": self.threshold_estimate,
        }


def uniqueness_certificate(cfg: GameConfig) -> UniquenessCertificate:
    g = cfg.graph
    if g.edge_count == 0:
        return UniquenessCertificate(
            UniquenessStatus.UNIQUE_BY_LAMBDA_MIN, cfg.delta, math.inf, math.inf, math.inf
        )
    lo, hi = extreme_eigenvalues(g)
    exact, radius = -1.0 / lo, 1.0 / hi
    try:
        alpha2 = bounds_analytic(moments_from_census(census(g)), 2).alpha
        estimate = -1.0 / alpha2 if alpha2 < 0 else math.inf
    except BoundsError as exc:
        logger.warning("moment-based threshold estimate unavailable: %s", exc)
        estimate = None
    if cfg.delta < exact:
        status = UniquenessStatus.UNIQUE_BY_LAMBDA_MIN
    elif cfg.delta < radius:
        status = UniquenessStatus.UNIQUE_BY_SPECTRAL_RADIUS
    else:
        status = UniquenessStatus.INCONCLUSIVE
    return UniquenessCertificate(status, cfg.delta, exact, radius, estimate)


# dynamics -----------------------------------------------------------------------


@dataclass(frozen=True)
class DynamicsResult:
    steps: np.ndarray  # step index of each trajectory sample
    trajectory: np.ndarray  # shape (len(steps), n)
    residuals: np.ndarray  # ||f(x) - x||_inf at each sample
    converged: bool
    limit: ActionProfile
    n_steps: int


def best_response_dynamics(
    cfg: GameConfig,
    x0: Sequence[float] | ActionProfile,
    dt: float = 0.5,
    max_steps: int = 1_000_000,
    tol: float = 1e-8,
    sample_every: int | None = None,
) -> DynamicsResult:
    """Explicit Euler integration of ``dx/dt = f(x) - x``.

    With ``0 < dt <= 1`` each iterate is a convex combination of ``x`` and
    ``f(x)``, so the trajectory stays in ``[0, 1]^n``.  Stops as soon as the
    fixed-point residual drops below ``tol``.
    """
    if not 0 < dt <= 1:
        raise GameError(f"dt must lie in (0, 1], got {dt}")
    if max_steps < 0:
        raise GameError("max_steps must be nonnegative")
    x = np.array(_vec(x0), dtype=float)
    if x.shape != (cfg.n,):
        raise GameError(f"x0 has shape {x.shape}, expected ({cfg.n},)")
    if np.any(x < 0) or np.any(x > 1):
        raise GameError("x0 must lie in [0, 1]^n")
    if sample_every is None:
        sample_every = max(1, max_steps // 1000)
    A, delta = cfg.A, cfg.delta
    steps, traj, res = [], [], []
    converged = False
    k = 0
    while True:
        fx = np.maximum(0.0, 1.0 - delta * (A @ x))
        r = float(np.max(np.abs(fx - x))) if cfg.n else 0.0
        converged = r < tol
        if k % sample_every == 0 or converged or k == max_steps:
            steps.append(k)
            traj.append(x.copy())
            res.append(r)
        if converged or k == max_steps:
            break
        x += dt * (fx - x)
        k += 1
    return DynamicsResult(np.array(steps), np.array(traj), np.array(res), converged, ActionProfile(x), k)
