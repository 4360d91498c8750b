"""Inner bounds on the extreme eigenvalues from truncated spectral moments.

Given moments ``m_0..m_{2s+1}`` of the spectral measure, the localizing
matrix ``H_s(c) = R_odd - c * R_even`` is built from the Hankel matrices

    R_even[i, j] = m_{i+j},    R_odd[i, j] = m_{i+j+1},    0 <= i, j <= s.

The bounds are

    alpha_s = max{c : H_s(c) is PSD}     (>= lambda_min)
    beta_s  = min{c : -H_s(c) is PSD}    (<= lambda_max)

and tighten as ``s`` grows.  Both feasible sets are rays because ``R_even``
is PSD, so each bound is a one-variable bisection.  They are also the
extreme roots of ``det H_s(c)``, i.e. the extreme generalized eigenvalues of
the pencil ``(R_odd, R_even)``; for ``s = 2`` that is a cubic solved in
closed form.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from .census import StructuralCensus
from .errors import BoundsError
from .spectral import MomentSequence, moments_from_aggregates

__all__ = [
    "HankelPair",
    "Sensitivity",
    "SupportBounds",
    "alpha_bisect",
    "beta_bisect",
    "bisect_bounds",
    "bound_sensitivity",
    "bounds_analytic",
    "bounds_analytic_s2",
    "cubic_real_roots",
    "hankel_matrices",
    "localizing_matrix",
    "support_bounds",
]

MAX_S = 2
PSD_TOL = 1e-10
REL_BISECT_TOL = 1e-9
DEGENERATE_TOL = 1e-12


@dataclass(frozen=True)
class HankelPair:
    s: int
    R_even: np.ndarray
    R_odd: np.ndarray


@dataclass(frozen=True)
class SupportBounds:
    """Inner bounds ``alpha <= ... <= beta`` inside ``[lambda_min, lambda_max]``.

    ``s`` is the requested order and ``order`` the one actually used; they
    differ (and ``degenerate`` is set) when the measure has too few atoms
    for ``R_even`` of order ``s`` to be invertible.
    """

    s: int
    alpha: float
    beta: float
    method: str
    degenerate: bool = False
    order: int | None = None
    bracket: tuple[float, float] | None = None
    iterations: int | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["bracket"] is not None:
            d["bracket"] = list(d["bracket"])
        return d


def _check_order(m: MomentSequence, s: int) -> None:
    if s not in range(MAX_S + 1):
        raise ValueError(f"order s must be one of 0..{MAX_S}, got {s}")
    if len(m.m) < 2 * s + 2:
        raise ValueError(f"order {s} needs moments through m_{2 * s + 1}")


def hankel_matrices(m: MomentSequence, s: int) -> HankelPair:
    _check_order(m, s)
    idx = np.add.outer(np.arange(s + 1), np.arange(s + 1))
    mm = np.asarray(m.m, dtype=float)
    R_even = mm[idx]
    R_even[0, 0] = 1.0
    return HankelPair(s, R_even, mm[idx + 1])


def localizing_matrix(m: MomentSequence, s: int, c: float) -> np.ndarray:
    h = hankel_matrices(m, s)
    return h.R_odd - c * h.R_even


# exact / rational helpers --------------------------------------------------


def _rational_hankel(m: MomentSequence, s: int):
    mm = [Fraction(1)] + [m.rational(k) for k in range(1, 2 * s + 2)]
    even = [[mm[i + j] for j in range(s + 1)] for i in range(s + 1)]
    odd = [[mm[i + j + 1] for j in range(s + 1)] for i in range(s + 1)]
    return even, odd


def _det(M):
    k = len(M)
    if k == 0:
        return Fraction(1)
    if k == 1:
        return M[0][0]
    if k == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    return sum((-1) ** j * M[0][j] * _det([row[:j] + row[j + 1 :] for row in M[1:]]) for j in range(k))


def _pencil_polynomial(M, N):
    """Coefficients ``[a_0, ..., a_k]`` of ``det(M - c N)`` in powers of ``c``."""
    k = len(M)
    coeffs = [Fraction(0)] * (k + 1)
    for r in range(k + 1):
        for cols in itertools.combinations(range(k), r):
            mixed = [[(N if j in cols else M)[i][j] for j in range(k)] for i in range(k)]
            coeffs[r] += (-1) ** r * _det(mixed)
    return coeffs


def _is_singular(m: MomentSequence, s: int) -> bool:
    """Whether ``R_even`` of order ``s`` is singular (the measure has <= s atoms)."""
    if s == 0:
        return False
    if m.exact:
        even, _ = _rational_hankel(m, s)
        return _det(even) == 0
    R = hankel_matrices(m, s).R_even
    d = np.diag(R)
    if np.any(d <= 0):
        return True
    scaled = R / np.sqrt(np.outer(d, d))
    return np.linalg.det(scaled) < DEGENERATE_TOL


def _effective_order(m: MomentSequence, s: int) -> int:
    while s > 0 and _is_singular(m, s):
        s -= 1
    return s


def _validate(m: MomentSequence) -> None:
    if m.m[2] < 0:
        raise BoundsError(f"m2 = {m.m[2]} is negative")
    if len(m.m) > 4 and m.m[4] < m.m[2] ** 2 * (1 - 1e-12):
        raise BoundsError(f"m4 = {m.m[4]} < m2^2 = {m.m[2] ** 2}: not a spectral measure")
    if not m.exact and len(m.m) > 4 and m.m[2] > 0:
        R = hankel_matrices(m, 2).R_even
        d = 1.0 / np.sqrt(np.diag(R))
        if np.linalg.eigvalsh(R * d[:, None] * d[None, :])[0] < -1e-9:
            raise BoundsError("moment matrix is not positive semidefinite: not a spectral measure")


# bisection ------------------------------------------------------------------


def _psd(H: np.ndarray, scale: np.ndarray, tol: float) -> bool:
    # congruence with diag(R_even)^(-1/2) preserves inertia but equalizes magnitudes
    Hs = H * scale[:, None] * scale[None, :]
    return np.linalg.eigvalsh(Hs)[0] >= -tol


def _bisect(m: MomentSequence, s: int, side: str, tol: float | None, psd_tol: float):
    h = hankel_matrices(m, s)
    scale = 1.0 / np.sqrt(np.diag(h.R_even))
    sign = 1.0 if side == "alpha" else -1.0

    def feasible(c):
        return _psd(sign * (h.R_odd - c * h.R_even), scale, psd_tol)

    B = math.sqrt(max(m.n * m.m[2], 0.0))
    bracket = (-B, B)
    if tol is None:
        tol = REL_BISECT_TOL * max(2 * B, 1.0)
    # alpha: feasible set is (-inf, alpha]; beta: [beta, inf)
    good, bad = (-B, B) if side == "alpha" else (B, -B)
    if not feasible(good):
        raise BoundsError(
            f"{side}: localizing matrix not semidefinite at bracket end {good:.6g}; moments corrupt?"
        )
    if feasible(bad):
        return bad, bracket, 0
    it = 0
    while abs(bad - good) > tol:
        mid = 0.5 * (good + bad)
        if feasible(mid):
            good = mid
        else:
            bad = mid
        it += 1
    return good, bracket, it


def bisect_bounds(
    m: MomentSequence, s: int = 2, tol: float | None = None, psd_tol: float = PSD_TOL
) -> SupportBounds:
    """Both bounds of order ``s`` by semidefinite-feasibility bisection.

    The default ``tol`` is ``1e-9`` times the initial bracket width
    ``2 sqrt(n m_2)`` (the Frobenius norm bounds every eigenvalue).
    """
    _check_order(m, s)
    _validate(m)
    order = _effective_order(m, s)
    if order == 0:
        return SupportBounds(s, m.m[1], m.m[1], "psd-bisection", s > 0, 0)
    a, bracket, ia = _bisect(m, order, "alpha", tol, psd_tol)
    b, _, ib = _bisect(m, order, "beta", tol, psd_tol)
    return SupportBounds(s, a, b, "psd-bisection", order < s, order, bracket, ia + ib)


def alpha_bisect(m: MomentSequence, s: int = 2, tol: float | None = None) -> float:
    """Upper bound on the smallest eigenvalue: largest ``c`` with ``H_s(c)`` PSD."""
    return bisect_bounds(m, s, tol).alpha


def beta_bisect(m: MomentSequence, s: int = 2, tol: float | None = None) -> float:
    """Lower bound on the largest eigenvalue: smallest ``c`` with ``-H_s(c)`` PSD."""
    return bisect_bounds(m, s, tol).beta


# closed form ----------------------------------------------------------------


def cubic_real_roots(a3: float, a2: float, a1: float, a0: float) -> np.ndarray:
    """Real roots of ``a3 c^3 + a2 c^2 + a1 c + a0``, sorted ascending.

    Three real roots use the trigonometric form; a single real root (only
    possible for data that is not a genuine spectral measure, or from
    rounding at a double root) uses Cardano's formula with a warning.
    """
    if a3 == 0:
        raise ValueError("leading coefficient is zero")
    b, c, d = a2 / a3, a1 / a3, a0 / a3
    # depressed cubic t^3 + p t + q with c = t - b/3
    p = c - b * b / 3.0
    q = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    shift = -b / 3.0
    if p < 0:
        r = math.sqrt(-p / 3.0)
        arg = -q / (2.0 * r**3)
        if abs(arg) <= 1.0 + 1e-9:
            theta = math.acos(max(-1.0, min(1.0, arg)))
            roots = np.array(
                [2.0 * r * math.cos((theta - 2.0 * math.pi * k) / 3.0) + shift for k in range(3)]
            )
            return _polish(np.sort(roots), (1.0, b, c, d))
    if p == 0 and q == 0:
        return np.full(3, shift)
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    warnings.warn(
        f"cubic has a single real root (discriminant {disc:.3g}); moments may be corrupt",
        RuntimeWarning,
        stacklevel=2,
    )
    sq = math.sqrt(max(disc, 0.0))
    t = math.copysign(abs(-q / 2 + sq) ** (1 / 3), -q / 2 + sq) + math.copysign(
        abs(-q / 2 - sq) ** (1 / 3), -q / 2 - sq
    )
    return _polish(np.array([t + shift]), (1.0, b, c, d))


def _polish(roots: np.ndarray, coeffs, steps: int = 2) -> np.ndarray:
    p = np.poly1d(coeffs)
    dp = p.deriv()
    out = roots.copy()
    for _ in range(steps):
        slope = dp(out)
        ok = np.abs(slope) > 1e-300
        step = np.where(ok, p(out) / np.where(ok, slope, 1.0), 0.0)
        # reject steps that would jump past a neighbouring root
        out = np.where(np.abs(step) < 1e-6 * (1 + np.abs(out)), out - step, out)
    return np.sort(out)


def _extreme_roots(m: MomentSequence, order: int) -> tuple[float, float]:
    even, odd = _rational_hankel(m, order)
    coeffs = [float(c) for c in _pencil_polynomial(odd, even)]
    if order == 1:
        a0, a1, a2 = coeffs
        disc = a1 * a1 - 4 * a2 * a0
        if disc < 0:
            raise BoundsError("order-1 localizing determinant has no real roots")
        sq = math.sqrt(disc)
        # numerically stable pair of quadratic roots
        qq = -0.5 * (a1 + math.copysign(sq, a1)) if a1 != 0 else 0.5 * sq
        r1 = qq / a2
        r2 = a0 / qq if qq != 0 else -r1
        return min(r1, r2), max(r1, r2)
    a0, a1, a2, a3 = coeffs
    roots = cubic_real_roots(a3, a2, a1, a0)
    return float(roots[0]), float(roots[-1])


def bounds_analytic(m: MomentSequence, s: int = 2) -> SupportBounds:
    """Bounds of order ``s`` as the extreme roots of ``det H_s(c)``.

    Falls back to the highest order with an invertible ``R_even`` when the
    measure has too few atoms, and flags the result as degenerate.
    """
    _check_order(m, s)
    _validate(m)
    order = _effective_order(m, s)
    if order == 0:
        return SupportBounds(s, m.m[1], m.m[1], "analytic", s > 0, 0)
    a, b = _extreme_roots(m, order)
    return SupportBounds(s, a, b, "analytic-cubic" if order == 2 else "analytic", order < s, order)


def bounds_analytic_s2(m: MomentSequence) -> SupportBounds:
    return bounds_analytic(m, 2)


def support_bounds(m: MomentSequence, s: int = 2, method: str = "analytic") -> SupportBounds:
    if method == "analytic":
        return bounds_analytic(m, s)
    if method == "bisect":
        return bisect_bounds(m, s)
    raise ValueError(f"unknown method {method!r}; expected 'analytic' or 'bisect'")


# sensitivity ------------------------------------------------------------------

_PROPERTY_ALIASES = {"Δ": "Delta", "Π": "Pi", "C": "C_dt"}
PROPERTIES = ("e", "Delta", "Q", "Pi", "W2", "C_dt")


@dataclass(frozen=True)
class Sensitivity:
    property: str
    h: float
    d_alpha: float
    d_beta: float


def bound_sensitivity(c: StructuralCensus, prop: str, h: float, scheme: str = "central") -> Sensitivity:
    """Finite-difference derivatives of the order-2 bounds w.r.t. one census aggregate.

    All other aggregates (and ``n``) are held fixed.  ``scheme`` is
    ``"central"`` (default) or ``"forward"``.
    """
    prop = _PROPERTY_ALIASES.get(prop, prop)
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}; expected one of {PROPERTIES}")
    if h == 0:
        raise ValueError("perturbation size h must be nonzero")
    base = {k: float(v) for k, v in c.aggregates().items()}

    def at(delta):
        agg = dict(base)
        agg[prop] += delta
        m = moments_from_aggregates(**agg)
        b = bounds_analytic(m, 2)
        if b.degenerate:
            raise BoundsError(f"perturbed census ({prop}{delta:+g}) gives a degenerate measure")
        return b

    if scheme == "central":
        lo, hi, width = at(-h), at(h), 2 * h
    elif scheme == "forward":
        lo, hi, width = at(0.0), at(h), h
    else:
        raise ValueError(f"unknown scheme {scheme!r}")
    return Sensitivity(prop, h, (hi.alpha - lo.alpha) / width, (hi.beta - lo.beta) / width)
