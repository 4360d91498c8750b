"""Ego-network sampling experiment: moment bounds versus exact extremes.

For ``k`` seed nodes drawn without replacement, the radius-``r`` ego network
is extracted and run through census -> moments -> bounds (orders 1 and 2)
-> exact extreme eigenvalues.  One :class:`ExperimentRow` per subgraph.
"""

from __future__ import annotations

import csv
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from typing import TextIO

import numpy as np
from scipy.stats import spearmanr

from .bounds import bisect_bounds, bounds_analytic
from .census import census
from .errors import NetMomentsError
from .graph import Graph, ego_subgraph
from .spectral import extreme_eigenvalues, moments_from_census

SANDWICH_TOL = 1e-6


@dataclass(frozen=True)
class ExperimentRow:
    subgraph_id: int
    seed_node: object
    n: int
    e: int
    Delta: int
    Q: int
    Pi: int
    W2: int
    C_dt: int
    m1: float
    m2: float
    m3: float
    m4: float
    m5: float
    alpha1: float
    beta1: float
    alpha2: float
    beta2: float
    alpha2_bisect: float
    beta2_bisect: float
    lambda_min: float
    lambda_max: float
    degenerate: bool
    census_seconds: float
    bounds_seconds: float

    def sandwich_ok(self, tol: float = SANDWICH_TOL) -> bool:
        return (
            self.lambda_min <= self.alpha2 + tol
            and self.alpha2 <= self.alpha1 + tol
            and self.beta1 <= self.beta2 + tol
            and self.beta2 <= self.lambda_max + tol
        )

    def methods_agree(self, tol: float = SANDWICH_TOL) -> bool:
        return abs(self.alpha2 - self.alpha2_bisect) <= tol and abs(self.beta2 - self.beta2_bisect) <= tol


TIMING_COLUMNS = ("census_seconds", "bounds_seconds")
COLUMNS = tuple(f.name for f in fields(ExperimentRow))


def analyze_subgraph(sub: Graph, subgraph_id: int = 0, seed_node=0) -> ExperimentRow:
    t0 = time.perf_counter()
    c = census(sub)
    t1 = time.perf_counter()
    m = moments_from_census(c)
    b1 = bounds_analytic(m, 1)
    b2 = bounds_analytic(m, 2)
    bb = bisect_bounds(m, 2)
    t2 = time.perf_counter()
    lo, hi = extreme_eigenvalues(sub)
    agg = c.aggregates()
    return ExperimentRow(
        subgraph_id=subgraph_id,
        seed_node=seed_node,
        **agg,
        m1=m[1],
        m2=m[2],
        m3=m[3],
        m4=m[4],
        m5=m[5],
        alpha1=b1.alpha,
        beta1=b1.beta,
        alpha2=b2.alpha,
        beta2=b2.beta,
        alpha2_bisect=bb.alpha,
        beta2_bisect=bb.beta,
        lambda_min=lo,
        lambda_max=hi,
        degenerate=b2.degenerate,
        census_seconds=t1 - t0,
        bounds_seconds=t2 - t1,
    )


def sample_seeds(g: Graph, k: int, rng_seed: int) -> np.ndarray:
    """``k`` distinct node ids, uniformly at random from a seeded PCG64 stream."""
    if k < 1:
        raise NetMomentsError("number of subgraphs must be >= 1")
    if k > g.node_count:
        raise NetMomentsError(f"cannot sample {k} distinct seeds from {g.node_count} nodes")
    return np.random.default_rng(rng_seed).choice(g.node_count, size=k, replace=False)


def _job(args):
    g, sid, seed, radius = args
    return analyze_subgraph(ego_subgraph(g, int(seed), radius), sid, g.label(int(seed)))


def run_experiment(
    g: Graph, k: int, radius: int = 2, rng_seed: int = 0, workers: int | None = 1
) -> list[ExperimentRow]:
    seeds = sample_seeds(g, k, rng_seed)
    jobs = [(g, sid, s, radius) for sid, s in enumerate(seeds)]
    if workers is not None and workers <= 1:
        return [_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves submission order
        return list(pool.map(_job, jobs))


def _spearman(a, b) -> float:
    if len(a) < 2 or np.ptp(a) == 0 or np.ptp(b) == 0:
        return float("nan")
    return float(spearmanr(a, b).statistic)


def summarize(rows: list[ExperimentRow]) -> dict:
    return {
        "rows": len(rows),
        "spearman_lambda_min_alpha2": _spearman([r.lambda_min for r in rows], [r.alpha2 for r in rows]),
        "spearman_lambda_max_beta2": _spearman([r.lambda_max for r in rows], [r.beta2 for r in rows]),
        "sandwich_violations": sum(not r.sandwich_ok() for r in rows),
        "degenerate": sum(r.degenerate for r in rows),
    }


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_csv(rows: list[ExperimentRow], stream: TextIO, timings: bool = False) -> None:
    cols = [c for c in COLUMNS if timings or c not in TIMING_COLUMNS]
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([_fmt(getattr(r, c)) for c in cols])
