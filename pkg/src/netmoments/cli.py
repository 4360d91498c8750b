"""Command-line front end.

Every command reads an edge list (two tokens per line, ``#`` comments) and
writes JSON or CSV to stdout or ``--out``.  Exit codes: 0 success, 2 usage
error, 3 data error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import math
import sys
import warnings

import numpy as np

from . import bounds as _bounds
from .census import census
from .errors import NetMomentsError
from .experiment import run_experiment, summarize, write_csv
from .game import (
    GameConfig,
    best_response_dynamics,
    enumerate_equilibria,
    uniqueness_certificate,
)
from .graph import ego_subgraph, read_edge_list, write_edge_list
from .spectral import closed_walk_counts, extreme_eigenvalues, moments_from_census

EXIT_USAGE = 2
EXIT_DATA = 3


class UsageError(Exception):
    pass


def _json_default(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.floating):
        return float(o)
    raise TypeError(type(o).__name__)


def _finite(v):
    return None if isinstance(v, float) and not math.isfinite(v) else v


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _emit_json(obj, path) -> None:
    with _output(path) as fh:
        json.dump(obj, fh, indent=2, default=_json_default)
        fh.write("\n")


def cmd_census(args) -> None:
    g = read_edge_list(args.path)
    _emit_json(census(g).to_dict(per_node=args.per_node), args.out)


def cmd_moments(args) -> None:
    g = read_edge_list(args.path)
    m = moments_from_census(census(g))
    out = m.to_dict()
    if args.exact:
        walks = closed_walk_counts(g, 5)
        out["walk_oracle"] = walks
        out["walk_oracle_match"] = walks == list(m.walk_counts[1:])
        lo, hi = extreme_eigenvalues(g)
        out["lambda_min"], out["lambda_max"] = lo, hi
        if not out["walk_oracle_match"]:
            _emit_json(out, args.out)
            raise NetMomentsError("census moments disagree with closed-walk counts")
    _emit_json(out, args.out)


def cmd_bounds(args) -> None:
    g = read_edge_list(args.path)
    m = moments_from_census(census(g))
    b = _bounds.support_bounds(m, args.order, args.method)
    _emit_json(b.to_dict(), args.out)


def cmd_equilibria(args) -> None:
    g = read_edge_list(args.path)
    cfg = GameConfig(g, args.delta)
    eq = enumerate_equilibria(cfg, max_n=args.max_n)
    cert = uniqueness_certificate(cfg)
    out = eq.to_dict()
    out.update({k: _finite(v) for k, v in cert.to_dict().items()})
    out["labels"] = [g.label(i) for i in range(g.node_count)]
    _emit_json(out, args.out)


def _parse_x0(text, n):
    if text is None:
        return np.zeros(n)
    vals = [float(t) for t in text.split(",") if t.strip()]
    if len(vals) == 1:
        return np.full(n, vals[0])
    if len(vals) != n:
        raise UsageError(f"--x0 has {len(vals)} values, graph has {n} nodes")
    return np.array(vals)


def cmd_dynamics(args) -> None:
    g = read_edge_list(args.path)
    cfg = GameConfig(g, args.delta)
    x0 = _parse_x0(args.x0, g.node_count)
    res = best_response_dynamics(
        cfg, x0, dt=args.dt, max_steps=args.steps, tol=args.tol, sample_every=args.sample_every
    )
    with _output(args.out) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["step", *(f"x{i}" for i in range(g.node_count)), "residual"])
        for k, x, r in zip(res.steps, res.trajectory, res.residuals):
            w.writerow([int(k), *(repr(float(v)) for v in x), repr(float(r))])
    print(
        f"converged={res.converged} steps={res.n_steps} residual={res.residuals[-1]:.3e}",
        file=sys.stderr,
    )


def cmd_sample(args) -> None:
    g = read_edge_list(args.path)
    try:
        seed = g.index_of(_label(args.seed_node))
    except KeyError:
        raise NetMomentsError(f"seed node {args.seed_node!r} not in graph") from None
    sub = ego_subgraph(g, seed, args.radius)
    with _output(args.out) as fh:
        fh.write(
            f"# ego subgraph: seed={args.seed_node} radius={args.radius} n={sub.node_count} e={sub.edge_count}\n"
        )
        write_edge_list(sub, fh)


def _label(tok: str):
    try:
        return int(tok)
    except ValueError:
        return tok


def cmd_experiment(args) -> None:
    g = read_edge_list(args.path)
    rows = run_experiment(g, args.num_subgraphs, args.radius, args.rng_seed, args.workers)
    with _output(args.out) as fh:
        write_csv(rows, fh, timings=args.timings)
    s = summarize(rows)
    print(
        "summary: rows={rows} spearman(lambda_min,alpha2)={a:.6f} "
        "spearman(lambda_max,beta2)={b:.6f} sandwich_violations={v} degenerate={d}".format(
            rows=s["rows"],
            a=s["spearman_lambda_min_alpha2"],
            b=s["spearman_lambda_max_beta2"],
            v=s["sandwich_violations"],
            d=s["degenerate"],
        ),
        file=sys.stderr,
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="netmoments",
        description="Spectral moments, eigenvalue bounds and network-game equilibria from edge lists.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("path", help="edge-list file")
        sp.add_argument("--out", default=None, help="output file (default: stdout)")
        sp.set_defaults(func=func)
        return sp

    sp = add("census", cmd_census, "subgraph census as JSON")
    sp.add_argument("--per-node", action="store_true", help="include per-node arrays")

    sp = add("moments", cmd_moments, "spectral moments m1..m5 as JSON")
    sp.add_argument("--exact", action="store_true", help="cross-check with walk counts and eigenvalues")

    sp = add("bounds", cmd_bounds, "inner eigenvalue bounds from moments")
    sp.add_argument("--order", type=int, choices=(1, 2), default=2)
    sp.add_argument("--method", choices=("analytic", "bisect"), default="analytic")

    sp = add("equilibria", cmd_equilibria, "enumerate Nash equilibria")
    sp.add_argument("--delta", type=float, required=True)
    sp.add_argument("--max-n", type=int, default=25)

    sp = add("dynamics", cmd_dynamics, "best-response dynamics trajectory as CSV")
    sp.add_argument("--delta", type=float, required=True)
    sp.add_argument("--x0", default=None, help="comma-separated start profile or one value for all")
    sp.add_argument("--dt", type=float, default=0.5)
    sp.add_argument("--steps", type=int, default=1_000_000)
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.add_argument("--sample-every", type=int, default=None)

    sp = add("sample", cmd_sample, "ego subgraph as an edge list")
    sp.add_argument("--seed-node", required=True)
    sp.add_argument("--radius", type=int, default=2)

    sp = add("experiment", cmd_experiment, "ego-network bounds experiment as CSV")
    sp.add_argument("--num-subgraphs", type=int, default=100)
    sp.add_argument("--radius", type=int, default=2)
    sp.add_argument("--rng-seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1, help="parallel pipelines")
    sp.add_argument("--timings", action="store_true", help="add wall-time columns")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NetMomentsError, OSError) as exc:
        print(f"{parser.prog} {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"{parser.prog} {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA
    return 0


if __name__ == "__main__":
    sys.exit(main())
