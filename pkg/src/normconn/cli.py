"""Command-line front end.

Subcommands: ``fiedler``, ``rigidity``, ``alg-conn``, ``reproduce`` and
``explore``.  Exit codes: 0 success, 2 reproduction mismatch, 3 budget
exhausted, 4 input error.  Output is deterministic for a fixed seed.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import bounds, explore, graphs, io, linf, norms, reproduce
from . import frameworks as fw
from .errors import BudgetExceededError, HypothesisViolatedError, NormConnError
from .frameworks import SearchBudget
from .linalg import EPS

SCHEMA = "1"
DIGITS = 12

EXIT_OK, EXIT_MISMATCH, EXIT_BUDGET, EXIT_INPUT = 0, 2, 3, 4

EXACT_VERTEX_LIMIT = 10


def _round(x):
    """Round floats (recursively) to ``DIGITS`` significant digits."""
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if not math.isfinite(x):
            return None
        return float(f"{x:.{DIGITS}g}")
    if isinstance(x, (int, np.integer, bool, np.bool_)) or x is None or isinstance(x, str):
        return x.item() if isinstance(x, np.generic) else x
    if isinstance(x, np.ndarray):
        return _round(x.tolist())
    if isinstance(x, dict):
        return {str(k): _round(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_round(v) for v in x]
    return str(x)


def _fmt(x):
    if isinstance(x, float):
        return f"{x:.{DIGITS}g}"
    if isinstance(x, list):
        return "[" + ", ".join(_fmt(v) for v in x) + "]"
    if isinstance(x, dict):
        return "{" + ", ".join(f"{k}: {_fmt(v)}" for k, v in x.items()) + "}"
    return "null" if x is None else str(x)


def emit(payload, fmt, out):
    payload = _round({"schema": SCHEMA, **payload})
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return
    for key, val in payload.items():
        if isinstance(val, list) and val and isinstance(val[0], dict):
            out.write(f"{key}:\n")
            for item in val:
                out.write("  - " + "; ".join(f"{k}={_fmt(v)}" for k, v in item.items()) + "\n")
        else:
            out.write(f"{key}: {_fmt(val)}\n")


def _budget(args):
    return SearchBudget(args.restarts, args.steps, args.candidates)


# ---------------------------------------------------------------------------
# subcommands

def cmd_fiedler(args):
    g = io.read_graph(args.graph)
    payload = {"command": "fiedler", "n": g.n, "m": g.m,
               "algebraic_connectivity": graphs.algebraic_connectivity(g) if g.n >= 2 else 0.0}
    if g.n >= 2:
        payload["vertex_connectivity"] = graphs.vertex_connectivity(g)
        payload["edge_connectivity"] = graphs.edge_connectivity(g)
    payload["cut_vertices"] = sorted(graphs.cut_vertices(g)) if g.is_connected() else None
    return payload, EXIT_OK


def cmd_rigidity(args):
    g = io.read_graph(args.graph)
    space = io.parse_space(args.space)
    P = io.read_placement(args.placement, n=g.n, d=space.d)
    F = fw.make_framework(g, space, P)
    rep = fw.rigidity_report(F, args.tol)
    payload = {
        "command": "rigidity", "space": space.descriptor(),
        "rigidity_eigenvalue": rep.rigidity_eigenvalue, "kernel_dim": rep.kernel_dim,
        "rank": rep.rank, "k": rep.k, "infinitesimally_rigid": rep.infinitesimally_rigid,
        "full_affine_span": rep.full_affine_span, "spectrum": rep.spectrum.tolist(),
    }
    if norms.facet_functionals(space) is not None:
        dec = linf.monochrome_decompose(F)
        payload["decomposition"] = dec.to_dict()
        if space.is_linf:
            payload["block_similarity"] = linf.verify_block_similarity(F, args.tol)
    return payload, EXIT_OK


def cmd_alg_conn(args):
    g = io.read_graph(args.graph)
    space = io.parse_space(args.space)
    budget = _budget(args)
    payload = {"command": "alg-conn", "space": space.descriptor(), "n": g.n, "m": g.m}
    code = EXIT_OK
    notes = []
    exact_route = space.is_linf or (space.kind == "lp" and space.p == 1.0 and space.d == 2)
    value = None
    if exact_route and g.n <= EXACT_VERTEX_LIMIT:
        scale = 1.0 if space.is_linf else 2.0
        try:
            res = linf.exact_linf_connectivity(g, space.d, budget, args.seed, eps=args.tol)
            payload["linf_result"] = res.to_dict()
            if scale != 1.0:
                notes.append("l_1 plane value is twice the l_inf plane value")
            if res.exact:
                value = bounds.ConnectivityValue(scale * res.lower, "exact l_inf engine", True)
                payload["exact_value"] = scale * res.lower
            else:
                code = EXIT_BUDGET
                notes.append("realization search did not reach the enumeration bound")
        except BudgetExceededError as exc:
            code = EXIT_BUDGET
            notes.append(f"exact engine: {exc}")
    if value is None or not space.is_linf:
        lower, witness = fw.estimate_alg_connectivity(g, space, budget, args.seed)
        payload["search_lower_bound"] = lower
        payload["witness"] = witness.tolist()
        if value is None or lower > value.value + args.tol:
            value = bounds.ConnectivityValue(lower, "placement search lower bound", False)
    payload["value"] = value.value
    payload["exact"] = value.exact
    checks = []
    for make in (
        lambda: bounds.general_upper_bound(g, space, value, eps=args.tol),
        lambda: bounds.lp_upper_bound(g, space, value, eps=args.tol),
        lambda: bounds.linf_degree_bound(g, space.d, value, eps=args.tol) if space.is_linf else None,
        lambda: bounds.sparse_bound(g, space.d, value, eps=args.tol) if space.is_linf else None,
        lambda: bounds.minimally_rigid_bound(g, space, value, eps=args.tol),
    ):
        try:
            check = make()
        except (HypothesisViolatedError, NormConnError):
            continue
        if check is not None:
            checks.append(check.to_dict())
    payload["bounds"] = checks
    payload["notes"] = notes
    return payload, code


def cmd_reproduce(args):
    table = reproduce.rows(_budget(args), args.seed)
    if args.format == "table":
        args.out.write(reproduce.format_table(table, DIGITS) + "\n")
        return None, EXIT_OK if reproduce.all_ok(table) else EXIT_MISMATCH
    payload = {"command": "reproduce", "rows": [r.to_dict() for r in table],
               "all_ok": reproduce.all_ok(table)}
    return payload, EXIT_OK if reproduce.all_ok(table) else EXIT_MISMATCH


def cmd_explore(args):
    budget = _budget(args)
    if args.name == "k2d":
        finding = explore.k2d(args.d, budget, args.seed)
    elif args.name == "h8":
        finding = explore.h8(args.d, budget, args.seed)
    else:
        finding = explore.redrig(args.d, args.n, budget, args.seed)
    payload = {"command": "explore", **finding.to_dict()}
    code = EXIT_BUDGET if finding.budget_exhausted else EXIT_OK
    return payload, code


# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with the input-error code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every randomized step")
    common.add_argument("--tol", type=float, default=EPS, help="eigenvalue tolerance")
    common.add_argument("--restarts", type=int, default=SearchBudget.restarts)
    common.add_argument("--steps", type=int, default=SearchBudget.steps)
    common.add_argument("--candidates", type=int, default=SearchBudget.candidates,
                        help="node cap for decomposition enumeration")
    common.add_argument("--format", choices=("table", "json"), default="table")

    parser = _Parser(
        prog="normconn",
        description="Rigidity eigenvalues and algebraic connectivity in normed spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fiedler", parents=[common], help="a(G) and classical connectivity")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_fiedler)

    p = sub.add_parser("rigidity", parents=[common], help="spectrum of one framework")
    p.add_argument("--graph", required=True)
    p.add_argument("--placement", required=True)
    p.add_argument("--space", required=True, help="lp:<p>:<d>, linf:<d> or poly:<path>")
    p.set_defaults(func=cmd_rigidity)

    p = sub.add_parser("alg-conn", parents=[common], help="a(G,X) with bound checks")
    p.add_argument("--graph", required=True)
    p.add_argument("--space", required=True)
    p.set_defaults(func=cmd_alg_conn)

    p = sub.add_parser("reproduce", parents=[common], help="recompute every closed-form value")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("explore", parents=[common], help="open-question harnesses")
    p.add_argument("name", choices=("k2d", "h8", "redrig"))
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--n", type=int, default=6)
    p.set_defaults(func=cmd_explore)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "name", None) is not None and args.d is None:
        args.d = {"k2d": 4, "h8": 4, "redrig": 2}[args.name]
    args.out = out
    try:
        payload, code = args.func(args)
    except BudgetExceededError as exc:
        sys.stderr.write(f"normconn: budget exhausted: {exc}\n")
        return EXIT_BUDGET
    except (NormConnError, ValueError, OSError) as exc:
        sys.stderr.write(f"normconn: error: {exc}\n")
        return EXIT_INPUT
    if payload is not None:
        emit(payload, args.format, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
