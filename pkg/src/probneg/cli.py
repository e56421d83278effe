"""Command-line front end.

Exit codes: 0 success, 1 ``tables --check`` mismatch, 2 usage or validation
error. Every subcommand writes JSON by default; ``--format csv`` gives
plot-ready series and ``--format table`` a human-readable layout.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import dynamics, experiments
from .dynamics import Converged, Cycle, NoConvergence
from .entropy import quadratic_entropy, shannon_entropy
from .errors import DistributionError
from .negation import NegationOperator, apply
from .simplex import Distribution, parse_criterion, round_half_up

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_distribution(text: str) -> Distribution:
    """``0.1, 0.4, 0.5`` or ``@path.json`` holding a JSON array of numbers."""
    text = text.strip()
    if text.startswith("@"):
        try:
            values = json.loads(Path(text[1:]).read_text())
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"ParseError: cannot read {text[1:]!r}: {e}") from None
        if not isinstance(values, list) or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in values
        ):
            raise UsageError("ParseError: JSON input must be an array of numbers")
    else:
        parts = [s.strip() for s in text.split(",")] if text else []
        try:
            values = [float(s) for s in parts]
        except ValueError:
            raise UsageError(f"ParseError: not a comma-separated list of numbers: {text!r}") from None
    return Distribution(values)


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected A..B") from None
    if a > b:
        raise UsageError(f"empty range {text!r}")
    if a < experiments.MIN_DIM or b > experiments.MAX_DIM:
        raise UsageError(
            f"range {text!r} outside [{experiments.MIN_DIM}, {experiments.MAX_DIM}]")
    return range(a, b + 1)


def _criterion(text: str):
    try:
        return parse_criterion(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _num(x) -> float:
    return float(x)


def _fmt(x) -> str:
    # Shortest round-trip repr: 17 significant digits or fewer, same as json.
    return repr(float(x))


def _count_json(c):
    return c if isinstance(c, int) else str(c)


def _status_json(status) -> dict:
    out = {"kind": status.kind, "at": status.at}
    if isinstance(status, Cycle):
        out["period"] = status.period
    return out


def _status_text(status) -> str:
    if isinstance(status, Converged):
        return f"converged({status.at})"
    if isinstance(status, Cycle):
        return f"cycle({status.period}) at {status.detected_at}"
    return f"max_iter({status.at})"


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _table(rows, header) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(str(h)), *(len(r[i]) for r in rows)) if rows else len(str(h))
              for i, h in enumerate(header)]
    lines = ["  ".join(str(h).rjust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def _r3(x) -> str:
    return str(round_half_up(x, 3))


def cmd_negate(args) -> tuple[str, int]:
    op = NegationOperator.parse(args.op)
    p = parse_distribution(args.dist)
    q = apply(op, p)
    if args.format == "json":
        doc = {"operator": str(op), "input": p.tolist(), "output": q.tolist(),
               "rounded": [_r3(x) for x in q]}
        return json.dumps(doc, indent=2) + "\n", EXIT_OK
    rows = [(i + 1, _fmt(a), _fmt(b), _r3(b)) for i, (a, b) in enumerate(zip(p, q))]
    header = ["i", "input", "output", "output_3dp"]
    return (_csv if args.format == "csv" else _table)(rows, header), EXIT_OK


def cmd_entropy(args) -> tuple[str, int]:
    p = parse_distribution(args.dist)
    vals = {"shannon": shannon_entropy(p), "quadratic": quadratic_entropy(p)}
    if args.format == "json":
        return json.dumps({"distribution": p.tolist(), **vals}, indent=2) + "\n", EXIT_OK
    rows = [(k, _fmt(v)) for k, v in vals.items()]
    return (_csv if args.format == "csv" else _table)(rows, ["measure", "value"]), EXIT_OK


def cmd_iterate(args) -> tuple[str, int]:
    op = NegationOperator.parse(args.op)
    p = parse_distribution(args.dist)
    crit = _criterion(args.criterion)
    if args.max_iter < 1:
        raise UsageError("--max-iter must be >= 1")
    trace = dynamics.iterate(op, p, crit, args.max_iter)
    if args.format == "json":
        doc = {
            "operator": str(op),
            "criterion": str(crit),
            "status": _status_json(trace.status),
            "states": [s.tolist() for s in trace.states],
            "entropy": [_num(h) for h in trace.entropies],
        }
        return json.dumps(doc, indent=2) + "\n", EXIT_OK
    n = len(p)
    header = ["k", *(f"p{i + 1}" for i in range(n)), "entropy"]
    if args.format == "csv":
        rows = [(k, *(_fmt(x) for x in s), _fmt(h))
                for k, (s, h) in enumerate(zip(trace.states, trace.entropies))]
        return _csv(rows, header), EXIT_OK
    rows = [(k, *(_r3(x) for x in s), f"{h:.4f}")
            for k, (s, h) in enumerate(zip(trace.states, trace.entropies))]
    return _table(rows, header) + f"status: {_status_text(trace.status)}\n", EXIT_OK


def cmd_compare(args) -> tuple[str, int]:
    p = parse_distribution(args.dist)
    crit = _criterion(args.criterion)
    if len(p) < 2:
        raise UsageError("DegenerateDimension: compare needs at least two entries")
    res = experiments.speed_comparison(p, crit, args.max_iter)
    if args.format == "json":
        doc = {"criterion": str(crit), "exponential": _count_json(res.exponential),
               "yager": _count_json(res.yager)}
        return json.dumps(doc, indent=2) + "\n", EXIT_OK
    rows = [("exp", res.exponential), ("yager", res.yager)]
    return (_csv if args.format == "csv" else _table)(rows, ["operator", "iterations"]), EXIT_OK


def cmd_tables(args) -> tuple[str, int]:
    ids = experiments.TABLE_IDS if args.all else (args.id,)
    reports = [experiments.reproduce_table(i) for i in ids]
    ok = all(r.passed for r in reports)
    code = EXIT_CHECK_FAILED if args.check and not ok else EXIT_OK
    if args.format == "json":
        doc = [{
            "id": r.id, "label": r.label, "operator": str(r.operator),
            "tolerance": r.tolerance, "max_deviation": r.max_deviation, "passed": r.passed,
            "cells": [{"element": c.element, "k": c.k, "computed": c.computed,
                       "expected": c.expected, "deviation": c.deviation, "ok": c.ok}
                      for c in r.cells],
        } for r in reports]
        return json.dumps(doc, indent=2) + "\n", code
    header = ["table", "element", "k", "computed", "computed_3dp", "expected", "deviation", "ok"]
    if args.format == "csv":
        rows = [(r.id, c.element, c.k, _fmt(c.computed), _r3(c.computed), _fmt(c.expected),
                 _fmt(c.deviation), int(c.ok)) for r in reports for c in r.cells]
        return _csv(rows, header), code
    out = []
    for r in reports:
        rows = [(r.id, c.element, c.k, f"{c.computed:.6f}", _r3(c.computed), f"{c.expected:.3f}",
                 f"{c.deviation:.6f}", "ok" if c.ok else "MISMATCH") for c in r.cells]
        out.append(_table(rows, header))
        out.append(f"table {r.id} ({r.label}): max deviation {r.max_deviation:.6f} "
                   f"-> {'pass' if r.passed else 'FAIL'}\n")
    return "\n".join(out), code


def cmd_sweep(args) -> tuple[str, int]:
    op = NegationOperator.parse(args.op)
    dims = parse_range(args.n)
    crit = _criterion(args.criterion)
    if args.init == "random":
        if args.trials < 1:
            raise UsageError("--trials must be >= 1")
        rows = experiments.random_sweep(op, dims, crit, args.trials, args.seed, args.max_iter)
        if args.format == "json":
            doc = {"operator": str(op), "criterion": str(crit), "init": "random",
                   "seed": args.seed, "trials": args.trials,
                   "rows": [r._asdict() for r in rows]}
            return json.dumps(doc, indent=2) + "\n", EXIT_OK
        header = ["n", "median", "trials", "failures"]
        body = [(r.n, _fmt(r.median), r.trials, r.failures) for r in rows]
        return (_csv if args.format == "csv" else _table)(body, header), EXIT_OK
    rep = experiments.convergence_sweep(op, dims, crit, max_iter=args.max_iter)
    if args.format == "json":
        doc = {"operator": str(op), "criterion": str(crit), "init": "delta",
               "rows": [{"n": n, "iterations": _count_json(c)} for n, c in rep.rows]}
        return json.dumps(doc, indent=2) + "\n", EXIT_OK
    header = ["n", "iterations", "status"]
    body = [(n, "" if isinstance(c, NoConvergence) else c,
             str(c) if isinstance(c, NoConvergence) else "converged") for n, c in rep.rows]
    return (_csv if args.format == "csv" else _table)(body, header), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    # Global flags are accepted before or after the subcommand.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "table"], default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for random sweeps")

    parser = argparse.ArgumentParser(
        prog="probneg", description="Negation of finite probability distributions.")
    parser.add_argument("--format", choices=["json", "csv", "table"], default="json")
    parser.add_argument("--seed", type=int, default=0, help="seed for random sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    op_kw = dict(choices=["exp", "exponential", "yager"], required=True)

    p = add("negate", cmd_negate, "apply one negation")
    p.add_argument("--op", **op_kw)
    p.add_argument("--dist", required=True)

    p = add("entropy", cmd_entropy, "Shannon and quadratic entropy")
    p.add_argument("--dist", required=True)

    p = add("iterate", cmd_iterate, "iterate a negation and emit the trace")
    p.add_argument("--op", **op_kw)
    p.add_argument("--dist", required=True)
    p.add_argument("--criterion", default="dp:3")
    p.add_argument("--max-iter", type=int, default=dynamics.DEFAULT_MAX_ITER)

    p = add("compare", cmd_compare, "iterations to uniform for both operators")
    p.add_argument("--dist", required=True)
    p.add_argument("--criterion", default="dp:3")
    p.add_argument("--max-iter", type=int, default=dynamics.DEFAULT_MAX_ITER)

    p = add("tables", cmd_tables, "reproduce the published iteration tables")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--id", type=int, choices=experiments.TABLE_IDS)
    g.add_argument("--all", action="store_true")
    p.add_argument("--check", action="store_true", help="exit 1 unless every cell agrees")

    p = add("sweep", cmd_sweep, "iterations to uniform across dimensions")
    p.add_argument("--op", **op_kw)
    p.add_argument("--n", required=True, help="dimension range A..B within [2, 64]")
    p.add_argument("--criterion", default="dp:3")
    p.add_argument("--init", choices=["delta", "random"], default="delta")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-iter", type=int, default=dynamics.DEFAULT_MAX_ITER)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except DistributionError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
