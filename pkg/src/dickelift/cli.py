"""Command-line emitter of machine-readable protocol data.

Every subcommand prints one tabular dataset (CSV by default, JSON
envelope with --format json; `simulate` defaults to JSON) to stdout or,
with --output, atomically to a file. Numbers are serialized in shortest
round-trip form, so parsing the output reproduces the exact doubles.
Exit codes: 0 success, 2 usage error, 1 internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from datetime import datetime, timezone

from . import __version__
from .entanglement import (
    BipartiteMeasure,
    dicke_single_qubit_entanglement,
    source_entanglement,
)
from .optimize import asymptotic_expansion, bifurcation_diagram, optimize_source
from .probabilities import DickeSpec, SourceState, folded_prob, raw_outcome_prob
from .sampling import sample_runs, yield_report

__all__ = ["main"]


class UsageError(Exception):
    """Invalid arguments or argument combinations; exits with code 2."""


def _parse_seed(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal or 0x-prefixed seed: {text!r}")
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _spec_or_usage(n: int, k: int) -> DickeSpec:
    try:
        return DickeSpec(n, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _envelope(command: str, parameters: dict, columns: list[str], rows: list[list],
              summary: dict | None = None) -> dict:
    env = {
        "command": command,
        "parameters": parameters,
        "columns": columns,
        "rows": rows,
    }
    if summary is not None:
        env["summary"] = summary
    env["metadata"] = {
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    return env


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _render(env: dict, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(env["columns"])
        for row in env["rows"]:
            writer.writerow([_cell(v) for v in row])
        return buf.getvalue()
    return json.dumps(env, indent=2) + "\n"


def _write(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(output))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".dickelift-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp_path, output)
    except BaseException:
        os.unlink(tmp_path)
        raise


def _cmd_prob(args) -> dict:
    spec = _spec_or_usage(args.n, args.k)
    if (args.A is None) == (args.sweep is None):
        raise UsageError("exactly one of --A and --sweep is required")
    if args.sweep is not None:
        start, end, steps = args.sweep
        if steps != int(steps):
            raise UsageError("--sweep STEPS must be an integer")
        steps = int(steps)
        if steps < 1 or not 0.0 <= start <= end <= 1.0:
            raise UsageError("--sweep needs 0 <= start <= end <= 1 and steps >= 1")
        weights = [start + i * (end - start) / steps for i in range(steps + 1)]
        parameters = {"n": spec.n, "k": spec.k, "sweep": [start, end, steps]}
    else:
        if not 0.0 <= args.A <= 1.0:
            raise UsageError("--A must lie in [0, 1]")
        weights = [args.A]
        parameters = {"n": spec.n, "k": spec.k, "A": args.A}
    rows = [
        [
            spec.n,
            spec.k,
            a,
            folded_prob(spec, a),
            raw_outcome_prob(spec.n, spec.k, a),
            raw_outcome_prob(spec.n, spec.n - spec.k, a),
        ]
        for a in weights
    ]
    return _envelope("prob", parameters,
                     ["n", "k", "A", "P_folded", "P_raw_k", "P_raw_nk"], rows)


def _cmd_bifurcation(args) -> dict:
    n_min, n_max = args.n
    try:
        points = bifurcation_diagram(args.k, n_min, n_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = []
    for point in points:
        for branch_index, (a_opt, p_opt) in enumerate(point.branches):
            rows.append([point.k, point.n, point.regime.value, branch_index, a_opt, p_opt])
    return _envelope("bifurcation", {"k": args.k, "n_min": n_min, "n_max": n_max},
                     ["k", "n", "regime", "branch", "A_opt", "P_opt"], rows)


def _cmd_decay(args) -> dict:
    if args.k < 1:
        raise UsageError("--k must be at least 1")
    n_min = 2 * args.k
    if args.n_max < n_min:
        raise UsageError(f"--n-max must be at least 2k = {n_min}")
    rows = []
    for n in range(n_min, args.n_max + 1):
        spec = DickeSpec(n, args.k)
        if args.source == "epr":
            p = folded_prob(spec, 0.5)
        else:
            p = optimize_source(spec).p_opt
        rows.append([n, p, asymptotic_expansion(spec)])
    return _envelope("decay", {"k": args.k, "n_max": args.n_max, "source": args.source},
                     ["n", "P", "P_asymp"], rows)


def _cmd_simulate(args) -> dict:
    if not 0.0 <= args.A <= 1.0:
        raise UsageError("--A must lie in [0, 1]")
    if args.runs < 1:
        raise UsageError("--runs must be at least 1")
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    records = sample_runs(args.n, args.A, args.runs, args.seed)
    report = yield_report(records, args.n)
    from .probabilities import distribution

    law = distribution(args.n, args.A)
    rows = []
    for k in range(args.n + 1):
        p = float(law.raw[k])
        freq = report.empirical_probs[k]
        sigma = math.sqrt(p * (1.0 - p) / args.runs)
        z = (freq - p) / sigma if sigma > 0.0 else 0.0
        rows.append([k, round(freq * args.runs), freq, p, z])
    summary = {
        "runs": report.runs,
        "pairs_consumed": report.pairs_consumed,
        "dicke_produced": {str(k): c for k, c in report.dicke_produced.items()},
        "failures": report.failures,
        "pairs_per_dicke": None if math.isinf(report.pairs_per_dicke)
        else report.pairs_per_dicke,
    }
    return _envelope(
        "simulate",
        {"n": args.n, "A": args.A, "runs": args.runs, "seed": args.seed},
        ["k", "count", "frequency", "p_closed_form", "z"], rows, summary=summary)


def _cmd_entanglement(args) -> dict:
    spec = _spec_or_usage(args.n, args.k)
    kind = BipartiteMeasure(args.measure)
    point = optimize_source(spec)
    source_value = source_entanglement(SourceState.from_p00(point.p00_opt), kind)
    dicke_value = dicke_single_qubit_entanglement(spec, kind)
    locc_rhs = point.p_opt * dicke_value
    tangle_bound = 4.0 * spec.k / (asymptotic_expansion(spec) * spec.n)
    rows = [[spec.n, spec.k, args.measure, source_value, dicke_value, locc_rhs,
             source_value > locc_rhs, tangle_bound]]
    return _envelope(
        "entanglement", {"n": spec.n, "k": spec.k, "measure": args.measure},
        ["n", "k", "measure", "source_E_at_Aopt", "dicke_E", "locc_rhs",
         "bound_holds", "tangle_bound"], rows)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dickelift",
        description="Emit datasets for the pair-to-Dicke lifting protocol.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, default_format):
        p.add_argument("--format", choices=["csv", "json"], default=default_format)
        p.add_argument("--output", metavar="PATH", default=None)

    p = sub.add_parser("prob", help="success probability at a weight or over a sweep")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--A", type=float, default=None, help="source weight |amp00|^2")
    p.add_argument("--sweep", nargs=3, type=float, metavar=("START", "END", "STEPS"),
                   default=None)
    add_common(p, "csv")
    p.set_defaults(handler=_cmd_prob)

    p = sub.add_parser("bifurcation", help="optimal-weight branches over a range of n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", nargs=2, type=int, metavar=("N_MIN", "N_MAX"), required=True)
    add_common(p, "csv")
    p.set_defaults(handler=_cmd_bifurcation)

    p = sub.add_parser("decay", help="success probability versus n for a fixed source rule")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--source", choices=["epr", "optimal"], required=True)
    add_common(p, "csv")
    p.set_defaults(handler=_cmd_decay)

    p = sub.add_parser("simulate", help="seeded Monte Carlo runs with yield accounting")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--A", type=float, required=True)
    p.add_argument("--runs", type=int, required=True)
    p.add_argument("--seed", type=_parse_seed, required=True,
                   help="decimal or 0x-prefixed 64-bit seed")
    add_common(p, "json")
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("entanglement", help="source and Dicke-qubit entanglement report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--measure", choices=["entropy", "tangle"], required=True)
    add_common(p, "csv")
    p.set_defaults(handler=_cmd_entanglement)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        env = args.handler(args)
        _write(_render(env, args.format), args.output)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - report and map to exit code 1
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
