"""Command-line entry point: ``quadgenus {compute,sweep,extremal,verify}``.

Exit status is 0 on success, 1 on invalid input and 2 when ``verify`` finds a
mismatch between the oracle and a closed form.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from quadgenus import bounds, extremal, oracle
from quadgenus.errors import BudgetExceededError, DomainError
from quadgenus.invariants import CurveParams, Regime, regime, theta0_and_eps_prime

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2
SWEEP_EXTRA = "theta_k_bound"


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quadgenus", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="genus bound report for one (d, k)")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("sweep", help="one report row per degree for fixed k")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--d-from", type=_positive, required=True)
    p.add_argument("--d-to", type=_positive, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="csv")

    p = sub.add_parser("extremal", help="extremal gamma sequences for one (d, k)")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="certify closed forms against the oracle on a grid")
    p.add_argument("--k-max", type=_positive, required=True)
    p.add_argument("--d-max", type=_positive, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--node-budget", type=_positive, default=None,
                   help=f"oracle node budget (default ${oracle.BUDGET_ENV} or {oracle.DEFAULT_NODE_BUDGET})")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--verbose", action="store_true", help="print every cell, not just the summary")
    return parser


def _csv(rows, header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render_text(report: bounds.BoundReport) -> str:
    inv = report.invariants
    a, b = report.linkage.ci_type
    lines = [
        f"d = {report.d}, k = {report.k}  ({report.regime.value} degree)",
        f"  n0 = {inv.n0}, eps = {inv.eps}, theta0 = {inv.theta0}"
        + (f", eps' = {inv.eps_prime}" if inv.eps_prime is not None else ""),
        f"  pi = {report.pi_value}, xi = {report.xi_value}",
        f"  bound: g - 1 <= {report.bound_g_minus_1}   (g <= {report.bound_g_minus_1 + 1})",
        f"  sharpness: {report.sharp.value}",
        f"  class S({report.d},{report.k}): linked in a complete intersection of type ({a},{b}) "
        f"to a residual of degree {report.linkage.residual_degree} on a quadric surface",
        f"  conjectured sharp value (class S genus - 1, unproved): {report.capital_pi}",
    ]
    return "\n".join(lines)


def _sweep_rows(k: int, d_from: int, d_to: int):
    for d in range(d_from, d_to + 1):
        report = bounds.genus_bound(d, k)
        extra = None
        if regime(d, k) is Regime.SMALL and d > k * k:
            extra = bounds.bound_no_small_curve(d, k)
        yield report, extra


def cmd_compute(args) -> int:
    report = bounds.genus_bound(args.d, args.k)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    elif args.format == "csv":
        print(_csv([report.csv_row()], bounds.CSV_HEADER), end="")
    else:
        print(render_text(report))
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.d_from > args.d_to:
        print(f"error: --d-from {args.d_from} > --d-to {args.d_to}", file=sys.stderr)
        return EXIT_INVALID
    rows = list(_sweep_rows(args.k, args.d_from, args.d_to))
    if args.format == "json":
        out = []
        for report, extra in rows:
            item = report.to_dict()
            item[SWEEP_EXTRA] = extra
            out.append(item)
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        header = bounds.CSV_HEADER + (SWEEP_EXTRA,)
        table = [report.csv_row() + ("" if extra is None else extra,) for report, extra in rows]
        if args.format == "csv":
            print(_csv(table, header), end="")
        else:
            cells = [header] + [tuple(str(c) for c in row) for row in table]
            widths = [max(len(str(row[i])) for row in cells) for i in range(len(header))]
            for row in cells:
                print("  ".join(str(c).rjust(w) for c, w in zip(row, widths)))
    return EXIT_OK


def cmd_extremal(args) -> int:
    d, k = args.d, args.k
    if regime(d, k) is Regime.LARGE:
        tilde = extremal.build_tilde_gamma_large(d, k)
        hat = extremal.build_hat_gamma(d, k)
    else:
        theta0 = theta0_and_eps_prime(d, k)[0]
        tilde = extremal.build_tilde_gamma_small(d, k)
        hat = extremal.build_hat_gamma(d, theta0)
    theta_k = None
    if regime(d, k) is Regime.SMALL and d > k * k:
        theta_k = extremal.build_tilde_gamma_theta_k(d, k)
    coincide = tilde.sequence == hat.sequence
    if args.format == "json":
        payload = {"d": d, "k": k, "tilde": tilde.to_dict(), "hat": hat.to_dict(), "coincide": coincide}
        if theta_k is not None:
            payload["theta_k"] = theta_k.to_dict()
        print(json.dumps(payload, indent=2, sort_keys=True))
        return EXIT_OK
    line = f"tilde gamma = {tilde.sequence}   functional {tilde.functional}"
    if tilde.repaired:
        raw = ",".join(str(v) for v in tilde.raw_template)
        line += f"   (repaired from raw {raw})"
    print(line)
    print(f"hat gamma   = {hat.sequence}   functional {hat.functional}")
    print(f"coincide: {'yes' if coincide else 'no'}")
    if theta_k is not None:
        print(f"theta=k gamma = {theta_k.sequence}   functional {theta_k.functional}")
    return EXIT_OK


def _verify_cell(cell):
    d, k, budget = cell
    return oracle.verify(d, k, budget)


def cmd_verify(args) -> int:
    cells = [(d, k, args.node_budget) for k in range(1, args.k_max + 1) for d in range(1, args.d_max + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_verify_cell, cells, chunksize=16))
    else:
        reports = [_verify_cell(c) for c in cells]
    failed = [r for r in reports if not r.passed]
    n_checks = sum(len(r.checks) for r in reports)
    if args.format == "json":
        shown = reports if args.verbose else failed[:1]
        print(json.dumps({
            "cells": len(reports),
            "checks": n_checks,
            "failed_cells": len(failed),
            "reports": [r.to_dict() for r in shown],
        }, indent=2))
    else:
        if args.verbose:
            for r in reports:
                print(r.to_text())
        elif failed:
            print(failed[0].to_text())
        print(f"verified {len(reports)} cells, {n_checks} checks, {len(failed)} failing cells")
    return EXIT_MISMATCH if failed else EXIT_OK


COMMANDS = {"compute": cmd_compute, "sweep": cmd_sweep, "extremal": cmd_extremal, "verify": cmd_verify}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (DomainError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
