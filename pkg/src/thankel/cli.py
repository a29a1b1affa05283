"""Command-line front end.

Subcommands:

    seq     print the first terms of a sequence
    table   print determinant tables (t-polynomial, mod-2, plain columns)
    mu      count constrained involutions on a set prefix
    verify  run one named claim verifier, or all of them

Output is deterministic (no timestamps in data lines); per-claim wall
times go to stderr.  Exit status: 0 success / all claims pass, 1 some
claim failed, 2 usage error.  Polynomials serialize as ascending integer
coefficient lists like [0,-2,0,1]; pass --pretty for a human-readable
rendering.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .hankel import hankel_det, t_hankel_det, t_hankel_det_mod2
from .involutions import mu as mu_count
from .number_sets import SetId, prefix
from .sequences import SequenceId, prefix_terms
from .verify import ClaimId, PROFILES, verify, verify_all

PROFILE_ENV_VAR = "THANKEL_PROFILE"

_SEQUENCES = {s.value: s for s in SequenceId}
_SETS = {s.value: s for s in SetId}
_FORMATS = ("plain", "json", "csv")


def _emit_csv(header: list[str], rows: list[list], out) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    out.write(buf.getvalue())


def _cmd_seq(args, out) -> int:
    seq = _SEQUENCES[args.name]
    terms = prefix_terms(seq, args.count)
    if args.format == "plain":
        if terms:
            out.write(" ".join(str(t) for t in terms) + "\n")
    elif args.format == "json":
        for i, t in enumerate(terms):
            out.write(json.dumps({"index": i, "term": t}) + "\n")
    else:
        _emit_csv(["index", "term"], [[i, t] for i, t in enumerate(terms)], out)
    return 0


def _poly_cell(poly, pretty: bool) -> str:
    return poly.pretty() if pretty else poly.text()


def _cmd_table(args, out) -> int:
    seq = _SEQUENCES[args.name]
    columns = []
    if args.t:
        columns.append("t")
    if args.mod2:
        columns.append("mod2")
    if args.plain:
        columns.append("plain")
    if not columns:
        columns = ["t"]
    rows = []
    for k in range(args.kmax + 1):
        cells: dict[str, object] = {"k": k}
        if "t" in columns or "plain" in columns:
            poly = t_hankel_det(seq, args.p, k)
            if "t" in columns:
                cells["t"] = poly
            if "plain" in columns:
                # value at t = 1 equals the unscaled determinant
                cells["plain"] = hankel_det(seq, args.p, k)
        if "mod2" in columns:
            cells["mod2"] = t_hankel_det_mod2(seq, args.p, k)
        rows.append(cells)
    if args.format == "plain":
        for cells in rows:
            rendered = [str(cells["k"])]
            for col in columns:
                value = cells[col]
                rendered.append(
                    str(value) if col == "plain" else _poly_cell(value, args.pretty)
                )
            out.write("\t".join(rendered) + "\n")
    elif args.format == "json":
        for cells in rows:
            obj: dict[str, object] = {"k": cells["k"]}
            for col in columns:
                value = cells[col]
                if col == "plain":
                    obj[col] = value
                elif col == "mod2":
                    obj[col] = value.coeffs()
                else:
                    obj[col] = list(value.coeffs)
            out.write(json.dumps(obj) + "\n")
    else:
        table = []
        for cells in rows:
            rendered = [cells["k"]]
            for col in columns:
                value = cells[col]
                rendered.append(
                    value if col == "plain" else _poly_cell(value, args.pretty)
                )
            table.append(rendered)
        _emit_csv(["k"] + columns, table, out)
    return 0


def _cmd_mu(args, out) -> int:
    domain_set = _SETS[args.domain]
    allowed = _SETS[args.set]
    try:
        count = mu_count(
            prefix(domain_set, args.m), args.k, allowed, cap=args.cap
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "plain":
        out.write(f"{count}\n")
    elif args.format == "json":
        out.write(
            json.dumps(
                {
                    "domain": args.domain,
                    "m": args.m,
                    "k": args.k,
                    "set": args.set,
                    "count": count,
                }
            )
            + "\n"
        )
    else:
        _emit_csv(
            ["domain", "m", "k", "set", "count"],
            [[args.domain, args.m, args.k, args.set, count]],
            out,
        )
    return 0


def _report_line(report) -> str:
    bounds = " ".join(f"{k}={v}" for k, v in sorted(report.bounds.items()))
    line = f"{'PASS' if report.passed else 'FAIL'} {report.claim.value} {bounds}"
    if not report.passed:
        line += f" counterexample={json.dumps(report.counterexample)}"
    return line


def _cmd_verify(args, out) -> int:
    overrides: dict[str, int] = {}
    for name in ("kmax", "mmax", "nmax", "prefix", "abmax"):
        value = getattr(args, name)
        if value is not None:
            overrides[name] = value
    for spec in args.bound or []:
        name, _, raw = spec.partition("=")
        if not raw:
            print(f"error: --bound expects NAME=INT, got {spec!r}", file=sys.stderr)
            return 2
        try:
            overrides[name] = int(raw)
        except ValueError:
            print(f"error: --bound expects NAME=INT, got {spec!r}", file=sys.stderr)
            return 2
    try:
        if args.claim == "all":
            if overrides:
                print("error: bound overrides need a single claim", file=sys.stderr)
                return 2
            reports = verify_all(profile=args.profile)
        else:
            reports = [
                verify(args.claim, bounds=overrides or None, profile=args.profile)
            ]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "plain":
        for report in reports:
            out.write(_report_line(report) + "\n")
    elif args.format == "json":
        for report in reports:
            out.write(json.dumps(report.to_dict()) + "\n")
    else:
        _emit_csv(
            ["claim", "outcome", "bounds", "counterexample"],
            [
                [
                    r.claim.value,
                    r.outcome,
                    json.dumps(dict(sorted(r.bounds.items()))),
                    json.dumps(r.counterexample),
                ]
                for r in reports
            ],
            out,
        )
    for report in reports:
        print(
            f"[{report.claim.value}] {report.outcome} in {report.elapsed:.3f}s",
            file=sys.stderr,
        )
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thankel",
        description="Exact Hankel / t-Hankel determinants of automatic "
        "sequences and machine verification of their congruences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", help="print the first terms of a sequence")
    p_seq.add_argument("name", choices=sorted(_SEQUENCES))
    p_seq.add_argument("count", type=int)
    p_seq.add_argument("--format", choices=_FORMATS, default="plain")

    p_table = sub.add_parser("table", help="print determinant tables")
    p_table.add_argument("name", choices=sorted(_SEQUENCES))
    p_table.add_argument("kmax", type=int)
    p_table.add_argument("--p", type=int, default=0, help="window offset")
    p_table.add_argument(
        "--t", action="store_true", help="diagonal-scaled determinant polynomial"
    )
    p_table.add_argument(
        "--mod2", action="store_true", help="the same polynomial reduced mod 2"
    )
    p_table.add_argument(
        "--plain", action="store_true", help="plain determinant (t = 1)"
    )
    p_table.add_argument("--pretty", action="store_true")
    p_table.add_argument("--format", choices=_FORMATS, default="plain")

    p_mu = sub.add_parser("mu", help="count constrained involutions")
    p_mu.add_argument("m", type=int, help="prefix size of the domain set")
    p_mu.add_argument("k", type=int, help="exact number of transpositions")
    p_mu.add_argument("set", choices=sorted(_SETS), help="transposition sums land here")
    p_mu.add_argument(
        "--domain", choices=sorted(_SETS), default="N", help="domain set (default N)"
    )
    p_mu.add_argument("--cap", type=int, default=None, help="raise the size cap")
    p_mu.add_argument("--format", choices=_FORMATS, default="plain")

    p_verify = sub.add_parser("verify", help="run claim verifiers")
    p_verify.add_argument(
        "claim", choices=sorted(c.value for c in ClaimId) + ["all"]
    )
    p_verify.add_argument(
        "--profile",
        choices=sorted(PROFILES),
        default=os.environ.get(PROFILE_ENV_VAR, "quick"),
    )
    p_verify.add_argument("--kmax", type=int, default=None)
    p_verify.add_argument("--mmax", type=int, default=None)
    p_verify.add_argument("--nmax", type=int, default=None)
    p_verify.add_argument("--prefix", type=int, default=None)
    p_verify.add_argument("--abmax", type=int, default=None)
    p_verify.add_argument(
        "--bound",
        action="append",
        metavar="NAME=INT",
        help="override any named bound (repeatable), e.g. kmax_mod2=200",
    )
    p_verify.add_argument("--format", choices=_FORMATS, default="plain")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "seq" and args.count < 0:
        parser.error("count must be nonnegative")
    if args.command == "table" and args.kmax < 0:
        parser.error("kmax must be nonnegative")
    out = sys.stdout
    if args.command == "seq":
        return _cmd_seq(args, out)
    if args.command == "table":
        return _cmd_table(args, out)
    if args.command == "mu":
        return _cmd_mu(args, out)
    if args.command == "verify":
        return _cmd_verify(args, out)
    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
