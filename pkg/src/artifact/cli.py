"""Command-line front end.

Subcommands: ``oracle`` (enumeration queries), ``genfun`` (generating
functions for one pattern), ``decompose`` (canonical block decomposition),
``chebyshev`` (polynomial layer: print values or run the identity suite),
``verify`` (the cross-verification suites), ``series`` (unrestricted
even/odd split).

Exit codes: 0 success, 1 usage/domain error, 2 verification failure.
All JSON output is deterministic (sorted keys); every numeric value is an
exact integer or a quoted decimal/rational string — never a float.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .chebyshev import R, chebyshev_U, cleared_U, cleared_W, verify_identity
from .exact_algebra import (
    catalan_series,
    poly_to_json,
    ratfunc_to_json,
    series_expand,
    series_to_json,
)
from .genfun import closed_unrestricted, gftriple
from .patterns import (
    ORACLE_BOUND,
    PATTERN_BOUND,
    ContainSpec,
    OracleQuery,
    canonical_decomposition,
    oracle_count,
    validated,
)
from . import verify as verify_mod

SERIES_BOUND = 30

__all__ = ["main", "run"]


class _Parser(argparse.ArgumentParser):
    """argparse with the usage-error exit code pinned to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _pattern(text: str):
    """Parse '1,3,2' (or compact '132' for single digits) into a pattern."""
    text = text.strip()
    try:
        if "," in text:
            entries = [int(part) for part in text.split(",")]
        else:
            entries = [int(ch) for ch in text]
        return validated(entries)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad pattern {text!r}: {exc}")


def _contain_spec(text: str):
    """Parse 'PATTERN:COUNT' into a ContainSpec."""
    pattern_text, sep, count_text = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(
            f"bad containment spec {text!r}: expected PATTERN:COUNT")
    try:
        count = int(count_text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"bad containment count {count_text!r}")
    return ContainSpec(_pattern(pattern_text), count)


def _emit_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _emit_csv(rows, header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _record_rows(records):
    for rec in records:
        yield [rec["family"], json.dumps(rec["params"], sort_keys=True),
               rec["source"], rec["expected"], rec["observed"],
               rec["verdict"], rec["runtime_ms"]]


def _records_text(records) -> str:
    lines = []
    for rec in records:
        params = json.dumps(rec["params"], sort_keys=True)
        lines.append(f"[{rec['verdict']:11s}] {rec['family']} {params} "
                     f"— {rec['source']} ({rec['runtime_ms']} ms)")
    return "\n".join(lines)


def build_parser() -> _Parser:
    parser = _Parser(prog="artifact",
                     description="Exact generating functions for even/odd "
                                 "132-avoiding permutations, with a "
                                 "brute-force verification oracle.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("oracle", help="count permutations by enumeration",
                       parents=[], add_help=True)
    p.add_argument("--n", type=int, required=True, help="permutation length")
    p.add_argument("--avoid", type=_pattern, action="append", default=[],
                   help="extra forbidden pattern (repeatable); 132 is "
                        "always implied")
    p.add_argument("--contain", type=_contain_spec, action="append",
                   default=[], metavar="PATTERN:COUNT",
                   help="require exactly COUNT occurrences (repeatable)")
    p.add_argument("--parity", choices=("even", "odd", "both"),
                   default="both")
    p.add_argument("--stat", default=None, metavar="{rlm|inc:J|occ:PATTERN}",
                   help="also report a statistic distribution")
    p.add_argument("--format", choices=("json", "csv", "text"),
                   default="json")
    p.add_argument("--unsafe-bounds", action="store_true",
                   help=f"allow n beyond the default bound {ORACLE_BOUND}")

    p = sub.add_parser("genfun", help="generating functions for one pattern")
    p.add_argument("--tau", type=_pattern, required=True)
    p.add_argument("--parity", choices=("even", "odd", "both"),
                   default="both")
    p.add_argument("--order", type=int, default=12,
                   help="series coefficients to include (default 12)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--unsafe-bounds", action="store_true",
                   help=f"allow patterns longer than {PATTERN_BOUND} and "
                        f"series orders beyond {SERIES_BOUND}")

    p = sub.add_parser("decompose", help="canonical block decomposition")
    p.add_argument("--tau", type=_pattern, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("chebyshev",
                       help="print polynomial-layer values or run the "
                            "identity suite")
    p.add_argument("mode", nargs="?", choices=("print", "verify"),
                   default="print")
    p.add_argument("--n", type=int, default=8,
                   help="index for the printed values (default 8)")
    p.add_argument("--max-k", type=int, default=50,
                   help="suite bound for the convergent identities")
    p.add_argument("--max-pq", type=int, default=20,
                   help="suite bound for the quotient identities")
    p.add_argument("--format", choices=("json", "csv", "text"),
                   default="json")

    p = sub.add_parser("verify", help="run the cross-verification suites")
    p.add_argument("--family", choices=sorted(verify_mod.FAMILIES) + ["all"],
                   default="all")
    p.add_argument("--max-k", type=int, default=None,
                   help="cap the pattern-size loop where the suite has one")
    p.add_argument("--max-n", type=int, default=None,
                   help="cap the series order where the suite has one")
    p.add_argument("--seed-report", metavar="FILE", default=None,
                   help="write the full report JSON to FILE")
    p.add_argument("--format", choices=("json", "csv", "text"),
                   default="text")

    p = sub.add_parser("series",
                       help="unrestricted even/odd split as power series")
    p.add_argument("--order", type=int, default=20)
    p.add_argument("--format", choices=("json", "csv", "text"),
                   default="json")
    p.add_argument("--unsafe-bounds", action="store_true",
                   help=f"allow orders beyond {SERIES_BOUND}")
    return parser


# ---------------------------------------------------------------------------
# Subcommand implementations.  Each returns (exit_code, output_string).
# ---------------------------------------------------------------------------


def _cmd_oracle(args):
    statistic = None
    j = None
    stat_pattern = None
    if args.stat is not None:
        if args.stat == "rlm":
            statistic = "rlm"
        elif args.stat.startswith("inc:"):
            statistic, j = "inc", int(args.stat[4:])
        elif args.stat.startswith("occ:"):
            statistic, stat_pattern = "occ", _pattern(args.stat[4:])
        else:
            raise ValueError(f"unknown statistic {args.stat!r}")
    query = OracleQuery(n=args.n, avoid=tuple(args.avoid),
                        contain=tuple(args.contain), parity=args.parity,
                        statistic=statistic, j=j, stat_pattern=stat_pattern)
    bound = args.n if args.unsafe_bounds else ORACLE_BOUND
    result = oracle_count(query, bound=bound)
    constraints = {
        "avoid": [list(p) for p in query.avoid],
        "contain": [{"pattern": list(s.pattern), "count": s.count}
                    for s in query.contain],
    }
    doc = {"n": result["n"], "constraints": constraints}
    if args.parity in ("even", "both"):
        doc["even"] = result["even"]
    if args.parity in ("odd", "both"):
        doc["odd"] = result["odd"]
    if args.parity == "both":
        doc["total"] = result["total"]
    if "distribution" in result:
        doc["distribution"] = {str(k): v
                               for k, v in result["distribution"].items()}
    if args.format == "csv":
        if "distribution" in result:
            rows = [[k, v["even"], v["odd"], v["total"]]
                    for k, v in sorted(result["distribution"].items())]
            return 0, _emit_csv(rows, ["value", "even", "odd", "total"])
        return 0, _emit_csv(
            [[result["n"], result["even"], result["odd"], result["total"]]],
            ["n", "even", "odd", "total"])
    if args.format == "text":
        lines = [f"n = {result['n']}: even {result['even']}, "
                 f"odd {result['odd']}, total {result['total']}"]
        for k, v in sorted(result.get("distribution", {}).items()):
            lines.append(f"  value {k}: even {v['even']}, odd {v['odd']}, "
                         f"total {v['total']}")
        return 0, "\n".join(lines)
    return 0, _emit_json(doc)


def _cmd_genfun(args):
    if not args.unsafe_bounds:
        if len(args.tau) > PATTERN_BOUND:
            raise ValueError(
                f"pattern length {len(args.tau)} exceeds bound "
                f"{PATTERN_BOUND}; pass --unsafe-bounds to confirm the cost")
        if args.order > SERIES_BOUND:
            raise ValueError(
                f"series order {args.order} exceeds bound {SERIES_BOUND}; "
                "pass --unsafe-bounds to confirm the cost")
    if args.order < 0:
        raise ValueError("series order must be nonnegative")
    triple = gftriple(args.tau)
    parts = {"F": triple.F, "M": triple.M, "E": triple.E, "O": triple.O}
    if args.parity == "even":
        selected = ("F", "E")
    elif args.parity == "odd":
        selected = ("F", "O")
    else:
        selected = ("F", "M", "E", "O")
    doc = {"tau": list(args.tau), "order": args.order}
    for name in selected:
        doc[name] = ratfunc_to_json(parts[name])
        doc[name]["series"] = series_to_json(
            series_expand(parts[name], args.order))
    if args.format == "text":
        lines = [f"tau = {','.join(map(str, args.tau))}"]
        for name in selected:
            lines.append(f"{name} = {parts[name]!r}")
            lines.append(
                f"  series: {doc[name]['series']}")
        return 0, "\n".join(lines)
    return 0, _emit_json(doc)


def _cmd_decompose(args):
    dec = canonical_decomposition(args.tau)
    doc = {
        "tau": list(args.tau),
        "r": dec.r,
        "blocks": [{"segment": list(seg), "maximum": m}
                   for seg, m in dec.blocks],
        "prefixes": [list(dec.prefix(d)) for d in range(dec.r + 1)],
        "suffixes": [list(dec.suffix(d)) for d in range(dec.r + 2)],
    }
    if args.format == "text":
        lines = [f"tau = {','.join(map(str, args.tau))}  (r = {dec.r})"]
        for i, (seg, m) in enumerate(dec.blocks):
            lines.append(f"  block {i}: segment {list(seg)}, maximum {m}")
        lines.append(f"  prefixes: {doc['prefixes']}")
        lines.append(f"  suffixes: {doc['suffixes']}")
        return 0, "\n".join(lines)
    return 0, _emit_json(doc)


def _cmd_chebyshev(args):
    if args.mode == "print":
        if args.n < 0:
            raise ValueError("index must be nonnegative")
        doc = {
            "n": args.n,
            "U": poly_to_json(chebyshev_U(args.n)),
            "W_cleared": poly_to_json(cleared_W(args.n)),
            "U_cleared": poly_to_json(cleared_U(args.n)),
            "R": ratfunc_to_json(R(args.n)),
        }
        if args.format == "text":
            lines = [f"n = {args.n}",
                     f"U (in t): {doc['U']}",
                     f"W cleared: {doc['W_cleared']}",
                     f"U cleared: {doc['U_cleared']}",
                     f"R: num {doc['R']['num']}, den {doc['R']['den']}"]
            return 0, "\n".join(lines)
        return 0, _emit_json(doc)
    records = []
    for which in ("rk", "drk", "irks"):
        records += verify_identity(which, max_k=args.max_k,
                                   max_pq=args.max_pq)
    summary = verify_mod.summarize(records)
    code = 2 if summary["fail"] else 0
    if args.format == "csv":
        return code, _emit_csv(
            _record_rows(records),
            ["family", "params", "source", "expected", "observed",
             "verdict", "runtime_ms"])
    if args.format == "json":
        return code, _emit_json({"records": records, "summary": summary})
    text = _records_text(records)
    text += (f"\n{summary['total']} checks: {summary['pass']} pass, "
             f"{summary['fail']} fail")
    return code, text


def _cmd_verify(args):
    families = ("all",) if args.family == "all" else (args.family,)
    records = verify_mod.run_all(families, max_k=args.max_k,
                                 max_n=args.max_n)
    summary = verify_mod.summarize(records)
    if args.seed_report:
        with open(args.seed_report, "w", encoding="utf-8") as fh:
            fh.write(_emit_json({"records": records, "summary": summary}))
            fh.write("\n")
    code = 2 if summary["fail"] else 0
    if args.format == "json":
        return code, _emit_json({"records": records, "summary": summary})
    if args.format == "csv":
        return code, _emit_csv(
            _record_rows(records),
            ["family", "params", "source", "expected", "observed",
             "verdict", "runtime_ms"])
    text = _records_text(records)
    text += (f"\n{summary['total']} checks: {summary['pass']} pass, "
             f"{summary['fail']} fail, {summary['discrepancy']} known "
             f"formula discrepancies")
    return code, text


def _cmd_series(args):
    if args.order < 0:
        raise ValueError("series order must be nonnegative")
    if args.order > SERIES_BOUND and not args.unsafe_bounds:
        raise ValueError(
            f"series order {args.order} exceeds bound {SERIES_BOUND}; "
            "pass --unsafe-bounds to confirm the cost")
    even, odd = closed_unrestricted(args.order)
    cat = catalan_series(args.order)
    signed = even - odd
    doc = {
        "order": args.order,
        "even": series_to_json(even),
        "odd": series_to_json(odd),
        "signed": series_to_json(signed),
        "total": series_to_json(cat),
    }
    if args.format == "csv":
        rows = [[n, str(even.coeffs[n]), str(odd.coeffs[n]),
                 str(signed.coeffs[n]), str(cat.coeffs[n])]
                for n in range(args.order + 1)]
        return 0, _emit_csv(rows, ["n", "even", "odd", "signed", "total"])
    if args.format == "text":
        lines = [f"{'n':>3} {'even':>12} {'odd':>12} {'signed':>8} "
                 f"{'total':>12}"]
        for n in range(args.order + 1):
            lines.append(f"{n:>3} {str(even.coeffs[n]):>12} "
                         f"{str(odd.coeffs[n]):>12} "
                         f"{str(signed.coeffs[n]):>8} "
                         f"{str(cat.coeffs[n]):>12}")
        return 0, "\n".join(lines)
    return 0, _emit_json(doc)


_COMMANDS = {
    "oracle": _cmd_oracle,
    "genfun": _cmd_genfun,
    "decompose": _cmd_decompose,
    "chebyshev": _cmd_chebyshev,
    "verify": _cmd_verify,
    "series": _cmd_series,
}


def run(argv=None) -> int:
    """Parse ``argv`` and execute; prints the document, returns the exit
    code (0 ok, 1 usage/domain error, 2 verification failure)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, output = _COMMANDS[args.subcommand](args)
    except (ValueError, ArithmeticError) as exc:
        print(f"artifact {args.subcommand}: error: {exc}", file=sys.stderr)
        return 1
    if output:
        print(output)
    return code


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
