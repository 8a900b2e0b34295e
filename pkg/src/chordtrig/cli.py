"""Command line surface for the quarter-circle trigonometry kernel.

Every computation is exposed as a subcommand that prints a machine-readable
result to stdout (JSON object by default, CSV with ``--format csv``) and
keeps stderr for diagnostics. Arcs are always named by their endpoint
ordinates (``--a`` / ``--b`` as y-values); abscissae never appear on the
command line.

Subcommands:
    pi                  enclosure of pi
    arc                 certified arc length between two ordinates
    arcsin Y            enclosure of arcsin(Y)
    sin X               ordinate with arc length X
    sector              certified sector area
    ratio               arc length / sector area (Theorem check, ~2)
    partition-compare   limits of the three partition schemes
    additivity          whole arc vs split arc, lengths and areas

CSV columns for the iteration table (fixed order): m, segment_length,
height, total_length, inner_area, outer_area, enclosure_lo, enclosure_hi.
Commands without an iteration table emit name,value rows.

Exit codes: 0 success, 1 domain error, 2 non-convergence, 64 usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arclength import arc_length
from .errors import ConvergenceError, DomainError
from .geometry import point_from_ordinate
from .inverse import arcsin, sin
from .partitions import SCHEMES, additivity_check, scheme_limit
from .report import CSV_COLUMNS, ConvergenceReport, Enclosure
from .sector import _ratio_components, sector_area

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_NO_CONVERGENCE = 2
EXIT_USAGE = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise _UsageError(message)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-10,
                        help="bracket tolerance (default 1e-10)")
    common.add_argument("--format", choices=("json", "csv"), default="json",
                        help="output format (default json)")
    common.add_argument("--max-iter", type=int, default=40,
                        help="bisection level cap (default 40)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for random partition schemes (default 0)")

    parser = _Parser(prog="chordtrig", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("pi", parents=[common], help="enclosure of pi")

    p_arc = sub.add_parser("arc", parents=[common], help="certified arc length")
    p_arc.add_argument("--a", type=float, required=True, help="first endpoint ordinate")
    p_arc.add_argument("--b", type=float, required=True, help="second endpoint ordinate")

    p_asin = sub.add_parser("arcsin", parents=[common], help="enclosure of arcsin(y)")
    p_asin.add_argument("y", type=float)

    p_sin = sub.add_parser("sin", parents=[common], help="ordinate with arc length x")
    p_sin.add_argument("x", type=float)

    p_sec = sub.add_parser("sector", parents=[common], help="certified sector area")
    p_sec.add_argument("--a", type=float, required=True)
    p_sec.add_argument("--b", type=float, required=True)

    p_ratio = sub.add_parser("ratio", parents=[common],
                             help="arc length over sector area")
    p_ratio.add_argument("--a", type=float, required=True)
    p_ratio.add_argument("--b", type=float, required=True)

    p_cmp = sub.add_parser("partition-compare", parents=[common],
                           help="limits of the three partition schemes")
    p_cmp.add_argument("--a", type=float, required=True)
    p_cmp.add_argument("--b", type=float, required=True)

    p_add = sub.add_parser("additivity", parents=[common],
                           help="whole arc vs split arc")
    p_add.add_argument("--a", type=float, required=True)
    p_add.add_argument("--m", type=float, required=True, help="split point ordinate")
    p_add.add_argument("--b", type=float, required=True)
    return parser


def _report_csv(report: ConvergenceReport) -> list[str]:
    lines = [",".join(CSV_COLUMNS)]
    for row in report.rows:
        cells = [str(row.m)] + [repr(getattr(row, name)) for name in CSV_COLUMNS[1:]]
        lines.append(",".join(cells))
    return lines


def _pairs_csv(pairs) -> list[str]:
    return ["name,value"] + [f"{name},{value!r}" for name, value in pairs]


def _cmd_pi(args):
    enc, rep = arcsin(1.0, args.tol, args.max_iter)
    doubled = Enclosure(2.0 * enc.lo, 2.0 * enc.hi)
    payload = {"command": "pi", "tolerance": args.tol,
               "value": doubled.mid, "enclosure": doubled.to_dict(),
               "report": rep.to_dict()}
    return payload, _report_csv(rep)


def _cmd_arc(args):
    enc, rep = arc_length(point_from_ordinate(args.a), point_from_ordinate(args.b),
                          args.tol, args.max_iter)
    payload = {"command": "arc", "a": args.a, "b": args.b, "tolerance": args.tol,
               "value": enc.mid, "enclosure": enc.to_dict(), "report": rep.to_dict()}
    return payload, _report_csv(rep)


def _cmd_arcsin(args):
    enc, rep = arcsin(args.y, args.tol, args.max_iter)
    payload = {"command": "arcsin", "y": args.y, "tolerance": args.tol,
               "value": enc.mid, "enclosure": enc.to_dict(), "report": rep.to_dict()}
    return payload, _report_csv(rep)


def _cmd_sin(args):
    value = sin(args.x, args.tol, args.max_iter)
    enc, rep = arcsin(value, args.tol, args.max_iter)
    payload = {"command": "sin", "x": args.x, "tolerance": args.tol,
               "value": value, "residual": enc.mid - args.x,
               "arcsin_of_value": enc.to_dict(), "report": rep.to_dict()}
    return payload, _report_csv(rep)


def _cmd_sector(args):
    enc, rep = sector_area(point_from_ordinate(args.a), point_from_ordinate(args.b),
                           args.tol, args.max_iter)
    payload = {"command": "sector", "a": args.a, "b": args.b, "tolerance": args.tol,
               "value": enc.mid, "enclosure": enc.to_dict(), "report": rep.to_dict()}
    return payload, _report_csv(rep)


def _cmd_ratio(args):
    pa, pb = point_from_ordinate(args.a), point_from_ordinate(args.b)
    arc_enc, arc_rep, sec_enc, sec_rep = _ratio_components(pa, pb, args.tol,
                                                           args.max_iter)
    ratio = arc_enc.mid / sec_enc.mid
    payload = {"command": "ratio", "a": args.a, "b": args.b, "tolerance": args.tol,
               "value": ratio,
               "arc": {"value": arc_enc.mid, "enclosure": arc_enc.to_dict(),
                       "report": arc_rep.to_dict()},
               "sector": {"value": sec_enc.mid, "enclosure": sec_enc.to_dict(),
                          "report": sec_rep.to_dict()}}
    pairs = [("ratio", ratio), ("arc_mid", arc_enc.mid), ("sector_mid", sec_enc.mid)]
    return payload, _pairs_csv(pairs)


def _cmd_partition_compare(args):
    pa, pb = point_from_ordinate(args.a), point_from_ordinate(args.b)
    limits = {scheme: scheme_limit(pa, pb, scheme, args.tol, seed=args.seed)
              for scheme in SCHEMES}
    values = list(limits.values())
    spread = max(abs(u - v) for u in values for v in values)
    payload = {"command": "partition-compare", "a": args.a, "b": args.b,
               "tolerance": args.tol, "seed": args.seed,
               "limits": limits, "max_pairwise_delta": spread}
    pairs = [*limits.items(), ("max_pairwise_delta", spread)]
    return payload, _pairs_csv(pairs)


def _cmd_additivity(args):
    check = additivity_check(point_from_ordinate(args.a), point_from_ordinate(args.m),
                             point_from_ordinate(args.b), args.tol, args.max_iter)
    payload = {"command": "additivity", "a": args.a, "m": args.m, "b": args.b,
               "tolerance": args.tol,
               "arc": {"whole": check.arc_whole, "parts": check.arc_parts,
                       "delta": check.arc_whole - check.arc_parts},
               "sector": {"whole": check.sector_whole, "parts": check.sector_parts,
                          "delta": check.sector_whole - check.sector_parts}}
    pairs = [("arc_whole", check.arc_whole), ("arc_parts", check.arc_parts),
             ("arc_delta", check.arc_whole - check.arc_parts),
             ("sector_whole", check.sector_whole),
             ("sector_parts", check.sector_parts),
             ("sector_delta", check.sector_whole - check.sector_parts)]
    return payload, _pairs_csv(pairs)


_HANDLERS = {
    "pi": _cmd_pi,
    "arc": _cmd_arc,
    "arcsin": _cmd_arcsin,
    "sin": _cmd_sin,
    "sector": _cmd_sector,
    "ratio": _cmd_ratio,
    "partition-compare": _cmd_partition_compare,
    "additivity": _cmd_additivity,
}


def run(argv=None) -> int:
    """Parse ``argv``, execute the subcommand, print the result; return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError:
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        payload, csv_lines = _HANDLERS[args.command](args)
    except DomainError as exc:
        sys.stderr.write(f"chordtrig: domain error: {exc}\n")
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        sys.stderr.write(f"chordtrig: did not converge: {exc}\n")
        if exc.enclosure is not None:
            sys.stderr.write(
                f"chordtrig: last bracket [{exc.enclosure.lo!r}, {exc.enclosure.hi!r}]\n")
        return EXIT_NO_CONVERGENCE
    if args.format == "csv":
        sys.stdout.write("\n".join(csv_lines) + "\n")
    else:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
