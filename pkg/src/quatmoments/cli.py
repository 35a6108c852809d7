"""Command-line interface.

Subcommands: census, moment, duality, mc, selftest.  JSON is the
default output format; census tables can also be emitted as CSV, and
every command has a plain-text form.  Monte Carlo runs require an
explicit seed and are reproducible bit for bit for a fixed
(seed, samples) pair, whatever --threads says.  Any failed internal
check exits with a nonzero status.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import census_io, engine, ensembles, selftest
from .limits import (BIPARTITE_EDGE_BOUND, WIGNER_DEGREE_BOUND,
                     ResourceLimitError)

WIGNER_KINDS = ("goe", "gse")
WISHART_KINDS = ("wishart-real", "wishart-quat")


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "csv", "text"),
                        default="json", help="output format (default json)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatmoments",
        description=("Exact and Monte Carlo moments of Gaussian matrix "
                     "ensembles via twisted ribbon graph enumeration"))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="list all graphs for a degree sequence")
    p.add_argument("--kind", choices=("wigner", "wishart"), required=True)
    p.add_argument("--deg", type=_parse_int_list, required=True,
                   help="vertex degrees, e.g. 2 or 2,2")
    p.add_argument("--colors", type=_parse_int_list, default=None,
                   help="color per half-edge (wigner) or per edge (wishart)")
    p.add_argument("--bound", type=int, default=None,
                   help="override the census resource bound")
    _add_common(p)

    p = sub.add_parser("moment", help="exact moment polynomial")
    p.add_argument("--kind", choices=WIGNER_KINDS + WISHART_KINDS,
                   required=True)
    p.add_argument("--deg", type=_parse_int_list, required=True)
    p.add_argument("--colors", type=_parse_int_list, default=None)
    p.add_argument("--bound", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("duality",
                       help="check quaternionic = dual of real, coefficientwise")
    p.add_argument("--kind", choices=("wigner", "wishart"), required=True)
    p.add_argument("--max", type=int, required=True,
                   help="max total degree (wigner) or edge count (wishart)")
    p.add_argument("--colors-max", type=int, default=0,
                   help="also check all 2-colorings up to this size")
    _add_common(p)

    p = sub.add_parser("mc", help="Monte Carlo moment estimate")
    p.add_argument("--kind", choices=WIGNER_KINDS + WISHART_KINDS,
                   required=True)
    p.add_argument("--deg", type=_parse_int_list, required=True)
    p.add_argument("--colors", type=_parse_int_list, default=None)
    p.add_argument("--N", type=int, required=True, dest="n_dim")
    p.add_argument("--M", type=int, default=None, dest="m_dim")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    _add_common(p)

    p = sub.add_parser("selftest",
                       help="exhaustive oracle-equivalence sweep")
    p.add_argument("--max-positions", type=int, default=6)
    p.add_argument("--max-ids", type=int, default=3)
    _add_common(p)

    return parser


def _emit(obj: dict, fmt: str, text: str) -> None:
    if fmt == "text":
        print(text)
    else:
        print(json.dumps(obj, separators=(", ", ": ")))


def cmd_census(args) -> int:
    if args.kind == "wigner":
        records = list(census_io.wigner_census_records(
            args.deg, args.colors, args.bound))
        fields = census_io.WIGNER_FIELDS
    else:
        records = list(census_io.wishart_census_records(
            args.deg, args.colors, args.bound))
        fields = census_io.WISHART_FIELDS
    if args.format == "csv":
        sys.stdout.write(census_io.records_to_csv(records, fields))
    elif args.format == "text":
        for line in census_io.records_to_text(records, fields):
            print(line)
        print(f"total: {len(records)}")
    else:
        for line in census_io.records_to_jsonl(records):
            print(line)
    return 0


def _moment_poly(kind: str, deg, colors, bound):
    if kind == "goe":
        return engine.goe_moment_poly(deg, colors,
                                      bound or WIGNER_DEGREE_BOUND)
    if kind == "gse":
        return engine.gse_moment_poly(deg, colors,
                                      bound or WIGNER_DEGREE_BOUND)
    if kind == "wishart-real":
        return engine.wishart_real_poly(deg, colors,
                                        bound or BIPARTITE_EDGE_BOUND)
    return engine.wishart_quat_poly(deg, colors,
                                    bound or BIPARTITE_EDGE_BOUND)


def cmd_moment(args) -> int:
    poly = _moment_poly(args.kind, args.deg, args.colors, args.bound)
    obj = {"kind": args.kind, "deg": list(args.deg),
           "colors": list(args.colors) if args.colors else None,
           "poly": poly.to_json_dict()}
    _emit(obj, args.format, str(poly))
    return 0


def _two_colorings(size: int):
    from itertools import product
    return product((1, 2), repeat=size)


def cmd_duality(args) -> int:
    from .combinat import partitions
    reports = []
    for size in range(1, args.max + 1):
        for deg in partitions(size):
            reports.append(engine.duality_check(deg, None, args.kind))
            if size <= args.colors_max:
                # Color maps are per half-edge (wigner) or per edge
                # (wishart); both have `size` entries.
                for colors in _two_colorings(size):
                    reports.append(engine.duality_check(deg, colors, args.kind))
    ok = all(r.ok for r in reports)
    if args.format == "text":
        for r in reports:
            colors = "" if r.colors is None else f" colors={list(r.colors)}"
            status = "ok" if r.ok else "FAIL"
            print(f"{r.kind} deg={list(r.deg)}{colors}: {status}  "
                  f"quat = {r.quat_poly}")
        print(f"checked: {len(reports)}  all ok: {ok}")
    else:
        print(json.dumps({
            "kind": args.kind, "max": args.max, "checked": len(reports),
            "ok": ok,
            "reports": [r.to_json_dict() for r in reports],
        }, separators=(", ", ": ")))
    return 0 if ok else 1


def cmd_mc(args) -> int:
    spec = ensembles.EnsembleSpec(kind=args.kind, deg=args.deg,
                                  n_dim=args.n_dim, m_dim=args.m_dim,
                                  colors=args.colors)
    estimate = ensembles.mc_moment(spec, args.samples, args.seed,
                                   threads=args.threads)
    obj = {"kind": args.kind, "deg": list(args.deg),
           "N": args.n_dim, "M": args.m_dim,
           "colors": list(args.colors) if args.colors else None,
           "estimate": estimate.to_json_dict()}
    # Attach the exact value when the engine can produce it.
    try:
        poly = _moment_poly(args.kind, args.deg, args.colors, None)
        if args.kind in WIGNER_KINDS:
            exact = poly.evaluate(args.n_dim)
        else:
            s = poly.num_colors
            exact = poly.evaluate(args.n_dim, (args.m_dim,) * s)
        obj["exact"] = exact
        if estimate.stderr > 0:
            obj["z"] = round((estimate.mean - exact) / estimate.stderr, 3)
    except ResourceLimitError:
        pass
    text = (f"mean={estimate.mean:.6g} stderr={estimate.stderr:.3g} "
            f"samples={estimate.samples} seed={estimate.seed}")
    if "exact" in obj:
        text += f" exact={obj['exact']} z={obj.get('z')}"
    _emit(obj, args.format, text)
    return 0


def cmd_selftest(args) -> int:
    report = selftest.run_selftest(args.max_positions, args.max_ids)
    if args.format == "text":
        print(f"exprs={report.exprs_checked} "
              f"pairings={report.pairings_checked} "
              f"zero-exprs={report.zero_exprs_checked} "
              f"elapsed={report.elapsed_seconds:.2f}s "
              f"ok={report.ok}")
        for failure in report.failures[:20]:
            print(f"FAIL: {failure}")
    else:
        print(json.dumps(report.to_json_dict(), separators=(", ", ": ")))
    return 0 if report.ok else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "census": cmd_census,
        "moment": cmd_moment,
        "duality": cmd_duality,
        "mc": cmd_mc,
        "selftest": cmd_selftest,
    }
    try:
        return handlers[args.command](args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
