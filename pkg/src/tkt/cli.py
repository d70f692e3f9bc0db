"""Command line entry point: ``tkt <command> ...``.

Exit codes: 0 success, 2 input error, 3 skein node cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from tkt.bounds import (
    SatelliteData,
    diao_lb,
    meridional_norm_bounds,
    mfw_lb,
    ohyama_lb,
    satellite_slope_check,
    satellite_wrap_wind,
    seifert_data,
)
from tkt.braids import braid_family_of, braid_index_ub_sequence, braid_to_json, family_from_json, family_twist_region
from tkt.linkdiag import PDError, components, load_diagram, parse_pd, writhe
from tkt.skein import ResourceCapExceeded, alexander_genus_lb, homfly, jones_at_i
from tkt.stablecli import emit, family_report, to_csv, to_json
from tkt.twistgen import TwistFamily, region_from_json

EXIT_OK, EXIT_INPUT, EXIT_CAP = 0, 2, 3


def _diagram(arg: str):
    if arg.lstrip().startswith("PD["):
        return parse_pd(arg)
    return load_diagram(arg)


def _print(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_homfly(args) -> int:
    D = _diagram(args.diagram)
    P = homfly(D)
    r, _ = components(D)
    _print({
        "crossings": D.crossing_count,
        "components": r,
        "writhe": writhe(D),
        "homfly": P.to_list(),
        "pretty": P.pretty(),
        "jones_at_i": list(jones_at_i(P)),
    })
    return EXIT_OK


def cmd_bounds(args) -> int:
    D = _diagram(args.diagram)
    P = homfly(D)
    sd = seifert_data(D)
    r, _ = components(D)
    E, e = P.l_degrees()
    b = mfw_lb(P)
    out = {
        "crossings": D.crossing_count,
        "components": r,
        "s": sd.s,
        "chi": sd.chi,
        "g_c": sd.canonical_genus,
        "E": E,
        "e": e,
        "mfw_lb": b,
        "ohyama_lb": ohyama_lb(b),
        "braid_ub": sd.s,
    }
    if r == 1:
        g = alexander_genus_lb(P)
        out["alex_g_lb"] = g
        out["diao_lb"] = diao_lb(g, b)
    _print(out)
    return EXIT_OK


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def cmd_family(args) -> int:
    braid = None
    if args.region is None:
        try:
            obj = _load_json(args.diagram)
        except json.JSONDecodeError:
            raise PDError("without --region the input must be a braid family JSON file") from None
        if not isinstance(obj, dict) or "beta1" not in obj:
            raise PDError("without --region the input must be a braid family JSON file")
        braid = family_from_json(obj)
        F = family_twist_region(braid)
    else:
        F = TwistFamily(_diagram(args.diagram), region_from_json(_load_json(args.region)))
    rep = family_report(F, args.n, args.mode, braid)
    if args.out:
        emit(rep, args.format, args.out)
    else:
        sys.stdout.write(to_csv(rep) if args.format == "csv" else to_json(rep))
    if rep.capped_at is not None:
        print(f"tkt: node cap reached at n = {rep.capped_at}; report is partial", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


def cmd_braid_family(args) -> int:
    fam = family_from_json(_load_json(args.family))
    if args.n < 0:
        raise PDError("--n must be non-negative")
    b = braid_family_of(fam, args.n)
    out = braid_to_json(b)
    out["strand_counts"] = braid_index_ub_sequence(fam, args.n)
    _print(out)
    return EXIT_OK


def cmd_satellite(args) -> int:
    d = SatelliteData(args.eta_k, args.omega_k, args.eta_p, args.omega_p)
    eta_K, omega_K = satellite_wrap_wind(d)
    v = satellite_slope_check(d)
    _print({"eta_K": eta_K, "omega_K": omega_K, "hypotheses": v.hypotheses, **asdict(v)})
    return EXIT_OK


def cmd_norm(args) -> int:
    x = meridional_norm_bounds(args.eta, args.omega)
    _print({**asdict(x), "values": x.values()})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tkt", description="Twist families of knots: invariants and bounds.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homfly", help="HOMFLYPT polynomial of a diagram")
    p.add_argument("diagram", help="PD text, or a file with PD text or diagram JSON")
    p.set_defaults(func=cmd_homfly)

    p = sub.add_parser("bounds", help="Seifert data and crossing/braid/genus bounds of a diagram")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("family", help="per-n report for a twist family")
    p.add_argument("diagram", help="base diagram, or a braid family JSON when --region is omitted")
    p.add_argument("--region", help="region JSON file")
    p.add_argument("--n", type=int, required=True, help="last twist count (negative: mirror run)")
    p.add_argument("--mode", choices=("diagram", "braid", "both"), default="diagram")
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("braid-family", help="braid word of the n-twisted family")
    p.add_argument("family")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_braid_family)

    p = sub.add_parser("satellite", help="satellite wrapping/winding and slope check")
    for flag in ("--eta-k", "--omega-k", "--eta-p", "--omega-p"):
        p.add_argument(flag, type=int, required=True)
    p.set_defaults(func=cmd_satellite)

    p = sub.add_parser("norm", help="meridional norm bounds")
    p.add_argument("--eta", type=int, required=True)
    p.add_argument("--omega", type=int, required=True)
    p.set_defaults(func=cmd_norm)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except ResourceCapExceeded as exc:
        print(f"tkt: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (PDError, ValueError, KeyError, TypeError, OSError) as exc:
        print(f"tkt: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
