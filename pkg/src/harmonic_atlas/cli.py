"""Command-line interface.

Subcommands: list | expand | shear | classify | verify | render.
Numbers the catalog pins exactly are always printed as exact rationals.

Configuration is read from a key=value file named by --config or the
HARMONIC_ATLAS_CONFIG environment variable; command-line flags win.
Recognized keys: order, grid.radii, grid.angles, tol, r_max.

Exit codes: 0 success / all rows matched; 1 verification mismatch;
2 usage, config or input error; 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import catalog_build, catalog_lookup, export_atlas
from .classify import classify_harmonic, coeff_class
from .errors import HarmonicAtlasError, UnknownId
from .exprtext import parse_any
from .render import RenderOptions, render_svg
from .shear import shear_imag, shear_real
from .verify import SUITES, VerifyConfig, report_json, run_suite

_CONFIG_KEYS = {"order", "grid.radii", "grid.angles", "tol", "r_max"}


class CliError(Exception):
    def __init__(self, message, code=2):
        super().__init__(message)
        self.code = code


def _load_config_file(path: str) -> dict:
    values = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for line_no, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise CliError(f"{path}:{line_no}: expected key=value")
                key, _, value = line.partition("=")
                key = key.strip()
                if key not in _CONFIG_KEYS:
                    raise CliError(f"{path}:{line_no}: unknown key {key!r}")
                values[key] = value.strip()
    except OSError as exc:
        raise CliError(f"cannot read config {path}: {exc}") from exc
    return values


def _build_config(args) -> VerifyConfig:
    values = {}
    path = args.config or os.environ.get("HARMONIC_ATLAS_CONFIG")
    if path:
        values = _load_config_file(path)
    try:
        order = args.order if args.order is not None else int(values.get("order", 64))
        radii = (args.grid_radii if args.grid_radii is not None
                 else int(values.get("grid.radii", 64)))
        angles = (args.grid_angles if args.grid_angles is not None
                  else int(values.get("grid.angles", 256)))
        r_max = (args.r_max if args.r_max is not None
                 else float(values.get("r_max", 0.999)))
        tol = args.tol if args.tol is not None else float(values.get("tol", 1e-9))
    except ValueError as exc:
        raise CliError(f"bad config value: {exc}") from exc
    if order < 1 or radii < 1 or angles < 1 or not (0 < r_max < 1) or tol < 0:
        raise CliError("config values out of range")
    return VerifyConfig(order=order, grid_radii=radii, grid_angles=angles,
                        r_max=r_max, tol=tol)


def _resolve_map(text: str, order: int):
    """Catalog id first, then expression text; returns a HarmonicMap."""
    try:
        return catalog_lookup(text).harmonic_map(order)
    except UnknownId:
        pass
    try:
        expr = parse_any(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"not a catalog id and not parseable: {text!r} ({exc})")
    from .numkernel import Series
    from .shear import HarmonicMap
    from .analytic import AnalyticExpr
    return HarmonicMap(expr.series(order), Series.zero(order),
                       AnalyticExpr.zero(), h_expr=expr,
                       g_expr=AnalyticExpr.zero())


def _coeff_table(series, upto):
    return [str(series.coeff(n)) for n in range(upto + 1)]


def _cmd_list(args) -> int:
    if args.json:
        atlas = export_atlas()
        if args.family:
            atlas["entries"] = [e for e in atlas["entries"]
                                if e["family"] == args.family]
        print(json.dumps(atlas, sort_keys=True, indent=1))
        return 0
    for entry in catalog_build():
        if args.family and entry.family != args.family:
            continue
        flags = entry.expected
        bits = []
        if flags.integer_coeffs:
            bits.append("integer")
        elif flags.half_integer_coeffs:
            bits.append("half-integer")
        for name in ("cv_real", "cv_imag", "starlike", "u_class"):
            value = getattr(flags, name)
            if value is not None:
                bits.append(f"{name}={'yes' if value else 'no'}")
        print(f"{entry.id:32s} {entry.family:10s} {' '.join(bits)}")
    return 0


def _cmd_expand(args) -> int:
    config = _build_config(args)
    order = args.count if args.count is not None else config.order
    fm = _resolve_map(args.target, max(order, 1))
    h = _coeff_table(fm.h_series, order)
    g = _coeff_table(fm.g_series, order)
    if args.json:
        out = {"target": args.target, "order": order, "h": h}
        if any(c != "0" for c in g):
            out["g"] = g
        print(json.dumps(out, sort_keys=True, indent=1))
        return 0
    print("n:", " ".join(str(n) for n in range(order + 1)))
    print("h:", " ".join(h))
    if any(c != "0" for c in g):
        print("g:", " ".join(g))
    return 0


def _parse_omega(text: str):
    text = text.strip()
    if text == "+z":
        return parse_any("z")
    return parse_any(text)


def _cmd_shear(args) -> int:
    config = _build_config(args)
    try:
        phi = catalog_lookup(args.phi).h
    except UnknownId:
        phi = parse_any(args.phi)
    omega = _parse_omega(args.omega)
    fn = shear_real if args.axis == "real" else shear_imag
    fm = fn(phi, omega, config.order)
    rh, rg = classify_harmonic(fm)
    upto = min(config.order, args.show)
    if args.json:
        print(json.dumps({
            "axis": args.axis,
            "h": _coeff_table(fm.h_series, upto),
            "g": _coeff_table(fm.g_series, upto),
            "h_class": rh.to_json(), "g_class": rg.to_json(),
        }, sort_keys=True, indent=1))
        return 0
    print("h:", " ".join(_coeff_table(fm.h_series, upto)))
    print("g:", " ".join(_coeff_table(fm.g_series, upto)))
    print(f"h class: {rh.klass}   g class: {rg.klass}")
    return 0


def _cmd_classify(args) -> int:
    config = _build_config(args)
    fm = _resolve_map(args.target, config.order)
    rh, rg = classify_harmonic(fm)
    if args.json:
        print(json.dumps({"target": args.target, "h": rh.to_json(),
                          "g": rg.to_json()}, sort_keys=True, indent=1))
        return 0
    print(f"h: {rh.to_json()}")
    print(f"g: {rg.to_json()}")
    return 0


def _cmd_verify(args) -> int:
    config = _build_config(args)
    report = run_suite(args.theorem, config)
    if args.json:
        print(report_json(report))
    else:
        suites = report.get("suites", [report])
        for suite in suites:
            s = suite["summary"]
            print(f"[{suite['theorem']}] matched {s['matched']}/{s['total']}")
            for row in suite["rows"]:
                if not row["match"] and not row["asserted"]:
                    print(f"  MISMATCH {row['id']} {row['check']}: "
                          f"computed={row['computed']} expected={row['expected']}")
        s = report["summary"]
        print(f"total matched {s['matched']}/{s['total']}")
    return 0 if report["summary"]["matched"] == report["summary"]["total"] else 1


def _cmd_render(args) -> int:
    entry = catalog_lookup(args.target)  # UnknownId -> exit 2
    opts = RenderOptions(circles=args.circles, rays=args.rays,
                         r_max=args.rmax, samples_per_curve=args.samples)
    svg = render_svg(entry.harmonic_map(32), opts)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}", code=3) from exc
    print(f"wrote {args.out}")
    return 0


def _add_config_flags(p):
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--order", type=int, help="series truncation order")
    p.add_argument("--grid-radii", type=int, dest="grid_radii")
    p.add_argument("--grid-angles", type=int, dest="grid_angles")
    p.add_argument("--r-max", type=float, dest="r_max")
    p.add_argument("--tol", type=float)
    p.add_argument("--json", action="store_true", help="JSON on stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmonic-atlas",
        description="catalog, shear, classify, verify and render univalent "
                    "harmonic mappings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list catalog entries")
    p.add_argument("--family")
    _add_config_flags(p)
    p.set_defaults(fn=_cmd_list)

    p = sub.add_parser("expand", help="exact coefficient table")
    p.add_argument("target", help="catalog id or expression")
    p.add_argument("count", type=int, nargs="?", help="highest coefficient index")
    _add_config_flags(p)
    p.set_defaults(fn=_cmd_expand)

    p = sub.add_parser("shear", help="run the shear construction")
    p.add_argument("phi", help="catalog id or expression for the conformal map")
    p.add_argument("omega", help="+z, -z, or an expression")
    p.add_argument("axis", choices=["real", "imag"])
    p.add_argument("--show", type=int, default=12, help="coefficients to print")
    _add_config_flags(p)
    p.set_defaults(fn=_cmd_shear)

    p = sub.add_parser("classify", help="exact coefficient classification")
    p.add_argument("target", help="catalog id or expression")
    _add_config_flags(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("verify", help="run a claim-table verification suite")
    p.add_argument("theorem", choices=list(SUITES) + ["all"])
    _add_config_flags(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("render", help="render a map's disk image as SVG")
    p.add_argument("target", help="catalog id")
    p.add_argument("out", help="output .svg path")
    p.add_argument("--circles", type=int, default=8)
    p.add_argument("--rays", type=int, default=16)
    p.add_argument("--rmax", type=float, default=0.95)
    p.add_argument("--samples", type=int, default=512)
    _add_config_flags(p)
    p.set_defaults(fn=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    # a bare "-z" is the omega argument of `shear`, not an option
    argv = [" -z" if a == "-z" else a for a in argv]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except UnknownId as exc:
        print(f"error: unknown catalog id {exc}", file=sys.stderr)
        return 2
    except HarmonicAtlasError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
