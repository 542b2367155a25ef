"""Command-line surface for the projection toolkit.

Subcommands: params (parameter derivation), project (batch point
projection over CSV), error-table (distortion report), graticule
(SVG/GeoJSON export) and oracle (brute-force minimax check).  The
--russia preset selects the bounding latitudes 40 and 70 with the
refined solver, unit degree length and 15 miles per meridian degree.

Exit codes: 0 success, 1 runtime or data error, 2 usage error.  Relative
output paths resolve under $DELISLE_OUTPUT_DIR when that is set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from .angles import dms_format, dms_parse
from .distortion import (
    OracleGrid,
    build_report,
    error_at,
    error_in_miles,
    max_error_latitude,
    minimax_oracle,
)
from .graticule import (
    PointsCsvError,
    RegionWindow,
    build_graticule,
    read_points_csv,
    write_geojson,
    write_svg,
)
from .params import ConicParams, RegionBounds, StandardParallels
from .projection import PlanePoint, apex_arc, forward, inverse

_OUTPUT_DIR_ENV = "DELISLE_OUTPUT_DIR"
_RUSSIA_BOUNDS = (40.0, 70.0)

_CONFIG_KEYS = {
    "russia",
    "bounds",
    "parallels",
    "solver",
    "delta",
    "lambda0",
    "miles_per_degree",
}


def _read_config(path: str) -> dict[str, str]:
    """Parse a simple "key = value" file; # starts a comment line."""
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            key = key.strip().lower().replace("-", "_")
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
            values[key] = value.strip()
    return values


def _as_bool(text: str | None) -> bool:
    if text is None:
        return False
    return text.strip().lower() in ("1", "true", "yes", "on")


def _angle_pair(text: str, flag: str, parser: argparse.ArgumentParser):
    cells = [c.strip() for c in text.split(",")]
    if len(cells) != 2:
        parser.error(f"{flag} expects two comma-separated angles, got {text!r}")
    try:
        return dms_parse(cells[0]), dms_parse(cells[1])
    except ValueError as exc:
        parser.error(f"{flag}: {exc}")


class _Region:
    """Resolved region request: exactly one of bounds/parallels is set."""

    def __init__(self, bounds, parallels, solver, delta, lambda0, miles):
        self.bounds: RegionBounds | None = bounds
        self.parallels: StandardParallels | None = parallels
        self.solver = solver
        self.delta = delta
        self.lambda0 = lambda0
        self.miles = miles

    def conic_params(self) -> ConicParams:
        if self.parallels is not None:
            return ConicParams.from_parallels(self.parallels, self.delta, self.lambda0)
        return ConicParams.from_bounds(self.bounds, self.solver, self.delta, self.lambda0)


def _resolve_region(args, parser: argparse.ArgumentParser) -> _Region:
    config = _read_config(args.config) if getattr(args, "config", None) else {}

    # An explicit region flag overrides any region keys in the config.
    russia = bool(getattr(args, "russia", False))
    bounds_text = getattr(args, "bounds", None)
    parallels_text = getattr(args, "parallels", None)
    if not (russia or bounds_text is not None or parallels_text is not None):
        russia = _as_bool(config.get("russia"))
        bounds_text = config.get("bounds")
        parallels_text = config.get("parallels")

    chosen = sum((russia, bounds_text is not None, parallels_text is not None))
    if chosen > 1:
        parser.error("give exactly one of --russia, --bounds, --parallels")
    if chosen == 0:
        parser.error("a region is required: --russia, --bounds A,B or --parallels P,Q")

    def opt(key: str, default, convert):
        value = getattr(args, key, None)
        if value is None:
            value = config.get(key)
        if value is None:
            return default
        if isinstance(value, str):
            try:
                return convert(value)
            except ValueError as exc:
                parser.error(f"--{key.replace('_', '-')}: {exc}")
        return value

    solver = opt("solver", "refined", str)
    if solver not in ("refined", "midpoint"):
        parser.error(f"--solver must be 'refined' or 'midpoint', got {solver!r}")
    delta = opt("delta", 1.0, float)
    lambda0 = opt("lambda0", 0.0, dms_parse)
    miles = opt("miles_per_degree", 15.0, float)

    bounds = parallels = None
    if russia:
        bounds = RegionBounds(*_RUSSIA_BOUNDS)
    elif bounds_text is not None:
        bounds = RegionBounds(*_angle_pair(bounds_text, "--bounds", parser))
    else:
        parallels = StandardParallels(*_angle_pair(parallels_text, "--parallels", parser))
    return _Region(bounds, parallels, solver, delta, lambda0, miles)


def _require_bounds(region: _Region, parser, command: str) -> RegionBounds:
    if region.bounds is None:
        parser.error(f"{command} needs region bounds: use --russia or --bounds A,B")
    return region.bounds


def _resolve_output_path(path: str) -> str:
    if os.path.isabs(path):
        return path
    base = os.environ.get(_OUTPUT_DIR_ENV)
    return os.path.join(base, path) if base else path


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    with open(_resolve_output_path(output), "w", encoding="utf-8", newline="") as f:
        f.write(text)


def _pretty(value) -> str:
    if isinstance(value, float):
        text = f"{value:.7f}".rstrip("0").rstrip(".")
        return text if text not in ("", "-") else "0"
    return str(value)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_params(args, parser) -> int:
    region = _resolve_region(args, parser)
    params = region.conic_params()
    if region.parallels is not None:
        south, north = region.parallels.south, region.parallels.north
        mode = "parallels"
    else:
        south, north = region.bounds.south, region.bounds.north
        mode = "bounds"
    extremum = max_error_latitude(params)
    far_lat = north if params.south_cone else south
    apex_distance = apex_arc(params, far_lat)
    report: dict = {
        "mode": mode,
        "south": south,
        "north": north,
        "cone_constant": params.cone_constant,
        "cone_constant_dms": dms_format(params.cone_constant, "seconds"),
        "apex_offset_deg": params.apex_offset,
        "apex_offset_dms": dms_format(params.apex_offset, "minutes"),
        "apex_distance_deg": apex_distance,
        "apex_distance_dms": dms_format(apex_distance, "minutes"),
        "extremum_lat_deg": extremum,
        "extremum_lat_dms": dms_format(extremum, "minutes"),
        "error_south_deg": error_at(south, params),
        "error_north_deg": error_at(north, params),
        "error_extremum_deg": error_at(extremum, params),
        "degree_length": params.degree_length,
        "central_meridian_deg": params.central_meridian,
        "miles_per_degree": region.miles,
    }
    if mode == "bounds":
        report["solver"] = region.solver
    for key in ("error_south_deg", "error_north_deg", "error_extremum_deg"):
        report[key.replace("_deg", "_miles")] = error_in_miles(
            report[key], region.miles
        )
    if args.json:
        _emit(json.dumps(report, indent=2) + "\n", args.output)
    else:
        width = max(len(k) for k in report)
        lines = [f"{k.ljust(width)} : {_pretty(v)}" for k, v in report.items()]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def _read_xy_csv(text: str) -> list[PlanePoint]:
    points: list[PlanePoint] = []
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if not header_seen:
            names = [c.strip().lower() for c in line.split(",")]
            if names != ["x", "y"]:
                raise PointsCsvError(lineno, f"expected header 'x,y', got {line!r}")
            header_seen = True
            continue
        cells = [c.strip() for c in line.split(",")]
        if len(cells) != 2:
            raise PointsCsvError(lineno, f"expected 2 columns (x,y), got {len(cells)}")
        try:
            points.append(PlanePoint(float(cells[0]), float(cells[1])))
        except ValueError as exc:
            raise PointsCsvError(lineno, str(exc)) from exc
    if not header_seen:
        raise PointsCsvError(1, "missing header 'x,y'")
    return points


def _cmd_project(args, parser) -> int:
    region = _resolve_region(args, parser)
    params = region.conic_params()
    if args.file in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as handle:
            text = handle.read()
    if args.direction == "fwd":
        rows = ["x,y"]
        for point in read_points_csv(text):
            plane = forward(point, params)
            rows.append(f"{plane.x:.9f},{plane.y:.9f}")
    else:
        rows = ["lat,lon"]
        for plane in _read_xy_csv(text):
            geo = inverse(plane, params)
            rows.append(f"{geo.lat:.9f},{geo.lon:.9f}")
    _emit("\n".join(rows) + "\n", args.output)
    return 0


def _cmd_error_table(args, parser) -> int:
    region = _resolve_region(args, parser)
    bounds = _require_bounds(region, parser, "error-table")
    report = build_report(
        region.conic_params(), bounds, step=args.step, miles_per_degree=region.miles
    )
    text = report.to_csv() if args.format == "csv" else report.to_text()
    _emit(text, args.output)
    return 0


def _cmd_graticule(args, parser) -> int:
    region = _resolve_region(args, parser)
    params = region.conic_params()
    if args.svg is None and args.geojson is None:
        parser.error("graticule needs at least one of --svg or --geojson")

    lat_min, lat_max = args.lat_min, args.lat_max
    if lat_min is None or lat_max is None:
        if region.bounds is None:
            parser.error(
                "graticule with --parallels needs explicit --lat-min and --lat-max"
            )
        lat_min = region.bounds.south if lat_min is None else lat_min
        lat_max = region.bounds.north if lat_max is None else lat_max
    if (args.lon_min is None) != (args.lon_max is None):
        parser.error("--lon-min and --lon-max must be given together")
    if args.lon_min is not None:
        if args.lon_span is not None:
            parser.error("give either --lon-span or --lon-min/--lon-max, not both")
        lon_min, lon_max = args.lon_min, args.lon_max
    else:
        span = args.lon_span if args.lon_span is not None else 60.0
        lon_min = region.lambda0 - 0.5 * span
        lon_max = region.lambda0 + 0.5 * span

    window = RegionWindow(
        lat_min=lat_min,
        lat_max=lat_max,
        lon_min=lon_min,
        lon_max=lon_max,
        lat_step=args.lat_step,
        lon_step=args.lon_step,
    )
    graticule = build_graticule(params, window, args.segments_per_degree)
    if args.svg is not None:
        _emit(write_svg(graticule), args.svg)
    if args.geojson is not None:
        _emit(write_geojson(graticule, params, mode=args.mode), args.geojson)
    return 0


def _cmd_oracle(args, parser) -> int:
    region = _resolve_region(args, parser)
    bounds = _require_bounds(region, parser, "oracle")
    if args.grid is None:
        grid = OracleGrid(lat_step=args.lat_step)
    else:
        grid = OracleGrid(
            omega_points=args.grid, z_points=args.grid, lat_step=args.lat_step
        )
    if not grid.meets_contract:
        print(
            "warning: grid resolution is below the contract minimum "
            "(200 points per axis, latitude step <= 0.05 deg)",
            file=sys.stderr,
        )
    refined = ConicParams.from_bounds(bounds, "refined", region.delta, region.lambda0)
    omega, offset = refined.cone_constant, refined.apex_offset
    extremum = max_error_latitude(refined)
    sup_refined = max(
        abs(error_at(bounds.south, refined)),
        abs(error_at(bounds.north, refined)),
        abs(error_at(extremum, refined)),
    )
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        best = minimax_oracle(bounds, grid)
    gap = (sup_refined - best.sup_error) / best.sup_error
    lines = [
        f"region               : {bounds.south:g} .. {bounds.north:g} deg",
        (
            "equal-error solution : cone constant "
            f"{omega:.7f}, apex offset {offset:.5f} deg, sup |error| {sup_refined:.7f}"
        ),
        (
            "grid optimum         : cone constant "
            f"{best.cone_constant:.7f}, apex offset {best.apex_offset:.5f} deg, "
            f"sup |error| {best.sup_error:.7f}"
        ),
        f"relative gap         : {100.0 * gap:+.4f}%",
    ]
    _emit("\n".join(lines) + "\n", args.output)
    return 0


# ---------------------------------------------------------------------------
# parser assembly


def _add_region_flags(sub: argparse.ArgumentParser) -> None:
    group = sub.add_argument_group("region and parameters")
    group.add_argument(
        "--russia",
        action="store_true",
        help="preset: bounds 40,70, refined solver, unit degree length, 15 miles/deg",
    )
    group.add_argument("--bounds", metavar="A,B", help="bounding latitudes")
    group.add_argument("--parallels", metavar="P,Q", help="standard parallels")
    group.add_argument("--solver", choices=("refined", "midpoint"), default=None)
    group.add_argument(
        "--delta", type=float, default=None, help="map length of one meridian degree"
    )
    group.add_argument(
        "--lambda0", type=dms_parse, default=None, help="central meridian longitude"
    )
    group.add_argument("--miles-per-degree", dest="miles_per_degree", type=float)
    group.add_argument("--config", help="key = value file; flags override it")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delisle",
        description="Equidistant conic projection with equal-error parameter selection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="derive and print projection parameters")
    _add_region_flags(p)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(handler=_cmd_params)

    p = sub.add_parser("project", help="project (or invert) a CSV of points")
    _add_region_flags(p)
    p.add_argument("direction", choices=("fwd", "inv"))
    p.add_argument("file", nargs="?", default="-", help="input CSV; - for stdin")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(handler=_cmd_project)

    p = sub.add_parser("error-table", help="per-latitude distortion report")
    _add_region_flags(p)
    p.add_argument("--step", type=dms_parse, default=1.0)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(handler=_cmd_error_table)

    p = sub.add_parser("graticule", help="export the graticule as SVG/GeoJSON")
    _add_region_flags(p)
    p.add_argument("--lat-min", type=dms_parse, default=None)
    p.add_argument("--lat-max", type=dms_parse, default=None)
    p.add_argument("--lon-min", type=dms_parse, default=None)
    p.add_argument("--lon-max", type=dms_parse, default=None)
    p.add_argument(
        "--lon-span",
        type=dms_parse,
        default=None,
        help="window width centered on the central meridian (default 60)",
    )
    p.add_argument("--lat-step", type=dms_parse, default=1.0)
    p.add_argument("--lon-step", type=dms_parse, default=1.0)
    p.add_argument("--segments-per-degree", type=int, default=4)
    p.add_argument("--svg", default=None, help="SVG output path")
    p.add_argument("--geojson", default=None, help="GeoJSON output path")
    p.add_argument("--mode", choices=("geographic", "projected"), default="geographic")
    p.set_defaults(handler=_cmd_graticule)

    p = sub.add_parser("oracle", help="brute-force minimax check of the parameters")
    _add_region_flags(p)
    p.add_argument(
        "--grid",
        type=int,
        default=None,
        help="points per parameter axis (default 201 x 2001, offset axis finer)",
    )
    p.add_argument("--lat-step", type=float, default=0.05)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(handler=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args, parser)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
