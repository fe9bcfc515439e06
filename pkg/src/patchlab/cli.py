"""``patchlab`` command line.

Units at this boundary are GHz, mm and degrees; files carry SI fields.
Exit codes: 0 success, 1 validation/usage error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .core import TM01, TM10, Substrate, make_operating_point
from .design import DEFAULT_Z0, quarter_wave_match, resonant_frequency, synthesize
from .explorer import SearchSpace, Weights, grid_search, refine_h
from .io import design_from_dict, design_to_dict, dumps, pattern_csv, render_polar_svg, sweep_csv
from .radiation import dbi, directivity, pattern_grid, principal_cut
from .report import (
    PAPER_F0,
    PAPER_SUBSTRATE,
    PAPER_TABLE1,
    REFERENCE_SOURCE,
    MetricSet,
    bandwidth_discrepancy_note,
    benchmark_report,
    format_report,
    paper_benchmark_metrics,
    paper_proposed_design,
    paper_proposed_metrics,
)
from .sweep import Criterion, EmptyBandError, calibrate_model, extract_band, frequency_sweep

EXIT_OK, EXIT_VALIDATION, EXIT_IO = 0, 1, 2

DESIGN_PRESETS = ("paper", "paper-proposed")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _paper_design():
    return synthesize(PAPER_F0, PAPER_SUBSTRATE)


def _load_design(args):
    if args.preset == "paper":
        return _paper_design()
    if args.preset == "paper-proposed":
        return paper_proposed_design()
    if args.design is None:
        raise UsageError("a design file or --preset is required")
    return design_from_dict(_read_json(args.design))


def _read_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _is_paper_parameters(design) -> bool:
    return design.substrate.eps_r == PAPER_SUBSTRATE.eps_r and design.substrate.h == PAPER_SUBSTRATE.h and design.f0 == PAPER_F0


# --- subcommands ----------------------------------------------------------


def cmd_synth(args):
    sub = Substrate(eps_r=args.eps_r, h=args.h_mm * 1e-3, tan_delta=args.tan_delta)
    design = synthesize(args.f0_ghz * 1e9, sub, t=args.t_mm * 1e-3)
    _emit(dumps(design_to_dict(design)), args.output)


def cmd_preset(args):
    design = paper_proposed_design()
    extra = {
        "preset": "paper-proposed",
        "source": REFERENCE_SOURCE,
        "table1_m": dict(PAPER_TABLE1),
    }
    _emit(dumps(design_to_dict(design, extra)), args.output)


def _band_dict(band):
    return {
        "f_low_hz": band.f_low,
        "f_high_hz": band.f_high,
        "bandwidth_hz": band.bandwidth,
        "fractional": band.fractional,
    }


def cmd_analyze(args):
    design = _load_design(args)
    g, s = design.geometry, design.substrate
    f10 = resonant_frequency(g, s, TM10)
    f01 = resonant_frequency(g, s, TM01)
    op = make_operating_point(design.f0)
    model = calibrate_model(f10, design.fractional_bandwidth, r_res=args.r_res or args.z0, z0=args.z0)
    bands = {}
    for crit in Criterion:
        try:
            bands[crit.value] = _band_dict(extract_band(model, crit))
        except EmptyBandError as exc:
            bands[crit.value] = {"error": str(exc)}
    d = directivity(g, s.h, op.k0, math.radians(args.grid_step_deg))
    qw = quarter_wave_match(args.r_in or args.z0, args.z0, f10, design.eps_eff)
    notes = ["band edges come from a single-resonance surrogate calibrated to the closed-form bandwidth"]
    if _is_paper_parameters(design):
        notes.append(bandwidth_discrepancy_note(design))
    doc = {
        "schema": "patchlab/analysis-v1",
        "resonance_hz": {"TM10": f10, "TM01": f01},
        "resonance_offset_hz": f10 - design.f0,
        "eps_eff": design.eps_eff,
        "fractional_bandwidth": design.fractional_bandwidth,
        "bandwidth_hz": design.fractional_bandwidth * f10,
        "surrogate": {"q_total": model.q_total, "r_res_ohm": model.r_res, "z0_ohm": model.z0},
        "bands": bands,
        "directivity": {"linear": d, "dbi": dbi(d)},
        "quarter_wave": {"Z_T_ohm": qw.Z_T, "length_m": qw.length},
        "notes": notes,
    }
    _emit(dumps(doc), args.output)
    if _is_paper_parameters(design):
        print(f"note: {bandwidth_discrepancy_note(design)}", file=sys.stderr)


def cmd_pattern(args):
    design = _load_design(args)
    g, s = design.geometry, design.substrate
    k0 = make_operating_point(design.f0).k0
    step = math.radians(args.step_deg)
    if args.cut == "grid":
        samples = pattern_grid(g, s.h, k0, step)
    else:
        samples = principal_cut(args.cut, g, s.h, k0, step)
    if args.svg:
        if args.cut == "grid":
            raise UsageError("--svg is only available for E or H cuts")
        title = args.title or f"{args.cut}-plane, normalized (dB)"
        _emit(render_polar_svg(samples, title), args.svg)
    _emit(pattern_csv(samples), args.csv)


def cmd_sweep(args):
    # an explicit f0 and bandwidth make the design document optional
    standalone = args.f0_ghz is not None and args.fractional_bw is not None
    design = None if standalone and args.design is None and args.preset is None else _load_design(args)
    f0 = args.f0_ghz * 1e9 if args.f0_ghz is not None else resonant_frequency(design.geometry, design.substrate)
    bw = args.fractional_bw if args.fractional_bw is not None else design.fractional_bandwidth
    r_res = args.r_res if args.r_res is not None else args.z0
    model = calibrate_model(f0, bw, r_res=r_res, z0=args.z0)
    start = args.f_start_ghz * 1e9 if args.f_start_ghz is not None else f0 * 0.9
    stop = args.f_stop_ghz * 1e9 if args.f_stop_ghz is not None else f0 * 1.1
    _emit(sweep_csv(frequency_sweep(model, start, stop, args.n_points)), args.output)


def cmd_explore(args):
    doc = _read_json(args.space)
    try:
        space = SearchSpace(
            eps_r_choices=doc["eps_r_choices"],
            h_range=doc["h_range_m"],
            f0_target=doc["f0_hz"],
            max_footprint=doc.get("max_footprint_m2"),
        )
        w = doc.get("weights", {})
        weights = Weights(bandwidth=w.get("bandwidth", 1.0), area=w.get("area", 0.0))
    except KeyError as exc:
        raise ValueError(f"search space missing field {exc.args[0]!r}") from None
    n_h = args.n_h or int(doc.get("n_h", 11))
    ranked = grid_search(space, weights, n_h)
    lines = ["rank,eps_r,h_m,objective,fractional_bandwidth,ground_side_m,footprint_m2,w_over_l"]

    def row(tag, c):
        m = c.metrics
        return (
            f"{tag},{c.substrate.eps_r!r},{c.substrate.h!r},{c.objective!r},"
            f"{m['fractional_bandwidth']!r},{c.design.ground_side!r},{m['footprint']!r},{m['w_over_l']!r}"
        )

    lines += [row(i + 1, c) for i, c in enumerate(ranked)]
    if args.refine:
        best = refine_h(space, weights, tol=args.tol_mm * 1e-3, eps_r=ranked[0].substrate.eps_r)
        lines.append(row("refined", best))
    _emit("\n".join(lines) + "\n", args.output)


def cmd_report(args):
    if args.preset == "paper":
        bench, prop = paper_benchmark_metrics(), paper_proposed_metrics()
    else:
        if not (args.benchmark and args.proposed):
            raise UsageError("report needs BENCHMARK and PROPOSED metric files, or --preset paper")
        bench = MetricSet.from_dict(_read_json(args.benchmark))
        prop = MetricSet.from_dict(_read_json(args.proposed))
    doc = benchmark_report(bench, prop)
    if args.format == "json":
        data = doc.to_dict()
        if not args.no_meta:
            data["meta"] = {"generator": f"patchlab {__version__}"}
        text = dumps(data)
    else:
        text = format_report(doc)
        if not args.no_meta:
            text += f"generated by patchlab {__version__}\n"
    _emit(text, args.output)


# --- parser ---------------------------------------------------------------


def _add_design_source(p):
    p.add_argument("design", nargs="?", help="design JSON file")
    p.add_argument("--preset", choices=DESIGN_PRESETS, help="use a stored design instead of a file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="patchlab", description="Rectangular microstrip patch antenna toolkit.")
    parser.add_argument("--version", action="version", version=f"patchlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("synth", help="synthesize patch dimensions for a resonance")
    p.add_argument("--f0-ghz", type=float, required=True)
    p.add_argument("--eps-r", type=float, required=True)
    p.add_argument("--h-mm", type=float, required=True)
    p.add_argument("--t-mm", type=float, default=0.035)
    p.add_argument("--tan-delta", type=float)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("preset", help="emit the tabulated proposed geometry as a design document")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_preset)

    p = sub.add_parser("analyze", help="resonance, bands and directivity of a design")
    _add_design_source(p)
    p.add_argument("--z0", type=float, default=DEFAULT_Z0)
    p.add_argument("--r-res", type=float, help="surrogate resonant resistance (default: z0)")
    p.add_argument("--r-in", type=float, help="load resistance for the quarter-wave match (default: z0)")
    p.add_argument("--grid-step-deg", type=float, default=0.5)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("pattern", help="E/H-plane cuts or a hemisphere grid")
    _add_design_source(p)
    p.add_argument("--cut", choices=("E", "H", "grid"), default="E")
    p.add_argument("--step-deg", type=float, default=1.0)
    p.add_argument("--csv", help="CSV output path (default: stdout)")
    p.add_argument("--svg", help="polar SVG output path")
    p.add_argument("--title")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("sweep", help="surrogate S11/VSWR sweep as CSV")
    _add_design_source(p)
    p.add_argument("--f0-ghz", type=float)
    p.add_argument("--fractional-bw", type=float)
    p.add_argument("--f-start-ghz", type=float)
    p.add_argument("--f-stop-ghz", type=float)
    p.add_argument("--n-points", type=int, default=201)
    p.add_argument("--z0", type=float, default=DEFAULT_Z0)
    p.add_argument("--r-res", type=float)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("explore", help="rank substrates from a search-space JSON")
    p.add_argument("space")
    p.add_argument("--n-h", type=int)
    p.add_argument("--refine", action="store_true", help="append a golden-section refined row")
    p.add_argument("--tol-mm", type=float, default=1e-3)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_explore)

    p = sub.add_parser("report", help="two-design comparison table")
    p.add_argument("benchmark", nargs="?")
    p.add_argument("proposed", nargs="?")
    p.add_argument("--preset", choices=("paper",))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-meta", action="store_true", help="omit generator metadata")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_report)
    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_VALIDATION
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"patchlab: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"patchlab: invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
