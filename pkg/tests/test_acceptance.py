"""Exit criteria for the toolkit, one test per criterion.

Each test prints a single ``[ACCEPT nn] PASS|FAIL`` line (visible with
``pytest -s`` or in the terminal summary) before asserting.
"""

import math
import time
from pathlib import Path

import numpy as np
import pytest

from patchlab.cli import run_cli
from patchlab.core import C0, Excitation, FieldPoint, Substrate, make_operating_point
from patchlab.design import (
    fractional_bandwidth,
    gamma_to_vswr,
    match_metrics,
    quarter_wave_match,
    resonant_frequency,
    return_loss_db,
    synthesize,
    vswr_to_gamma,
)
from patchlab.radiation import (
    array_factor,
    dbi,
    directivity,
    e_plane,
    field_pattern,
    h_plane,
    hemisphere_directivity,
    single_slot_field,
    total_field,
    vector_potential,
)
from patchlab.report import bandwidth_discrepancy_note, benchmark_report, paper_benchmark_metrics, paper_proposed_metrics
from patchlab.sweep import Criterion, calibrate_model, extract_band

FR4 = Substrate(4.4, 1.6e-3)
F0 = 10e9


@pytest.fixture
def record(capsys):
    def _record(num, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[ACCEPT {num:02d}] {'PASS' if ok else 'FAIL'} {title}: {detail}")
        assert ok, f"criterion {num} failed: {detail}"

    return _record


def _best_time(fn, repeat=20):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def test_01_synthesis_reproduction(record):
    d = synthesize(F0, FR4)
    g = d.geometry
    elapsed = _best_time(lambda: synthesize(F0, FR4))
    checks = [
        abs(g.W * 1e3 - 9.12) <= 0.02,
        abs(g.L * 1e3 - 6.42) <= 0.05,
        abs(d.eps_eff - 3.665) <= 0.002,
        abs(g.delta_L * 1e3 - 0.704) <= 0.005,
        elapsed < 1e-3,
    ]
    detail = (
        f"W={g.W * 1e3:.4f} mm L={g.L * 1e3:.4f} mm eps_eff={d.eps_eff:.4f} "
        f"dL={g.delta_L * 1e3:.4f} mm t={elapsed * 1e6:.1f} us"
    )
    record(1, "synthesis at 10 GHz / FR-4 1.6 mm", all(checks), detail)


def test_02_round_trip(record):
    rng = np.random.default_rng(2024)
    cases = []
    while len(cases) < 100:
        f0 = rng.uniform(1e9, 30e9)
        er = rng.uniform(2.2, 12.0)
        lam = C0 / f0
        # substrate height drawn from the usual 0.003..0.05 lambda0 window
        h = rng.uniform(0.003, 0.05) * lam
        cases.append((f0, Substrate(er, h)))

    def run():
        return max(abs(resonant_frequency(synthesize(f, s).geometry, s) / f - 1) for f, s in cases)

    worst = run()
    elapsed = _best_time(run, repeat=5)
    record(2, "synthesis/analysis round trip", worst < 1e-9 and elapsed < 10e-3, f"max rel err={worst:.2e} t={elapsed * 1e3:.2f} ms")


def test_03_quadrature_oracle(record):
    d = synthesize(F0, FR4)
    op = make_operating_point(F0)
    exc = Excitation.for_substrate(1.0, FR4)
    rng = np.random.default_rng(3)
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(50):
        p = FieldPoint(1e4 * op.lambda0, rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi))
        closed = vector_potential(p, d.geometry, FR4.h, exc, op.k0, method="closed")
        quad = vector_potential(p, d.geometry, FR4.h, exc, op.k0, method="quadrature", nodes=201)
        worst = max(worst, abs(quad - closed) / abs(closed))
    elapsed = time.perf_counter() - t0
    record(3, "Simpson vector potential vs closed form", worst < 0.01 and elapsed < 5.0, f"max rel err={worst:.2e} t={elapsed:.2f} s")


def test_04_algebraic_identities(record):
    d = synthesize(F0, FR4)
    g, h = d.geometry, FR4.h
    op = make_operating_point(F0)
    exc = Excitation.for_substrate(1.0, FR4)
    rng = np.random.default_rng(4)
    th = rng.uniform(0, math.pi, 1000)
    ph = rng.uniform(0, 2 * math.pi, 1000)
    fact = 0.0
    e_r_max = 0.0
    for t, p in zip(th, ph):
        pt = FieldPoint(1e4 * op.lambda0, t, p)
        s = single_slot_field(pt, g, h, exc, op.k0)
        tot = total_field(pt, g, h, exc, op.k0)
        af = array_factor(t, g.L_eff, op.k0)
        for a, b in ((tot.e_theta, s.e_theta * af), (tot.e_phi, s.e_phi * af)):
            if a != 0:
                fact = max(fact, abs(a - b) / abs(a))
        e_r_max = max(e_r_max, abs(tot.e_r), abs(s.e_r))
    cut_e = np.max(np.abs(field_pattern(th, 0.0, g, h, op.k0) - np.abs(e_plane(th, g, h, op.k0))) / np.maximum(np.abs(e_plane(th, g, h, op.k0)), 1e-300))
    hp = np.abs(h_plane(ph, g, h, op.k0))
    cut_h = np.max(np.abs(field_pattern(math.pi / 2, ph, g, h, op.k0) - hp) / np.maximum(hp, 1e-300))
    ok = fact <= 1e-12 and cut_e <= 1e-12 and cut_h <= 1e-12 and e_r_max == 0
    record(4, "factorization, cut reduction, E_r = 0", ok, f"fact={fact:.1e} E-cut={cut_e:.1e} H-cut={cut_h:.1e} |E_r|max={e_r_max}")


def test_05_quarter_wave(record):
    d = synthesize(F0, FR4)
    qw = quarter_wave_match(50.0, 50.0, F0, d.eps_eff)
    mm = qw.length * 1e3
    rel = abs(mm - 4.0) / 4.0
    record(5, "quarter-wave length vs tabulated 4 mm", abs(mm - 3.92) <= 0.02 and rel < 0.025, f"{mm:.4f} mm ({rel * 100:.2f}% from 4 mm)")


def test_06_bandwidth_formula(record):
    d = synthesize(F0, FR4)
    B = fractional_bandwidth(FR4, F0)
    mhz = B * F0 / 1e6
    note = bandwidth_discrepancy_note(d)
    ok = abs(B - 0.0354) <= 0.0005 and abs(mhz - 500.0) > 100.0 and "500 MHz" in note
    with_note = f"B={B:.5f} ({mhz:.0f} MHz), not 500 MHz; note: {note}"
    record(6, "closed-form bandwidth", ok, with_note)


def test_07_directivity(record):
    d = synthesize(F0, FR4)
    k0 = make_operating_point(F0).k0
    uni = hemisphere_directivity(lambda t, p: np.ones(np.broadcast(t, p).shape), math.radians(1))
    d1 = dbi(directivity(d.geometry, FR4.h, k0, math.radians(1)))
    d05 = dbi(directivity(d.geometry, FR4.h, k0, math.radians(0.5)))
    ok = abs(uni - 2.0) <= 1e-6 and abs(d1 - d05) < 0.05 and 4.0 <= d05 <= 10.0
    record(7, "hemisphere directivity", ok, f"uniform D={uni:.9f}; patch {d1:.4f} dBi (1 deg) vs {d05:.4f} dBi (0.5 deg)")


def test_08_sweep_closure(record):
    worst = 0.0
    nested = True
    for bw in np.linspace(0.005, 0.2, 40):
        m = calibrate_model(F0, bw)
        v = extract_band(m, Criterion.VSWR2)
        s = extract_band(m, Criterion.S11_MINUS10DB)
        worst = max(worst, abs(v.fractional / bw - 1))
        nested &= v.f_low < s.f_low and s.f_high < v.f_high
    record(8, "surrogate band closure and nesting", worst < 0.02 and nested, f"max rel dev={worst:.2e}, -10 dB band strictly inside: {nested}")


def test_09_table2_arithmetic(record, capsys, tmp_path):
    out = tmp_path / "report.txt"
    code = run_cli(["report", "--preset", "paper", "--no-meta", "-o", str(out)])
    doc = benchmark_report(paper_benchmark_metrics(), paper_proposed_metrics())
    expected = {
        "return_loss_db": 69.68,
        "vswr": 50.70,
        "gain_dbi": 61.44,
        "patch_area": 38.37,
        "bandwidth": 25.0,
        "ground_area": 38.41,
        "freq_offset": 100.0,
    }
    diffs = {k: abs(doc.improvements[k].percent - v) for k, v in expected.items()}
    text = out.read_text()
    ok = code == 0 and max(diffs.values()) <= 0.02 and all(lbl in text for lbl in ("69.68%", "50.70%", "38.37%", "38.41%", "100%"))
    record(9, "comparison table percentages", ok, " ".join(f"{k}={doc.improvements[k].percent:.2f}" for k in expected))


def test_10_match_metrics(record):
    m = match_metrics(100, 50)
    g = vswr_to_gamma(1.05)
    rl = return_loss_db(g)
    ok = (
        abs(abs(m.gamma) - 1 / 3) <= 1e-3
        and abs(m.vswr - 2.0) <= 1e-3
        and abs(m.return_loss_db - 9.542) <= 1e-3
        and abs(gamma_to_vswr(1 / 3) - 2.0) <= 1e-3
        and abs(rl - 32.3) <= 0.1
        and abs(gamma_to_vswr(10 ** (-31 / 20)) - 1.05) < 0.01
    )
    record(10, "VSWR / gamma / return loss", ok, f"|G|=1/3 -> VSWR={m.vswr:.4f}, RL={m.return_loss_db:.4f} dB; VSWR 1.05 -> RL={rl:.3f} dB")


def _cli_suite(outdir: Path) -> None:
    space = outdir / "space.json"
    space.write_text('{"eps_r_choices": [2.2, 4.4, 10.2], "h_range_m": [0.0004, 0.0016], "f0_hz": 10e9, '
                     '"weights": {"bandwidth": 1.0, "area": 0.05}, "n_h": 5}\n')
    runs = [
        ["synth", "--f0-ghz", "10", "--eps-r", "4.4", "--h-mm", "1.6", "-o", str(outdir / "design.json")],
        ["preset", "-o", str(outdir / "preset.json")],
        ["analyze", str(outdir / "design.json"), "--grid-step-deg", "1", "-o", str(outdir / "analysis.json")],
        ["pattern", "--preset", "paper", "--cut", "E", "--step-deg", "1", "--csv", str(outdir / "e.csv"), "--svg", str(outdir / "e.svg")],
        ["pattern", "--preset", "paper", "--cut", "H", "--step-deg", "1", "--csv", str(outdir / "h.csv"), "--svg", str(outdir / "h.svg")],
        ["pattern", "--preset", "paper", "--cut", "grid", "--step-deg", "5", "--csv", str(outdir / "grid.csv")],
        ["sweep", "--preset", "paper", "--n-points", "401", "-o", str(outdir / "sweep.csv")],
        ["explore", str(space), "--refine", "-o", str(outdir / "ranked.csv")],
        ["report", "--preset", "paper", "--format", "json", "--no-meta", "-o", str(outdir / "report.json")],
    ]
    for argv in runs:
        assert run_cli(argv) == 0, argv


def test_11_determinism(record, tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    a.mkdir()
    b.mkdir()
    _cli_suite(a)
    _cli_suite(b)
    capsys.readouterr()
    files = sorted(p.name for p in a.iterdir())
    same = [n for n in files if (a / n).read_bytes() == (b / n).read_bytes()]
    record(11, "byte-identical CLI outputs", same == files and len(files) == 12, f"{len(same)}/{len(files)} files identical")
