"""Two-design comparison arithmetic and the stored reference presets.

Reference values measured with a full-wave solver (return loss, gain,
bandwidth of the proposed design) are kept as labelled constants and are
never presented as computed results.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from .core import Substrate
from .design import DesignResult, effective_permittivity, fractional_bandwidth, geometry_from_dimensions

REFERENCE_SOURCE = "paper-reference"

METRIC_FIELDS = (
    "return_loss_db",
    "vswr",
    "gain_dbi",
    "patch_area",
    "bandwidth",
    "ground_area",
    "freq_offset",
)

# metric -> (convention, better direction)
ROW_RULES = {
    "return_loss_db": ("base_old", "higher"),
    "vswr": ("base_old", "lower"),
    "gain_dbi": ("base_old", "higher"),
    "patch_area": ("base_new", "lower"),
    "bandwidth": ("base_old", "higher"),
    "ground_area": ("base_new", "lower"),
    "freq_offset": ("base_old", "lower"),
}


@dataclass(frozen=True)
class MetricSet:
    """Performance figures of one design.

    Return loss is a positive dB magnitude; areas are mm^2; bandwidth and
    frequency offset are Hz.
    """

    return_loss_db: float
    vswr: float
    gain_dbi: float
    patch_area: float
    bandwidth: float
    ground_area: float
    freq_offset: float
    name: str = ""
    notes: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for k in METRIC_FIELDS:
            v = getattr(self, k)
            if v is None or not math.isfinite(v):
                raise ValueError(f"metric {k} must be finite, got {v!r}")
        if self.patch_area <= 0 or self.ground_area <= 0:
            raise ValueError("areas must be positive")

    @classmethod
    def from_dict(cls, data: dict) -> "MetricSet":
        missing = [k for k in METRIC_FIELDS if k not in data or data[k] is None]
        if missing:
            raise ValueError(f"metric set missing fields: {', '.join(missing)}")
        return cls(
            **{k: float(data[k]) for k in METRIC_FIELDS},
            name=str(data.get("name", "")),
            notes=dict(data.get("notes", {})),
        )

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in METRIC_FIELDS}
        d["name"] = self.name
        d["notes"] = dict(sorted(self.notes.items()))
        return d


@dataclass(frozen=True)
class Improvement:
    percent: float
    convention: str
    better: str
    label: str = ""


@dataclass(frozen=True)
class ReportDoc:
    benchmark: MetricSet
    proposed: MetricSet
    improvements: dict
    notes: dict

    def to_dict(self) -> dict:
        return {
            "schema": "patchlab/report-v1",
            "benchmark": self.benchmark.to_dict(),
            "proposed": self.proposed.to_dict(),
            "improvements": {k: asdict(v) for k, v in self.improvements.items()},
            "notes": dict(self.notes),
        }


def improvement_percent(old_value: float, new_value: float, convention: str = "base_old", better: str = "higher") -> float:
    """Relative change in percent, positive when it moves in the ``better`` direction."""
    if convention == "base_old":
        base = old_value
    elif convention == "base_new":
        base = new_value
    else:
        raise ValueError(f"unknown convention {convention!r}")
    if better not in ("higher", "lower"):
        raise ValueError(f"better must be 'higher' or 'lower', got {better!r}")
    if base == 0:
        raise ValueError("improvement base is zero")
    pct = abs(new_value - old_value) / abs(base) * 100.0
    if pct == 0.0:
        return 0.0
    improved = new_value > old_value if better == "higher" else new_value < old_value
    return pct if improved else -pct


def benchmark_report(benchmark: MetricSet, proposed: MetricSet) -> ReportDoc:
    improvements = {}
    for key, (conv, better) in ROW_RULES.items():
        old, new = getattr(benchmark, key), getattr(proposed, key)
        if key == "freq_offset" and old == new:
            improvements[key] = Improvement(0.0, conv, better, "no change")
            continue
        if key == "freq_offset" and new == 0 and old > 0:
            improvements[key] = Improvement(100.0, conv, better, "100% (no frequency offset error)")
            continue
        pct = improvement_percent(old, new, conv, better)
        label = f"{pct:.2f}%"
        if key in ("patch_area", "ground_area") and pct > 0:
            label += " (size reduction)"
        improvements[key] = Improvement(pct, conv, better, label)
    notes = {}
    for key in METRIC_FIELDS:
        srcs = [s.notes[key] for s in (benchmark, proposed) if key in s.notes]
        if srcs:
            notes[key] = "; ".join(srcs)
    return ReportDoc(benchmark=benchmark, proposed=proposed, improvements=improvements, notes=notes)


def format_report(doc: ReportDoc) -> str:
    rows = [
        ("Return Loss", "return_loss_db", lambda v: f"-{v:g} dB"),
        ("VSWR", "vswr", lambda v: f"{v:g}"),
        ("Gain", "gain_dbi", lambda v: f"{v:g} dBi"),
        ("Patch Area", "patch_area", lambda v: f"{v:g} mm^2"),
        ("Bandwidth", "bandwidth", lambda v: f"{v / 1e6:g} MHz"),
        ("Ground Plane Area", "ground_area", lambda v: f"{v:g} mm^2"),
        ("Resonant Frequency Offset", "freq_offset", lambda v: f"{v / 1e9:g} GHz"),
    ]
    header = ("Metric", doc.benchmark.name or "Benchmark", doc.proposed.name or "Proposed", "Improvement")
    table = [header]
    for title, key, fmt in rows:
        table.append((title, fmt(getattr(doc.benchmark, key)), fmt(getattr(doc.proposed, key)), doc.improvements[key].label))
    widths = [max(len(r[i]) for r in table) for i in range(4)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in table]
    lines.insert(1, "  ".join("-" * w for w in widths))
    for key, note in doc.notes.items():
        lines.append(f"note[{key}]: {note}")
    return "\n".join(lines) + "\n"


# --- stored presets -------------------------------------------------------

PAPER_F0 = 10e9
PAPER_SUBSTRATE = Substrate(eps_r=4.4, h=1.6e-3)

# Table 1 dimensions of the proposed design, meters
PAPER_TABLE1 = {
    "ground_plane_length": 17e-3,
    "ground_plane_width": 17e-3,
    "patch_length": 6e-3,
    "patch_width": 8.6e-3,
    "substrate_thickness": 1.6e-3,
    "quarter_wave_length": 4e-3,
    "quarter_wave_width": 0.53e-3,
    "feed_line_length": 4e-3,
    "feed_line_width": 3e-3,
}

PAPER_BAND_HZ = (9.7542e9, 10.25e9)
PAPER_BANDWIDTH_HZ = 500e6


def paper_proposed_design() -> DesignResult:
    """The tabulated proposed geometry (not what the closed-form equations give)."""
    s = PAPER_SUBSTRATE
    L, W = PAPER_TABLE1["patch_length"], PAPER_TABLE1["patch_width"]
    return DesignResult(
        geometry=geometry_from_dimensions(L, W, s),
        eps_eff=effective_permittivity(s, W),
        substrate=s,
        f0=PAPER_F0,
        ground_side=PAPER_TABLE1["ground_plane_width"],
        fractional_bandwidth=fractional_bandwidth(s, PAPER_F0),
    )


def paper_benchmark_metrics() -> MetricSet:
    src = REFERENCE_SOURCE
    return MetricSet(
        return_loss_db=18.27,
        vswr=2.13,
        gain_dbi=4.46,
        patch_area=71.4,
        bandwidth=400e6,
        ground_area=400.0,
        freq_offset=0.45e9,
        name="paper-benchmark",
        notes={
            "return_loss_db": f"benchmark S11 -18.27 dB; source: {src}",
            "freq_offset": f"designed 9.7 GHz, resonated 10.15 GHz; source: {src}",
        },
    )


def paper_proposed_metrics() -> MetricSet:
    src = REFERENCE_SOURCE
    return MetricSet(
        return_loss_db=31.0,
        vswr=1.05,
        gain_dbi=7.2,
        patch_area=51.6,
        bandwidth=500e6,
        ground_area=289.0,
        freq_offset=0.0,
        name="paper-proposed-metrics",
        notes={
            "return_loss_db": f"full-wave S11 -31 dB; source: {src}",
            "vswr": f"1.05 from the VSWR discussion (the comparison table prints 1.0); source: {src}",
            "gain_dbi": f"full-wave gain 7.2 dBi; source: {src}",
            "bandwidth": f"full-wave band 9.7542-10.25 GHz; source: {src}",
        },
    )


def bandwidth_discrepancy_note(design: DesignResult) -> str:
    b_hz = design.bandwidth_hz
    return (
        f"closed-form VSWR<=2 bandwidth is {design.fractional_bandwidth:.4f} "
        f"({b_hz / 1e6:.0f} MHz at {design.f0 / 1e9:g} GHz); the reference 500 MHz "
        f"(9.7542-10.25 GHz) is a full-wave result and is not reproduced by this formula"
    )
