"""File formats: design JSON, pattern/sweep CSV, polar SVG.

All text is UTF-8 with LF endings. Floats are written with ``repr``
(shortest round-trip form) so documents reload bit-identically.
"""

from __future__ import annotations

import json
import math
from xml.sax.saxutils import escape

from .core import PatchGeometry, Substrate
from .design import DesignResult
from .radiation import DB_FLOOR, PatternSample
from .sweep import SweepPoint

DESIGN_SCHEMA = "patchlab/design-v1"
PATTERN_HEADER = "theta_deg,phi_deg,magnitude,magnitude_db"
SWEEP_HEADER = "freq_hz,s11_db,vswr"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def design_to_dict(design: DesignResult, extra: dict | None = None) -> dict:
    g, s = design.geometry, design.substrate
    substrate = {"eps_r": s.eps_r, "h_m": s.h}
    if s.tan_delta is not None:
        substrate["tan_delta"] = s.tan_delta
    doc = {
        "schema": DESIGN_SCHEMA,
        "f0_hz": design.f0,
        "substrate": substrate,
        "geometry": {
            "L_m": g.L,
            "W_m": g.W,
            "t_m": g.t,
            "delta_L_m": g.delta_L,
            "L_eff_m": g.L_eff,
        },
        "ground_side_m": design.ground_side,
        "eps_eff": design.eps_eff,
        "fractional_bandwidth": design.fractional_bandwidth,
        "derived": {
            "f0_ghz": design.f0 / 1e9,
            "L_mm": g.L * 1e3,
            "W_mm": g.W * 1e3,
            "L_eff_mm": g.L_eff * 1e3,
            "delta_L_mm": g.delta_L * 1e3,
            "ground_side_mm": design.ground_side * 1e3,
            "bandwidth_hz": design.bandwidth_hz,
        },
    }
    if extra:
        doc.update(extra)
    return doc


def design_from_dict(doc: dict) -> DesignResult:
    """Rebuild a design from its JSON form; ``derived`` and unknown keys are ignored."""
    if doc.get("schema") != DESIGN_SCHEMA:
        raise ValueError(f"unsupported design schema {doc.get('schema')!r}; expected {DESIGN_SCHEMA!r}")
    try:
        s = doc["substrate"]
        g = doc["geometry"]
        substrate = Substrate(eps_r=float(s["eps_r"]), h=float(s["h_m"]), tan_delta=s.get("tan_delta"))
        geometry = PatchGeometry(
            L=float(g["L_m"]),
            W=float(g["W_m"]),
            t=float(g["t_m"]),
            delta_L=float(g["delta_L_m"]),
            L_eff=float(g["L_eff_m"]),
        )
        return DesignResult(
            geometry=geometry,
            eps_eff=float(doc["eps_eff"]),
            substrate=substrate,
            f0=float(doc["f0_hz"]),
            ground_side=float(doc["ground_side_m"]),
            fractional_bandwidth=float(doc["fractional_bandwidth"]),
        )
    except KeyError as exc:
        raise ValueError(f"design document missing field {exc.args[0]!r}") from None


def pattern_csv(samples: list[PatternSample]) -> str:
    lines = [PATTERN_HEADER]
    for s in samples:
        lines.append(f"{_deg(s.theta)!r},{_deg(s.phi)!r},{s.value!r},{s.value_db!r}")
    return "\n".join(lines) + "\n"


def sweep_csv(points: list[SweepPoint]) -> str:
    lines = [SWEEP_HEADER]
    for p in points:
        vswr = "inf" if math.isinf(p.vswr) else repr(p.vswr)
        lines.append(f"{p.f!r},{p.s11_db!r},{vswr}")
    return "\n".join(lines) + "\n"


def _deg(rad: float) -> float:
    # snap to 1e-9 deg so 90.00000000000001 prints as 90.0
    return round(math.degrees(rad), 9)


# --- polar SVG ------------------------------------------------------------

SVG_SIZE = 800
_CENTER = SVG_SIZE / 2
_OUTER_R = 340.0
DB_MIN = -40.0


def db_to_radius(value_db: float) -> float:
    """Map dB (clamped to [DB_MIN, 0]) linearly onto [0, outer ring radius]."""
    v = min(max(value_db, DB_MIN), 0.0)
    return _OUTER_R * (v - DB_MIN) / (0.0 - DB_MIN)


def polar_point(angle: float, value_db: float) -> tuple[float, float]:
    """SVG coordinates for a sample; 0 deg points up, angles grow clockwise."""
    r = db_to_radius(value_db)
    return _CENTER + r * math.sin(angle), _CENTER - r * math.cos(angle)


def render_polar_svg(cut: list[PatternSample], title: str = "", angle: str = "auto") -> str:
    """Self-contained polar plot of a normalized cut.

    ``angle`` selects which coordinate is plotted around the circle:
    ``"theta"``, ``"phi"`` or ``"auto"`` (whichever varies along the cut).
    """
    if len(cut) < 2:
        raise ValueError("need at least two samples to draw a cut")
    if angle == "auto":
        angle = "theta" if len({s.theta for s in cut}) > 1 else "phi"
    if angle not in ("theta", "phi"):
        raise ValueError(f"angle must be 'theta', 'phi' or 'auto', got {angle!r}")

    def f(x):
        return f"{x:.2f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SVG_SIZE} {SVG_SIZE}" '
        f'width="{SVG_SIZE}" height="{SVG_SIZE}">',
        f'<rect x="0" y="0" width="{SVG_SIZE}" height="{SVG_SIZE}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{f(_CENTER)}" y="28" text-anchor="middle" font-family="sans-serif" font-size="20">{escape(title)}</text>')
    for ring_db in range(int(DB_MIN), 1, 10):
        r = db_to_radius(ring_db)
        if r > 0:
            out.append(f'<circle cx="{f(_CENTER)}" cy="{f(_CENTER)}" r="{f(r)}" fill="none" stroke="#bbbbbb" stroke-width="1"/>')
        out.append(
            f'<text x="{f(_CENTER + 4)}" y="{f(_CENTER - r - 2)}" font-family="sans-serif" font-size="11" fill="#666666">{ring_db} dB</text>'
        )
    for deg in range(0, 360, 30):
        a = math.radians(deg)
        x, y = _CENTER + _OUTER_R * math.sin(a), _CENTER - _OUTER_R * math.cos(a)
        out.append(f'<line x1="{f(_CENTER)}" y1="{f(_CENTER)}" x2="{f(x)}" y2="{f(y)}" stroke="#dddddd" stroke-width="1"/>')
        lx, ly = _CENTER + (_OUTER_R + 22) * math.sin(a), _CENTER - (_OUTER_R + 22) * math.cos(a) + 4
        out.append(f'<text x="{f(lx)}" y="{f(ly)}" text-anchor="middle" font-family="sans-serif" font-size="12">{deg}°</text>')
    pts = " ".join(f"{f(x)},{f(y)}" for x, y in (polar_point(getattr(s, angle), s.value_db) for s in cut))
    out.append(f'<polyline points="{pts}" fill="none" stroke="#c0392b" stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


__all__ = [
    "DB_FLOOR",
    "DESIGN_SCHEMA",
    "PATTERN_HEADER",
    "SWEEP_HEADER",
    "db_to_radius",
    "design_from_dict",
    "design_to_dict",
    "dumps",
    "pattern_csv",
    "polar_point",
    "render_polar_svg",
    "sweep_csv",
]
