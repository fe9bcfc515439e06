"""Lumped resonator surrogate for S11 / VSWR sweeps and band-edge extraction.

The patch input is modelled as a single parallel RLC resonance. This is a
surrogate for producing return-loss-shaped curves and exercising the band
logic; it does not predict full-wave magnitudes.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .design import DEFAULT_Z0, match_metrics, vswr_to_gamma

Q_CAP = 1e6
BISECT_RTOL = 1e-6


class Criterion(str, enum.Enum):
    VSWR2 = "vswr2"
    S11_MINUS10DB = "s11_minus10db"

    @property
    def gamma_threshold(self) -> float:
        if self is Criterion.VSWR2:
            return vswr_to_gamma(2.0)
        return 10.0 ** (-10.0 / 20.0)


@dataclass(frozen=True)
class ResonatorModel:
    f0: float
    q_total: float
    r_res: float
    z0: float = DEFAULT_Z0

    def __post_init__(self):
        for name in ("f0", "q_total", "r_res", "z0"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite, got {v!r}")


@dataclass(frozen=True)
class SweepPoint:
    f: float
    s11_db: float
    vswr: float


@dataclass(frozen=True)
class BandReport:
    f_low: float
    f_high: float
    bandwidth: float
    fractional: float
    criterion: Criterion


class EmptyBandError(ValueError):
    """The match criterion is not met anywhere around the resonance."""


def calibrate_model(f0: float, fractional_bw: float, r_res: float = DEFAULT_Z0, z0: float = DEFAULT_Z0) -> ResonatorModel:
    """Pick Q so a matched resonator has the requested VSWR <= 2 bandwidth.

    For r_res == z0 the band edges satisfy Q*(f/f0 - f0/f) = ±1/sqrt(2),
    giving B = 1/(Q*sqrt(2)). A mismatched r_res reuses the same Q.
    """
    if not (0.0 < fractional_bw < 0.5):
        raise ValueError(f"fractional bandwidth must lie in (0, 0.5), got {fractional_bw!r}")
    s = 2.0
    q = (s - 1.0) / (fractional_bw * math.sqrt(s))
    if q > Q_CAP:
        raise ValueError(f"quality factor {q:.3g} exceeds cap {Q_CAP:g}")
    return ResonatorModel(f0=f0, q_total=q, r_res=r_res, z0=z0)


def impedance_at(model: ResonatorModel, f):
    """Input impedance r_res / (1 + jQ(f/f0 - f0/f)); vectorized over f."""
    f_arr = np.asarray(f, dtype=float)
    if np.any(f_arr <= 0):
        raise ValueError("frequency must be positive")
    detune = f_arr / model.f0 - model.f0 / f_arr
    z = model.r_res / (1.0 + 1j * model.q_total * detune)
    return complex(z) if f_arr.ndim == 0 else z


def frequency_sweep(model: ResonatorModel, f_start: float, f_stop: float, n_points: int) -> list[SweepPoint]:
    if not (0 < f_start < f_stop):
        raise ValueError(f"need 0 < f_start < f_stop, got {f_start!r}, {f_stop!r}")
    if n_points < 2:
        raise ValueError(f"need at least 2 sweep points, got {n_points}")
    freqs = np.linspace(f_start, f_stop, n_points)
    out = []
    for f in freqs.tolist():
        m = match_metrics(impedance_at(model, f), model.z0)
        out.append(SweepPoint(f=f, s11_db=m.s11_db, vswr=m.vswr))
    return out


def _gamma_mag(model: ResonatorModel, f: float) -> float:
    return abs(match_metrics(impedance_at(model, f), model.z0).gamma)


def _bisect(model, threshold, inside, outside, round_up):
    # invariant: |gamma(inside)| <= threshold < |gamma(outside)|
    while abs(outside - inside) > BISECT_RTOL * model.f0:
        mid = 0.5 * (inside + outside)
        if _gamma_mag(model, mid) <= threshold:
            inside = mid
        else:
            outside = mid
    lo, hi = sorted((inside, outside))
    return hi if round_up else lo


def extract_band(model: ResonatorModel, criterion: Criterion | str = Criterion.VSWR2) -> BandReport:
    """Band edges on each side of f0 where the match criterion stops holding."""
    criterion = Criterion(criterion)
    threshold = criterion.gamma_threshold
    if _gamma_mag(model, model.f0) > threshold:
        raise EmptyBandError(
            f"criterion {criterion.value} not met at f0 (|gamma|={_gamma_mag(model, model.f0):.4f})"
        )
    # |Z| -> 0 far from resonance, so |gamma| -> 1 > threshold on both sides
    lo_out = model.f0 / 2.0
    while _gamma_mag(model, lo_out) <= threshold:
        lo_out /= 2.0
    hi_out = model.f0 * 2.0
    while _gamma_mag(model, hi_out) <= threshold:
        hi_out *= 2.0
    f_low = _bisect(model, threshold, model.f0, lo_out, round_up=False)
    f_high = _bisect(model, threshold, model.f0, hi_out, round_up=True)
    bw = f_high - f_low
    return BandReport(f_low=f_low, f_high=f_high, bandwidth=bw, fractional=bw / model.f0, criterion=criterion)
