"""Closed-form transmission-line / cavity design equations.

Synthesis runs width -> effective permittivity -> fringing extension ->
effective length, and is exact (no iteration): the width formula does not
depend on the length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import C0, TM10, ModeIndex, PatchGeometry, Substrate, make_operating_point

RETURN_LOSS_CAP_DB = 99.99
DEFAULT_Z0 = 50.0
DEFAULT_T = 35e-6  # 1 oz copper

# pole of the fringing-extension formula
_DELTA_L_POLE = 0.258
# bandwidth formula is only trusted for electrically thin substrates
MAX_THICKNESS_RATIO = 0.1


@dataclass(frozen=True)
class DesignResult:
    geometry: PatchGeometry
    eps_eff: float
    substrate: Substrate
    f0: float
    ground_side: float
    fractional_bandwidth: float

    @property
    def bandwidth_hz(self) -> float:
        return self.fractional_bandwidth * self.f0


@dataclass(frozen=True)
class MatchMetrics:
    gamma: complex
    vswr: float
    return_loss_db: float

    @property
    def s11_db(self) -> float:
        return -self.return_loss_db


def effective_permittivity(substrate: Substrate, W: float) -> float:
    """Quasi-static effective permittivity seen by a microstrip of width W.

    The wide-strip form is used for every W/h, including W/h < 1.
    """
    if not W > 0:
        raise ValueError(f"patch width must be positive, got {W!r}")
    er, h = substrate.eps_r, substrate.h
    return (er + 1.0) / 2.0 + (er - 1.0) / 2.0 / math.sqrt(1.0 + 12.0 * h / W)


def length_extension(eps_eff: float, substrate: Substrate, W: float) -> float:
    """Fringing extension ΔL added at each radiating edge."""
    if not eps_eff > _DELTA_L_POLE:
        raise ValueError(f"eps_eff={eps_eff!r} is at or below the formula pole {_DELTA_L_POLE}")
    if not W > 0:
        raise ValueError(f"patch width must be positive, got {W!r}")
    h = substrate.h
    wh = W / h
    return 0.412 * h * (eps_eff + 0.3) * (wh + 0.264) / ((eps_eff - _DELTA_L_POLE) * (wh + 0.8))


def patch_width(f0: float, eps_r: float) -> float:
    if not f0 > 0:
        raise ValueError(f"frequency must be positive, got {f0!r}")
    if not eps_r >= 1:
        raise ValueError(f"eps_r must be >= 1, got {eps_r!r}")
    return C0 / (2.0 * f0 * math.sqrt((eps_r + 1.0) / 2.0))


def effective_length(f0: float, eps_eff: float) -> float:
    if not f0 > 0:
        raise ValueError(f"frequency must be positive, got {f0!r}")
    if not eps_eff >= 1:
        raise ValueError(f"eps_eff must be >= 1, got {eps_eff!r}")
    return C0 / (2.0 * f0 * math.sqrt(eps_eff))


def fractional_bandwidth(substrate: Substrate, f0: float) -> float:
    """VSWR <= 2 fractional bandwidth of a thin rectangular patch.

    Raises ValueError when h/lambda0 >= 0.1, where the thin-substrate
    approximation no longer holds.
    """
    lambda0 = make_operating_point(f0).lambda0
    ratio = substrate.h / lambda0
    if ratio >= MAX_THICKNESS_RATIO:
        raise ValueError(
            f"h/lambda0 = {ratio:.4g} outside the thin-substrate range (< {MAX_THICKNESS_RATIO})"
        )
    er = substrate.eps_r
    return 3.77 * (er - 1.0) / er**2 * ratio


def ground_plane_side(W: float) -> float:
    """Square ground side of twice the patch width, rounded to 0.1 mm."""
    return round(2.0 * W * 1e4) / 1e4


def synthesize(f0: float, substrate: Substrate, t: float = DEFAULT_T) -> DesignResult:
    W = patch_width(f0, substrate.eps_r)
    eps_eff = effective_permittivity(substrate, W)
    dL = length_extension(eps_eff, substrate, W)
    L_eff = effective_length(f0, eps_eff)
    L = L_eff - 2.0 * dL
    if L <= 0:
        raise ValueError(
            f"unrealizable design: fringing extension 2*dL={2 * dL:.4g} m exceeds "
            f"L_eff={L_eff:.4g} m (substrate too thick for {f0:.4g} Hz)"
        )
    # built with the synthesized L_eff so analysis inverts synthesis exactly
    geometry = PatchGeometry(L=L, W=W, t=t, delta_L=dL, L_eff=L + 2.0 * dL)
    return DesignResult(
        geometry=geometry,
        eps_eff=eps_eff,
        substrate=substrate,
        f0=f0,
        ground_side=ground_plane_side(W),
        fractional_bandwidth=fractional_bandwidth(substrate, f0),
    )


def geometry_from_dimensions(L: float, W: float, substrate: Substrate, t: float = DEFAULT_T) -> PatchGeometry:
    """Attach fringing extension and effective length to physical L x W."""
    eps_eff = effective_permittivity(substrate, W)
    return PatchGeometry.from_length(L, W, length_extension(eps_eff, substrate, W), t=t)


def resonant_frequency(geometry: PatchGeometry, substrate: Substrate, mode: ModeIndex = TM10) -> float:
    """Cavity resonance of a TMmn mode.

    The length term uses L_eff (not the physical L) so that this is the
    exact inverse of :func:`synthesize`.
    """
    eps_eff = effective_permittivity(substrate, geometry.W)
    return C0 / (2.0 * math.sqrt(eps_eff)) * math.hypot(mode.m / geometry.L_eff, mode.n / geometry.W)


def match_metrics(Z: complex, Z0: float = DEFAULT_Z0) -> MatchMetrics:
    """Reflection coefficient, VSWR and return loss of a load Z on a Z0 line.

    A total reflection (|Γ| >= 1) reports vswr=inf and return loss 0 dB; a
    perfect match reports the capped return loss sentinel.
    """
    Z = complex(Z)
    if Z + Z0 == 0:
        raise ValueError("Z + Z0 must be non-zero")
    gamma = (Z - Z0) / (Z + Z0)
    mag = abs(gamma)
    if mag >= 1.0:
        return MatchMetrics(gamma=gamma, vswr=math.inf, return_loss_db=0.0)
    return MatchMetrics(gamma=gamma, vswr=gamma_to_vswr(mag), return_loss_db=return_loss_db(mag))


def gamma_to_vswr(gamma_mag: float) -> float:
    if gamma_mag >= 1.0:
        return math.inf
    return (1.0 + gamma_mag) / (1.0 - gamma_mag)


def vswr_to_gamma(vswr: float) -> float:
    if vswr < 1.0:
        raise ValueError(f"VSWR must be >= 1, got {vswr!r}")
    if math.isinf(vswr):
        return 1.0
    return (vswr - 1.0) / (vswr + 1.0)


def return_loss_db(gamma_mag: float) -> float:
    if gamma_mag <= 0.0:
        return RETURN_LOSS_CAP_DB
    if gamma_mag >= 1.0:
        return 0.0
    return min(-20.0 * math.log10(gamma_mag), RETURN_LOSS_CAP_DB)


@dataclass(frozen=True)
class QuarterWave:
    Z_T: float
    length: float


def quarter_wave_match(R_in: float, Z0: float, f0: float, eps_eff: float) -> QuarterWave:
    """λ/4 transformer matching a resistive load R_in to a Z0 feed."""
    if not R_in > 0:
        raise ValueError(f"load resistance must be positive, got {R_in!r}")
    if not Z0 > 0:
        raise ValueError(f"reference impedance must be positive, got {Z0!r}")
    lambda0 = make_operating_point(f0).lambda0
    return QuarterWave(Z_T=math.sqrt(Z0 * R_in), length=lambda0 / (4.0 * math.sqrt(eps_eff)))

