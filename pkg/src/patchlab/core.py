"""Shared domain types, constants and numeric helpers.

Everything inside the package is strict SI: meters, hertz, radians.
Unit conversion happens only at the CLI boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

C0 = 299_792_458.0  # m/s, exact
MU0 = 1.25663706212e-6  # H/m
EPS0 = 1.0 / (MU0 * C0**2)  # F/m
ETA0 = math.sqrt(MU0 / EPS0)  # ohm

_SINC_SERIES_CUTOFF = 1e-8


def sinc(x):
    """Unnormalized sinc, sin(x)/x, with the removable singularity at 0.

    Accepts scalars or arrays; returns the same kind.
    """
    if np.ndim(x) == 0:
        x = float(x)
        if abs(x) < _SINC_SERIES_CUTOFF:
            return 1.0 - x * x / 6.0
        return math.sin(x) / x
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < _SINC_SERIES_CUTOFF
    safe = np.where(small, 1.0, x)
    return np.where(small, 1.0 - x * x / 6.0, np.sin(safe) / safe)


def simpson_weights(n_intervals: int, step: float) -> np.ndarray:
    """Composite Simpson weights for ``n_intervals + 1`` equispaced nodes."""
    if n_intervals < 2 or n_intervals % 2:
        raise ValueError(f"Simpson's rule needs an even interval count >= 2, got {n_intervals}")
    w = np.ones(n_intervals + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w * (step / 3.0)


def _check_positive(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0):
        raise ValueError(f"{name} must be positive and finite, got {value!r}")


@dataclass(frozen=True)
class Substrate:
    eps_r: float
    h: float
    tan_delta: float | None = None

    def __post_init__(self):
        if not (math.isfinite(self.eps_r) and self.eps_r >= 1.0):
            raise ValueError(f"eps_r must be >= 1, got {self.eps_r!r}")
        _check_positive("substrate height h", self.h)
        if self.tan_delta is not None and not (self.tan_delta >= 0):
            raise ValueError(f"tan_delta must be >= 0, got {self.tan_delta!r}")


@dataclass(frozen=True)
class PatchGeometry:
    """Physical patch plus its fringing-corrected effective length.

    ``L_eff`` must equal ``L + 2*delta_L``; use :meth:`from_length` to
    have it filled in.
    """

    L: float
    W: float
    t: float
    delta_L: float
    L_eff: float

    def __post_init__(self):
        for name in ("L", "W", "delta_L", "L_eff"):
            _check_positive(name, getattr(self, name))
        if not (math.isfinite(self.t) and self.t >= 0):
            raise ValueError(f"conductor thickness t must be >= 0, got {self.t!r}")
        expected = self.L + 2.0 * self.delta_L
        if abs(self.L_eff - expected) > 1e-12 * expected:
            raise ValueError(
                f"L_eff={self.L_eff!r} inconsistent with L + 2*delta_L = {expected!r}"
            )

    @classmethod
    def from_length(cls, L: float, W: float, delta_L: float, t: float = 0.0) -> "PatchGeometry":
        return cls(L=L, W=W, t=t, delta_L=delta_L, L_eff=L + 2.0 * delta_L)


@dataclass(frozen=True)
class OperatingPoint:
    f0: float
    lambda0: float
    k0: float


def make_operating_point(f0: float) -> OperatingPoint:
    _check_positive("frequency f0", f0)
    lambda0 = C0 / f0
    return OperatingPoint(f0=f0, lambda0=lambda0, k0=2.0 * math.pi / lambda0)


@dataclass(frozen=True)
class FieldPoint:
    r: float
    theta: float
    phi: float

    def __post_init__(self):
        _check_positive("distance r", self.r)
        if not (0.0 <= self.theta <= math.pi):
            raise ValueError(f"theta must lie in [0, pi], got {self.theta!r}")
        if not (0.0 <= self.phi < 2.0 * math.pi):
            raise ValueError(f"phi must lie in [0, 2pi), got {self.phi!r}")


@dataclass(frozen=True)
class Excitation:
    E0: float
    V0: float
    eta: float = ETA0

    def __post_init__(self):
        _check_positive("intrinsic impedance eta", self.eta)

    @classmethod
    def for_substrate(cls, E0: float, substrate: Substrate, eta: float = ETA0) -> "Excitation":
        # slot voltage across the substrate height
        return cls(E0=E0, V0=substrate.h * E0, eta=eta)


@dataclass(frozen=True)
class ModeIndex:
    m: int = 1
    n: int = 0

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("mode indices must be non-negative")
        if self.m == 0 and self.n == 0:
            raise ValueError("TM00 is not a radiating cavity mode")


TM10 = ModeIndex(1, 0)
TM01 = ModeIndex(0, 1)

__all__ = [
    "C0",
    "EPS0",
    "ETA0",
    "MU0",
    "Excitation",
    "FieldPoint",
    "ModeIndex",
    "OperatingPoint",
    "PatchGeometry",
    "Substrate",
    "TM01",
    "TM10",
    "make_operating_point",
    "simpson_weights",
    "sinc",
]
