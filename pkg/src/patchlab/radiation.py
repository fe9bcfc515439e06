"""Cavity-model far field of a rectangular patch.

The two radiating edges are modelled as slots of width W and height h
(the substrate height), combined through a two-element array factor.
Angles follow the printed convention: the slot separation enters through
cos(theta), so the pattern maximum sits at theta = 90 deg.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import EPS0, Excitation, FieldPoint, PatchGeometry, simpson_weights, sinc

DB_FLOOR = -60.0
FAR_FIELD_WAVELENGTHS = 100.0
DEFAULT_QUAD_NODES = 201


@dataclass(frozen=True)
class FieldSample:
    e_theta: complex
    e_phi: complex
    e_r: complex = 0j


@dataclass(frozen=True)
class PatternSample:
    theta: float
    phi: float
    value: float
    value_db: float


def to_db(value):
    """20*log10 of a field magnitude, floored at ``DB_FLOOR``."""
    v = np.asarray(value, dtype=float)
    with np.errstate(divide="ignore"):
        out = np.maximum(20.0 * np.log10(v), DB_FLOOR)
    return float(out) if out.ndim == 0 else out


def _require_far_field(point: FieldPoint, k0: float) -> None:
    lambda0 = 2.0 * math.pi / k0
    if point.r < FAR_FIELD_WAVELENGTHS * lambda0:
        raise ValueError(
            f"r={point.r:.4g} m is not far field; need r >= {FAR_FIELD_WAVELENGTHS:g} lambda0 "
            f"= {FAR_FIELD_WAVELENGTHS * lambda0:.4g} m"
        )


def pattern_args(theta, phi, geometry: PatchGeometry, h: float, k0: float):
    """Return the (X, Y, Z) phase arguments of the slot and array terms."""
    st = np.sin(theta)
    X = 0.5 * k0 * h * st * np.cos(phi)
    Y = 0.5 * k0 * geometry.W * st * np.sin(phi)
    Z = 0.5 * k0 * geometry.L_eff * np.cos(theta)
    return X, Y, Z


def vector_potential(
    point: FieldPoint,
    geometry: PatchGeometry,
    h: float,
    excitation: Excitation,
    k0: float,
    method: str = "closed",
    nodes: int = DEFAULT_QUAD_NODES,
    eps: float = EPS0,
) -> complex:
    """y-component of the electric vector potential of one radiating slot.

    ``method="closed"`` uses the far-field sinc product; ``"quadrature"``
    integrates the magnetic current over the h x W aperture with composite
    Simpson on ``nodes x nodes`` points, keeping the exact path length in
    both phase and amplitude.
    """
    _require_far_field(point, k0)
    if method == "closed":
        X, Y, _ = pattern_args(point.theta, point.phi, geometry, h, k0)
        amp = -eps * excitation.E0 * geometry.W * h / (2.0 * math.pi * point.r)
        return amp * cmath.exp(-1j * k0 * point.r) * sinc(X) * sinc(Y)
    if method == "quadrature":
        return _vector_potential_quadrature(point, geometry.W, h, excitation.E0, k0, nodes, eps)
    raise ValueError(f"unknown method {method!r}; expected 'closed' or 'quadrature'")


def _vector_potential_quadrature(point, W, h, E0, k0, nodes, eps):
    if nodes < 3 or nodes % 2 == 0:
        raise ValueError(f"quadrature needs an odd node count >= 3, got {nodes}")
    xs = np.linspace(-h / 2.0, h / 2.0, nodes)
    ys = np.linspace(-W / 2.0, W / 2.0, nodes)
    wx = simpson_weights(nodes - 1, h / (nodes - 1))
    wy = simpson_weights(nodes - 1, W / (nodes - 1))
    st = math.sin(point.theta)
    # path-length correction relative to r; kept separate so the large
    # k0*r phase is not mixed with the sub-wavelength offsets
    d = xs[:, None] * st * math.cos(point.phi) + ys[None, :] * st * math.sin(point.phi)
    r_pq = point.r - d
    integrand = np.exp(1j * k0 * d) / r_pq
    total = wx @ integrand @ wy
    M_y = -2.0 * E0
    return eps / (4.0 * math.pi) * M_y * cmath.exp(-1j * k0 * point.r) * total


def single_slot_field(
    point: FieldPoint, geometry: PatchGeometry, h: float, excitation: Excitation, k0: float
) -> FieldSample:
    _require_far_field(point, k0)
    X, Y, _ = pattern_args(point.theta, point.phi, geometry, h, k0)
    pref = k0 * geometry.W * excitation.V0 / (2.0 * math.pi * point.r) * cmath.exp(-1j * k0 * point.r)
    s = sinc(X) * sinc(Y)
    e_phi = 1j * pref * math.cos(point.theta) * math.sin(point.phi) * s
    e_theta = -1j * pref * math.cos(point.phi) * s
    return FieldSample(e_theta=e_theta, e_phi=e_phi)


def array_factor(theta, L_eff: float, k0: float):
    """Two in-phase slots separated by L_eff."""
    return 2.0 * np.cos(0.5 * k0 * L_eff * np.cos(theta))


def total_field(
    point: FieldPoint, geometry: PatchGeometry, h: float, excitation: Excitation, k0: float
) -> FieldSample:
    _require_far_field(point, k0)
    X, Y, Z = pattern_args(point.theta, point.phi, geometry, h, k0)
    pref = k0 * geometry.W * excitation.V0 / (math.pi * point.r) * cmath.exp(-1j * k0 * point.r)
    s = sinc(X) * sinc(Y) * math.cos(Z)
    e_phi = 1j * pref * math.cos(point.theta) * math.sin(point.phi) * s
    e_theta = -1j * pref * math.cos(point.phi) * s
    return FieldSample(e_theta=e_theta, e_phi=e_phi)


def field_pattern(theta, phi, geometry: PatchGeometry, h: float, k0: float):
    """Unnormalized pattern magnitude |f(theta, phi)|; vectorized."""
    X, Y, Z = pattern_args(theta, phi, geometry, h, k0)
    # sqrt(1 - sin^2(phi) sin^2(theta)), written cancellation-free
    pol = np.hypot(np.cos(theta), np.sin(theta) * np.cos(phi))
    out = np.abs(pol * sinc(X) * sinc(Y) * np.cos(Z))
    return float(out) if np.ndim(out) == 0 else out


def e_plane(theta, geometry: PatchGeometry, h: float, k0: float):
    """E-plane (phi = 0) pattern, signed."""
    return sinc(0.5 * k0 * h * np.sin(theta)) * np.cos(0.5 * k0 * geometry.L_eff * np.cos(theta))


def h_plane(phi, geometry: PatchGeometry, h: float, k0: float):
    """H-plane (theta = 90 deg) pattern, signed."""
    return np.cos(phi) * sinc(0.5 * k0 * h * np.cos(phi)) * sinc(0.5 * k0 * geometry.W * np.sin(phi))


def _cut_angles(start_deg: float, stop_deg: float, step: float) -> np.ndarray:
    span = math.radians(stop_deg - start_deg)
    n = span / step
    n_int = round(n)
    if abs(n - n_int) > 1e-9 * max(1.0, n):
        raise ValueError(f"step {math.degrees(step):g} deg does not divide {stop_deg - start_deg:g} deg")
    return np.radians(np.linspace(start_deg, stop_deg, n_int + 1))


def principal_cut(plane: str, geometry: PatchGeometry, h: float, k0: float, step: float) -> list[PatternSample]:
    """Sample an E- or H-plane cut, normalized to the cut's own peak.

    E-plane: theta in [0, 180] deg at phi = 0.
    H-plane: phi in [0, 90] and [270, 360] deg at theta = 90 deg.
    """
    if not step > 0:
        raise ValueError(f"step must be positive, got {step!r}")
    plane = plane.upper()
    if plane == "E":
        thetas = _cut_angles(0.0, 180.0, step)
        phis = np.zeros_like(thetas)
        raw = np.abs(e_plane(thetas, geometry, h, k0))
    elif plane == "H":
        phis = np.concatenate([_cut_angles(0.0, 90.0, step), _cut_angles(270.0, 360.0, step)])
        thetas = np.full_like(phis, math.pi / 2.0)
        raw = np.abs(h_plane(phis, geometry, h, k0))
    else:
        raise ValueError(f"plane must be 'E' or 'H', got {plane!r}")
    return _normalized_samples(thetas, phis, raw)


def pattern_grid(geometry: PatchGeometry, h: float, k0: float, step: float) -> list[PatternSample]:
    """Upper-hemisphere grid (theta 0..90, phi 0..<360), normalized to the global peak."""
    thetas = _cut_angles(0.0, 90.0, step)
    phis = _cut_angles(0.0, 360.0, step)[:-1]
    T, P = np.meshgrid(thetas, phis, indexing="ij")
    raw = field_pattern(T, P, geometry, h, k0)
    return _normalized_samples(T.ravel(), P.ravel(), raw.ravel())


def _normalized_samples(thetas, phis, raw) -> list[PatternSample]:
    peak = float(np.max(raw))
    norm = raw / peak if peak > 0 else np.zeros_like(raw)
    dbs = to_db(norm)
    return [
        PatternSample(theta=float(t), phi=float(p), value=float(v), value_db=float(d))
        for t, p, v, d in zip(thetas, phis, norm, np.atleast_1d(dbs))
    ]


def hemisphere_directivity(intensity, grid_step: float) -> float:
    """Directivity of a radiation intensity U(theta, phi) confined to theta <= 90 deg.

    ``intensity`` is called once with broadcastable (theta, phi) arrays.
    Both angles are integrated with composite Simpson; the grid step must
    be at most 1 deg and split 90 deg into an even number of intervals.
    """
    if not (0 < grid_step <= math.radians(1.0) + 1e-15):
        raise ValueError(f"grid_step must be in (0, 1 deg], got {math.degrees(grid_step):g} deg")
    n_theta = (math.pi / 2.0) / grid_step
    n = round(n_theta)
    if abs(n_theta - n) > 1e-9 * n_theta or n % 2:
        raise ValueError(
            f"degenerate grid: step {math.degrees(grid_step):g} deg must split 90 deg into an even count"
        )
    dt = (math.pi / 2.0) / n
    thetas = np.linspace(0.0, math.pi / 2.0, n + 1)
    phis = np.linspace(0.0, 2.0 * math.pi, 4 * n + 1)
    wt = simpson_weights(n, dt)
    wp = simpson_weights(4 * n, dt)
    U = np.broadcast_to(np.asarray(intensity(thetas[:, None], phis[None, :]), dtype=float), (n + 1, 4 * n + 1))
    p_rad = (wt * np.sin(thetas)) @ U @ wp
    if not p_rad > 0:
        raise ValueError("radiated power integrates to zero")
    return 4.0 * math.pi * float(U.max()) / float(p_rad)


def directivity(geometry: PatchGeometry, h: float, k0: float, grid_step: float = math.radians(0.5)) -> float:
    """Directivity of the lossless cavity-model pattern over the upper half space."""
    return hemisphere_directivity(lambda t, p: field_pattern(t, p, geometry, h, k0) ** 2, grid_step)


def dbi(d: float) -> float:
    return 10.0 * math.log10(d)
