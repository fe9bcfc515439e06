"""Small design-space search over laminate permittivity and substrate height.

Objective (lower is better)::

    w_bw * (-B) + w_area * ground_side**2 / REF_AREA

εr is categorical, h continuous. Grid enumeration ranks candidates; a
golden-section line search refines h for the best εr.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import Substrate
from .design import DesignResult, synthesize

# benchmark ground plane, 20 mm x 20 mm
REF_AREA = 400e-6

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class Weights:
    bandwidth: float = 1.0
    area: float = 0.0

    def __post_init__(self):
        if self.bandwidth < 0 or self.area < 0:
            raise ValueError("weights must be non-negative")
        if self.bandwidth == 0 and self.area == 0:
            raise ValueError("at least one weight must be positive")


@dataclass(frozen=True)
class SearchSpace:
    eps_r_choices: tuple[float, ...]
    h_range: tuple[float, float]
    f0_target: float
    max_footprint: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "eps_r_choices", tuple(float(e) for e in self.eps_r_choices))
        object.__setattr__(self, "h_range", tuple(float(v) for v in self.h_range))
        if not self.eps_r_choices:
            raise ValueError("eps_r_choices must not be empty")
        lo, hi = self.h_range
        if not (0 < lo <= hi):
            raise ValueError(f"h_range must be positive and ordered, got {self.h_range!r}")
        if not self.f0_target > 0:
            raise ValueError("f0_target must be positive")


@dataclass(frozen=True)
class Candidate:
    substrate: Substrate
    design: DesignResult
    objective: float
    metrics: dict = field(default_factory=dict, compare=False)


def candidate_metrics(design: DesignResult) -> dict:
    g = design.geometry
    return {
        "fractional_bandwidth": design.fractional_bandwidth,
        "footprint": design.ground_side**2,
        "w_over_l": g.W / g.L,
    }


def evaluate(substrate: Substrate, f0_target: float, weights: Weights) -> Candidate:
    design = synthesize(f0_target, substrate)
    metrics = candidate_metrics(design)
    objective = -weights.bandwidth * metrics["fractional_bandwidth"] + weights.area * metrics["footprint"] / REF_AREA
    return Candidate(substrate=substrate, design=design, objective=objective, metrics=metrics)


def _rank_key(c: Candidate):
    return (c.objective, c.substrate.h, c.substrate.eps_r)


def grid_search(space: SearchSpace, weights: Weights, n_h: int = 11) -> list[Candidate]:
    """Evaluate every (εr, h) on a uniform h grid and rank ascending by objective.

    Ties go to the smaller h, then the smaller εr. Candidates whose
    footprint exceeds ``space.max_footprint`` are dropped.
    """
    if n_h < 2:
        raise ValueError(f"n_h must be >= 2, got {n_h}")
    lo, hi = space.h_range
    hs = [lo] if lo == hi else np.linspace(lo, hi, n_h).tolist()
    out = []
    for er in space.eps_r_choices:
        for h in hs:
            c = evaluate(Substrate(er, h), space.f0_target, weights)
            if space.max_footprint is not None and c.metrics["footprint"] > space.max_footprint:
                continue
            out.append(c)
    if not out:
        raise ValueError("search space is empty after applying the footprint limit")
    return sorted(out, key=_rank_key)


def golden_section(f, a: float, b: float, tol: float) -> float:
    """Minimize a unimodal f on [a, b]; return the midpoint of the final bracket."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    a, b = min(a, b), max(a, b)
    if b - a < tol:
        return 0.5 * (a + b)
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a >= tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def refine_h(
    space: SearchSpace,
    weights: Weights,
    bracket: tuple[float, float] | None = None,
    tol: float = 1e-6,
    eps_r: float | None = None,
) -> Candidate:
    """Golden-section refinement of h for a fixed εr.

    ``eps_r`` defaults to the permittivity of the best grid candidate.
    """
    lo, hi = bracket if bracket is not None else space.h_range
    if not (lo <= hi):
        raise ValueError(f"invalid bracket {bracket!r}")
    rlo, rhi = space.h_range
    if lo < rlo or hi > rhi:
        raise ValueError(f"bracket {bracket!r} outside h_range {space.h_range!r}")
    if eps_r is None:
        eps_r = grid_search(space, weights, n_h=5)[0].substrate.eps_r

    def obj(h):
        return evaluate(Substrate(eps_r, h), space.f0_target, weights).objective

    h_best = golden_section(obj, lo, hi, tol)
    return evaluate(Substrate(eps_r, h_best), space.f0_target, weights)
