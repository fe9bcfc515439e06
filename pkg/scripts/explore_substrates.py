"""Rank substrates for a 10 GHz patch and refine the height of the best one."""

import argparse
import json
from pathlib import Path

from patchlab.explorer import SearchSpace, Weights, grid_search, refine_h

DEFAULT_SPACE = Path(__file__).with_name("data") / "space_fr4_family.json"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("space", nargs="?", default=str(DEFAULT_SPACE))
    ap.add_argument("--top", type=int, default=10)
    args = ap.parse_args()
    doc = json.loads(Path(args.space).read_text())
    space = SearchSpace(
        eps_r_choices=doc["eps_r_choices"],
        h_range=tuple(doc["h_range_m"]),
        f0_target=doc["f0_hz"],
        max_footprint=doc.get("max_footprint_m2"),
    )
    weights = Weights(**doc.get("weights", {}))
    ranked = grid_search(space, weights, n_h=doc.get("n_h", 11))
    print(f"{'rank':>4} {'eps_r':>6} {'h (mm)':>8} {'B':>8} {'ground (mm)':>12} {'objective':>11}")
    for i, c in enumerate(ranked[: args.top], 1):
        print(
            f"{i:>4} {c.substrate.eps_r:>6.2f} {c.substrate.h * 1e3:>8.3f} "
            f"{c.design.fractional_bandwidth:>8.4f} {c.design.ground_side * 1e3:>12.2f} {c.objective:>11.5f}"
        )
    best = refine_h(space, weights)
    print(f"refined: eps_r={best.substrate.eps_r:g}, h={best.substrate.h * 1e3:.4f} mm, objective={best.objective:.6f}")


if __name__ == "__main__":
    main()
