"""Principal cuts, directivity convergence and polar SVGs for the 10 GHz patch.

Writes e_plane.svg and h_plane.svg into the output directory (default: ./out).
"""

import argparse
import math
from pathlib import Path

from patchlab.core import Substrate, make_operating_point
from patchlab.design import synthesize
from patchlab.io import render_polar_svg
from patchlab.radiation import dbi, directivity, principal_cut


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="out")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    fr4 = Substrate(4.4, 1.6e-3)
    d = synthesize(10e9, fr4)
    k0 = make_operating_point(d.f0).k0

    for deg in (1.0, 0.5, 0.25, 0.1):
        D = directivity(d.geometry, fr4.h, k0, math.radians(deg))
        print(f"grid {deg:>5} deg: D = {D:.6f} ({dbi(D):.4f} dBi)")

    step = math.radians(1.0)
    for plane in ("E", "H"):
        cut = principal_cut(plane, d.geometry, fr4.h, k0, step)
        at_3db = [s for s in cut if s.value_db >= -3.0]
        span = "theta" if plane == "E" else "phi"
        # H-plane samples wrap through 360 deg; report them as signed angles
        angles = [(math.degrees(getattr(s, span)) + 180.0) % 360.0 - 180.0 for s in at_3db]
        print(f"{plane}-plane: {len(cut)} samples, {len(at_3db)} within 3 dB of peak ({min(angles):.0f}..{max(angles):.0f} deg)")
        path = out / f"{plane.lower()}_plane.svg"
        path.write_text(render_polar_svg(cut, title=f"{plane}-plane, 10 GHz FR-4 patch"), encoding="utf-8")
        print(f"  wrote {path}")


if __name__ == "__main__":
    main()
