"""Resonator surrogate bands for the closed-form bandwidth and a few mismatches."""

from patchlab.core import Substrate
from patchlab.design import fractional_bandwidth
from patchlab.sweep import Criterion, EmptyBandError, calibrate_model, extract_band

F0 = 10e9


def main():
    B = fractional_bandwidth(Substrate(4.4, 1.6e-3), F0)
    print(f"closed-form B = {B:.5f}")
    for r_res in (20.0, 35.0, 50.0, 75.0, 90.0, 150.0):
        m = calibrate_model(F0, B, r_res=r_res)
        cells = []
        for crit in Criterion:
            try:
                band = extract_band(m, crit)
                cells.append(f"{crit.value}: {band.f_low / 1e9:.4f}-{band.f_high / 1e9:.4f} GHz ({band.fractional:.4f})")
            except EmptyBandError:
                cells.append(f"{crit.value}: no band")
        print(f"r_res={r_res:>5.0f}  " + "  ".join(cells))


if __name__ == "__main__":
    main()
