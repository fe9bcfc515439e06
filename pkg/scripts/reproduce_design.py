"""Synthesize the 10 GHz FR-4 patch and compare it with the tabulated geometry."""

from patchlab.core import Substrate
from patchlab.design import quarter_wave_match, resonant_frequency, synthesize
from patchlab.report import PAPER_TABLE1, bandwidth_discrepancy_note, paper_proposed_design

F0 = 10e9
fr4 = Substrate(4.4, 1.6e-3)


def main():
    d = synthesize(F0, fr4)
    g = d.geometry
    tab = paper_proposed_design()
    qw = quarter_wave_match(50.0, 50.0, F0, d.eps_eff)
    rows = [
        ("W (mm)", g.W * 1e3, PAPER_TABLE1["patch_width"] * 1e3),
        ("L (mm)", g.L * 1e3, PAPER_TABLE1["patch_length"] * 1e3),
        ("ground side (mm)", d.ground_side * 1e3, PAPER_TABLE1["ground_plane_width"] * 1e3),
        ("quarter-wave length (mm)", qw.length * 1e3, PAPER_TABLE1["quarter_wave_length"] * 1e3),
        ("TM10 resonance (GHz)", resonant_frequency(g, fr4) / 1e9, resonant_frequency(tab.geometry, fr4) / 1e9),
    ]
    print(f"{'quantity':<26}{'closed form':>14}{'tabulated':>12}")
    for name, a, b in rows:
        print(f"{name:<26}{a:>14.4f}{b:>12.4f}")
    print(f"eps_eff = {d.eps_eff:.5f}, delta_L = {g.delta_L * 1e3:.4f} mm, Z_T = {qw.Z_T:.2f} ohm")
    print(bandwidth_discrepancy_note(d))


if __name__ == "__main__":
    main()
