import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from patchlab.core import (
    C0,
    ETA0,
    Excitation,
    FieldPoint,
    ModeIndex,
    PatchGeometry,
    Substrate,
    make_operating_point,
    simpson_weights,
    sinc,
)


def test_sinc_examples():
    assert sinc(0.0) == 1.0
    assert abs(sinc(math.pi)) < 1e-15
    assert sinc(0.16755) == pytest.approx(math.sin(0.16755) / 0.16755, rel=1e-15)
    assert sinc(0.16755) == pytest.approx(0.99532, abs=1e-4)


def test_sinc_series_branch_is_continuous():
    x = 1e-8
    assert sinc(x * 0.999) == pytest.approx(math.sin(x) / x, rel=1e-15)
    assert sinc(np.array([0.0, 1e-9, 2.0]))[2] == pytest.approx(math.sin(2.0) / 2.0)


def test_sinc_is_even_on_a_million_points():
    x = np.random.default_rng(1).uniform(-1e3, 1e3, 1_000_000)
    assert np.array_equal(sinc(x), sinc(-x))


def test_operating_point_examples():
    op = make_operating_point(10e9)
    assert op.lambda0 * 1e3 == pytest.approx(29.979, abs=1e-3)
    assert op.k0 == pytest.approx(209.585, abs=0.05)
    assert make_operating_point(1.0).lambda0 == C0


@pytest.mark.parametrize("f0", [0.0, -1.0, float("nan")])
def test_operating_point_rejects_bad_frequency(f0):
    with pytest.raises(ValueError):
        make_operating_point(f0)


@given(st.floats(min_value=1.0, max_value=1e15))
def test_k0_lambda0_product(f0):
    op = make_operating_point(f0)
    assert op.k0 * op.lambda0 == pytest.approx(2 * math.pi, rel=1e-12)


def test_eta0_is_free_space_impedance():
    assert ETA0 == pytest.approx(376.730313, rel=1e-8)


def test_substrate_invariants():
    Substrate(1.0, 1e-3)
    with pytest.raises(ValueError):
        Substrate(0.9, 1e-3)
    with pytest.raises(ValueError):
        Substrate(4.4, 0.0)
    with pytest.raises(ValueError):
        Substrate(4.4, 1e-3, tan_delta=-0.01)


def test_patch_geometry_leff_consistency():
    g = PatchGeometry.from_length(6e-3, 8.6e-3, 0.7e-3)
    assert g.L_eff == 6e-3 + 1.4e-3
    PatchGeometry(L=6e-3, W=8.6e-3, t=0.0, delta_L=0.7e-3, L_eff=7.4e-3 * (1 + 5e-13))
    with pytest.raises(ValueError):
        PatchGeometry(L=6e-3, W=8.6e-3, t=0.0, delta_L=0.7e-3, L_eff=7.4e-3 * (1 + 1e-11))
    with pytest.raises(ValueError):
        PatchGeometry.from_length(6e-3, 8.6e-3, 0.7e-3, t=-1.0)


@given(
    st.floats(1e-4, 1.0),
    st.floats(1e-4, 1.0),
    st.floats(1e-6, 1e-2),
    st.floats(1e-11, 1e-6),
)
def test_patch_geometry_rejects_leff_drift(L, W, dL, drift):
    good = L + 2 * dL
    with pytest.raises(ValueError):
        PatchGeometry(L=L, W=W, t=0.0, delta_L=dL, L_eff=good * (1 + drift))


def test_field_point_ranges():
    FieldPoint(1.0, 0.0, 0.0)
    FieldPoint(1.0, math.pi, 2 * math.pi - 1e-12)
    for bad in [(0.0, 0.1, 0.1), (1.0, -0.1, 0.0), (1.0, 0.1, 2 * math.pi)]:
        with pytest.raises(ValueError):
            FieldPoint(*bad)


def test_excitation_slot_voltage():
    exc = Excitation.for_substrate(2.5, Substrate(4.4, 1.6e-3))
    assert exc.V0 == pytest.approx(1.6e-3 * 2.5)
    assert exc.eta == ETA0


def test_mode_index():
    ModeIndex(1, 0)
    with pytest.raises(ValueError):
        ModeIndex(0, 0)


def test_simpson_weights_match_scipy():
    scipy_integrate = pytest.importorskip("scipy.integrate")
    x = np.linspace(0.0, 2.0, 41)
    y = np.exp(x) * np.cos(3 * x)
    ours = simpson_weights(40, x[1] - x[0]) @ y
    assert ours == pytest.approx(scipy_integrate.simpson(y, x=x), rel=1e-12)


def test_simpson_needs_even_intervals():
    with pytest.raises(ValueError):
        simpson_weights(3, 0.1)
