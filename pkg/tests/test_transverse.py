import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from imagestate.special import gauss_hermite
from imagestate.transverse import (
    C_AU,
    LandauState,
    cyclotron_frequency,
    eval_chi,
    guiding_center,
    oscillator_energy,
    transverse_energy,
)


def test_cyclotron_frequency():
    assert cyclotron_frequency(0.0) == 0.0
    assert cyclotron_frequency(137.035999) == pytest.approx(1.0, rel=1e-9)
    assert cyclotron_frequency(1.0) == pytest.approx(7.2974e-3, rel=1e-4)
    with pytest.raises(ValueError):
        cyclotron_frequency(-1.0)


def test_chi_examples():
    assert eval_chi(LandauState(0, 0.5, 0.0, C_AU), 0.0) == pytest.approx(math.pi ** -0.25, rel=1e-14)
    assert eval_chi(LandauState(1, 0.5, 0.0, 3.0), 0.0) == 0.0
    # guiding centre at y0 = -c p_x / H = -1
    assert eval_chi(LandauState(0, 0.5, 1.0, C_AU), -1.0) == pytest.approx(math.pi ** -0.25, rel=1e-14)


def test_chi_needs_field():
    with pytest.raises(ValueError):
        eval_chi(LandauState(0, 0.5, 0.0, 0.0), 0.0)


def test_state_validation():
    with pytest.raises(ValueError):
        LandauState(-1)
    with pytest.raises(ValueError):
        LandauState(0, sigma=1.0)
    with pytest.raises(ValueError):
        LandauState(0, H_field=-2.0)


@pytest.mark.parametrize("H", [0.5, C_AU, 400.0])
def test_orthonormality(H):
    xs, ws = gauss_hermite(60)
    w = H / C_AU
    y = xs / math.sqrt(w)
    for m in range(9):
        for n in range(m, 9):
            ov = math.fsum(ws * eval_chi(LandauState(m, 0.5, 0.0, H), y)
                           * eval_chi(LandauState(n, 0.5, 0.0, H), y)) / math.sqrt(w)
            tol = 1e-10 if m == n else 1e-8
            assert abs(ov - (m == n)) < tol


def test_wide_window_normalization_independent_of_hermite_rule():
    st = LandauState(4, 0.5, 0.0, C_AU)
    y = np.linspace(-15, 15, 30001)
    assert np.trapezoid(eval_chi(st, y) ** 2, y) == pytest.approx(1.0, abs=1e-10)


def test_translation_covariance():
    H = 2.0 * C_AU
    y = np.linspace(-6, 6, 121)
    base = eval_chi(LandauState(2, 0.5, 0.0, H), y)
    for dp in (0.5, -1.25):
        st = LandauState(2, 0.5, dp, H)
        shift = -C_AU * dp / H
        assert guiding_center(st) == pytest.approx(shift)
        assert np.allclose(eval_chi(st, y + shift), base, atol=1e-14)
        assert transverse_energy(st) + 0.5 * dp**2 == pytest.approx(transverse_energy(LandauState(2, 0.5, 0.0, H)),
                                                                    rel=1e-14)


def test_oscillator_energy():
    assert oscillator_energy(0, 1.0) == 0.5
    assert oscillator_energy(3, 0.01) == pytest.approx(0.035)
    for m in range(20):
        assert oscillator_energy(m + 1, 0.37) - oscillator_energy(m, 0.37) == pytest.approx(0.37, rel=1e-14)


def test_transverse_energy_examples():
    assert transverse_energy(LandauState(0, 0.5, 0.0, 5.0)) == 0.0
    assert transverse_energy(LandauState(1, -0.5, 0.0, 0.01 * C_AU)) == pytest.approx(0.02, rel=1e-14)
    assert transverse_energy(LandauState(0, 0.5, 1.0, C_AU)) == -0.5


@given(st.integers(min_value=0, max_value=40), st.sampled_from([-0.5, 0.5]),
       st.one_of(st.just(0.0), st.floats(min_value=1e-250, max_value=1e4)), st.integers(min_value=2, max_value=7))
def test_zeeman_linear_in_H(m, sigma, H, a):
    e1 = transverse_energy(LandauState(m, sigma, 0.0, H))
    ea = transverse_energy(LandauState(m, sigma, 0.0, a * H))
    assert ea == pytest.approx(a * e1, rel=1e-15, abs=0)
