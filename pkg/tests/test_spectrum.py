import warnings

import numpy as np
import pytest
from hypothesis import given, strategies as st

from imagestate.longitudinal import ImageState, PerturbationWarning, longitudinal_energy, unperturbed_energy
from imagestate.spectrum import (
    DEFAULT_LINEWIDTH,
    FieldConfig,
    SensingSpec,
    derived_shift_constant,
    energy_breakdown,
    infer_field,
    min_detectable_field,
    mode_ratio,
    rydberg_shift_wavenumber,
    stark_scan,
    total_energy,
    transition_shift,
)
from imagestate.transverse import C_AU


class TestTotalEnergy:
    def test_examples(self, quiet):
        assert total_energy(0, 0.5, 1, FieldConfig()) == -0.5
        assert total_energy(0, 0.5, 20, FieldConfig(F=1e-6)) == pytest.approx(-0.00065, rel=1e-12)
        assert total_energy(1, -0.5, 2, FieldConfig(H_field=0.01 * C_AU)) == pytest.approx(-0.105, rel=1e-14)

    @pytest.mark.parametrize("p_x", [0.0, 1.0, 5.0, -2.5])
    def test_breakdown_sums_to_total(self, p_x):
        f = FieldConfig(F=1e-9, H_field=3.0)
        b = energy_breakdown(2, -0.5, 7, f, p_x)
        assert b.e_total == total_energy(2, -0.5, 7, f)
        assert b.e_transverse + b.e_longitudinal + p_x**2 / 2 == pytest.approx(b.e_total, rel=1e-14, abs=1e-15)

    def test_fields_validated(self):
        with pytest.raises(ValueError):
            FieldConfig(F=-1.0)
        with pytest.raises(ValueError):
            FieldConfig(H_field=np.inf)

    def test_from_lab(self):
        f = FieldConfig.from_lab(5.14220674763e9, 0.0)
        assert f.F == pytest.approx(1.0, rel=1e-14)


class TestTransitionShift:
    def test_examples(self):
        assert transition_shift(5, 5, 1e-3) == 0.0
        assert transition_shift(21, 20, 1e-6) == pytest.approx(6.15e-5, rel=1e-13)

    @given(st.integers(1, 200), st.integers(1, 200), st.floats(0, 1e-3))
    def test_antisymmetric(self, a, b, F):
        assert transition_shift(a, b, F) == -transition_shift(b, a, F)

    @given(st.integers(1, 60), st.integers(1, 60), st.floats(0, 1e-6))
    def test_matches_longitudinal_difference(self, a, b, F):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", PerturbationWarning)
            diff = (longitudinal_energy(ImageState(a), F) - longitudinal_energy(ImageState(b), F)
                    - (unperturbed_energy(ImageState(a)) - unperturbed_energy(ImageState(b))))
        assert diff == pytest.approx(transition_shift(a, b, F), rel=1e-9, abs=1e-17)


class TestSensing:
    def test_paper_constant_examples(self):
        assert rydberg_shift_wavenumber(50, 1, 1e-3) == pytest.approx(3.21e-6, rel=1e-12)
        assert rydberg_shift_wavenumber(50, 1, 0.0) == 0.0

    def test_strict_mode_example(self):
        strict = rydberg_shift_wavenumber(50, 1, 1e-3, "strict-eq20")
        # 3/2 (50^2 - 49^2) F_au in cm^-1
        expected = 1.5 * 99 * 1e-3 / 5.14220674763e9 * 219474.6313632
        assert strict == pytest.approx(expected, rel=1e-12)
        assert strict == pytest.approx(6.4e-6, rel=0.02)

    def test_derived_constant_near_printed(self):
        assert derived_shift_constant() == pytest.approx(6.402153e-5, rel=1e-6)
        assert abs(derived_shift_constant() / 6.42e-5 - 1) < 0.005

    def test_min_field_examples(self):
        assert min_detectable_field(SensingSpec(50, 1)) == pytest.approx(3e-6 / (6.42e-5 * 50), rel=1e-12)
        assert 0.9e-3 <= min_detectable_field(SensingSpec(50, 1)) <= 1.1e-3
        assert min_detectable_field(SensingSpec(90, 1)) == pytest.approx(5.19e-4, rel=1e-3)
        assert min_detectable_field(SensingSpec(60, 2)) == pytest.approx(min_detectable_field(SensingSpec(60, 1)) / 2)

    def test_default_linewidth(self):
        assert SensingSpec(50).delta_E == DEFAULT_LINEWIDTH == 3e-6

    def test_mode_ratio(self):
        assert mode_ratio() == pytest.approx(2.0, rel=0.01)
        for nu, k in [(50, 1), (90, 3), (400, 2)]:
            assert mode_ratio(nu, k) == pytest.approx(mode_ratio() * (1 - k / (2 * nu)), rel=1e-12)
            for F in (1e-4, 1e-2, 3.0):
                r = rydberg_shift_wavenumber(nu, k, F, "strict") / rydberg_shift_wavenumber(nu, k, F, "paper")
                assert r == pytest.approx(mode_ratio(nu, k), rel=1e-13)

    def test_infer_field(self):
        assert infer_field(3.21e-6, 50, 1) == pytest.approx(1e-3, rel=1e-12)
        assert infer_field(0.0, 50, 1) == 0.0
        with pytest.raises(ValueError):
            infer_field(-1.0, 50, 1)

    def test_k_checks(self):
        with pytest.raises(ValueError):
            rydberg_shift_wavenumber(5, 5, 1.0)
        with pytest.raises(ValueError):
            SensingSpec(5, 7)
        with pytest.warns(PerturbationWarning):
            rydberg_shift_wavenumber(10, 3, 1.0)

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            SensingSpec(50, 1, mode="fancy")


class TestStarkScan:
    def test_rows_and_order(self):
        rows = stark_scan([23, 20, 22, 21], [2e-8, 0.0, 1e-8])
        assert [r.nu for r in rows] == [20] * 3 + [21] * 3 + [22] * 3 + [23] * 3
        assert [r.F_au for r in rows[:3]] == [0.0, 1e-8, 2e-8]
        assert rows[1].dE_au == pytest.approx(6e-6)

    def test_example_slope(self):
        (row,) = stark_scan([20], [1e-6])
        assert row.dE_au == pytest.approx(6e-4, rel=1e-14)

    def test_zero_field(self):
        assert all(r.dE_au == 0 for r in stark_scan(range(1, 30), [0.0]))

    def test_curves_ordered_and_gaps_grow_linearly(self):
        Fs = np.linspace(0, 1e-7, 6)
        rows = stark_scan([20, 21, 22, 23], Fs)
        table = np.array([r.dE_au for r in rows]).reshape(4, -1)
        assert np.all(np.diff(table[:, 1:], axis=0) > 0)
        gaps = np.diff(table, axis=0)
        # each gap is proportional to F
        assert np.allclose(gaps[:, 1:] / Fs[1:], gaps[:, -1:] / Fs[-1], rtol=1e-12)

    def test_negative_field_rejected(self):
        with pytest.raises(ValueError):
            stark_scan([20], [-1e-8])
