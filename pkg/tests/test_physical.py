import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hardwall.physical import (
    ATOMIC_MASS_UNIT,
    CONSTANTS,
    ELECTRON_VOLT,
    HBAR,
    PRESETS,
    AdsorptionSystem,
    dimensionless,
    preset,
    wall_distance_from_q0,
    zero_point_energy,
)
from hardwall.spectrum import WellConfig, asymptotic_epsilon0


def test_constants_exposed():
    assert CONSTANTS["hbar_J_s"] == HBAR
    assert ELECTRON_VOLT == 1.602176634e-19


class TestSystem:
    def test_lab_units(self):
        s = AdsorptionSystem.from_lab_units(1.0, 15.0, 0.5)
        assert s.mass == ATOMIC_MASS_UNIT
        assert s.wall_distance == pytest.approx(0.5e-10, rel=1e-15)

    @pytest.mark.parametrize("args", [(0.0, 1.0, 1.0), (1.0, -1.0, 1.0), (1.0, 1.0, -1e-10)])
    def test_rejects(self, args):
        with pytest.raises(ValueError):
            AdsorptionSystem(*args)

    def test_unknown_preset(self):
        with pytest.raises(KeyError):
            preset("He-Cu111")


class TestDimensionless:
    def test_length_and_frequency(self):
        s = AdsorptionSystem(2.0, 8.0, 1.0)
        form = dimensionless(s)
        assert form.omega == pytest.approx(2.0, rel=1e-15)
        assert form.length_unit_L == pytest.approx(math.sqrt(HBAR) / 2, rel=1e-15)
        assert form.energy_unit == pytest.approx(2 * HBAR, rel=1e-15)

    def test_round_trip(self):
        s = preset("H-Pd100")
        assert wall_distance_from_q0(dimensionless(s)) == pytest.approx(s.wall_distance, rel=1e-15)

    def test_hydrogen_q0(self):
        assert dimensionless(preset("H-Pd100")).q0 == pytest.approx(1.55, abs=0.02)

    def test_deuterium_q0(self):
        assert dimensionless(preset("D-Pd100")).q0 == pytest.approx(2.0, abs=0.1)

    @given(
        st.floats(0.5, 50.0), st.floats(1.0, 100.0), st.floats(0.05, 2.0), st.floats(1.01, 3.0)
    )
    def test_q0_increases_with_each_parameter(self, m, k, d, factor):
        base = dimensionless(AdsorptionSystem.from_lab_units(m, k, d)).q0
        assert dimensionless(AdsorptionSystem.from_lab_units(m * factor, k, d)).q0 > base
        assert dimensionless(AdsorptionSystem.from_lab_units(m, k * factor, d)).q0 > base
        assert dimensionless(AdsorptionSystem.from_lab_units(m, k, d * factor)).q0 > base


class TestZeroPoint:
    def test_hydrogen(self):
        zpe = zero_point_energy(preset("H-Pd100"))
        assert 0.565 <= zpe.epsilon0 <= 0.575
        assert round(zpe.epsilon0, 2) == 0.57

    def test_deuterium(self):
        assert 0.51 <= zero_point_energy(preset("D-Pd100")).epsilon0 <= 0.53

    def test_isotope_effect(self):
        assert zero_point_energy(PRESETS["D-Pd100"]).epsilon0 < zero_point_energy(PRESETS["H-Pd100"]).epsilon0

    def test_units(self):
        s = preset("H-Pd100")
        zpe = zero_point_energy(s)
        assert zpe.E0_joule == pytest.approx(zpe.epsilon0 * dimensionless(s).energy_unit, rel=1e-15)
        assert zpe.E0_meV == pytest.approx(1e3 * zpe.E0_joule / ELECTRON_VOLT, rel=1e-15)

    def test_far_wall_uses_oracle(self):
        s = AdsorptionSystem.from_lab_units(1.00784, 15.0, 1.5)
        form = dimensionless(s)
        assert form.q0 > 4
        zpe = zero_point_energy(s)
        assert zpe.epsilon0 == pytest.approx(asymptotic_epsilon0(WellConfig(form.q0)), abs=1e-6)
