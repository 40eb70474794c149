"""Electron bound in the image potential of a metal surface, in static
perpendicular electric and magnetic fields.

Closed-form spectra, wavefunctions, Stark/Zeeman shifts and sensing
estimates, plus a finite-difference oracle that checks them.
"""

from .longitudinal import (
    ImageState,
    PerturbationWarning,
    PhysicalLevel,
    dipole_closed,
    dipole_series,
    eval_wavefunction,
    longitudinal_energy,
    physical_energy,
    stark_shift,
    unperturbed_energy,
    validity_bound,
)
from .spectrum import (
    EnergyBreakdown,
    FieldConfig,
    SensingSpec,
    energy_breakdown,
    min_detectable_field,
    rydberg_shift_wavenumber,
    stark_scan,
    total_energy,
    transition_shift,
)
from .transverse import LandauState, cyclotron_frequency, eval_chi, transverse_energy
from .units import CODATA2018, UnitSystem

__version__ = "0.1.0"
