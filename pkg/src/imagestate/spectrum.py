"""Full spectrum, transition shifts, Stark scans and field-sensing estimates."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from . import longitudinal as lon
from .longitudinal import ImageState
from .transverse import LandauState, transverse_energy
from .units import CODATA2018, UnitSystem, energy_to_wavenumber, field_to_atomic, magnetic_to_atomic

__all__ = [
    "FieldConfig",
    "EnergyBreakdown",
    "SensingSpec",
    "ScanRow",
    "PAPER_SHIFT_CONSTANT",
    "DEFAULT_LINEWIDTH",
    "MODES",
    "total_energy",
    "energy_breakdown",
    "transition_shift",
    "derived_shift_constant",
    "shift_per_field",
    "rydberg_shift_wavenumber",
    "min_detectable_field",
    "infer_field",
    "mode_ratio",
    "stark_scan",
]

# cm^-1 per (nu * k * V/cm), as printed alongside the sensing estimate
PAPER_SHIFT_CONSTANT = 6.42e-5
# Rydberg resonance linewidth, 20-60 kHz ~ 3e-6 cm^-1
DEFAULT_LINEWIDTH = 3e-6

MODES = ("paper-constant", "strict-eq20")
_MODE_ALIASES = {"paper": "paper-constant", "strict": "strict-eq20"}


def _mode(mode: str) -> str:
    mode = _MODE_ALIASES.get(mode, mode)
    if mode not in MODES:
        raise ValueError(f"unknown sensing mode {mode!r}; expected one of {MODES}")
    return mode


@dataclass(frozen=True)
class FieldConfig:
    """Static fields normal to the surface, in atomic units (H is Gaussian, omega = H/c)."""

    F: float = 0.0
    H_field: float = 0.0

    def __post_init__(self) -> None:
        for name in ("F", "H_field"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise ValueError(f"{name} must be finite and non-negative, got {v!r}")

    @classmethod
    def from_lab(cls, F_vcm: float = 0.0, B_tesla: float = 0.0, units: UnitSystem = CODATA2018) -> FieldConfig:
        return cls(F=field_to_atomic(F_vcm, units), H_field=magnetic_to_atomic(B_tesla, units))


@dataclass(frozen=True)
class EnergyBreakdown:
    e_transverse: float
    e_longitudinal: float
    e_total: float
    p_x: float = 0.0


@dataclass(frozen=True)
class SensingSpec:
    nu: int
    k: int = 1
    delta_E: float = DEFAULT_LINEWIDTH
    mode: str = "paper-constant"

    def __post_init__(self) -> None:
        if not self.delta_E > 0:
            raise ValueError(f"linewidth must be positive, got {self.delta_E}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.k >= self.nu:
            raise ValueError(f"k must be smaller than nu (k={self.k}, nu={self.nu})")
        object.__setattr__(self, "mode", _mode(self.mode))


class ScanRow(NamedTuple):
    nu: int
    F_au: float
    dE_au: float


def total_energy(m: int, sigma: float, nu: int, fields: FieldConfig) -> float:
    """E(m, nu) = (m - sigma + 1/2) H/c - 1/(2 nu^2) + 3 F nu^2 / 2.

    Independent of p_x: every Landau level is infinitely degenerate.
    """
    e_perp = transverse_energy(LandauState(m, sigma, 0.0, fields.H_field))
    return e_perp + lon.longitudinal_energy(ImageState(nu), fields.F)


def energy_breakdown(m: int, sigma: float, nu: int, fields: FieldConfig, p_x: float = 0.0) -> EnergyBreakdown:
    """Components of E = p_x^2/2 + E_y + E_z at a given p_x."""
    e_y = transverse_energy(LandauState(m, sigma, p_x, fields.H_field))
    e_z = lon.longitudinal_energy(ImageState(nu), fields.F)
    return EnergyBreakdown(e_y, e_z, total_energy(m, sigma, nu, fields), p_x)


def transition_shift(nu_i: int, nu_f: int, F: float) -> float:
    """Field-induced change of the nu_i -> nu_f transition energy at equal m."""
    nu_i = lon._as_nu(nu_i)
    nu_f = lon._as_nu(nu_f)
    return 1.5 * F * (nu_i * nu_i - nu_f * nu_f)


def derived_shift_constant(units: UnitSystem = CODATA2018) -> float:
    """cm^-1 per (nu k V/cm) implied by a (3/2) nu k F transition shift."""
    return 1.5 * units.hartree_in_wavenumber / units.field_au_in_V_per_cm


def _check_nk(nu: int, k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k >= nu:
        raise ValueError(f"k must be smaller than nu (k={k}, nu={nu})")
    if k > nu / 5:
        warnings.warn(f"k={k} is not small against nu={nu}; the k << nu estimate degrades",
                      lon.PerturbationWarning, stacklevel=3)


def shift_per_field(nu: int, k: int, mode: str = "paper-constant", units: UnitSystem = CODATA2018) -> float:
    """Transition shift in cm^-1 per V/cm for levels nu and nu - k."""
    _check_nk(nu, k)
    if _mode(mode) == "paper-constant":
        return PAPER_SHIFT_CONSTANT * nu * k
    return energy_to_wavenumber(transition_shift(nu, nu - k, field_to_atomic(1.0, units)), units)


def rydberg_shift_wavenumber(nu: int, k: int, F_lab: float, mode: str = "paper-constant",
                             units: UnitSystem = CODATA2018) -> float:
    """Shift (cm^-1) of the nu -> nu - k transition in a field F_lab (V/cm)."""
    if not math.isfinite(F_lab):
        raise ValueError("field must be finite")
    return shift_per_field(nu, k, mode, units) * F_lab


def min_detectable_field(spec: SensingSpec, units: UnitSystem = CODATA2018) -> float:
    """Smallest field (V/cm) whose shift reaches the linewidth."""
    return spec.delta_E / shift_per_field(spec.nu, spec.k, spec.mode, units)


def infer_field(delta_E_obs: float, nu: int, k: int, mode: str = "paper-constant",
                units: UnitSystem = CODATA2018) -> float:
    """Field (V/cm) that produces an observed transition shift delta_E_obs (cm^-1)."""
    if not delta_E_obs >= 0:
        raise ValueError(f"observed shift must be >= 0, got {delta_E_obs}")
    return delta_E_obs / shift_per_field(nu, k, mode, units)


def mode_ratio(nu: int | None = None, k: int = 1, units: UnitSystem = CODATA2018) -> float:
    """strict-eq20 / paper-constant shift ratio.

    With ``nu=None`` the k << nu limit is returned, 2 * derived / printed
    constant, which is the same for every (nu, k, F).  For finite nu the
    exact nu^2 - (nu-k)^2 = 2 nu k - k^2 adds a (1 - k / 2nu) factor.
    """
    limit = 2.0 * derived_shift_constant(units) / PAPER_SHIFT_CONSTANT
    if nu is None:
        return limit
    return shift_per_field(nu, k, "strict-eq20", units) / shift_per_field(nu, k, "paper-constant", units)


def stark_scan(nus: Iterable[int], F_values: Iterable[float]) -> list[ScanRow]:
    """First-order shift 3 F nu^2 / 2 on a (nu, F) grid, rows sorted by nu then F."""
    nus = sorted(lon._as_nu(n) for n in nus)
    Fs = sorted(float(F) for F in F_values)
    if any(not (math.isfinite(F) and F >= 0) for F in Fs):
        raise ValueError("scan fields must be finite and non-negative")
    return [ScanRow(nu, F, F * lon.dipole_closed(nu)) for nu in nus for F in Fs]
