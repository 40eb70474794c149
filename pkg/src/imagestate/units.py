"""Atomic <-> laboratory unit conversions.

Every formula in the package is evaluated in Hartree atomic units
(hbar = e = m = 1).  Laboratory units (V/cm, cm^-1, tesla) only appear at
API boundaries.  Constants are the CODATA 2018 recommended values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "UnitSystem",
    "CODATA2018",
    "field_to_atomic",
    "field_from_atomic",
    "energy_to_wavenumber",
    "wavenumber_to_energy",
    "magnetic_to_atomic",
    "magnetic_from_atomic",
]


@dataclass(frozen=True)
class UnitSystem:
    """Conversion factors between atomic and laboratory units.

    ``magnetic_au_in_tesla`` is the SI atomic unit of flux density
    hbar/(e a0^2).  The magnetic field ``H`` used throughout the package is
    the Gaussian-units field, for which the cyclotron frequency is ``H/c``;
    one SI atomic unit of flux density therefore corresponds to ``H = c``.
    """

    speed_of_light_au: float = 137.035999084
    field_au_in_V_per_cm: float = 5.14220674763e9
    hartree_in_wavenumber: float = 219474.6313632
    magnetic_au_in_tesla: float = 2.35051756758e5

    def __post_init__(self) -> None:
        for name in (
            "speed_of_light_au",
            "field_au_in_V_per_cm",
            "hartree_in_wavenumber",
            "magnetic_au_in_tesla",
        ):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be finite and positive, got {value!r}")


CODATA2018 = UnitSystem()


def _finite(value: float, what: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{what} must be finite, got {value!r}")
    return value


def field_to_atomic(F_lab: float, units: UnitSystem = CODATA2018) -> float:
    """Electric field in V/cm -> atomic units."""
    return _finite(F_lab, "electric field") / units.field_au_in_V_per_cm


def field_from_atomic(F_au: float, units: UnitSystem = CODATA2018) -> float:
    return _finite(F_au, "electric field") * units.field_au_in_V_per_cm


def energy_to_wavenumber(E: float, units: UnitSystem = CODATA2018) -> float:
    """Energy in hartree -> cm^-1."""
    return _finite(E, "energy") * units.hartree_in_wavenumber


def wavenumber_to_energy(k: float, units: UnitSystem = CODATA2018) -> float:
    return _finite(k, "wavenumber") / units.hartree_in_wavenumber


def magnetic_to_atomic(B_tesla: float, units: UnitSystem = CODATA2018) -> float:
    """Flux density in tesla -> Gaussian atomic field ``H`` (so that omega = H/c)."""
    B = _finite(B_tesla, "magnetic field")
    return B * units.speed_of_light_au / units.magnetic_au_in_tesla


def magnetic_from_atomic(H: float, units: UnitSystem = CODATA2018) -> float:
    return _finite(H, "magnetic field") * units.magnetic_au_in_tesla / units.speed_of_light_au
