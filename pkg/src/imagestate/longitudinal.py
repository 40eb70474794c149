"""Bound states of the image potential along the surface normal.

Conventions
-----------
Coordinates are the scaled ones in which the longitudinal equation reads

    -1/2 phi'' - (Z/z) phi + F z phi = E phi,    phi(0) = 0,

with ``Z = 1`` by default, so that E_nu = -1/(2 nu^2) and
phi_nu(z) = 2 nu^{-3/2} z exp(-z/nu) Phi(1 - nu, 2, 2z/nu).  The physical
image potential -1/(4z) corresponds to ``Z = 1/4``; its levels,
-1/(32 (nu + a)^2) with quantum defect ``a``, are exposed separately by
:func:`physical_energy`.  Everything else (the Stark shift F * <z>) scales
with ``effective_charge`` the hydrogenic way.

The electric field enters as ``+F z``: a positive field raises every level.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .special import consecutive_product, kummer_damped

__all__ = [
    "ImageState",
    "PhysicalLevel",
    "PerturbationWarning",
    "unperturbed_energy",
    "physical_energy",
    "eval_wavefunction",
    "dipole_series",
    "dipole_closed",
    "dipole_moment",
    "stark_shift",
    "longitudinal_energy",
    "validity_bound",
    "validity_asymptote",
    "is_perturbative",
]


class PerturbationWarning(UserWarning):
    """The field is not small compared with the first-order validity bound."""


def _as_nu(nu) -> int:
    if isinstance(nu, bool) or int(nu) != nu:
        raise TypeError(f"quantum number must be an integer, got {nu!r}")
    nu = int(nu)
    if nu < 1:
        raise ValueError(f"quantum number must be >= 1, got {nu}")
    return nu


@dataclass(frozen=True)
class ImageState:
    nu: int
    effective_charge: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "nu", _as_nu(self.nu))
        Z = float(self.effective_charge)
        if not (math.isfinite(Z) and Z > 0):
            raise ValueError(f"effective_charge must be positive, got {self.effective_charge!r}")
        object.__setattr__(self, "effective_charge", Z)


@dataclass(frozen=True)
class PhysicalLevel:
    nu: int
    quantum_defect: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "nu", _as_nu(self.nu))
        if not self.nu + self.quantum_defect > 0:
            raise ValueError(f"nu + a must be positive, got {self.nu} + {self.quantum_defect}")


def unperturbed_energy(state: ImageState) -> float:
    """-Z^2 / (2 nu^2)."""
    return -(state.effective_charge**2) / (2.0 * state.nu**2)


def physical_energy(level: PhysicalLevel) -> float:
    """Image-state energy -1/(32 (nu + a)^2) in hartree."""
    return -1.0 / (32.0 * (level.nu + level.quantum_defect) ** 2)


def eval_wavefunction(state: ImageState, z):
    """Normalized longitudinal wavefunction phi_nu(z).

    Returns exactly 0 at the wall ``z = 0``; negative ``z`` is rejected.
    Accepts a scalar or an array.
    """
    za = np.asarray(z, dtype=float)
    if np.any(za < 0):
        raise ValueError("wavefunction is defined for z >= 0 only")
    nu = state.nu
    Z = state.effective_charge
    x = 2.0 * Z * za / nu
    # exp(-Zz/nu) = exp(-x/2); fold it into the Kummer evaluation
    poly = kummer_damped(nu, x if x.ndim else float(x), 0.5)
    out = 2.0 * (Z / nu) ** 1.5 * za * poly
    return float(out) if np.ndim(out) == 0 else out


def dipole_series(nu: int) -> Fraction:
    """<z> from the Euler-integral sum, in exact rational arithmetic.

    (3/2) {1 + (nu-1)! sum_{s=0}^{min(1, nu-2)} P_s / ((nu-2-s)! ((s+1)!)^2 (s+2)!)}
    where P_s is the product of the consecutive integers -3-s .. -2+s.
    """
    nu = _as_nu(nu)
    total = Fraction(0)
    for s in range(0, min(1, nu - 2) + 1):
        num = consecutive_product(-3 - s, -2 + s)
        den = math.factorial(nu - 2 - s) * math.factorial(s + 1) ** 2 * math.factorial(s + 2)
        total += Fraction(num, den)
    return Fraction(3, 2) * (1 + math.factorial(nu - 1) * total)


def dipole_closed(nu: int) -> float:
    """<z> = 3 nu^2 / 2 for Z = 1."""
    nu = _as_nu(nu)
    return 1.5 * nu * nu


def dipole_moment(state: ImageState) -> float:
    return dipole_closed(state.nu) / state.effective_charge


def validity_bound(nu: int) -> float:
    """Field scale (2nu+1) / (3 nu^4 (nu+1)^2) below which first-order theory holds."""
    nu = _as_nu(nu)
    return (2 * nu + 1) / (3.0 * nu**4 * (nu + 1) ** 2)


def validity_asymptote(nu: int) -> float:
    """Large-nu form of the validity bound, nu^-5 (drops the constant 2/3)."""
    nu = _as_nu(nu)
    return float(nu) ** -5


def is_perturbative(nu: int, F: float, margin: float = 0.1) -> bool:
    """True when |F| <= margin * validity_bound(nu)."""
    return abs(F) <= margin * validity_bound(nu)


def _warn_if_strong(nu: int, F: float) -> None:
    if not is_perturbative(nu, F):
        warnings.warn(
            f"F={F:g} is not small against the first-order bound "
            f"{validity_bound(nu):.3g} for nu={nu}",
            PerturbationWarning,
            stacklevel=3,
        )


def stark_shift(state: ImageState, F: float) -> float:
    """First-order shift F * <z>; warns (does not raise) outside the perturbative range."""
    _warn_if_strong(state.nu, F)
    return F * dipole_moment(state)


def longitudinal_energy(state: ImageState, F: float) -> float:
    _warn_if_strong(state.nu, F)
    return unperturbed_energy(state) + F * dipole_moment(state)
