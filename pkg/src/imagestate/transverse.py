"""Landau-level motion parallel to the surface.

With the Landau gauge A = (-H y, 0, 0) the in-plane problem separates into
a plane wave along x and a harmonic oscillator along y, centred on the
guiding centre y0 = -c p_x / H and oscillating at omega = H / c.  The
oscillator index starts at m = 0.  Spin enters only through the scalar
projection sigma = +/- 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .special import hermite
from .units import CODATA2018

__all__ = [
    "LandauState",
    "cyclotron_frequency",
    "eval_chi",
    "oscillator_energy",
    "transverse_energy",
    "guiding_center",
]

C_AU = CODATA2018.speed_of_light_au


@dataclass(frozen=True)
class LandauState:
    m: int
    sigma: float = 0.5
    p_x: float = 0.0
    H_field: float = 0.0

    def __post_init__(self) -> None:
        if isinstance(self.m, bool) or int(self.m) != self.m or self.m < 0:
            raise ValueError(f"oscillator index must be a non-negative integer, got {self.m!r}")
        object.__setattr__(self, "m", int(self.m))
        if self.sigma not in (-0.5, 0.5):
            raise ValueError(f"spin projection must be +1/2 or -1/2, got {self.sigma!r}")
        if not (math.isfinite(self.H_field) and self.H_field >= 0):
            raise ValueError(f"magnetic field must be finite and >= 0, got {self.H_field!r}")
        if not math.isfinite(self.p_x):
            raise ValueError("p_x must be finite")

    @property
    def omega(self) -> float:
        return cyclotron_frequency(self.H_field)


def cyclotron_frequency(H: float) -> float:
    """omega = H / c."""
    if H < 0:
        raise ValueError(f"magnetic field must be >= 0, got {H}")
    return H / C_AU


def guiding_center(state: LandauState) -> float:
    if state.H_field == 0:
        raise ValueError("guiding centre undefined at H = 0")
    return -C_AU * state.p_x / state.H_field


def eval_chi(state: LandauState, y):
    """Normalized oscillator function chi_m at lab coordinate y (Y = y + c p_x / H)."""
    if state.H_field <= 0:
        raise ValueError("eval_chi needs H > 0; there is no localized state at H = 0")
    w = state.omega
    Y = np.asarray(y, dtype=float) - guiding_center(state)
    m = state.m
    # (2^m m!)^{-1/2} in log form, overflow-free for large m
    log_norm = 0.25 * math.log(w / math.pi) - 0.5 * (m * math.log(2.0) + math.lgamma(m + 1.0))
    out = np.exp(log_norm - 0.5 * w * Y * Y) * hermite(m, Y * math.sqrt(w))
    return float(out) if np.ndim(out) == 0 else out


def oscillator_energy(m: int, omega: float) -> float:
    if m < 0 or omega < 0:
        raise ValueError("need m >= 0 and omega >= 0")
    return (m + 0.5) * omega


def transverse_energy(state: LandauState) -> float:
    """E_y = (m - sigma + 1/2) H/c - p_x^2/2."""
    return (state.m - state.sigma + 0.5) * state.omega - 0.5 * state.p_x**2
