"""Finite-difference reference solver for the longitudinal equation.

Discretizes

    -1/2 phi'' - (Z/z) phi + F z phi = E phi,   phi(0) = phi(z_max) = 0

on the interior nodes z_i = i h (i = 1..n) with the three-point stencil.
The resulting symmetric tridiagonal matrix is diagonalized only where
needed: eigenvalues by Sturm-sequence bisection, eigenvectors by inverse
iteration.  The solver never touches the closed forms; only
:func:`compare_wavefunction` reads them, to measure the deviation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numba
import numpy as np
from scipy.linalg import solve_banded

from .longitudinal import eval_wavefunction, ImageState, validity_bound

__all__ = [
    "GridSpec",
    "NumericState",
    "InsufficientGridError",
    "ConvergenceError",
    "LevelTrackingError",
    "sturm_count",
    "solve_bound_states",
    "solve_extrapolated",
    "richardson",
    "numeric_dipole",
    "numeric_stark_slope",
    "compare_wavefunction",
    "count_nodes",
]


class InsufficientGridError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


class LevelTrackingError(RuntimeError):
    pass


@dataclass(frozen=True)
class GridSpec:
    z_max: float
    n_points: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.z_max) and self.z_max > 0):
            raise ValueError(f"z_max must be positive, got {self.z_max!r}")
        if int(self.n_points) != self.n_points or self.n_points < 2:
            raise ValueError(f"n_points must be an integer >= 2, got {self.n_points!r}")
        object.__setattr__(self, "n_points", int(self.n_points))

    @property
    def spacing(self) -> float:
        return self.z_max / (self.n_points + 1)

    @property
    def z(self) -> np.ndarray:
        return self.spacing * np.arange(1, self.n_points + 1)

    @classmethod
    def for_state(cls, nu: int, charge: float = 1.0, spacing: float | None = None) -> GridSpec:
        """Default grid covering state ``nu``: z_max = 40 nu^2 / Z, h = min(nu/50, 0.02) / Z."""
        z_max = 40.0 * nu * nu / charge
        h = spacing if spacing is not None else min(nu / 50.0, 0.02) / charge
        return cls(z_max, max(2, int(round(z_max / h)) - 1))

    def refined(self) -> GridSpec:
        """Same box, half the spacing."""
        return GridSpec(self.z_max, 2 * self.n_points + 1)

    def check(self, nu: int, charge: float = 1.0) -> None:
        """Raise InsufficientGridError unless the grid can represent state ``nu``."""
        need_zmax = 40.0 * nu * nu / charge
        max_h = nu / (50.0 * charge)
        problems = []
        # small slack so for_state() grids pass despite rounding of n_points
        if self.z_max < need_zmax * (1 - 1e-12):
            problems.append(f"z_max={self.z_max:g} < 40 nu^2/Z = {need_zmax:g}")
        if self.spacing > max_h * (1 + 1e-3):
            problems.append(f"h={self.spacing:g} > nu/(50 Z) = {max_h:g}")
        if problems:
            raise InsufficientGridError(f"grid too coarse for nu={nu}: " + "; ".join(problems))


@dataclass(frozen=True)
class NumericState:
    energy: float
    samples: np.ndarray = field(repr=False)
    node_count: int
    index: int = 0


# -- tridiagonal eigen-machinery ----------------------------------------------


@numba.njit(cache=True)
def _sturm_count(diag, off2, x, pivmin):
    # number of eigenvalues strictly below x (LDL^T inertia count)
    count = 0
    q = diag[0] - x
    if abs(q) < pivmin:
        q = -pivmin
    if q < 0:
        count += 1
    for i in range(1, diag.shape[0]):
        q = diag[i] - x - off2[i - 1] / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0:
            count += 1
    return count


@numba.njit(cache=True)
def _bisect(diag, off2, k, lo, hi, pivmin, max_iter):
    # k-th (0-based) eigenvalue lies in [lo, hi); returns (lo, hi, converged)
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return lo, hi, True
        if _sturm_count(diag, off2, mid, pivmin) > k:
            hi = mid
        else:
            lo = mid
        if hi - lo <= 4e-16 * max(abs(lo), abs(hi)):
            return lo, hi, True
    return lo, hi, False


def sturm_count(diag: np.ndarray, off: np.ndarray, x: float) -> int:
    """Eigenvalues of the symmetric tridiagonal (diag, off) below x."""
    diag = np.ascontiguousarray(diag, dtype=float)
    off2 = np.ascontiguousarray(off, dtype=float) ** 2
    return int(_sturm_count(diag, off2, float(x), _pivmin(diag, off2)))


def _pivmin(diag: np.ndarray, off2: np.ndarray) -> float:
    scale = max(np.max(np.abs(diag)), np.max(off2) if off2.size else 0.0, 1.0)
    return np.finfo(float).tiny * scale


def _hamiltonian(Z: float, F: float, grid: GridSpec) -> tuple[np.ndarray, np.ndarray]:
    h = grid.spacing
    z = grid.z
    diag = 1.0 / (h * h) - Z / z + F * z
    off = np.full(grid.n_points - 1, -0.5 / (h * h))
    return diag, off


def _inverse_iteration(diag: np.ndarray, off: np.ndarray, lam: float, h: float) -> np.ndarray:
    n = diag.size
    # nudge off the computed eigenvalue so the shifted matrix is not exactly singular
    shift = lam - 1e-13 * max(abs(lam), 1.0)
    ab = np.zeros((3, n))
    ab[0, 1:] = off
    ab[1] = diag - shift
    ab[2, :-1] = off
    v = np.ones(n) / math.sqrt(n)
    for _ in range(3):
        v = solve_banded((1, 1), ab, v, check_finite=False)
        v /= np.linalg.norm(v)
    # continuum normalization h * sum(v^2) = 1, positive first lobe
    v /= math.sqrt(h)
    big = np.flatnonzero(np.abs(v) > 1e-3 * np.max(np.abs(v)))
    if v[big[0]] < 0:
        v = -v
    return v


def count_nodes(samples: np.ndarray, rel_floor: float = 1e-8) -> int:
    """Sign changes of ``samples``, ignoring the numerically-zero tail."""
    s = np.asarray(samples)
    keep = s[np.abs(s) > rel_floor * np.max(np.abs(s))]
    return int(np.count_nonzero(np.signbit(keep[1:]) != np.signbit(keep[:-1])))


def solve_bound_states(
    Z: float,
    F: float,
    grid: GridSpec,
    n_states: int,
    *,
    check_grid: bool = True,
    vectors: bool = True,
    start: int = 0,
    max_iter: int = 200,
) -> list[NumericState]:
    """Lowest ``n_states`` eigenpairs of the discretized longitudinal Hamiltonian.

    ``start`` skips the first few levels (each eigenvalue is bracketed on
    its own, so skipping costs nothing).  Results are in ascending order.
    """
    if not Z > 0:
        raise ValueError(f"charge must be positive, got {Z}")
    if not (math.isfinite(F) and F >= 0):
        raise ValueError(f"field must be finite and >= 0, got {F}")
    if not 0 <= start < n_states:
        raise ValueError(f"start must lie in [0, n_states), got {start}")
    if n_states < 1 or n_states > grid.n_points:
        raise ValueError(f"cannot extract {n_states} states from {grid.n_points} nodes")
    if check_grid:
        grid.check(n_states, Z)

    diag, off = _hamiltonian(Z, F, grid)
    off2 = off * off
    pivmin = _pivmin(diag, off2)
    # Gershgorin enclosure
    radius = np.zeros_like(diag)
    radius[:-1] += np.abs(off)
    radius[1:] += np.abs(off)
    lo0 = float(np.min(diag - radius))
    hi0 = float(np.max(diag + radius))

    out = []
    lo = lo0
    for k in range(start, n_states):
        a, b, ok = _bisect(diag, off2, k, lo, hi0, pivmin, max_iter)
        if not ok:
            raise ConvergenceError(f"bisection for eigenvalue {k} stalled in [{a!r}, {b!r}]")
        lam = 0.5 * (a + b)
        lo = a
        if vectors:
            v = _inverse_iteration(diag, off, lam, grid.spacing)
            nodes = count_nodes(v)
        else:
            v = np.empty(0)
            nodes = -1
        out.append(NumericState(energy=lam, samples=v, node_count=nodes, index=k))
    return out


def richardson(coarse: float, fine: float, order: int = 2) -> float:
    """Cancel the leading h^order error from results at h and h/2."""
    r = 2.0**order
    return (r * fine - coarse) / (r - 1.0)


def solve_extrapolated(Z: float, F: float, grid: GridSpec, n_states: int, **kw) -> list[float]:
    """Richardson-extrapolated eigenvalues from ``grid`` and its refinement."""
    e1 = solve_bound_states(Z, F, grid, n_states, vectors=False, **kw)
    e2 = solve_bound_states(Z, F, grid.refined(), n_states, vectors=False, **kw)
    return [richardson(a.energy, b.energy) for a, b in zip(e1, e2)]


# -- observables ----------------------------------------------------------------


def numeric_dipole(state: NumericState, grid: GridSpec) -> float:
    """<z> = h sum z_i phi_i^2."""
    return grid.spacing * math.fsum(grid.z * state.samples**2)


def _pick(states: list[NumericState], nu: int) -> NumericState:
    for st in states:
        if st.node_count == nu - 1:
            return st
    found = [st.node_count for st in states]
    raise LevelTrackingError(f"no state with {nu - 1} nodes among node counts {found}")


def numeric_stark_slope(nu: int, F_probe: float, grid: GridSpec | None = None, Z: float = 1.0) -> float:
    """[E(F_probe) - E(0)] / F_probe for the level with nu - 1 nodes."""
    if F_probe <= 0:
        raise ValueError("F_probe must be positive")
    if F_probe > 0.01 * validity_bound(nu):
        raise ValueError(f"F_probe={F_probe:g} exceeds 1% of the validity bound for nu={nu}")
    if grid is None:
        grid = GridSpec.for_state(nu, Z)
    # a window of levels around nu - 1; the one with nu - 1 nodes is the target
    n = min(nu + 1, grid.n_points)
    first = max(0, nu - 2)
    s0 = _pick(solve_bound_states(Z, 0.0, grid, n, check_grid=False, start=first), nu)
    s1 = _pick(solve_bound_states(Z, F_probe, grid, n, check_grid=False, start=first), nu)
    return (s1.energy - s0.energy) / F_probe


def compare_wavefunction(nu: int, state: NumericState, grid: GridSpec, Z: float = 1.0) -> float:
    """max_i |phi_numeric(z_i) - phi_closed(z_i)| over the interior nodes."""
    exact = eval_wavefunction(ImageState(nu, Z), grid.z)
    samples = state.samples
    if np.dot(samples, exact) < 0:
        samples = -samples
    return float(np.max(np.abs(samples - exact)))
