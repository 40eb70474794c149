"""Special functions and semi-infinite quadrature.

Only the pieces the image-state formulas need: the terminating Kummer
series Phi(1 - nu, 2, x), physicists' Hermite polynomials, exact factorial
helpers, and a Gauss-Laguerre rule that stays finite at high order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.linalg import eigh_tridiagonal

__all__ = [
    "kummer_coefficients",
    "kummer_terminating",
    "kummer_damped",
    "hermite",
    "factorial",
    "log_factorial",
    "consecutive_product",
    "QuadratureRule",
    "gauss_laguerre",
    "integrate_semiaxis",
    "gauss_hermite",
]


def _check_nu(nu: int) -> int:
    if isinstance(nu, bool) or int(nu) != nu:
        raise TypeError(f"nu must be an integer, got {nu!r}")
    nu = int(nu)
    if nu < 1:
        raise ValueError(f"nu must be >= 1, got {nu}")
    return nu


# -- factorials ---------------------------------------------------------------


def factorial(n: int) -> int:
    """Exact n! (Python integers do not overflow)."""
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def log_factorial(n: int) -> float:
    """ln(n!) for floating-point paths; exact below 21!."""
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    if n <= 20:
        return math.log(math.factorial(n))
    return math.lgamma(n + 1.0)


def consecutive_product(lo: int, hi: int) -> int:
    """lo * (lo+1) * ... * hi over consecutive integers; empty range gives 1."""
    out = 1
    for k in range(lo, hi + 1):
        out *= k
    return out


# -- Kummer -------------------------------------------------------------------


@lru_cache(maxsize=None)
def kummer_coefficients(nu: int) -> tuple[Fraction, ...]:
    """Exact coefficients c_s of Phi(1 - nu, 2, x) = sum_s c_s x^s, s = 0..nu-1."""
    nu = _check_nu(nu)
    coeffs = [Fraction(1)]
    c = Fraction(1)
    a = 1 - nu
    for s in range(nu - 1):
        # c_{s+1} / c_s = (a + s) / ((2 + s)(s + 1))
        c = c * (a + s) / ((2 + s) * (s + 1))
        coeffs.append(c)
    return tuple(coeffs)


def _kummer_exact(nu: int, x: float) -> Fraction:
    # x is a binary float, hence an exact rational; Horner in rationals
    xf = Fraction(x)
    acc = Fraction(0)
    for c in reversed(kummer_coefficients(nu)):
        acc = acc * xf + c
    return acc


def _kummer_recurrence(nu: int, x: np.ndarray, rate: float) -> np.ndarray:
    # Phi(-n, 2, x) = L_n^(1)(x) / (n + 1).  The damping exp(-rate x) is spread
    # evenly over the n steps so no intermediate overflows or underflows early.
    n = nu - 1
    if n == 0:
        return np.exp(-rate * x)
    q = np.exp(-rate * x / n)
    prev = np.ones_like(x)
    cur = (2.0 - x) * q
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 2 - x) * q * cur - (k + 1) * q * q * prev) / (k + 1)
    return cur / (n + 1)


def kummer_damped(nu: int, x, rate: float = 0.0):
    """Phi(1 - nu, 2, x) * exp(-rate * x).

    Scalars are summed exactly from the rational coefficients and rounded
    once, so the alternating series cannot cancel catastrophically.  Arrays
    go through the (stable) associated-Laguerre three-term recurrence.
    """
    nu = _check_nu(nu)
    xa = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(xa)):
        raise ValueError("x must be finite")
    if np.any(xa < 0):
        raise ValueError("x must be non-negative")
    if xa.ndim == 0:
        value = _kummer_exact(nu, float(xa))
        if rate == 0.0:
            return float(value)
        if value == 0:
            return 0.0
        sign = 1.0 if value > 0 else -1.0
        log_abs = math.log(abs(value.numerator)) - math.log(value.denominator)
        return sign * math.exp(log_abs - rate * float(xa))
    return _kummer_recurrence(nu, xa, rate)


def kummer_terminating(nu: int, x):
    """Confluent hypergeometric Phi(1 - nu, 2, x), a polynomial of degree nu - 1."""
    return kummer_damped(nu, x, 0.0)


# -- Hermite ------------------------------------------------------------------


def hermite(m: int, x):
    """Physicists' Hermite polynomial H_m(x) by upward recurrence."""
    if isinstance(m, bool) or int(m) != m:
        raise TypeError(f"m must be an integer, got {m!r}")
    m = int(m)
    if m < 0:
        raise ValueError(f"Hermite index must be >= 0, got {m}")
    xa = np.asarray(x, dtype=float)
    h_prev = np.ones_like(xa)
    if m == 0:
        out = h_prev
    else:
        h = 2.0 * xa
        for k in range(1, m):
            h_prev, h = h, 2.0 * xa * h - 2.0 * k * h_prev
        out = h
    return float(out) if out.ndim == 0 else out


# -- quadrature ---------------------------------------------------------------


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Laguerre rule for int_0^inf e^{-x} g(x) dx.

    Weights are stored as logarithms: at order 200 the outermost weights
    (~e^-760) underflow double precision, while ``w_i e^{x_i}`` is O(1).
    """

    nodes: np.ndarray
    log_weights: np.ndarray
    order: int

    @property
    def weights(self) -> np.ndarray:
        return np.exp(self.log_weights)

    @property
    def folded_weights(self) -> np.ndarray:
        """w_i * exp(x_i): weights for integrating a plain f(x) over (0, inf)."""
        return np.exp(self.log_weights + self.nodes)


def _scaled_laguerre_pair(n: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # e^{-x/2} L_k(x) for k = n-1, n; the damping keeps the recurrence in range
    prev = np.exp(-x / 2)
    if n == 0:
        return np.zeros_like(x), prev
    cur = (1.0 - x) * prev
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 - x) * cur - k * prev) / (k + 1)
    return prev, cur


@lru_cache(maxsize=32)
def gauss_laguerre(order: int = 200) -> QuadratureRule:
    """Gauss-Laguerre nodes (Golub-Welsch + Newton polish) and log-weights."""
    n = int(order)
    if n < 1:
        raise ValueError(f"quadrature order must be positive, got {order}")
    diag = 2.0 * np.arange(n) + 1.0
    off = np.arange(1, n, dtype=float)
    # polish in extended precision: the forward recurrence loses ~n ulps near x = 0
    x = eigh_tridiagonal(diag, off, eigvals_only=True).astype(np.longdouble)
    for _ in range(4):
        lm1, ln = _scaled_laguerre_pair(n, x)
        x = x - x * ln / (n * (ln - lm1))
    lm1, _ = _scaled_laguerre_pair(n, x)
    # w_i = x_i / (n L_{n-1}(x_i))^2
    log_w = np.log(x) - 2 * np.log(np.longdouble(n)) - 2 * np.log(np.abs(lm1)) - x
    x = x.astype(float)
    log_w = log_w.astype(float)
    x.setflags(write=False)
    log_w.setflags(write=False)
    return QuadratureRule(nodes=x, log_weights=log_w, order=n)


def integrate_semiaxis(
    f: Callable[[np.ndarray], np.ndarray],
    rule: QuadratureRule | None = None,
    scale: float = 1.0,
) -> float:
    """Estimate int_0^inf f(z) dz with nodes z_i = scale * x_i.

    ``scale`` should match the integrand's decay length: an integrand of the
    form exp(-z/scale) * polynomial is integrated exactly once the rule's
    order exceeds half the polynomial degree.
    """
    if rule is None:
        rule = gauss_laguerre()
    if not scale > 0:
        raise ValueError(f"scale must be positive, got {scale}")
    z = scale * rule.nodes
    values = np.asarray(f(z), dtype=float)
    if values.shape != z.shape:
        values = np.broadcast_to(values, z.shape)
    bad = ~np.isfinite(values)
    if bad.any():
        i = int(np.argmax(bad))
        raise FloatingPointError(f"integrand not finite at node z={z[i]!r} (value {values[i]!r})")
    return scale * math.fsum(rule.folded_weights * values)


@lru_cache(maxsize=32)
def gauss_hermite(order: int = 60) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and folded weights w_i e^{x_i^2} for int_{-inf}^{inf} f(x) dx."""
    x, w = np.polynomial.hermite.hermgauss(order)
    return x, w * np.exp(x * x)
