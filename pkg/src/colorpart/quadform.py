"""Quadratic-form determinants, Gaussian integrals, and sum-vs-integral checks.

The quadratic form of interest is  a0*(x_1 + ... + x_k)**2 + sum a_i*x_i**2
with all coefficients positive.  Its matrix has diagonal a0 + a_i and
constant off-diagonal a0, and the determinant factors in closed form, which
makes the full-space Gaussian integral elementary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate

from .errors import QuadratureFailure, RadiusTooSmall, SumIntegralBoundError


@dataclass(frozen=True)
class QuadFormSpec:
    """Positive coefficients (a0; a1..ak) of the coupled quadratic form."""

    a0: float
    a_rest: tuple[float, ...]

    def __post_init__(self):
        if self.a0 <= 0 or any(a <= 0 for a in self.a_rest):
            raise ValueError("all quadratic-form coefficients must be positive")
        if not self.a_rest:
            raise ValueError("need at least one diagonal coefficient")

    @property
    def k(self) -> int:
        return len(self.a_rest)

    def matrix(self) -> np.ndarray:
        """Dense k x k matrix: diagonal a0 + a_i, off-diagonal a0."""
        m = np.full((self.k, self.k), self.a0)
        m[np.diag_indices(self.k)] += np.asarray(self.a_rest)
        return m


def det_closed_form(q: QuadFormSpec) -> float:
    """det = a0 * a1 * ... * ak * sum(1/a_i over i = 0..k)."""
    coeffs = (q.a0,) + q.a_rest
    prod = math.prod(coeffs)
    return prod * sum(1.0 / a for a in coeffs)


def gaussian_quadform_integral(q: QuadFormSpec) -> float:
    """Full-space integral of exp(-quadform): pi**(k/2) / sqrt(det)."""
    return math.pi ** (q.k / 2) / math.sqrt(det_closed_form(q))


def truncation_error_bound(radius: float) -> float:
    """Upper bound exp(-r^2) on the one-dimensional Gaussian tail beyond r.

    Valid for r >= 1; used to justify box-truncated quadrature cross-checks.
    """
    if radius < 1:
        raise RadiusTooSmall(f"tail bound requires radius >= 1, got {radius}")
    return math.exp(-radius * radius)


def quadform_value(q: QuadFormSpec, x) -> float:
    x = np.asarray(x, dtype=float)
    return q.a0 * float(x.sum()) ** 2 + float(np.dot(q.a_rest, x * x))


def gaussian_integral_quadrature(
    q: QuadFormSpec, radius: float = 8.0, epsabs: float = 1e-9
) -> float:
    """Adaptive-quadrature oracle for the Gaussian integral, k in {1, 2}.

    Truncates to the box [-radius, radius]^k; ``truncation_error_bound``
    justifies the default radius against the 1e-6 comparison tolerance.
    """
    truncation_error_bound(radius)
    if q.k == 1:
        a = q.a0 + q.a_rest[0]
        val, err = integrate.quad(lambda x: math.exp(-a * x * x), -radius, radius,
                                  epsabs=epsabs)
    elif q.k == 2:
        a0 = q.a0
        a1, a2 = q.a_rest

        def f(y, x):
            return math.exp(-(a0 * (x + y) ** 2 + a1 * x * x + a2 * y * y))

        val, err = integrate.dblquad(f, -radius, radius, -radius, radius,
                                     epsabs=epsabs)
    else:
        raise ValueError("quadrature oracle supports k <= 2; use Monte Carlo above")
    if err > 1e-6:
        raise QuadratureFailure(f"quadrature error estimate {err} too large")
    return val


def gaussian_integral_monte_carlo(
    q: QuadFormSpec,
    samples: int = 10**7,
    radius: float = 8.0,
    seed: int = 0,
) -> tuple[float, float]:
    """Monte Carlo oracle: (estimate, standard error) over the truncated box."""
    truncation_error_bound(radius)
    rng = np.random.default_rng(seed)
    volume = (2 * radius) ** q.k
    a_rest = np.asarray(q.a_rest)
    total = 0.0
    total_sq = 0.0
    # Chunked so 10^7 x k doubles never sit in memory at once.
    chunk = 10**6
    done = 0
    while done < samples:
        m = min(chunk, samples - done)
        x = rng.uniform(-radius, radius, size=(m, q.k))
        vals = np.exp(-(q.a0 * x.sum(axis=1) ** 2 + (x * x) @ a_rest))
        total += float(vals.sum())
        total_sq += float((vals * vals).sum())
        done += m
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0)
    return volume * mean, volume * math.sqrt(var / samples)


def sum_vs_integral(
    f: Callable[[float], float],
    a: float,
    b: float,
    m: int,
    grid_points: int = 10**4,
) -> tuple[float, float, float]:
    """Compare the lattice sum of f over [a, b] with its integral.

    ``m`` is the caller-asserted number of interior critical points of f.
    Returns (sum, integral, bound) with bound = 2 * (m + 1) * max|f|, the
    max estimated on a uniform grid plus endpoints.  Raises
    SumIntegralBoundError if |sum - integral| exceeds the bound and
    QuadratureFailure if the integral cannot be trusted.
    """
    if b - a < 1:
        raise ValueError("interval must have length >= 1")
    if m < 0:
        raise ValueError("critical-point count must be >= 0")
    lattice = sum(f(n) for n in range(math.ceil(a), math.floor(b) + 1))
    val, err = integrate.quad(f, a, b, epsrel=1e-10, limit=500)
    if not math.isfinite(val) or err > 1e-6 * max(abs(val), 1.0):
        raise QuadratureFailure(f"integral {val} with error estimate {err}")
    xs = np.linspace(a, b, grid_points)
    fmax = max(float(np.max(np.abs([f(x) for x in xs]))), abs(f(a)), abs(f(b)))
    bound = 2.0 * (m + 1) * fmax
    if abs(lattice - val) > bound:
        raise SumIntegralBoundError(
            f"|sum - integral| = {abs(lattice - val)} exceeds bound {bound}"
        )
    return lattice, val, bound
