"""Slow decay branch of the kinetic relaxation model.

The model is the linear kinetic equation

    df/dt + v df/dx = (rho[f] M - f) / tau,

where M is the unit Gaussian in velocity and rho[f] the velocity
average.  For a spatial Fourier mode with wave number k > 0, the slowest
decay rate lambda_d(k, tau) is real and solves

    phi(y) = tau k,    lambda_d = k y - 1 / tau,

with y = (tau lambda_d + 1) / (tau k) > 0 and phi the strictly
decreasing profile from :mod:`slowmode.special`.  Because phi(0) =
sqrt(pi/2), the isolated mode exists exactly for tau k < sqrt(pi/2); at
larger wave numbers it merges into the continuum of rates at
Re = -1/tau and the relation has no root.

The branch obeys the scaling law  tau lambda_d(k, tau) = F(tau k)  for a
single universal function F, exposed here as :func:`scaled_eigenvalue`.
"""

import math
from dataclasses import dataclass

from . import _backend
from .errors import SelfCheckError
from .special import plasma_z

__all__ = [
    "CRITICAL_COUPLING",
    "BranchPoint",
    "BranchTable",
    "branch_point",
    "critical_wave_number",
    "sample_branch",
    "scaled_eigenvalue",
    "solve_diffusion_mode",
]

#: Critical value of the scaled wave number x = tau k: the slow mode
#: exists iff x < CRITICAL_COUPLING = phi(0) = sqrt(pi/2).
CRITICAL_COUPLING = math.sqrt(0.5 * math.pi)

#: Points with CRITICAL_COUPLING - tau k within this window are flagged
#: near-critical: still resolvable, but y -> 0 and the mode is about to
#: merge with the continuum.
NEAR_CRITICAL_WINDOW = 1e-8

#: Residual bound the solver must meet; exceeding it is a defect.
_RESIDUAL_LIMIT = 1e-8


@dataclass(frozen=True)
class BranchPoint:
    """One solved point of the slow decay branch."""

    k: float
    tau: float
    eigenvalue: float
    #: |Z(i (tau lambda + 1)/(tau k)) - i tau k|, the dispersion-relation
    #: defect of the returned eigenvalue (0.0 by convention at k = 0).
    residual: float
    near_critical: bool
    #: Width of the final certified bisection bracket (solver detail).
    bracket_width: float
    iterations: int


@dataclass(frozen=True)
class BranchTable:
    """Slow branch sampled over a wave-number grid.

    ``excluded`` lists the supercritical grid points (tau k >= sqrt(pi/2))
    for which no isolated mode exists.
    """

    tau: float
    critical_k: float
    points: list[BranchPoint]
    excluded: list[float]


def _validate_tau(tau: float) -> float:
    tau = float(tau)
    if not (math.isfinite(tau) and tau > 0.0):
        raise ValueError(f"relaxation time tau must be positive, got {tau!r}")
    return tau


def _validate_k(k: float) -> float:
    k = float(k)
    if not (math.isfinite(k) and k >= 0.0):
        raise ValueError(f"wave number k must be >= 0, got {k!r}")
    return k


def critical_wave_number(tau: float) -> float:
    """Largest wave number carrying an isolated slow mode: sqrt(pi/2)/tau."""
    tau = _validate_tau(tau)
    return CRITICAL_COUPLING / tau


def scaled_eigenvalue(x: float) -> float:
    """Universal scaled branch F(x) = tau lambda_d at scaled wave number x = tau k.

    Defined for 0 <= x < sqrt(pi/2) with F(0) = 0 and F -> -1 as
    x -> sqrt(pi/2); raises ValueError for supercritical x where no
    isolated mode exists.
    """
    x = float(x)
    if not (math.isfinite(x) and x >= 0.0):
        raise ValueError(f"scaled wave number must be >= 0, got {x!r}")
    if x == 0.0:
        return 0.0
    if x >= CRITICAL_COUPLING:
        raise ValueError(
            f"supercritical scaled wave number {x!r}: no isolated slow mode "
            f"for tau*k >= sqrt(pi/2) = {CRITICAL_COUPLING!r}"
        )
    y, _, _ = _backend.solve_phi(x)
    return x * y - 1.0


def solve_diffusion_mode(k: float, tau: float = 1.0) -> float | None:
    """Slow decay rate lambda_d(k, tau), or None when supercritical.

    Returns 0.0 at k = 0 (mass conservation), a value in (-1/tau, 0) for
    0 < tau k < sqrt(pi/2), and None for tau k >= sqrt(pi/2).
    """
    k = _validate_k(k)
    tau = _validate_tau(tau)
    if k == 0.0:
        return 0.0
    x = tau * k
    if x >= CRITICAL_COUPLING:
        return None
    return scaled_eigenvalue(x) / tau


def branch_point(k: float, tau: float = 1.0) -> BranchPoint | None:
    """Solve one branch point with solver diagnostics, or None if supercritical."""
    k = _validate_k(k)
    tau = _validate_tau(tau)
    x = tau * k
    if k == 0.0:
        return BranchPoint(
            k=0.0,
            tau=tau,
            eigenvalue=0.0,
            residual=0.0,
            near_critical=False,
            bracket_width=0.0,
            iterations=0,
        )
    if x >= CRITICAL_COUPLING:
        return None
    y, width, iterations = _backend.solve_phi(x)
    eigenvalue = (x * y - 1.0) / tau
    residual = abs(plasma_z(complex(0.0, y)) - complex(0.0, x))
    if residual > _RESIDUAL_LIMIT:
        raise SelfCheckError(
            f"dispersion solve at k={k!r}, tau={tau!r} left residual "
            f"{residual!r} > {_RESIDUAL_LIMIT!r}"
        )
    return BranchPoint(
        k=k,
        tau=tau,
        eigenvalue=eigenvalue,
        residual=residual,
        near_critical=(CRITICAL_COUPLING - x <= NEAR_CRITICAL_WINDOW),
        bracket_width=width,
        iterations=iterations,
    )


def sample_branch(tau, k_values) -> BranchTable:
    """Sample the slow branch over ``k_values`` (in the given order).

    Supercritical wave numbers are collected in ``excluded`` instead of
    producing table points.
    """
    tau = _validate_tau(tau)
    points: list[BranchPoint] = []
    excluded: list[float] = []
    for k in k_values:
        point = branch_point(k, tau)
        if point is None:
            excluded.append(float(k))
        else:
            points.append(point)
    return BranchTable(
        tau=tau,
        critical_k=critical_wave_number(tau),
        points=points,
        excluded=excluded,
    )
