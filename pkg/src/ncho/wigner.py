"""Wigner eigenfunctions of the deformed oscillator and their time behaviour.

The 2-dim eigenstate Wigner function factorises into Laguerre-Gaussian
sectors.  With the sector energies xi_i(t) oscillating (see dynamics),
the per-sector functions

    hbar*W_n(xi) = (1/pi) * exp(-2 xi / hbar Omega) * L_n(4 xi / hbar Omega)

acquire a nonzero time derivative — the same non-stationarity signature,
now at the level of the quantum state.  All emitted values are the
dimensionless combinations hbar*W (1-dim) and pi^2 hbar^2 rho (2-dim).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import Frequencies, SWMap, frequencies
from .dynamics import State4, canonical_amplitudes, sector_energy_direct, evolve_closed
from .dynamics import sector_energy_closed, sector_power
from .errors import DomainError

__all__ = [
    "ModeIndex",
    "GridSpec",
    "Field2D",
    "laguerre",
    "laguerre_assoc",
    "nc_wigner_2d",
    "spectrum",
    "wigner_sector",
    "wigner_sector_derivative",
    "wigner_sector_time_derivative",
    "sk_difference_grid",
]


@dataclass(frozen=True)
class ModeIndex:
    """Pair of non-negative sector quantum numbers."""

    n1: int
    n2: int

    def __post_init__(self):
        if self.n1 < 0 or self.n2 < 0:
            raise DomainError(f"mode indices must be non-negative, got ({self.n1}, {self.n2})")


@dataclass(frozen=True)
class GridSpec:
    """Rectangular (s, k) sampling window in dimensionless phase-space units."""

    s_min: float = -3.0
    s_max: float = 3.0
    k_min: float = -3.0
    k_max: float = 3.0
    ns: int = 201
    nk: int = 201

    def __post_init__(self):
        if self.ns < 2 or self.nk < 2:
            raise DomainError("ns and nk must both be >= 2")
        if not (self.s_max > self.s_min and self.k_max > self.k_min):
            raise DomainError("grid bounds must satisfy max > min")

    def s_values(self) -> np.ndarray:
        return np.linspace(self.s_min, self.s_max, self.ns)

    def k_values(self) -> np.ndarray:
        return np.linspace(self.k_min, self.k_max, self.nk)


@dataclass(frozen=True)
class Field2D:
    """Scalar field sampled on an (s, k) grid; values[i, j] is at (s_i, k_j)."""

    grid: GridSpec
    values: np.ndarray
    meta: dict = field(default_factory=dict)


def laguerre(n: int, x) -> np.ndarray:
    """Laguerre polynomial L_n(x) by the upward three-term recurrence.

    (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}; stable for the moderate
    orders (n <= 50) used here.
    """
    return laguerre_assoc(n, 0.0, x)


def laguerre_assoc(n: int, alpha: float, x) -> np.ndarray:
    """Associated Laguerre polynomial L^alpha_n(x), same recurrence."""
    if n < 0:
        raise DomainError(f"order must be non-negative, got {n}")
    x = np.asarray(x, dtype=float)
    ones = np.ones_like(x)
    if n == 0:
        return ones
    prev = ones
    cur = 1.0 + alpha - x
    for k in range(1, n):
        prev, cur = cur, ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0)
    return cur


def nc_wigner_2d(mode: ModeIndex, state: State4, f: Frequencies):
    """2-dim eigenstate Wigner function at a canonical-variable phase point.

    rho = (-1)^(n1+n2) / (pi^2 hbar^2) * exp(-(a Q^2 + b P^2)/hbar)
          * L_{n1}(Omega_+ / hbar) * L_{n2}(Omega_- / hbar)

    with a = alpha/beta, b = beta/alpha and
    Omega_± = a Q^2 + b P^2 ∓ 2 (P1 Q2 - P2 Q1).  Normalised to unit
    integral over the full phase space.
    """
    a = f.alpha / f.beta
    b = f.beta / f.alpha
    Q2sum = np.asarray(state.Q1) ** 2 + np.asarray(state.Q2) ** 2
    P2sum = np.asarray(state.P1) ** 2 + np.asarray(state.P2) ** 2
    quad = a * Q2sum + b * P2sum
    cross = np.asarray(state.P1) * np.asarray(state.Q2) \
        - np.asarray(state.P2) * np.asarray(state.Q1)
    om_plus = quad - 2.0 * cross
    om_minus = quad + 2.0 * cross
    return ((-1.0) ** (mode.n1 + mode.n2) / (np.pi**2 * f.hbar**2)
            * np.exp(-quad / f.hbar)
            * laguerre(mode.n1, om_plus / f.hbar)
            * laguerre(mode.n2, om_minus / f.hbar))


def spectrum(mode: ModeIndex, f: Frequencies) -> float:
    """Energy eigenvalue hbar * [Omega (n1 + n2 + 1) + gamma (n1 - n2)]."""
    return f.hbar * (f.Omega * (mode.n1 + mode.n2 + 1) + f.gamma * (mode.n1 - mode.n2))


def wigner_sector(n: int, xi, f: Frequencies):
    """Dimensionless sector Wigner function hbar*W_n evaluated at energy xi >= 0."""
    xi = np.asarray(xi, dtype=float)
    if np.any(xi < 0.0):
        raise DomainError("sector energy must be non-negative")
    scale = f.hbar * f.Omega
    return np.exp(-2.0 * xi / scale) * laguerre(n, 4.0 * xi / scale) / np.pi


def wigner_sector_derivative(n: int, xi, f: Frequencies):
    """d(hbar*W_n)/dxi, using dL_n/dx = -L^1_{n-1} to avoid cancellation."""
    xi = np.asarray(xi, dtype=float)
    if np.any(xi < 0.0):
        raise DomainError("sector energy must be non-negative")
    scale = f.hbar * f.Omega
    x = 4.0 * xi / scale
    lag_term = -2.0 * laguerre(n, x)
    if n >= 1:
        lag_term = lag_term - 4.0 * laguerre_assoc(n - 1, 1.0, x)
    return np.exp(-2.0 * xi / scale) * lag_term / (np.pi * scale)


def wigner_sector_time_derivative(n: int, f: Frequencies, sector: int,
                                  t: float | np.ndarray):
    """hbar * dW_n/dt along the canonical-IC sector energy, by the chain rule.

    Zero identically when gamma = 0: stationary states stay stationary.
    """
    xi = sector_energy_closed(f, sector, t)
    xidot = sector_power(f, sector, t)
    return wigner_sector_derivative(n, np.maximum(xi, 0.0), f) * xidot


def sk_difference_grid(mode: ModeIndex, sw: SWMap, t: float,
                       grid: GridSpec | None = None,
                       scale: float = 1.0) -> Field2D:
    """Deformed-minus-ordinary Wigner product on the (s, k) plane.

    At each grid point the amplitudes are scaled canonically by (s, k), the
    sector energies xi_i(t; s, k) are computed by the direct route
    (closed-form trajectory, forward map, quadratic energy), and

        D = pi^2 [ W_{n1}(xi_1) W_{n2}(xi_2) - W_{n1}(xi_c) W_{n2}(xi_c) ]

    with the ordinary reference xi_c = (s^2 + k^2) * hbar * Omega / 4, the
    value both sector energies take for theta = eta = 0.  The stored field
    is scale * D.
    """
    if grid is None:
        grid = GridSpec()
    f = frequencies(sw)
    S = grid.s_values()[:, None]
    K = grid.k_values()[None, :]
    ic = canonical_amplitudes(f, s=S, k=K)
    pair = sector_energy_direct(sw, f, ic, t)
    xi1 = np.maximum(np.asarray(pair.xi1), 0.0)
    xi2 = np.maximum(np.asarray(pair.xi2), 0.0)
    xi_c = (S**2 + K**2) * f.hbar * f.Omega / 4.0
    nc_prod = wigner_sector(mode.n1, xi1, f) * wigner_sector(mode.n2, xi2, f)
    ref_prod = wigner_sector(mode.n1, xi_c, f) * wigner_sector(mode.n2, xi_c, f)
    values = scale * np.pi**2 * (nc_prod - ref_prod)
    meta = {
        "omega_t": f.Omega * t,
        "t": t,
        "n1": mode.n1,
        "n2": mode.n2,
        "scale": scale,
    }
    return Field2D(grid=grid, values=values, meta=meta)
