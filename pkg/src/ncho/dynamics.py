"""Phase-space dynamics of the deformed 2-dim oscillator.

The canonical-variable means obey the linear system

    dQ_i/dt = 2*beta^2  * P_i - gamma * eps_ji * Q_j
    dP_i/dt = -2*alpha^2 * Q_i - gamma * eps_ji * P_j

whose closed-form solution is a fast rotation at Omega = 2*alpha*beta
under a slow rotation at gamma.  Sector energies

    xi_i = p_i^2/(2m) + m omega^2 q_i^2 / 2

evaluated on the deformed side are stationary in ordinary quantum
mechanics but oscillate here at the carrier 2*Omega with a beat envelope
at 2*gamma; that non-stationarity is the observable this package exists
to compute.  Every closed form below is paired with an independent
route (fixed-step integrator, or the trajectory+map evaluation) in the
test suite.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .core import Frequencies, PhasePoint, SWMap, sw_forward
from .errors import DomainError, PreconditionError, StepCountTooSmall

__all__ = [
    "State4",
    "InitialAmplitudes",
    "EnergyPair",
    "canonical_amplitudes",
    "eom_rhs",
    "evolve_closed",
    "integrate_oracle",
    "invariants",
    "beat_energy",
    "sector_energy_direct",
    "sector_energy_closed",
    "sector_energy_special",
    "sector_energy_linearized",
    "sector_power",
    "sector_power_linearized",
]


@dataclass(frozen=True)
class State4:
    """Canonical-variable means (Q1, Q2, P1, P2); scalar or array-valued."""

    Q1: float | np.ndarray
    Q2: float | np.ndarray
    P1: float | np.ndarray
    P2: float | np.ndarray

    def as_array(self) -> np.ndarray:
        return np.stack(
            [np.asarray(self.Q1, dtype=float), np.asarray(self.Q2, dtype=float),
             np.asarray(self.P1, dtype=float), np.asarray(self.P2, dtype=float)]
        )

    @staticmethod
    def from_array(a) -> "State4":
        return State4(Q1=a[0], Q2=a[1], P1=a[2], P2=a[3])

    def as_point(self) -> PhasePoint:
        return PhasePoint(q=np.stack([np.asarray(self.Q1), np.asarray(self.Q2)]),
                          p=np.stack([np.asarray(self.P1), np.asarray(self.P2)]))


@dataclass(frozen=True)
class InitialAmplitudes:
    """Free amplitudes (x, y, pi_x, pi_y) parameterising the closed-form solution."""

    x: float | np.ndarray
    y: float | np.ndarray
    pix: float | np.ndarray
    piy: float | np.ndarray


@dataclass(frozen=True)
class EnergyPair:
    """Sector energies (xi1, xi2); their sum is conserved for canonical ICs."""

    xi1: float | np.ndarray
    xi2: float | np.ndarray


def canonical_amplitudes(f: Frequencies, s: float | np.ndarray = 1.0,
                         k: float | np.ndarray = 1.0) -> InitialAmplitudes:
    """The symmetric initial condition behind the beating law.

    x = y = s*sqrt(beta*hbar/(2*alpha)), pi_x = pi_y = k*sqrt(alpha*hbar/(2*beta)).
    s = k = 1 gives sector energies hbar*Omega/2 at t = 0 in the commutative
    limit; (s, k) act as dimensionless phase-space coordinates.
    """
    if not (np.all(np.asarray(f.alpha) > 0.0) and np.all(np.asarray(f.beta) > 0.0)):
        raise PreconditionError("alpha and beta must be positive")
    xamp = np.sqrt(f.beta * f.hbar / (2.0 * f.alpha))
    pamp = np.sqrt(f.alpha * f.hbar / (2.0 * f.beta))
    return InitialAmplitudes(x=s * xamp, y=s * xamp, pix=k * pamp, piy=k * pamp)


def eom_rhs(f: Frequencies, s: State4) -> State4:
    """Right-hand side of the equations of motion (eps_12 = +1)."""
    a2 = f.alpha**2
    b2 = f.beta**2
    g = f.gamma
    return State4(
        Q1=2.0 * b2 * s.P1 + g * s.Q2,
        Q2=2.0 * b2 * s.P2 - g * s.Q1,
        P1=-2.0 * a2 * s.Q1 + g * s.P2,
        P2=-2.0 * a2 * s.Q2 - g * s.P1,
    )


def evolve_closed(f: Frequencies, ic: InitialAmplitudes,
                  t: float | np.ndarray) -> State4:
    """Closed-form trajectory: carrier rotation at Omega, beat rotation at gamma.

    Vectorised over t and over array-valued amplitudes (broadcasting).
    """
    t = np.asarray(t, dtype=float)
    cO, sO = np.cos(f.Omega * t), np.sin(f.Omega * t)
    cg, sg = np.cos(f.gamma * t), np.sin(f.gamma * t)
    r = f.beta / f.alpha
    x, y, px, py = ic.x, ic.y, ic.pix, ic.piy
    return State4(
        Q1=x * cO * cg + y * cO * sg + r * (py * sO * sg + px * sO * cg),
        Q2=y * cO * cg - x * cO * sg - r * (px * sO * sg - py * sO * cg),
        P1=px * cO * cg + py * cO * sg - (y * sO * sg + x * sO * cg) / r,
        P2=py * cO * cg - px * cO * sg + (x * sO * sg - y * sO * cg) / r,
    )


def integrate_oracle(f: Frequencies, s0: State4, t: float | np.ndarray,
                     steps: int) -> State4:
    """Classical fourth-order Runge-Kutta with a fixed step, as an oracle.

    Deterministic for fixed inputs; independent of evolve_closed.  Emits a
    StepCountTooSmall warning when Omega*t/steps > 0.1.  Array-valued states
    integrate as a batch (t may then be an array of matching shape).
    """
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    t = np.asarray(t, dtype=float)
    if np.max(np.abs(f.Omega * t)) / steps > 0.1:
        warnings.warn(
            f"Omega*t/steps = {np.max(np.abs(f.Omega * t)) / steps:.3g} > 0.1; "
            "the result will be inaccurate",
            StepCountTooSmall,
            stacklevel=2,
        )
    h = t / steps
    state = s0.as_array()

    a2 = f.alpha**2
    b2 = f.beta**2
    g = f.gamma

    def rhs(s):
        return np.stack([
            2.0 * b2 * s[2] + g * s[1],
            2.0 * b2 * s[3] - g * s[0],
            -2.0 * a2 * s[0] + g * s[3],
            -2.0 * a2 * s[1] - g * s[2],
        ])

    for _ in range(steps):
        k1 = rhs(state)
        k2 = rhs(state + 0.5 * h * k1)
        k3 = rhs(state + 0.5 * h * k2)
        k4 = rhs(state + h * k3)
        state = state + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return State4.from_array(state)


def invariants(f: Frequencies, s: State4):
    """The two conserved quadratic forms of the motion.

    I1 = sum_i (alpha/beta) Q_i^2 + (beta/alpha) P_i^2   (energy-like)
    I2 = Q1 P2 - Q2 P1                                   (action-like)
    """
    r = f.alpha / f.beta
    I1 = r * (np.asarray(s.Q1) ** 2 + np.asarray(s.Q2) ** 2) \
        + (np.asarray(s.P1) ** 2 + np.asarray(s.P2) ** 2) / r
    I2 = np.asarray(s.Q1) * np.asarray(s.P2) - np.asarray(s.Q2) * np.asarray(s.P1)
    return I1, I2


def beat_energy(f: Frequencies, sector: int, t: float | np.ndarray):
    """Canonical-variable sector energy under canonical ICs:
    (hbar*Omega/2) * (1 - (-1)^sector * sin(2*gamma*t))."""
    _check_sector(sector)
    t = np.asarray(t, dtype=float)
    return 0.5 * f.hbar * f.Omega * (1.0 - (-1.0) ** sector * np.sin(2.0 * f.gamma * t))


def sector_energy_direct(sw: SWMap, f: Frequencies, ic: InitialAmplitudes,
                         t: float | np.ndarray) -> EnergyPair:
    """Sector energies by the direct route: evolve, map forward, evaluate.

    xi_i = p_i^2/(2m) + m omega^2 q_i^2 / 2 on the deformed side.  Works for
    arbitrary initial amplitudes; the independent check of the closed form.
    """
    state = evolve_closed(f, ic, t)
    pt = sw_forward(sw, state.as_point())
    p = sw.params
    xi = pt.p**2 / (2.0 * p.m) + 0.5 * p.m * p.omega**2 * pt.q**2
    return EnergyPair(xi1=xi[0], xi2=xi[1])


def _carrier_weights(f: Frequencies):
    """(sqrt(1 - omega^2/Omega^2), sqrt(1 - gamma^2/Omega^2)) with domain checks.

    Prefers the cancellation-free cached weights when the Frequencies came
    out of the solver; falls back to the direct square roots for hand-built
    instances.
    """
    wc2 = 1.0 - f.omega**2 / f.Omega**2
    wg2 = 1.0 - f.gamma**2 / f.Omega**2
    if wc2 < -1e-12:
        raise DomainError(f"omega = {f.omega} exceeds Omega = {f.Omega}")
    if wg2 < -1e-12:
        raise DomainError(f"|gamma| = {abs(f.gamma)} exceeds Omega = {f.Omega}")
    wc = f.carrier_weight if f.carrier_weight is not None else np.sqrt(max(wc2, 0.0))
    wg = f.beat_weight if f.beat_weight is not None else np.sqrt(max(wg2, 0.0))
    return wc, wg


def sector_energy_closed(f: Frequencies, sector: int, t: float | np.ndarray):
    """Deformed-side sector energy, closed form, canonical ICs (s = k = 1).

    (hbar*Omega/2) * {1 - (-1)^i * [ sgn * sqrt(1 - omega^2/Omega^2) *
        (cos 2 gamma t cos 2 Omega t - (gamma/Omega) sin 2 gamma t sin 2 Omega t)
        + (omega/Omega) * sqrt(1 - gamma^2/Omega^2) * sin 2 gamma t ]}

    where sgn = f.carrier_sign.  The carrier term (frequency 2*Omega) is the
    time-crystal signature; the remaining term is the slow beat.  Agreement
    with sector_energy_direct under canonical ICs is enforced in the tests.
    """
    _check_sector(sector)
    t = np.asarray(t, dtype=float)
    wc, wg = _carrier_weights(f)
    g, Om, w = f.gamma, f.Omega, f.omega
    bracket = f.carrier_sign * wc * (
        np.cos(2.0 * g * t) * np.cos(2.0 * Om * t)
        - (g / Om) * np.sin(2.0 * g * t) * np.sin(2.0 * Om * t)
    ) + (w / Om) * wg * np.sin(2.0 * g * t)
    return 0.5 * f.hbar * Om * (1.0 - (-1.0) ** sector * bracket)


def sector_energy_special(f: Frequencies, sector: int, t: float | np.ndarray):
    """Sector energy when one deformation constant vanishes (Omega^2 = omega^2 + gamma^2).

    The general carrier weight collapses to gamma/Omega and the beat weight
    to 1 - gamma^2/Omega^2.  Raises PreconditionError unless the frequencies
    actually satisfy the one-parameter relation.
    """
    _check_sector(sector)
    if abs(f.Omega**2 - f.gamma**2 - f.omega**2) > 1e-12 * f.Omega**2:
        raise PreconditionError(
            "requires theta*eta = 0 (Omega^2 = omega^2 + gamma^2); "
            f"got Omega^2 - gamma^2 - omega^2 = {f.Omega**2 - f.gamma**2 - f.omega**2}"
        )
    t = np.asarray(t, dtype=float)
    g, Om = f.gamma, f.Omega
    rat = g / Om
    bracket = f.carrier_sign * rat * (
        np.cos(2.0 * g * t) * np.cos(2.0 * Om * t)
        - rat * np.sin(2.0 * g * t) * np.sin(2.0 * Om * t)
    ) + (1.0 - rat**2) * np.sin(2.0 * g * t)
    return 0.5 * f.hbar * Om * (1.0 - (-1.0) ** sector * bracket)


def sector_energy_linearized(f: Frequencies, sector: int, t: float | np.ndarray):
    """First order in gamma (gamma << Omega, gamma*t small): the secular ramp
    (hbar*Omega/2) * [1 - (-1)^i (gamma/Omega) (2 Omega t + sgn * cos 2 Omega t)]."""
    _check_sector(sector)
    t = np.asarray(t, dtype=float)
    rat = f.gamma / f.Omega
    term = rat * (2.0 * f.Omega * t + f.carrier_sign * np.cos(2.0 * f.Omega * t))
    return 0.5 * f.hbar * f.Omega * (1.0 - (-1.0) ** sector * term)


def sector_power(f: Frequencies, sector: int, t: float | np.ndarray):
    """Exact time derivative of sector_energy_closed.

    Identically zero when theta = eta = 0 (gamma = 0 and unit carrier
    weight), restoring ordinary stationarity.
    """
    _check_sector(sector)
    t = np.asarray(t, dtype=float)
    wc, wg = _carrier_weights(f)
    g, Om, w = f.gamma, f.Omega, f.omega
    dbracket = f.carrier_sign * wc * (
        -4.0 * g * np.sin(2.0 * g * t) * np.cos(2.0 * Om * t)
        - 2.0 * Om * (1.0 + g**2 / Om**2) * np.cos(2.0 * g * t) * np.sin(2.0 * Om * t)
    ) + 2.0 * g * (w / Om) * wg * np.cos(2.0 * g * t)
    return -0.5 * f.hbar * Om * (-1.0) ** sector * dbracket


def sector_power_linearized(f: Frequencies, sector: int, t: float | np.ndarray):
    """First-order power: (-1)^(i+1) * hbar*gamma*Omega * (1 - sgn * sin 2 Omega t).

    Oscillates at the carrier 2*Omega with amplitude hbar*gamma*Omega, the
    directly measurable magnitude of the effect.
    """
    _check_sector(sector)
    t = np.asarray(t, dtype=float)
    return (-1.0) ** (sector + 1) * f.hbar * f.gamma * f.Omega * (
        1.0 - f.carrier_sign * np.sin(2.0 * f.Omega * t)
    )


def _check_sector(sector: int) -> None:
    if sector not in (1, 2):
        raise DomainError(f"sector must be 1 or 2, got {sector!r}")
