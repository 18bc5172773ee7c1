"""Deformed phase-space algebra and its linear map to canonical variables.

The 2-dim oscillator lives on a phase space where positions and momenta
carry extra commutators set by two constants theta (length^2) and eta
(momentum^2).  A linear Seiberg-Witten (SW) map

    q_i = lam*Q_i - theta/(2*lam*hbar) * eps_ij * P_j
    p_i = mu*P_i  + eta/(2*mu*hbar)   * eps_ij * Q_j

takes ordinary canonical operators (Q, P) to the deformed ones (q, p),
provided the product u = lam*mu satisfies u*(1 - u) = theta*eta/(4*hbar^2).
Everything downstream (effective frequencies, beating dynamics, Wigner
functions) is built on this module.

Sign convention used project-wide: eps_12 = +1, eps_21 = -1.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyFailure, DegenerateDeformation, NonPositivePhysical

__all__ = [
    "LEVI_CIVITA",
    "NCParams",
    "SWMap",
    "Frequencies",
    "PhasePoint",
    "ConstraintReport",
    "validate",
    "solve_sw",
    "frequencies",
    "sw_forward",
    "sw_inverse",
    "constraint_residuals",
]

LEVI_CIVITA = np.array([[0.0, 1.0], [-1.0, 0.0]])

CONSTRAINT_TOL = 1e-12


def _eps_dot(v):
    """Apply the 2-dim Levi-Civita matrix to a (possibly batched) 2-vector."""
    return np.stack([np.asarray(v[1]), -np.asarray(v[0])])


@dataclass(frozen=True)
class NCParams:
    """Physical inputs plus the two deformation constants.

    m, omega, hbar must be strictly positive; theta*eta < hbar^2 is required
    so that the SW map is invertible with real coefficients.
    """

    m: float
    omega: float
    hbar: float
    theta: float = 0.0
    eta: float = 0.0


@dataclass(frozen=True)
class SWMap:
    """Solved map coefficients lam, mu together with their parameters."""

    lam: float
    mu: float
    params: NCParams

    @property
    def product(self) -> float:
        return self.lam * self.mu

    def blocks(self):
        """The four 2x2 blocks (A, B, C, D) of the linear map."""
        p = self.params
        A = self.lam * np.eye(2)
        B = -(p.theta / (2.0 * self.lam * p.hbar)) * LEVI_CIVITA
        C = (p.eta / (2.0 * self.mu * p.hbar)) * LEVI_CIVITA
        D = self.mu * np.eye(2)
        return A, B, C, D


@dataclass(frozen=True)
class Frequencies:
    """Derived scales driving the dynamics.

    alpha, beta are the quadratic-form coefficients of the transformed
    Hamiltonian H = alpha^2 Q^2 + beta^2 P^2 + gamma * sum eps_ij P_i Q_j;
    Omega = 2*alpha*beta is the fast carrier and gamma the slow beat
    frequency.  carrier_sign is the sign of (eta - m^2 omega^2 theta): the
    carrier term of the sector energies flips sign between momentum- and
    position-dominated deformations, which the square root |1 - omega^2 /
    Omega^2|^(1/2) alone cannot express.

    carrier_weight and beat_weight cache sqrt(1 - omega^2/Omega^2) and
    sqrt(1 - gamma^2/Omega^2) in the cancellation-free forms
    |eta - m^2 omega^2 theta|/(2 m hbar Omega) and
    omega*(2 lam mu - 1)/Omega; near eta = m^2 omega^2 theta the naive
    square roots lose half their digits.
    """

    alpha: float
    beta: float
    gamma: float
    Omega: float
    omega: float
    hbar: float
    carrier_sign: float = 1.0
    carrier_weight: float | None = None
    beat_weight: float | None = None

    @property
    def gamma_over_Omega(self) -> float:
        return self.gamma / self.Omega


@dataclass(frozen=True)
class PhasePoint:
    """A phase-space point: 2-vector position q and momentum p.

    Components may be scalars or broadcastable numpy arrays, so whole grids
    of points can be pushed through the maps at once.
    """

    q: np.ndarray
    p: np.ndarray


@dataclass(frozen=True)
class ConstraintReport:
    """Frobenius norms of the three block-matrix constraint residuals."""

    identity: float
    theta_block: float
    eta_block: float
    tol: float = CONSTRAINT_TOL

    @property
    def passed(self) -> bool:
        return max(self.identity, self.theta_block, self.eta_block) < self.tol


def validate(params: NCParams) -> NCParams:
    """Check parameter invariants; return the params if they all hold.

    Raises NonPositivePhysical if m, omega or hbar is not strictly positive,
    and DegenerateDeformation if theta*eta >= hbar^2 (the oscillatory regime
    needs theta*eta strictly below hbar^2).
    """
    for name in ("m", "omega", "hbar"):
        value = getattr(params, name)
        if not np.isfinite(value) or value <= 0.0:
            raise NonPositivePhysical(f"{name} must be strictly positive, got {value}")
    if not (np.isfinite(params.theta) and np.isfinite(params.eta)):
        raise NonPositivePhysical("theta and eta must be finite")
    if params.theta * params.eta >= params.hbar**2:
        raise DegenerateDeformation(
            f"theta*eta = {params.theta * params.eta} >= hbar^2 = {params.hbar**2}"
        )
    return params


def solve_sw(params: NCParams, gauge_ratio: float = 1.0) -> SWMap:
    """Solve u*(1-u) = theta*eta/(4*hbar^2) and split u into lam, mu.

    Of the two quadratic roots the one continuous with u = 1 in the
    commutative limit is taken, u = (1 + sqrt(1 - theta*eta/hbar^2))/2.
    Only the product lam*mu is constrained; gauge_ratio sets lam/mu
    relative to the symmetric choice lam = mu = sqrt(u).  Observables must
    not depend on it.
    """
    params = validate(params)
    if not (np.isfinite(gauge_ratio) and gauge_ratio > 0.0):
        raise NonPositivePhysical(f"gauge_ratio must be strictly positive, got {gauge_ratio}")
    u = 0.5 * (1.0 + np.sqrt(1.0 - params.theta * params.eta / params.hbar**2))
    root = np.sqrt(u)
    return SWMap(lam=gauge_ratio * root, mu=root / gauge_ratio, params=params)


def frequencies(sw: SWMap) -> Frequencies:
    """Derive alpha, beta, gamma and Omega = 2*alpha*beta from a solved map.

    The identity Omega^2 = omega^2*(2*lam*mu - 1)^2 + gamma^2 follows from
    the definitions together with the map constraint; it is re-checked here
    to 1e-12 relative and a failure means an implementation bug.
    """
    p = sw.params
    lam, mu = sw.lam, sw.mu
    alpha2 = p.m * p.omega**2 * lam**2 / 2.0 + p.eta**2 / (8.0 * p.m * p.hbar**2 * mu**2)
    beta2 = mu**2 / (2.0 * p.m) + p.m * p.omega**2 * p.theta**2 / (8.0 * p.hbar**2 * lam**2)
    gamma = p.m * p.omega**2 * p.theta / (2.0 * p.hbar) + p.eta / (2.0 * p.m * p.hbar)
    alpha = np.sqrt(alpha2)
    beta = np.sqrt(beta2)
    Omega = 2.0 * alpha * beta

    expected = p.omega**2 * (2.0 * lam * mu - 1.0) ** 2 + gamma**2
    if abs(Omega**2 - expected) > 1e-12 * Omega**2:
        raise ConsistencyFailure(
            f"Omega identity violated: Omega^2 = {Omega**2}, "
            f"omega^2 (2 lam mu - 1)^2 + gamma^2 = {expected}"
        )

    detuning = p.eta - p.m**2 * p.omega**2 * p.theta
    return Frequencies(
        alpha=float(alpha),
        beta=float(beta),
        gamma=float(gamma),
        Omega=float(Omega),
        omega=p.omega,
        hbar=p.hbar,
        carrier_sign=1.0 if detuning >= 0.0 else -1.0,
        carrier_weight=float(abs(detuning) / (2.0 * p.m * p.hbar * Omega)),
        beat_weight=float(p.omega * (2.0 * lam * mu - 1.0) / Omega),
    )


def sw_forward(sw: SWMap, commutative: PhasePoint) -> PhasePoint:
    """Map canonical (Q, P) to deformed (q, p)."""
    p = sw.params
    Q = np.asarray(commutative.q, dtype=float)
    P = np.asarray(commutative.p, dtype=float)
    q = sw.lam * Q - (p.theta / (2.0 * sw.lam * p.hbar)) * _eps_dot(P)
    pp = sw.mu * P + (p.eta / (2.0 * sw.mu * p.hbar)) * _eps_dot(Q)
    return PhasePoint(q=q, p=pp)


def sw_inverse(sw: SWMap, nc: PhasePoint) -> PhasePoint:
    """Map deformed (q, p) back to canonical (Q, P)."""
    p = sw.params
    det = 1.0 - p.theta * p.eta / p.hbar**2
    if det <= 0.0:
        raise DegenerateDeformation(f"theta*eta/hbar^2 = {1.0 - det} >= 1")
    scale = det**-0.5
    q = np.asarray(nc.q, dtype=float)
    pp = np.asarray(nc.p, dtype=float)
    denom = 2.0 * sw.lam * sw.mu * p.hbar
    Q = sw.mu * scale * (q + (p.theta / denom) * _eps_dot(pp))
    P = sw.lam * scale * (pp - (p.eta / denom) * _eps_dot(q))
    return PhasePoint(q=Q, p=P)


def constraint_residuals(sw: SWMap) -> ConstraintReport:
    """Frobenius norms of the three canonical-algebra block constraints.

    A D^T - B C^T = I, A B^T - B A^T = Theta/hbar, C D^T - D C^T = N/hbar,
    with Theta = theta*eps and N = eta*eps.  Any map produced by solve_sw
    satisfies all three to machine precision; a hand-built map with a
    perturbed lam*mu shows up in the first residual.
    """
    p = sw.params
    A, B, C, D = sw.blocks()
    r_id = A @ D.T - B @ C.T - np.eye(2)
    r_th = A @ B.T - B @ A.T - (p.theta / p.hbar) * LEVI_CIVITA
    r_et = C @ D.T - D @ C.T - (p.eta / p.hbar) * LEVI_CIVITA
    return ConstraintReport(
        identity=float(np.linalg.norm(r_id)),
        theta_block=float(np.linalg.norm(r_th)),
        eta_block=float(np.linalg.norm(r_et)),
    )
