"""Figure-ready datasets: beating energies, their power, Wigner derivatives,
and the supplementary (s, k) difference frames.

All presets default to the carrier-to-beat ratio gamma/Omega = 0.002 realised
with a momentum-only deformation (theta = 0), the one-parameter case in which
both the slow beat and the fast 2*Omega carrier are visible.  Datasets are
plain column arrays; serialisation lives in output.py.
"""
from __future__ import annotations

import numpy as np

from .core import NCParams, SWMap, frequencies, solve_sw
from .dynamics import sector_energy_closed, sector_power
from .wigner import GridSpec, ModeIndex, sk_difference_grid, wigner_sector_time_derivative

__all__ = [
    "FIGURE_GAMMA_RATIO",
    "SAMPLES_PER_CARRIER_PERIOD",
    "SUPPLEMENTARY_FRAMES",
    "gamma_ratio_params",
    "default_figure_map",
    "fig1_dataset",
    "fig2_dataset",
    "fig3_dataset",
    "figS_frames",
]

FIGURE_GAMMA_RATIO = 0.002
# The carrier oscillates at 2*Omega (period pi/Omega); 48 samples per period
# keeps a comfortable Nyquist margin.
SAMPLES_PER_CARRIER_PERIOD = 48

# (mode pair, amplification) for the supplementary frames.
SUPPLEMENTARY_FRAMES = (
    (ModeIndex(0, 1), 1e2),
    (ModeIndex(1, 1), 1e4),
    (ModeIndex(2, 5), 1e2),
)


def gamma_ratio_params(ratio: float = FIGURE_GAMMA_RATIO, m: float = 1.0,
                       omega: float = 1.0, hbar: float = 1.0) -> NCParams:
    """Parameters hitting gamma/Omega = ratio exactly with theta = 0.

    With theta = 0: gamma = eta/(2 m hbar) and Omega^2 = omega^2 + gamma^2,
    so gamma = ratio * omega / sqrt(1 - ratio^2) and eta = 2 m hbar gamma.
    """
    if not 0.0 <= ratio < 1.0:
        raise ValueError(f"ratio must be in [0, 1), got {ratio}")
    gamma = ratio * omega / np.sqrt(1.0 - ratio**2)
    return NCParams(m=m, omega=omega, hbar=hbar, theta=0.0, eta=2.0 * m * hbar * gamma)


def default_figure_map(gauge_ratio: float = 1.0) -> SWMap:
    return solve_sw(gamma_ratio_params(), gauge_ratio=gauge_ratio)


def _carrier_dt(Omega: float) -> float:
    return np.pi / (SAMPLES_PER_CARRIER_PERIOD * Omega)


def _time_grid(Omega: float, t_end: float) -> np.ndarray:
    dt = _carrier_dt(Omega)
    n = int(np.ceil(t_end / dt)) + 1
    return np.arange(n) * dt


def fig1_dataset(sw: SWMap, window: str = "envelope"):
    """Dimensionless sector energies xi_i/(hbar Omega) versus Omega*t.

    window = "envelope": two full beat periods, gamma*t in [0, 2*pi];
    window = "zoom": Omega*t in [0, 2.5*pi], resolving the carrier.
    Columns: omega_t, xi1, xi2 (both energies scaled by hbar*Omega).
    """
    f = frequencies(sw)
    ts = _window_times(f, window)
    scale = f.hbar * f.Omega
    cols = {
        "omega_t": f.Omega * ts,
        "xi1_over_hbar_omega": sector_energy_closed(f, 1, ts) / scale,
        "xi2_over_hbar_omega": sector_energy_closed(f, 2, ts) / scale,
    }
    return cols, f


def fig2_dataset(sw: SWMap, window: str = "envelope"):
    """Dimensionless power xi1_dot/(hbar Omega^2) plus the modulation reference.

    The reference line is the first-order shape (gamma/Omega)*(1 - sin 2 Omega t)
    whose amplitude hbar*gamma*Omega is the measurable signature.
    """
    f = frequencies(sw)
    ts = _window_times(f, window)
    scale = f.hbar * f.Omega**2
    cols = {
        "omega_t": f.Omega * ts,
        "xidot1_over_hbar_omega2": sector_power(f, 1, ts) / scale,
        "modulation_over_hbar_omega2": (f.gamma / f.Omega)
        * (1.0 - f.carrier_sign * np.sin(2.0 * f.Omega * ts)),
    }
    return cols, f


def fig3_dataset(sw: SWMap, orders=(0, 1, 2)):
    """hbar * dW_n/dt for sector 1 over two beat periods, one column per order."""
    f = frequencies(sw)
    ts = _window_times(f, "envelope")
    cols = {"omega_t": f.Omega * ts}
    for n in orders:
        cols[f"hbar_dw{n}_dt"] = wigner_sector_time_derivative(n, f, 1, ts)
    return cols, f


def figS_frames(sw: SWMap, grid: GridSpec | None = None, scale_override=None):
    """The 24 supplementary difference frames: 3 mode pairs x 8 times.

    Times are Omega*t = l*pi/8 for l = 1..8.  Returns a list of
    (label, Field2D); labels are 'm<n1><n2>_l<l>'.
    """
    f = frequencies(sw)
    frames = []
    for mode, amp in SUPPLEMENTARY_FRAMES:
        scale = amp if scale_override is None else scale_override
        for ell in range(1, 9):
            t = ell * np.pi / (8.0 * f.Omega)
            fld = sk_difference_grid(mode, sw, t, grid=grid, scale=scale)
            fld.meta["ell"] = ell
            frames.append((f"m{mode.n1}{mode.n2}_l{ell}", fld))
    return frames, f


def _window_times(f, window: str) -> np.ndarray:
    if window == "envelope":
        if f.gamma == 0.0:
            # no beat to resolve; fall back to a few carrier periods
            return _time_grid(f.Omega, 8.0 * np.pi / f.Omega)
        return _time_grid(f.Omega, 2.0 * np.pi / abs(f.gamma))
    if window == "zoom":
        return _time_grid(f.Omega, 2.5 * np.pi / f.Omega)
    raise ValueError(f"unknown window {window!r}")
