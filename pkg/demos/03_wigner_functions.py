"""Wigner eigenfunctions: the spectrum, the sector profiles, and their
time derivatives once the deformation makes the sector energies move.

Run:  python3 demos/03_wigner_functions.py   (writes demos/output/*.png)
"""
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from ncho import (ModeIndex, NCParams, State4, frequencies, gamma_ratio_params,
                  nc_wigner_2d, solve_sw, spectrum, wigner_sector,
                  wigner_sector_time_derivative)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

sw = solve_sw(NCParams(m=1.0, omega=1.0, hbar=1.0, theta=0.1, eta=0.1))
f = frequencies(sw)

print("Spectrum: E = hbar [Omega (n1+n2+1) + gamma (n1-n2)]")
print("the deformation splits the ordinary degeneracies by 2*hbar*gamma:")
for n1, n2 in ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)):
    print(f"  E({n1},{n2}) = {spectrum(ModeIndex(n1, n2), f):.6f}")

# --- 1-dim sector profiles ---------------------------------------------
xi = np.linspace(0.0, 4.0 * f.hbar * f.Omega, 600)
fig, ax = plt.subplots(figsize=(6, 3.6))
for n in range(4):
    ax.plot(xi / (f.hbar * f.Omega), wigner_sector(n, xi, f), lw=1.2,
            label=f"n = {n}")
ax.set_xlabel(r"$\xi/\hbar\Omega$")
ax.set_ylabel(r"$\hbar W_n(\xi)$")
ax.set_title("sector Wigner functions (Laguerre-Gaussian ladder)")
ax.legend()
fig.tight_layout()
fig.savefig(OUT / "wigner_sectors.png", dpi=150)
print(f"wrote {OUT / 'wigner_sectors.png'}")

# --- a 2-dim slice ------------------------------------------------------
q = np.linspace(-3.0, 3.0, 201)
Q1, P1 = np.meshgrid(q, q, indexing="ij")
rho = nc_wigner_2d(ModeIndex(1, 0), State4(Q1, 0.0, P1, 0.0), f)
fig, ax = plt.subplots(figsize=(4.6, 3.8))
im = ax.pcolormesh(Q1, P1, np.pi**2 * f.hbar**2 * rho, cmap="RdBu_r",
                   shading="auto")
fig.colorbar(im, ax=ax, label=r"$\pi^2\hbar^2\,\rho$")
ax.set_xlabel(r"$Q_1$")
ax.set_ylabel(r"$\Pi_1$")
ax.set_title("mode (1,0), slice $Q_2=\\Pi_2=0$")
fig.tight_layout()
fig.savefig(OUT / "wigner_2d_slice.png", dpi=150)
print(f"wrote {OUT / 'wigner_2d_slice.png'}")

# --- non-stationarity of the state itself ------------------------------
swd = solve_sw(gamma_ratio_params(0.002))
fd = frequencies(swd)
ts = np.linspace(0.0, 24.0 * np.pi / fd.Omega, 3000)
fig, ax = plt.subplots(figsize=(7, 3.6))
for n, style in ((0, "k-"), (1, "r:"), (2, "g--")):
    ax.plot(fd.Omega * ts, wigner_sector_time_derivative(n, fd, 1, ts),
            style, lw=1.1, label=f"$n_1$ = {n}")
ax.set_xlabel(r"$\Omega t$")
ax.set_ylabel(r"$\hbar\,\partial W_{n_1}(\xi_1(t))/\partial t$")
ax.set_title("stationary states that are no longer stationary")
ax.legend()
fig.tight_layout()
fig.savefig(OUT / "wigner_time_derivative.png", dpi=150)
print(f"wrote {OUT / 'wigner_time_derivative.png'}")
