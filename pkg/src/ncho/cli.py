"""Command-line front end: solve the map, dump trajectories, emit figure datasets.

    ncho solve      [--theta T --eta E ...]           map + frequencies + residuals
    ncho trajectory [--out DIR --oracle ...]          closed-form trajectory CSV
    ncho figure {fig1,fig2,fig3,figS} [--out DIR ...] figure-ready datasets

Exit codes: 0 success, 2 validation/usage errors, 3 I/O errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .core import (NCParams, constraint_residuals, frequencies, solve_sw, validate)
from .dynamics import (InitialAmplitudes, State4, canonical_amplitudes, evolve_closed,
                       integrate_oracle, invariants, sector_energy_direct)
from .errors import NCError, UnknownFigure
from .figures import (FIGURE_GAMMA_RATIO, fig1_dataset, fig2_dataset, fig3_dataset,
                      figS_frames, gamma_ratio_params)
from .output import dataset_meta, write_columns, write_field
from .wigner import GridSpec

DEMO_PARAMS = NCParams(m=1.0, omega=1.0, hbar=1.0, theta=0.1, eta=0.1)

# Default --oracle step budget: 50 steps per carrier period with a floor
# high enough that the default run stays below 1e-8 deviation.
ORACLE_STEP_FLOOR = 12_000
ORACLE_STEPS_PER_PERIOD = 50


@dataclass
class RunConfig:
    """Fully resolved run description (defaults <- config file <- flags)."""

    params: NCParams
    gauge_ratio: float = 1.0
    ics: dict = field(default_factory=lambda: {"s": 1.0, "k": 1.0})
    time_grid: dict = field(default_factory=lambda: {"t_start": 0.0, "t_end": 100.0,
                                                     "samples": 2001})
    grid: GridSpec = field(default_factory=GridSpec)
    out: Path = Path("out")
    fmt: str = "csv"
    scale: float | None = None

    def as_dict(self) -> dict:
        return {
            "params": asdict(self.params),
            "gauge_ratio": self.gauge_ratio,
            "ics": dict(self.ics),
            "time_grid": dict(self.time_grid),
            "grid": asdict(self.grid),
            "output": {"format": self.fmt, "path": str(self.out), "scale": self.scale},
        }

    def amplitudes(self, f) -> InitialAmplitudes:
        if {"x", "y", "pix", "piy"} <= set(self.ics):
            return InitialAmplitudes(x=self.ics["x"], y=self.ics["y"],
                                     pix=self.ics["pix"], piy=self.ics["piy"])
        return canonical_amplitudes(f, s=self.ics.get("s", 1.0), k=self.ics.get("k", 1.0))


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _resolve(args, default_params: NCParams) -> RunConfig:
    raw = _load_config(args.config)
    p = dict(raw.get("params", {}))
    for name in ("m", "omega", "hbar", "theta", "eta"):
        override = getattr(args, name, None)
        if override is not None:
            p[name] = override
    params = NCParams(**{**asdict(default_params), **p}) if p else default_params

    cfg = RunConfig(params=params)
    if "gauge_ratio" in raw:
        cfg.gauge_ratio = float(raw["gauge_ratio"])
    if getattr(args, "gauge_ratio", None) is not None:
        cfg.gauge_ratio = args.gauge_ratio
    if "ics" in raw:
        cfg.ics = dict(raw["ics"])
    if "time_grid" in raw:
        cfg.time_grid = {**cfg.time_grid, **raw["time_grid"]}
    if "grid" in raw:
        cfg.grid = GridSpec(**raw["grid"])
    out_cfg = raw.get("output", {})
    cfg.out = Path(getattr(args, "out", None) or out_cfg.get("path", "out"))
    cfg.fmt = getattr(args, "format", None) or out_cfg.get("format", "csv")
    if getattr(args, "scale", None) is not None:
        cfg.scale = args.scale
    elif "scale" in out_cfg:
        cfg.scale = out_cfg["scale"]
    if int(cfg.time_grid.get("samples", 2)) < 2:
        raise NCError("time_grid.samples must be >= 2")
    return cfg


def cmd_solve(args) -> int:
    cfg = _resolve(args, DEMO_PARAMS)
    params = validate(cfg.params)
    sw = solve_sw(params, gauge_ratio=cfg.gauge_ratio)
    f = frequencies(sw)
    rep = constraint_residuals(sw)
    summary = {
        "params": asdict(params),
        "gauge_ratio": cfg.gauge_ratio,
        "sw_map": {"lambda": sw.lam, "mu": sw.mu, "lambda_mu": sw.product},
        "frequencies": {"alpha": f.alpha, "beta": f.beta, "gamma": f.gamma,
                        "Omega": f.Omega, "gamma_over_Omega": f.gamma_over_Omega,
                        "carrier_sign": f.carrier_sign},
        "residuals": {"identity": rep.identity, "theta_block": rep.theta_block,
                      "eta_block": rep.eta_block, "tol": rep.tol,
                      "passed": rep.passed},
    }
    if args.json:
        print(json.dumps(summary, sort_keys=True, indent=2))
        return 0
    print(f"params: m={params.m:g} omega={params.omega:g} hbar={params.hbar:g} "
          f"theta={params.theta:g} eta={params.eta:g}")
    print(f"map:    lambda={sw.lam:.17g} mu={sw.mu:.17g} lambda*mu={sw.product:.17g}")
    print(f"freqs:  alpha={f.alpha:.17g} beta={f.beta:.17g}")
    print(f"        gamma={f.gamma:.17g} Omega={f.Omega:.17g} "
          f"gamma/Omega={f.gamma_over_Omega:.17g}")
    print(f"residuals: identity={rep.identity:.3e} theta={rep.theta_block:.3e} "
          f"eta={rep.eta_block:.3e} (tol {rep.tol:g}) -> "
          f"{'PASS' if rep.passed else 'FAIL'}")
    return 0


def cmd_trajectory(args) -> int:
    cfg = _resolve(args, gamma_ratio_params(FIGURE_GAMMA_RATIO))
    sw = solve_sw(validate(cfg.params), gauge_ratio=cfg.gauge_ratio)
    f = frequencies(sw)
    tg = cfg.time_grid
    # the grid is specified in units of 1/Omega
    ts = np.linspace(tg["t_start"], tg["t_end"], int(tg["samples"])) / f.Omega
    ic = cfg.amplitudes(f)
    st = evolve_closed(f, ic, ts)
    I1, I2 = invariants(f, st)
    pair = sector_energy_direct(sw, f, ic, ts)
    columns = {"t": ts, "Q1": st.Q1, "Q2": st.Q2, "P1": st.P1, "P2": st.P2,
               "I1": I1, "I2": I2, "xi1": pair.xi1, "xi2": pair.xi2}

    meta = dataset_meta(cfg.as_dict(), f)
    if args.oracle:
        steps = args.steps or max(
            ORACLE_STEP_FLOOR,
            int(np.ceil(ORACLE_STEPS_PER_PERIOD * f.Omega * ts[-1] / np.pi)),
        )
        oracle = _oracle_trajectory(f, st, ts, steps)
        for i, name in enumerate(("Q1", "Q2", "P1", "P2")):
            columns[name + "_oracle"] = oracle[i]
        closed = st.as_array()
        max_dev = float(np.max(np.abs(closed - oracle)))
        meta["oracle"] = {"steps": steps, "max_deviation": max_dev}
        print(f"oracle: steps={steps} max deviation={max_dev:.3e}")

    path = write_columns(cfg.out / f"trajectory.{cfg.fmt}", columns, meta, fmt=cfg.fmt)
    print(f"wrote {path}")
    return 0


def _oracle_trajectory(f, st: State4, ts: np.ndarray, steps_total: int) -> np.ndarray:
    """Integrate segment by segment through the sample times (shared state)."""
    out = np.empty((4, ts.size))
    s0 = State4(Q1=float(np.asarray(st.Q1)[0]), Q2=float(np.asarray(st.Q2)[0]),
                P1=float(np.asarray(st.P1)[0]), P2=float(np.asarray(st.P2)[0]))
    out[:, 0] = s0.as_array()
    span = ts[-1] - ts[0]
    state = s0
    for i in range(1, ts.size):
        dt = ts[i] - ts[i - 1]
        n = max(1, int(round(steps_total * dt / span))) if span > 0 else 1
        state = integrate_oracle(f, state, dt, n)
        out[:, i] = state.as_array()
    return out


def cmd_figure(args) -> int:
    cfg = _resolve(args, gamma_ratio_params(args.gamma_ratio or FIGURE_GAMMA_RATIO))
    sw = solve_sw(validate(cfg.params), gauge_ratio=cfg.gauge_ratio)
    name = args.name
    written = []
    if name == "fig1":
        for window in ("envelope", "zoom"):
            cols, f = fig1_dataset(sw, window=window)
            meta = dataset_meta({**cfg.as_dict(), "figure": name, "window": window}, f)
            written.append(write_columns(cfg.out / f"fig1_{window}.{cfg.fmt}",
                                         cols, meta, fmt=cfg.fmt))
    elif name == "fig2":
        for window in ("envelope", "zoom"):
            cols, f = fig2_dataset(sw, window=window)
            meta = dataset_meta({**cfg.as_dict(), "figure": name, "window": window}, f)
            written.append(write_columns(cfg.out / f"fig2_{window}.{cfg.fmt}",
                                         cols, meta, fmt=cfg.fmt))
    elif name == "fig3":
        cols, f = fig3_dataset(sw)
        meta = dataset_meta({**cfg.as_dict(), "figure": name}, f)
        written.append(write_columns(cfg.out / f"fig3.{cfg.fmt}", cols, meta,
                                     fmt=cfg.fmt))
    elif name == "figS":
        frames, f = figS_frames(sw, grid=cfg.grid, scale_override=cfg.scale)
        for label, fld in frames:
            meta = dataset_meta({**cfg.as_dict(), "figure": name, "frame": label}, f)
            written.append(write_field(cfg.out / f"figS_{label}.{cfg.fmt}", fld,
                                       meta, fmt=cfg.fmt))
    else:
        raise UnknownFigure(f"unknown figure preset {name!r}")
    for path in written:
        print(f"wrote {path}")
    return 0


def _add_param_flags(sub):
    for name, help_ in (("m", "mass"), ("omega", "bare angular frequency"),
                        ("hbar", "action scale"), ("theta", "position deformation"),
                        ("eta", "momentum deformation")):
        sub.add_argument(f"--{name}", type=float, default=None, help=help_)
    sub.add_argument("--gauge-ratio", dest="gauge_ratio", type=float, default=None,
                     help="free split of lambda*mu (observables are independent of it)")
    sub.add_argument("--config", default=None, help="JSON run configuration file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncho", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    p_solve = subs.add_parser("solve", help="solve the map constraint and report scales")
    _add_param_flags(p_solve)
    p_solve.add_argument("--json", action="store_true", help="machine-readable output")
    p_solve.set_defaults(func=cmd_solve)

    p_traj = subs.add_parser("trajectory", help="closed-form trajectory dataset")
    _add_param_flags(p_traj)
    p_traj.add_argument("--out", default=None, help="output directory")
    p_traj.add_argument("--format", choices=("csv", "json"), default=None)
    p_traj.add_argument("--oracle", action="store_true",
                        help="add fixed-step integrator columns and deviation summary")
    p_traj.add_argument("--steps", type=int, default=None,
                        help="override the oracle step budget")
    p_traj.set_defaults(func=cmd_trajectory)

    p_fig = subs.add_parser("figure", help="emit a figure-ready dataset")
    p_fig.add_argument("name", choices=("fig1", "fig2", "fig3", "figS"))
    _add_param_flags(p_fig)
    p_fig.add_argument("--gamma-ratio", dest="gamma_ratio", type=float, default=None,
                       help=f"carrier-to-beat ratio preset (default {FIGURE_GAMMA_RATIO})")
    p_fig.add_argument("--out", default=None, help="output directory")
    p_fig.add_argument("--format", choices=("csv", "json"), default=None)
    p_fig.add_argument("--scale", type=float, default=None,
                       help="override the figS amplification factor")
    p_fig.set_defaults(func=cmd_figure)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NCError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
