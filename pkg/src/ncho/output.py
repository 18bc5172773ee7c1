"""Deterministic dataset serialisation: CSV/JSON columns plus a metadata sidecar.

CSV files are byte-reproducible for identical run configurations: fixed
'%.17g' float formatting, '#'-prefixed metadata comment lines with sorted
keys, LF newlines, and no timestamps (the timestamp lives only in the
sidecar JSON).
"""
from __future__ import annotations

import datetime
import json
from pathlib import Path

import numpy as np

from . import __version__
from .core import Frequencies

__all__ = ["dataset_meta", "write_columns", "write_field", "write_sidecar"]

FLOAT_FMT = "%.17g"


def _plain(obj):
    """Recursively convert numpy scalars so metadata is JSON-serialisable."""
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def dataset_meta(config: dict, f: Frequencies) -> dict:
    """Resolved run description recorded next to every dataset."""
    return {
        "tool": "ncho",
        "version": __version__,
        "config": config,
        "frequencies": {
            "alpha": f.alpha,
            "beta": f.beta,
            "gamma": f.gamma,
            "Omega": f.Omega,
            "omega": f.omega,
            "hbar": f.hbar,
            "carrier_sign": f.carrier_sign,
            "gamma_over_Omega": f.gamma_over_Omega,
        },
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }


def _comment_lines(meta: dict) -> list[str]:
    lines = [f"# tool = ncho {__version__}"]
    freqs = meta.get("frequencies", {})
    for key in sorted(freqs):
        lines.append(f"# {key} = " + FLOAT_FMT % freqs[key])
    cfg = meta.get("config", {})
    for key in sorted(cfg):
        if key == "output":
            # the destination is not part of the data; keeping it out makes
            # re-runs into different directories byte-identical
            continue
        lines.append(f"# config.{key} = {json.dumps(_plain(cfg[key]), sort_keys=True)}")
    return lines


def write_columns(path: Path, columns: dict, meta: dict, fmt: str = "csv") -> Path:
    """Write named columns as CSV (or JSON) plus the sidecar; returns the data path."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    names = list(columns)
    arrays = [np.asarray(columns[n], dtype=float) for n in names]
    if fmt == "json":
        payload = {"meta": _plain({k: v for k, v in meta.items() if k != "timestamp"}),
                   "columns": {n: a.tolist() for n, a in zip(names, arrays)}}
        path.write_text(json.dumps(payload, sort_keys=True), encoding="utf-8")
    elif fmt == "csv":
        rowfmt = ",".join([FLOAT_FMT] * len(arrays))
        body = "\n".join(rowfmt % row for row in zip(*arrays))
        text = "\n".join(_comment_lines(meta)) + "\n" + ",".join(names) + "\n" + body + "\n"
        path.write_text(text, encoding="utf-8")
    else:
        raise ValueError(f"unknown format {fmt!r}")
    write_sidecar(path, meta)
    return path


def write_field(path: Path, fld, meta: dict, fmt: str = "csv") -> Path:
    """Write a Field2D in long format: columns s, k, value."""
    S = np.repeat(fld.grid.s_values(), fld.grid.nk)
    K = np.tile(fld.grid.k_values(), fld.grid.ns)
    merged = dict(meta)
    merged["config"] = {**meta.get("config", {}), "frame": _plain(fld.meta)}
    return write_columns(path, {"s": S, "k": K, "value": fld.values.ravel()},
                         merged, fmt=fmt)


def write_sidecar(data_path: Path, meta: dict) -> Path:
    side = data_path.with_suffix(data_path.suffix + ".meta.json")
    side.write_text(json.dumps(_plain(meta), sort_keys=True, indent=2), encoding="utf-8")
    return side
