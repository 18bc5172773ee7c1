"""End-to-end CLI tests: exit codes, dataset contracts, reproducibility."""
import json

import numpy as np
import pytest

from ncho.cli import main


def read_csv(path):
    comments, header, rows = [], None, []
    for line in path.read_text(encoding="utf-8").splitlines():
        if line.startswith("#"):
            comments.append(line)
        elif header is None:
            header = line.split(",")
        else:
            rows.append([float(v) for v in line.split(",")])
    return comments, header, np.array(rows)


class TestSolve:
    def test_demo_defaults(self, capsys):
        assert main(["solve"]) == 0
        out = capsys.readouterr().out
        assert "gamma=0.1" in out
        assert "Omega=1" in out
        assert "PASS" in out

    def test_json_summary(self, capsys):
        assert main(["solve", "--json"]) == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary["frequencies"]["gamma"] == pytest.approx(0.1, rel=1e-14)
        assert summary["frequencies"]["Omega"] == pytest.approx(1.0, rel=1e-14)
        assert summary["residuals"]["passed"] is True
        assert summary["residuals"]["identity"] < 1e-12

    def test_degenerate_deformation_exits_2(self, capsys):
        assert main(["solve", "--theta", "1", "--eta", "1"]) == 2
        assert "DegenerateDeformation" in capsys.readouterr().err

    def test_commutative_limit(self, capsys):
        assert main(["solve", "--theta", "0", "--eta", "0", "--json"]) == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary["frequencies"]["gamma"] == 0.0
        assert summary["frequencies"]["Omega"] == pytest.approx(1.0, rel=1e-15)

    def test_usage_error_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["figure", "nosuchfigure"])
        assert exc.value.code == 2


class TestTrajectory:
    def test_columns_and_invariants(self, tmp_path, capsys):
        cfg = {"time_grid": {"t_start": 0.0, "t_end": 50.0, "samples": 501}}
        cfg_path = tmp_path / "run.json"
        cfg_path.write_text(json.dumps(cfg))
        assert main(["trajectory", "--config", str(cfg_path),
                     "--out", str(tmp_path)]) == 0
        comments, header, rows = read_csv(tmp_path / "trajectory.csv")
        assert header == ["t", "Q1", "Q2", "P1", "P2", "I1", "I2", "xi1", "xi2"]
        assert rows.shape == (501, 9)
        i1, i2 = rows[:, 5], rows[:, 6]
        assert np.max(np.abs(i1 - i1[0])) < 1e-10
        assert np.max(np.abs(i2 - i2[0])) < 1e-10
        assert any("gamma" in c for c in comments)
        assert (tmp_path / "trajectory.csv.meta.json").exists()

    def test_initial_row_matches_canonical_amplitudes(self, tmp_path):
        assert main(["trajectory", "--out", str(tmp_path)]) == 0
        _, header, rows = read_csv(tmp_path / "trajectory.csv")
        meta = json.loads((tmp_path / "trajectory.csv.meta.json").read_text())
        f = meta["frequencies"]
        x = np.sqrt(f["beta"] * f["hbar"] / (2.0 * f["alpha"]))
        p = np.sqrt(f["alpha"] * f["hbar"] / (2.0 * f["beta"]))
        assert rows[0, 0] == 0.0
        np.testing.assert_allclose(rows[0, 1:5], [x, x, p, p], rtol=1e-12)

    def test_oracle_deviation_within_default_budget(self, tmp_path, capsys):
        cfg = {"time_grid": {"t_start": 0.0, "t_end": 100.0, "samples": 101}}
        cfg_path = tmp_path / "run.json"
        cfg_path.write_text(json.dumps(cfg))
        assert main(["trajectory", "--config", str(cfg_path), "--out", str(tmp_path),
                     "--oracle"]) == 0
        meta = json.loads((tmp_path / "trajectory.csv.meta.json").read_text())
        assert meta["oracle"]["max_deviation"] < 1e-8
        _, header, rows = read_csv(tmp_path / "trajectory.csv")
        assert "Q1_oracle" in header
        dev = np.max(np.abs(rows[:, 1:5] - rows[:, 9:13]))
        assert dev < 1e-8

    def test_json_format(self, tmp_path):
        assert main(["trajectory", "--out", str(tmp_path), "--format", "json"]) == 0
        payload = json.loads((tmp_path / "trajectory.json").read_text())
        assert set(payload["columns"]) >= {"t", "Q1", "xi1"}
        assert "timestamp" not in payload["meta"]

    def test_explicit_amplitudes_config(self, tmp_path):
        cfg = {"ics": {"x": 1.0, "y": 0.0, "pix": 0.0, "piy": 0.0},
               "params": {"theta": 0.0, "eta": 0.0},
               "time_grid": {"t_start": 0.0, "t_end": 6.0, "samples": 7}}
        cfg_path = tmp_path / "run.json"
        cfg_path.write_text(json.dumps(cfg))
        assert main(["trajectory", "--config", str(cfg_path),
                     "--out", str(tmp_path)]) == 0
        _, _, rows = read_csv(tmp_path / "trajectory.csv")
        np.testing.assert_allclose(rows[:, 1], np.cos(rows[:, 0]), atol=1e-13)


class TestFigure:
    def test_fig1_files_and_shape(self, tmp_path):
        assert main(["figure", "fig1", "--out", str(tmp_path)]) == 0
        for window in ("envelope", "zoom"):
            comments, header, rows = read_csv(tmp_path / f"fig1_{window}.csv")
            assert header == ["omega_t", "xi1_over_hbar_omega", "xi2_over_hbar_omega"]
            assert rows.shape[0] > 100
            # dimensionless energies stay within the beat envelope [0, 1]
            assert np.all(rows[:, 1] > -0.01) and np.all(rows[:, 1] < 1.01)

    def test_fig2_modulation_column(self, tmp_path):
        assert main(["figure", "fig2", "--out", str(tmp_path)]) == 0
        _, header, rows = read_csv(tmp_path / "fig2_zoom.csv")
        assert header[2] == "modulation_over_hbar_omega2"
        meta = json.loads((tmp_path / "fig2_zoom.csv.meta.json").read_text())
        ratio = meta["frequencies"]["gamma_over_Omega"]
        assert np.max(rows[:, 2]) == pytest.approx(2.0 * ratio, rel=1e-3)

    def test_fig3_columns(self, tmp_path):
        assert main(["figure", "fig3", "--out", str(tmp_path)]) == 0
        _, header, rows = read_csv(tmp_path / "fig3.csv")
        assert header == ["omega_t", "hbar_dw0_dt", "hbar_dw1_dt", "hbar_dw2_dt"]
        assert rows.shape[0] > 1000

    def test_figs_zero_when_commutative(self, tmp_path):
        cfg = {"grid": {"s_min": -3.0, "s_max": 3.0, "k_min": -3.0, "k_max": 3.0,
                        "ns": 31, "nk": 31}}
        cfg_path = tmp_path / "run.json"
        cfg_path.write_text(json.dumps(cfg))
        assert main(["figure", "figS", "--config", str(cfg_path),
                     "--theta", "0", "--eta", "0", "--out", str(tmp_path)]) == 0
        files = sorted(tmp_path.glob("figS_*.csv"))
        assert len(files) == 24
        for path in files:
            _, header, rows = read_csv(path)
            assert header == ["s", "k", "value"]
            meta = json.loads((path.parent / (path.name + ".meta.json")).read_text())
            scale = meta["config"]["frame"]["scale"]
            assert np.max(np.abs(rows[:, 2])) < 1e-14 * scale

    def test_byte_identical_reruns(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        for out in (a, b):
            assert main(["figure", "fig1", "--out", str(out)]) == 0
        for name in ("fig1_envelope.csv", "fig1_zoom.csv"):
            assert (a / name).read_bytes() == (b / name).read_bytes()

    def test_figs_scale_override(self, tmp_path):
        cfg = {"grid": {"ns": 11, "nk": 11}}
        cfg_path = tmp_path / "run.json"
        cfg_path.write_text(json.dumps(cfg))
        one, hundred = tmp_path / "s1", tmp_path / "s100"
        assert main(["figure", "figS", "--config", str(cfg_path), "--scale", "1",
                     "--out", str(one)]) == 0
        assert main(["figure", "figS", "--config", str(cfg_path), "--scale", "100",
                     "--out", str(hundred)]) == 0
        _, _, r1 = read_csv(one / "figS_m01_l3.csv")
        _, _, r100 = read_csv(hundred / "figS_m01_l3.csv")
        np.testing.assert_allclose(r100[:, 2], 100.0 * r1[:, 2], rtol=1e-12)
