"""Tests for the figure pipeline against synthetic run directories."""

import json
import struct

import numpy as np
import pytest

from dyhops_plots.cli import main as cli_main
from dyhops_plots.figures import plot_error_curves, plot_spectra
from dyhops_plots.io import SchemaError, read_array, read_error_curve

_HEADER = struct.Struct("<8sII5Q")


def _write_array(path, arr, meta=None):
    arr = np.asarray(arr, dtype=float)
    dims = list(arr.shape) + [0] * (5 - arr.ndim)
    raw = _HEADER.pack(b"DYHARR1\x00", 0, arr.ndim, *dims)
    with open(path, "wb") as fh:
        fh.write(raw + b"\x00" * (64 - len(raw)))
        fh.write(arr.tobytes())
    with open(f"{path}.json", "w") as fh:
        json.dump(meta if meta is not None else {"config": {}}, fh)


def _lorentzian_2d(omega_tau, omega_t, center, width=0.3):
    lt = 1.0 / (1.0 + ((omega_tau - center[0]) / width) ** 2)
    lw = 1.0 / (1.0 + ((omega_t - center[1]) / width) ** 2)
    return np.outer(lt, lw)


@pytest.fixture
def run_dir(tmp_path):
    omega_tau = np.linspace(-4, 4, 24)
    omega_t = np.linspace(-4, 4, 32)
    tdir = tmp_path / "T_0"
    tdir.mkdir()
    _write_array(tdir / "omega_tau.arr", omega_tau)
    _write_array(tdir / "omega_t.arr", omega_t)
    peaks = {"GSB": (0.6, 0.6), "SE": (0.6, -0.6), "ESA": (-0.6, 0.6)}
    for name, center in peaks.items():
        spec = _lorentzian_2d(omega_tau, omega_t, center)
        spec += _lorentzian_2d(omega_tau, omega_t, (-center[0], -center[1])) * 0.5
        _write_array(tdir / f"S_{name}.arr", spec)
        _write_array(tdir / f"D_{name}.arr", spec * 0.01)
    n = np.array([100, 400, 1600, 6400], dtype=float)
    with open(tdir / "error_curve.csv", "w") as fh:
        fh.write("n_traj,E_ESA,E_GSB,E_SE\n")
        for i, nv in enumerate(n):
            e = 0.7 / np.sqrt(nv)
            fh.write(f"{int(nv)},{e},{e},{e}\n")
    return tmp_path


def test_spectra_rendering(run_dir):
    written = plot_spectra(run_dir)
    assert len(written) == 3
    assert all(p.exists() and p.stat().st_size > 0 for p in written)


def test_lorentzian_peak_bin(run_dir):
    omega_tau = read_array(run_dir / "T_0" / "omega_tau.arr")
    omega_t = read_array(run_dir / "T_0" / "omega_t.arr")
    spec = read_array(run_dir / "T_0" / "S_GSB.arr")
    i, j = np.unravel_index(np.argmax(spec), spec.shape)
    assert abs(omega_tau[i] - 0.6) <= np.diff(omega_tau)[0]
    assert abs(omega_t[j] - 0.6) <= np.diff(omega_t)[0]


def test_all_zero_spectrum(run_dir):
    tdir = run_dir / "T_0"
    zeros = np.zeros((24, 32))
    for name in ("GSB", "SE", "ESA"):
        _write_array(tdir / f"S_{name}.arr", zeros)
        (tdir / f"D_{name}.arr").unlink()
        (tdir / f"D_{name}.arr.json").unlink()
    written = plot_spectra(run_dir)
    assert len(written) == 3


def test_error_curves_and_guide(run_dir):
    n, errors = read_error_curve(run_dir / "T_0" / "error_curve.csv")
    for values in errors.values():
        guide = values[0] * np.sqrt(n[0] / n)
        assert np.allclose(values, guide)
    written = plot_error_curves(run_dir)
    assert len(written) == 1 and written[0].exists()


def test_empty_error_curve(run_dir):
    path = run_dir / "T_0" / "error_curve.csv"
    path.write_text("n_traj,E_GSB\n")
    with pytest.raises(SchemaError, match="no data rows"):
        plot_error_curves(run_dir)


def test_schema_mismatch(run_dir):
    spec = run_dir / "T_0" / "S_GSB.arr"
    payload = spec.read_bytes()
    spec.write_bytes(b"WRONGMAG" + payload[8:])
    with pytest.raises(SchemaError, match="bad magic"):
        plot_spectra(run_dir)
    spec.write_bytes(payload)
    (run_dir / "T_0" / "S_GSB.arr.json").unlink()
    with pytest.raises(SchemaError):
        plot_spectra(run_dir)


def test_missing_signal(run_dir, tmp_path):
    (run_dir / "T_0" / "S_SE.arr").unlink()
    with pytest.raises(SchemaError, match="no spectrum file"):
        plot_spectra(run_dir)


def test_deterministic_images(run_dir, tmp_path):
    a = plot_spectra(run_dir, tmp_path / "a") + plot_error_curves(run_dir, tmp_path / "a")
    b = plot_spectra(run_dir, tmp_path / "b") + plot_error_curves(run_dir, tmp_path / "b")
    for pa, pb in zip(a, b):
        assert pa.read_bytes() == pb.read_bytes()


def test_cli(run_dir, tmp_path, capsys):
    out = tmp_path / "figs"
    assert cli_main(["--run", str(run_dir), "--figs", "spectra,errors",
                     "--out", str(out)]) == 0
    printed = capsys.readouterr().out.strip().splitlines()
    assert len(printed) == 4
    (run_dir / "T_0" / "error_curve.csv").write_text("bogus\n")
    assert cli_main(["--run", str(run_dir), "--figs", "errors"]) == 1
