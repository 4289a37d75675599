"""Render heatmaps and error-scaling curves from a dyhops run directory.

Everything here is read-only with a fixed style: the same run directory
always produces byte-identical images.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib
import numpy as np

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402 - backend must be set first

from .io import SchemaError, read_array, read_error_curve, read_sidecar

__all__ = ["plot_spectra", "plot_error_curves"]

SIGNALS = ("GSB", "SE", "ESA")
_STYLE = {"figure.dpi": 120, "font.size": 9, "svg.hashsalt": "dyhops"}


def _t_dirs(run_dir: Path) -> list[Path]:
    dirs = sorted(
        (d for d in run_dir.glob("T_*") if d.is_dir()),
        key=lambda d: float(d.name[2:]),
    )
    if not dirs:
        raise SchemaError(f"{run_dir}: no T_* subdirectories found")
    return dirs


def _save(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, metadata={"Software": "dyhops-plots"})
    plt.close(fig)
    return path


def _heatmap(ax, omega_tau, omega_t, values, title: str) -> None:
    peak = float(np.abs(values).max())
    shown = values / peak if peak > 0 else values
    extent = (omega_t[0], omega_t[-1], omega_tau[0], omega_tau[-1])
    im = ax.imshow(
        shown, origin="lower", extent=extent, aspect="auto",
        cmap="RdBu_r", vmin=-1.0, vmax=1.0,
    )
    ax.set_xlabel(r"$\omega_t$")
    ax.set_ylabel(r"$\omega_\tau$")
    ax.set_title(f"{title}  (a = {peak:.3g})")
    ax.figure.colorbar(im, ax=ax, fraction=0.046)


def plot_spectra(run_dir, out_dir=None) -> list[Path]:
    """One max-normalized heatmap per signal per T, annotated with the peak
    value a, plus a difference-map panel wherever the run carries one."""
    run_dir = Path(run_dir)
    out_dir = Path(out_dir) if out_dir is not None else run_dir / "figures"
    written = []
    with plt.rc_context(_STYLE):
        for tdir in _t_dirs(run_dir):
            omega_tau = read_array(tdir / "omega_tau.arr")
            omega_t = read_array(tdir / "omega_t.arr")
            for name in SIGNALS:
                spec_path = tdir / f"S_{name}.arr"
                if not spec_path.exists():
                    spec_path = tdir / f"heom_S_{name}.arr"
                if not spec_path.exists():
                    raise SchemaError(f"{tdir}: no spectrum file for {name}")
                read_sidecar(spec_path)
                values = read_array(spec_path)
                if values.shape != (omega_tau.size, omega_t.size):
                    raise SchemaError(
                        f"{spec_path}: shape {values.shape} does not match the"
                        f" frequency grids {(omega_tau.size, omega_t.size)}"
                    )
                diff_path = tdir / f"D_{name}.arr"
                n_panels = 2 if diff_path.exists() else 1
                fig, axes = plt.subplots(
                    1, n_panels, figsize=(4.2 * n_panels, 3.4), squeeze=False
                )
                _heatmap(axes[0, 0], omega_tau, omega_t, values,
                         f"{name}, {tdir.name}")
                if n_panels == 2:
                    diff = read_array(diff_path)
                    _heatmap(axes[0, 1], omega_tau, omega_t, diff,
                             f"{name} difference, {tdir.name}")
                fig.tight_layout()
                written.append(_save(fig, out_dir / f"{tdir.name}_{name}.png"))
    return written


def plot_error_curves(run_dir, out_dir=None) -> list[Path]:
    """Log-log E versus N_traj per T, with a 1/sqrt(N) guide per signal."""
    run_dir = Path(run_dir)
    out_dir = Path(out_dir) if out_dir is not None else run_dir / "figures"
    written = []
    with plt.rc_context(_STYLE):
        for tdir in _t_dirs(run_dir):
            n_traj, errors = read_error_curve(tdir / "error_curve.csv")
            fig, ax = plt.subplots(figsize=(4.6, 3.6))
            for name, values in sorted(errors.items()):
                (line,) = ax.loglog(n_traj, values, "o", label=name)
                guide = values[0] * np.sqrt(n_traj[0] / n_traj)
                ax.loglog(n_traj, guide, "-", color=line.get_color(),
                          alpha=0.6, linewidth=1.0)
            ax.set_xlabel(r"$N_\mathrm{traj}$")
            ax.set_ylabel(r"$\mathbb{E}$")
            ax.set_title(f"error scaling, {tdir.name}")
            ax.legend()
            fig.tight_layout()
            written.append(_save(fig, out_dir / f"{tdir.name}_errors.png"))
    return written
