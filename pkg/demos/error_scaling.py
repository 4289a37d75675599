"""Monte Carlo error scaling of 2D signals with ensemble size.

Builds a small pool of per-trajectory third-order response grids, bootstraps
the windowed L1 error E(N) for several ensemble sizes N, and fits the
log-log slope: statistical convergence of an unbiased mean follows
E ~ 1/sqrt(N) (slope -0.5).

The bootstrap reference matters. Against the pool mean, E(N) isolates the
statistical term and scales cleanly. Against an external reference such as
HEOM, E(N) picks up a floor of order E(N_pool) once N approaches the pool
size, which flattens the fitted slope; that variant is printed for contrast.

    python3 demos/error_scaling.py
"""

import numpy as np

from dyhops.bath import ExponentialBath
from dyhops.heom import HeomPropagator, heom_response_third_order
from dyhops.model import (
    ExcitonModel,
    build_exciton_hamiltonian,
    build_state_space,
    coupling_diagonals,
)
from dyhops.response import pathway_operators, response_ensemble
from dyhops.spectra import Spectrum2D, assemble_signals
from dyhops.stats import bootstrap_error, loglog_slope, signal_spectrum

PATHWAYS = ["r3", "r4"]  # GSB only, to keep the demo light


def main() -> None:
    model = ExcitonModel.create(epsilon=[0.0, 0.0], coupling=0.3, dipole=[1.0, 1.0])
    bath = ExponentialBath.uniform(2, p=0.5, w=0.25 + 1.0j)
    tau_grid = np.arange(0.0, 6.1, 0.75)
    t_grid = np.arange(0.0, 6.01, 0.25)
    T = 0.0
    n_pool = 1500
    window = (-3.0, 3.0)

    print(f"pool: {n_pool} trajectories per pathway ({'+'.join(PATHWAYS)})")
    per_traj = {}
    for p in PATHWAYS:
        grid = response_ensemble(
            model, bath, p, tau_grid, T, t_grid, depth=10,
            n_traj=n_pool, seed=5, dt=0.05, keep_trajectories=True,
        )
        per_traj[p] = grid.trajectories

    space = build_state_space(model)
    H = build_exciton_hamiltonian(model, space)
    prop = HeomPropagator(H, coupling_diagonals(space), bath, depth=12, dt=0.05)
    rho0 = np.zeros((space.dim, space.dim), dtype=complex)
    rho0[0, 0] = 1.0

    class _Grid:
        def __init__(self, pathway, values):
            self.pathway = pathway
            self.tau_grid = tau_grid
            self.t_grid = t_grid
            self.T = T
            self.values = values

    heom_grids = {}
    for p in PATHWAYS:
        seq, _ = pathway_operators(model, p)
        values = heom_response_third_order(
            prop, list(seq.interactions), seq.observable, tau_grid, T, t_grid, rho0
        )
        heom_grids[p] = _Grid(p, values)
    heom_refs = assemble_signals(heom_grids)

    means = {p: v.mean(axis=0) for p, v in per_traj.items()}
    pool_refs = {
        name: signal_spectrum(means, tau_grid, t_grid, T, name)
        for name in heom_refs
    }

    n_traj_list = [50, 100, 200, 500, 1000]
    for tag, references in (("pool mean", pool_refs), ("HEOM", heom_refs)):
        curve = bootstrap_error(
            per_traj, references, tau_grid, t_grid, T,
            n_traj_list, window, n_boot=200, seed=3,
        )
        for name, errors in curve.errors.items():
            slope = loglog_slope(curve.n_traj, errors)
            pts = "  ".join(f"{e:.4f}" for e in errors)
            print(f"  {name} vs {tag}: E(N) = {pts}   slope {slope:+.2f}")


if __name__ == "__main__":
    main()
