"""Verify random members of the rho = 2Z/r + 3W family in parallel."""

import argparse
import math
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from poisson_dual.duality import DualFamilyParams
from poisson_dual.oracle import GridSpec, verify


def run(zw):
    Z, W = zw
    grid = GridSpec(1e-6, max(40 / Z, 10 / math.sqrt(max(W, 0.01))), 40000)
    return Z, W, verify(DualFamilyParams(Z, W).density(), grid)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    params = []
    for _ in range(args.count):
        Z = rng.uniform(0.5, 3)
        params.append((Z, rng.uniform(0, Z * Z / 3 * 0.9)))
    with ProcessPoolExecutor() as pool:
        for Z, W, rep in pool.map(run, params):
            print(f"Z={Z:.4f} W={W:.4f} E0={rep.analytic_E0:+.10f} err={rep.abs_err:.2e} "
                  f"fd={rep.ode_residual_max:.2e} passed={rep.passed} {rep.reason or ''}")


if __name__ == "__main__":
    main()
