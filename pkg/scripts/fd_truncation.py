"""Finite-difference residual of the duality identity versus grid step."""

from poisson_dual.duality import DualFamilyParams, solve_dual
from poisson_dual.oracle import GridSpec, fd_residual

if __name__ == "__main__":
    steps = (4e-3, 2e-3, 1e-3, 5e-4)
    print("Z, W " + " ".join(f"h={h:g}" for h in steps))
    for ZW in [(1, 0), (5, 0), (1, 0.1), (2, 0.5), (2, 1), (3, 1)]:
        rho = DualFamilyParams(*ZW).density()
        sol = solve_dual(rho)
        row = [fd_residual(sol, rho, GridSpec.with_step(0.1, 20.0, h)) for h in steps]
        print(ZW, " ".join(f"{v:.2e}" for v in row))
