"""Compare W^(5/4) and W^(5/2) prefactors of the closed-form A against quadrature."""

import math

import numpy as np
from scipy import integrate

from poisson_dual.duality import DualFamilyParams, normalization_closed_form


def quadrature_A(Z, W):
    val, _ = integrate.quad(lambda r: r * r * math.exp(-2 * Z * r - W * r * r), 0, np.inf, epsabs=0, epsrel=1e-13)
    return 1 / math.sqrt(val)


if __name__ == "__main__":
    print(f"{'Z':>5} {'W':>6} {'quadrature':>20} {'W^(5/4)':>20} {'W^(5/2)':>20}")
    for Z in (0.5, 1.0, 2.0):
        for W in (0.1, 0.5, 1.0, 2.0):
            A = normalization_closed_form(DualFamilyParams(Z, W))
            print(f"{Z:5.2f} {W:6.2f} {quadrature_A(Z, W):20.14f} {A:20.14f} {A * W**1.25:20.14f}")
