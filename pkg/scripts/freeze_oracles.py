"""Recompute the high-precision reference values frozen into the tests (needs mpmath)."""

import mpmath as mp


def erfc_series(x, dps=60):
    with mp.workdps(dps):
        x = mp.mpf(x)
        total, k = mp.mpf(0), 0
        while True:
            term = (-1) ** k * x ** (2 * k + 1) / (mp.factorial(k) * (2 * k + 1))
            total += term
            k += 1
            if abs(term) < mp.mpf(10) ** -(dps + 10):
                break
        return 1 - 2 / mp.sqrt(mp.pi) * total


def normalization(Z, W, dps=40):
    with mp.workdps(dps):
        Z, W = mp.mpf(Z), mp.mpf(W)
        I = mp.quad(lambda r: r**2 * mp.e ** (-2 * Z * r - W * r**2), [0, 1, 5, mp.inf])
        return 1 / mp.sqrt(I)


if __name__ == "__main__":
    print("x, erfc(x), exp(x^2) erfc(x)")
    for x in ("0.5", "1", "2", "5"):
        with mp.workdps(60):
            v = erfc_series(x)
            print(x, mp.nstr(v, 25), mp.nstr(v * mp.e ** (mp.mpf(x) ** 2), 25))
    print("Z, W, A")
    for Z, W in [(1, 1), (2, 0.5), (1, 0.1), (3, 1), (2, 0.1)]:
        print(Z, W, mp.nstr(normalization(Z, W), 20))
