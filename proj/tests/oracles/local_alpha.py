# Copyright 2026 The ote-otto Authors
# SPDX-License-Identifier: Apache-2.0
"""Independent SciPy evaluation of the local field correlations next to a SiC slab.

Prints alpha1 and alpha2 (xx and zz entries, vacuum-normalised) and the
environment temperature seen by an x-dipole. The numbers are frozen into
tests/test_correlation.cpp.
"""
import warnings

import numpy as np
from scipy.constants import c, hbar, k as kB
from scipy.integrate import IntegrationWarning, quad
from scipy.optimize import minimize_scalar

# quad reports roundoff inside the bracketed guided-mode peaks; results are stable under tolerance changes
warnings.filterwarnings("ignore", category=IntegrationWarning)

EPS_INF, W_L, W_T, GAMMA = 6.7, 1.827e14, 1.495e14, 0.9e12


def eps(w):
    return EPS_INF * (W_L**2 - w**2 - 1j * GAMMA * w) / (W_T**2 - w**2 - 1j * GAMMA * w)


def csqrt(x):
    s = np.sqrt(complex(x))
    return s if s.imag >= 0 else -s


def slab(p, kz, w, delta):
    e, k0 = eps(w), w / c
    kzm = csqrt((e - 1) * k0**2 + kz**2)
    a = kz if p == "TE" else e * kz
    r = (a - kzm) / (a + kzm)
    ex = np.exp(2j * kzm * delta)
    den = 1 - r * r * ex
    return r * (1 - ex) / den, (1 - r * r) * np.exp(1j * (kzm - kz) * delta) / den


def guided_modes(w, delta, qmax):
    """Evanescent q = kappa/k0 where the slab denominator nearly vanishes."""
    k0, e = w / c, eps(w)

    def den(q, p):
        kz = 1j * q * k0
        kzm = csqrt((e - 1) * k0**2 + kz**2)
        a = kz if p == "TE" else e * kz
        r = (a - kzm) / (a + kzm)
        return abs(1 - r * r * np.exp(2j * kzm * delta))

    grid = np.logspace(-8, np.log10(qmax), 20001)
    poles = []
    for p in ("TE", "TM"):
        d = np.array([den(q, p) for q in grid])
        for i in np.nonzero((d[1:-1] < d[:-2]) & (d[1:-1] <= d[2:]) & (d[1:-1] < 0.2))[0] + 1:
            res = minimize_scalar(lambda q: den(q, p), bounds=(grid[i - 1], grid[i + 1]), method="bounded",
                                  options={"xatol": 1e-15 * grid[i]})
            poles.append(res.x)
    return poles


def nbar(w, T):
    return 1 / np.expm1(hbar * w / (kB * T))


def local_alpha(w, z, delta, kmax=200):
    """Returns [[a1_xx, a1_zz], [a2_xx, a2_zz]]."""
    k0 = w / c
    pre = 0.75

    def propagating(th):
        kz = k0 * np.cos(th)
        kk2 = (k0 * np.sin(th)) ** 2
        out = np.zeros((2, 2))
        for p in ("TE", "TM"):
            rho, tau = slab(p, kz, w, delta)
            if p == "TE":
                xpp = xpm = np.array([0.5, 0.0])
            else:
                xpp = np.array([0.5 * kz**2 / k0**2, kk2 / k0**2])
                xpm = np.array([-0.5 * kz**2 / k0**2, kk2 / k0**2])
            loss = abs(rho) ** 2 + abs(tau) ** 2
            out[0] += (1 - loss) * xpp
            out[1] += (1 + loss) * xpp + 2 * (rho * np.exp(2j * kz * z)).real * xpm
        return out * np.sin(th)

    def evanescent(q):
        kap = q * k0
        out = np.zeros(2)
        for p in ("TE", "TM"):
            rho, _ = slab(p, 1j * kap, w, delta)
            x = np.array([0.5, 0.0]) if p == "TE" else np.array([0.5 * q**2, 1 + q**2])
            out += 2 * rho.imag * x * np.exp(-2 * kap * z)
        return out

    res = np.zeros((2, 2))
    for i in range(2):
        for j in range(2):
            res[i, j] = quad(lambda t: propagating(t)[i, j], 0, np.pi / 2, limit=400, epsabs=0, epsrel=1e-10)[0]
    qmax = max(kmax, 60 / (2 * k0 * z))
    poles = guided_modes(w, delta, qmax)
    for j in range(2):
        pts = {0.0, 1 / (k0 * z), 1.0, qmax / 10, qmax}
        for q0 in poles:
            pts.update(q0 * (1 + s * 10.0**-n) for s in (-1, 1) for n in range(1, 9))
            pts.add(q0)
        pts = sorted(p for p in pts if 0 <= p <= qmax)
        for lo, hi in zip(pts[:-1], pts[1:]):
            res[0, j] += quad(lambda q: evanescent(q)[j], lo, hi, limit=400, epsabs=0, epsrel=1e-10)[0]
    return pre * res


def t_env(w, z, delta, t1, t2):
    a = local_alpha(w, z, delta)
    a1, a2 = a[0, 0], a[1, 0]
    gp = (1 + nbar(w, t1)) * a1 + (1 + nbar(w, t2)) * a2
    gm = nbar(w, t1) * a1 + nbar(w, t2) * a2
    return hbar * w / (kB * np.log(gp / gm)), a


if __name__ == "__main__":
    ws = 1.495e14
    for f in (0.05, 0.1, 0.9, 1.0):
        T, a = t_env(f * ws, 26e-6, 1e-6, 700, 200)
        print(f"{f:5.2f}  T={T:.10g}  a1=({a[0,0]:.12e}, {a[0,1]:.12e})  a2=({a[1,0]:.12e}, {a[1,1]:.12e})")
