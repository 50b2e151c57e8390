"""Batch kernels for the hot inner loops (gamma factors, Einstein addition).

Two interchangeable backends: a pure-numpy vectorized path and numba
@njit loops.  Selection order: the GYROBALL_BACKEND environment variable
("numba" or "numpy") wins; otherwise numba is used when importable.
Scalar single-point code in einstein.py does not go through here.
"""

import os

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False


def gamma_np(V, s):
    # V: (N, n) float64, all rows strictly inside the s-ball
    n2 = np.einsum("ij,ij->i", V, V)
    return 1.0 / np.sqrt(1.0 - n2 / (s * s))


def add_np(U, V, s):
    s2 = s * s
    uv = np.einsum("ij,ij->i", U, V) / s2
    gu = gamma_np(U, s)
    f = 1.0 / (1.0 + uv)
    cu = 1.0 + (gu / (1.0 + gu)) * uv
    return f[:, None] * (cu[:, None] * U + V / gu[:, None])


if HAS_NUMBA:

    @njit(cache=True)
    def gamma_nb(V, s):
        N, n = V.shape
        out = np.empty(N)
        s2 = s * s
        for i in range(N):
            n2 = 0.0
            for j in range(n):
                n2 += V[i, j] * V[i, j]
            out[i] = 1.0 / np.sqrt(1.0 - n2 / s2)
        return out

    @njit(cache=True)
    def add_nb(U, V, s):
        N, n = U.shape
        out = np.empty((N, n))
        s2 = s * s
        for i in range(N):
            uv = 0.0
            nu = 0.0
            for j in range(n):
                uv += U[i, j] * V[i, j]
                nu += U[i, j] * U[i, j]
            uv /= s2
            gu = 1.0 / np.sqrt(1.0 - nu / s2)
            f = 1.0 / (1.0 + uv)
            cu = 1.0 + (gu / (1.0 + gu)) * uv
            for j in range(n):
                out[i, j] = f * (cu * U[i, j] + V[i, j] / gu)
        return out


_requested = os.environ.get("GYROBALL_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise ValueError(
        "GYROBALL_BACKEND must be 'numba' or 'numpy', got %r" % _requested
    )
if _requested == "numba" and not HAS_NUMBA:
    raise ImportError("GYROBALL_BACKEND=numba requested but numba is not installed")

if _requested == "numpy" or not HAS_NUMBA:
    BACKEND = "numpy"
    gamma_batch = gamma_np
    add_batch = add_np
else:
    BACKEND = "numba"
    gamma_batch = gamma_nb
    add_batch = add_nb
