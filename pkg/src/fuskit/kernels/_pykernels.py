"""Pure-Python (numpy) implementations of the hot kernels.

Drop-in fallback for the compiled module: same functions, same contracts.
Integer work is done in float64 BLAS calls; every intermediate stays far
below 2**53, so the arithmetic is exact.
"""

from __future__ import annotations

import numpy as np


def associativity_witness(N: np.ndarray):
    """First (i, j, k, l) violating associativity of the structure constants.

    Checks sum_m N[i,j,m] N[m,k,l] == sum_m N[j,k,m] N[i,m,l] for all
    index tuples, scanning in lexicographic order.  Returns None if the
    constants are associative.
    """
    r = N.shape[0]
    if r == 0:
        return None
    Nf = np.ascontiguousarray(N, dtype=np.float64)
    right = Nf.reshape(r, r * r)  # [m, (k,l)]
    left = Nf.reshape(r * r, r)  # [(j,k), m]
    for i in range(r):
        lhs = (Nf[i] @ right).reshape(r, r, r)
        rhs = (left @ Nf[i]).reshape(r, r, r)
        if not np.array_equal(lhs, rhs):
            j, k, l = np.argwhere(lhs != rhs)[0]
            return (i, int(j), int(k), int(l))
    return None


def power_iteration(M: np.ndarray, tol: float, maxiter: int):
    """Dominant eigenvalue of a non-negative matrix by power iteration.

    Returns (eigenvalue, residual, converged).  The caller is responsible
    for shifting the matrix so the dominant eigenvalue is unique in
    modulus (M + I for a non-negative M).
    """
    M = np.asarray(M, dtype=np.float64)
    n = M.shape[0]
    x = np.full(n, 1.0 / n)
    lam = 0.0
    steady = 0
    for _ in range(maxiter):
        y = M @ x
        norm = float(np.max(y))
        if norm == 0.0:
            return 0.0, 0.0, True
        y /= norm
        if abs(norm - lam) <= tol * max(1.0, norm):
            steady += 1
            if steady >= 3:
                resid = float(np.max(np.abs(M @ y - norm * y)))
                return norm, resid, True
        else:
            steady = 0
        lam = norm
        x = y
    return lam, float("inf"), False
