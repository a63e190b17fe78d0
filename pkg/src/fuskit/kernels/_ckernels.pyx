# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: associativity scan and power iteration.

The associativity scan exploits the sparsity of fusion constants (a
handful of nonzero summands per product) and exits at the first
violation, so it needs no r^4 temporaries.
"""

import numpy as np


def associativity_witness(N):
    """First (i, j, k, l) violating associativity, or None."""
    cdef const long[:, :, ::1] T = np.ascontiguousarray(N, dtype=np.int64)
    cdef Py_ssize_t r = T.shape[0]
    cdef Py_ssize_t i, j, k, l, m, t, nnz
    cdef long acc
    if r == 0:
        return None
    # per-(row, column) support lists of the nonzero fiber entries
    cdef long[:, :, ::1] supp_idx = np.empty((r, r, r), dtype=np.int64)
    cdef long[:, :, ::1] supp_val = np.empty((r, r, r), dtype=np.int64)
    cdef long[:, ::1] supp_len = np.zeros((r, r), dtype=np.int64)
    scratch = np.zeros((r, r), dtype=np.int64)
    cdef long[:, ::1] lhs = scratch
    for i in range(r):
        for j in range(r):
            nnz = 0
            for k in range(r):
                if T[i, j, k] != 0:
                    supp_idx[i, j, nnz] = k
                    supp_val[i, j, nnz] = T[i, j, k]
                    nnz += 1
            supp_len[i, j] = nnz
    for i in range(r):
        for j in range(r):
            # lhs[k, l] = sum_m N[i,j,m] N[m,k,l] over the support of N[i,j,:]
            for k in range(r):
                for l in range(r):
                    lhs[k, l] = 0
            nnz = supp_len[i, j]
            for t in range(nnz):
                m = supp_idx[i, j, t]
                acc = supp_val[i, j, t]
                for k in range(r):
                    for l in range(r):
                        lhs[k, l] += acc * T[m, k, l]
            # rhs[k, l] = sum_m N[j,k,m] N[i,m,l], compared in place
            for k in range(r):
                for l in range(r):
                    acc = 0
                    for t in range(supp_len[j, k]):
                        acc += supp_val[j, k, t] * T[i, supp_idx[j, k, t], l]
                    if acc != lhs[k, l]:
                        return (i, j, k, l)
    return None


def power_iteration(M, double tol, long maxiter):
    """Dominant eigenvalue of a non-negative matrix; see the numpy twin."""
    cdef const double[:, ::1] A = np.ascontiguousarray(M, dtype=np.float64)
    cdef Py_ssize_t n = A.shape[0]
    cdef Py_ssize_t i, j
    cdef long it, steady = 0
    cdef double lam = 0.0, norm, resid, diff
    x_arr = np.full(n, 1.0 / n)
    y_arr = np.zeros(n)
    cdef double[::1] x = x_arr
    cdef double[::1] y = y_arr
    for it in range(maxiter):
        norm = 0.0
        for i in range(n):
            y[i] = 0.0
            for j in range(n):
                y[i] += A[i, j] * x[j]
            if y[i] > norm:
                norm = y[i]
        if norm == 0.0:
            return 0.0, 0.0, True
        for i in range(n):
            y[i] /= norm
        if abs(norm - lam) <= tol * max(1.0, norm):
            steady += 1
            if steady >= 3:
                resid = 0.0
                for i in range(n):
                    diff = 0.0
                    for j in range(n):
                        diff += A[i, j] * y[j]
                    diff = abs(diff - norm * y[i])
                    if diff > resid:
                        resid = diff
                return norm, resid, True
        else:
            steady = 0
        lam = norm
        for i in range(n):
            x[i] = y[i]
    return lam, float("inf"), False
