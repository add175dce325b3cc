# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for dense linear algebra over prime fields.

All matrices are C-contiguous int64 arrays with entries in [0, p).
Semantics must match galtan._fallback exactly; tests run both.
"""

import numpy as np


cdef long long modpow(long long b, long long e, long long p):
    cdef long long r = 1
    b = b % p
    while e > 0:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


def matmul_mod(a, b, long long p):
    """Matrix product of a (m x k) and b (k x n) mod p."""
    a = np.ascontiguousarray(a, dtype=np.int64) % p
    b = np.ascontiguousarray(b, dtype=np.int64) % p
    cdef long long[:, ::1] av = a
    cdef long long[:, ::1] bv = b
    cdef Py_ssize_t m = av.shape[0]
    cdef Py_ssize_t k = av.shape[1]
    cdef Py_ssize_t n = bv.shape[1]
    out = np.zeros((m, n), dtype=np.int64)
    cdef long long[:, ::1] ov = out
    cdef Py_ssize_t i, j, t
    cdef long long x
    # k * p^2 stays far below 2^63 for the small primes used here, so the
    # reduction can be deferred to a single pass at the end.
    for i in range(m):
        for t in range(k):
            x = av[i, t]
            if x == 0:
                continue
            for j in range(n):
                ov[i, j] += x * bv[t, j]
    out %= p
    return out


def rref_mod(a, long long p):
    """Reduced row echelon form mod p.

    Returns (r, pivots): the nonzero rows of the fully reduced form and
    the list of pivot column indices.
    """
    m_np = np.ascontiguousarray(a, dtype=np.int64) % p
    m_np = m_np.copy()
    cdef long long[:, ::1] M = m_np
    cdef Py_ssize_t rows = M.shape[0]
    cdef Py_ssize_t cols = M.shape[1]
    cdef Py_ssize_t r = 0, i, j, c, pr
    cdef long long inv, f, v
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if M[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(c, cols):
                v = M[r, j]
                M[r, j] = M[pr, j]
                M[pr, j] = v
        inv = modpow(M[r, c], p - 2, p)
        if inv != 1:
            for j in range(c, cols):
                M[r, j] = M[r, j] * inv % p
        for i in range(rows):
            if i == r:
                continue
            f = M[i, c]
            if f != 0:
                for j in range(c, cols):
                    v = (M[i, j] - f * M[r, j]) % p
                    if v < 0:
                        v += p
                    M[i, j] = v
        pivots.append(c)
        r += 1
    return m_np[:r], pivots


def reduce_rows_mod(r, pivots, v, long long p):
    """Reduce the rows of v against a reduced echelon basis r.

    r must come from rref_mod (pivot columns are unit columns), so the
    coefficient of basis row i in a vector is just its entry at
    pivots[i].  Returns a new array.
    """
    v_np = np.ascontiguousarray(v, dtype=np.int64) % p
    v_np = v_np.copy()
    if len(pivots) == 0 or v_np.size == 0:
        return v_np
    r_np = np.ascontiguousarray(r, dtype=np.int64)
    cdef long long[:, ::1] R = r_np
    cdef long long[:, ::1] V = v_np
    cdef Py_ssize_t nr = R.shape[0]
    cdef Py_ssize_t n = R.shape[1]
    cdef Py_ssize_t nv = V.shape[0]
    cdef Py_ssize_t[::1] piv = np.asarray(pivots, dtype=np.intp)
    cdef Py_ssize_t i, j, t, c
    cdef long long f, x
    # basis rows are mutually reduced but pivots need not be sorted, so
    # each elimination touches the whole row
    for t in range(nv):
        for i in range(nr):
            c = piv[i]
            f = V[t, c]
            if f == 0:
                continue
            for j in range(n):
                x = (V[t, j] - f * R[i, j]) % p
                if x < 0:
                    x += p
                V[t, j] = x
    return v_np
