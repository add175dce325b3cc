"""NumPy fallback for the compiled mod-p kernels.

Same contracts as galtan._speedups; used when the extension is not
built or when GALTAN_PURE is set.
"""

import numpy as np


def matmul_mod(a, b, p):
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    return (a @ b) % p


def rref_mod(a, p):
    m = np.array(a, dtype=np.int64) % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        m[r] = m[r] * pow(int(m[r, c]), p - 2, p) % p
        f = m[:, c].copy()
        f[r] = 0
        if np.any(f):
            m = (m - np.outer(f, m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def reduce_rows_mod(r, pivots, v, p):
    v = np.array(v, dtype=np.int64) % p
    if len(pivots) == 0 or v.size == 0:
        return v
    r = np.asarray(r, dtype=np.int64)
    # r is fully reduced, so the coefficients can be read off in one go.
    coef = v[:, list(pivots)]
    return (v - coef @ r) % p
