"""Exact dense matrices over a finite field.

Entries are element codes stored in int64 arrays.  Prime-field matrices
go through the selected kernel backend (compiled or NumPy); extension
fields take a generic code path driven by the field's scalar arithmetic,
which is fine at the small sizes where extensions appear.
"""

import numpy as np

from galtan.kernels import matmul_mod, reduce_rows_mod, rref_mod


class Mat:
    """Matrix over a Field; immutable by convention."""

    __slots__ = ("field", "a")

    def __init__(self, field, data):
        a = np.asarray(data, dtype=np.int64)
        if a.ndim == 1:
            a = a.reshape(1, -1)
        if a.ndim != 2:
            raise ValueError("matrix data must be 2-dimensional")
        if field.is_prime_field:
            a = a % field.p
        elif a.size and (a.min() < 0 or a.max() >= field.q):
            raise ValueError("entry out of range for field codes")
        self.field = field
        self.a = a

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field, n):
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def from_cols(cls, field, cols):
        return cls(field, np.array(cols, dtype=np.int64).T)

    # -- basics -----------------------------------------------------------

    @property
    def rows(self):
        return self.a.shape[0]

    @property
    def cols(self):
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __repr__(self):
        return f"Mat({self.field!r}, {self.a.tolist()})"

    def is_zero(self):
        return not self.a.any()

    def copy(self):
        return Mat(self.field, self.a.copy())

    @property
    def T(self):
        return Mat(self.field, self.a.T.copy())

    # -- arithmetic ------------------------------------------------------

    def _check(self, other):
        if self.field != other.field:
            raise ValueError("field mismatch")

    def __add__(self, other):
        self._check(other)
        F = self.field
        if F.is_prime_field:
            return Mat(F, (self.a + other.a) % F.p)
        out = np.empty_like(self.a)
        for i in range(self.rows):
            for j in range(self.cols):
                out[i, j] = F.add(int(self.a[i, j]), int(other.a[i, j]))
        return Mat(F, out)

    def __neg__(self):
        F = self.field
        if F.is_prime_field:
            return Mat(F, (-self.a) % F.p)
        out = np.empty_like(self.a)
        for i in range(self.rows):
            for j in range(self.cols):
                out[i, j] = F.neg(int(self.a[i, j]))
        return Mat(F, out)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        F = self.field
        if F.is_prime_field:
            return Mat(F, self.a * (c % F.p) % F.p)
        out = np.empty_like(self.a)
        for i in range(self.rows):
            for j in range(self.cols):
                out[i, j] = F.mul(int(self.a[i, j]), c)
        return Mat(F, out)

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        F = self.field
        if F.is_prime_field:
            return Mat(F, matmul_mod(self.a, other.a, F.p))
        out = np.zeros((self.rows, other.cols), dtype=np.int64)
        for i in range(self.rows):
            for k in range(self.cols):
                x = int(self.a[i, k])
                if x == 0:
                    continue
                for j in range(other.cols):
                    out[i, j] = F.add(
                        int(out[i, j]), F.mul(x, int(other.a[k, j]))
                    )
        return Mat(F, out)

    def mul_vec(self, v):
        v = np.asarray(v, dtype=np.int64).reshape(-1, 1)
        return (self @ Mat(self.field, v)).a[:, 0]

    def trace(self):
        F = self.field
        acc = 0
        for i in range(min(self.rows, self.cols)):
            acc = F.add(acc, int(self.a[i, i]))
        return acc

    # -- echelon form and friends -----------------------------------------

    def rref(self):
        """(reduced echelon Mat of the nonzero rows, pivot columns)."""
        F = self.field
        if F.is_prime_field:
            r, piv = rref_mod(self.a, F.p)
            return Mat(F, r), list(piv)
        return _rref_generic(self)

    def rank(self):
        return self.rref()[0].rows

    def kernel_basis(self):
        """Columns spanning the right null space (cols - rank of them)."""
        F = self.field
        r, piv = self.rref()
        free = [c for c in range(self.cols) if c not in piv]
        cols = []
        for fc in free:
            v = np.zeros(self.cols, dtype=np.int64)
            v[fc] = 1
            for i, pc in enumerate(piv):
                v[pc] = F.neg(int(r.a[i, fc]))
            cols.append(v)
        return Mat.from_cols(F, cols) if cols else Mat.zeros(F, self.cols, 0)

    def solve(self, b):
        """x with self @ x = b, or None when the system is inconsistent.

        b may be a vector or a matrix of stacked right-hand sides; the
        result has matching shape.
        """
        F = self.field
        vec = np.asarray(b, dtype=np.int64).ndim == 1
        B = np.asarray(b, dtype=np.int64).reshape(self.rows, -1)
        aug = Mat(F, np.hstack([self.a, B]))
        r, piv = aug.rref()
        nrhs = B.shape[1]
        if any(pc >= self.cols for pc in piv):
            return None
        x = np.zeros((self.cols, nrhs), dtype=np.int64)
        for i, pc in enumerate(piv):
            x[pc] = r.a[i, self.cols :]
        return x[:, 0] if vec else Mat(F, x)

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("not square")
        x = self.solve(np.eye(self.rows, dtype=np.int64))
        if x is None or x.rank() != self.rows:
            raise ValueError("matrix is singular")
        return x

    # -- tensor structure ---------------------------------------------------

    def kron(self, other):
        self._check(other)
        F = self.field
        if F.is_prime_field:
            return Mat(F, np.kron(self.a, other.a) % F.p)
        m, n = self.shape
        r, c = other.shape
        out = np.zeros((m * r, n * c), dtype=np.int64)
        for i in range(m):
            for j in range(n):
                x = int(self.a[i, j])
                if x == 0:
                    continue
                for k in range(r):
                    for l in range(c):
                        out[i * r + k, j * c + l] = F.mul(x, int(other.a[k, l]))
        return Mat(F, out)


def _rref_generic(M):
    F = M.field
    m = M.a.copy()
    rows, cols = m.shape
    piv = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if m[i, c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        inv = F.inv(int(m[r, c]))
        if inv != 1:
            for j in range(c, cols):
                m[r, j] = F.mul(int(m[r, j]), inv)
        for i in range(rows):
            f = int(m[i, c])
            if i != r and f:
                for j in range(c, cols):
                    m[i, j] = F.sub(int(m[i, j]), F.mul(f, int(m[r, j])))
        piv.append(c)
        r += 1
    return Mat(F, m[:r]), piv


def hstack(mats):
    F = mats[0].field
    return Mat(F, np.hstack([m.a for m in mats]))


def vstack(mats):
    F = mats[0].field
    return Mat(F, np.vstack([m.a for m in mats]))


def swap_tensor(F, m, n):
    """Permutation matrix sending e_i (x) e_j to e_j (x) e_i."""
    s = np.zeros((m * n, m * n), dtype=np.int64)
    for i in range(m):
        for j in range(n):
            s[j * m + i, i * n + j] = 1
    return Mat(F, s)


# spec-facing aliases -----------------------------------------------------


def mat_kernel(M):
    return M.kernel_basis()


def mat_solve(A, b):
    return A.solve(b)


def kron(A, B):
    return A.kron(B)


class RowSpan:
    """Incremental row space with a fully reduced basis.

    Basis rows live in a preallocated buffer in insertion order; pivots
    align with rows but are not sorted (full reduction makes the order
    irrelevant).  Rank growth never copies the existing rows, so large
    spans stay cheap to build.
    """

    def __init__(self, field, ncols):
        self.field = field
        self.n = ncols
        self._buf = np.zeros((16, ncols), dtype=np.int64)
        self._nrows = 0
        self.pivots = []

    @property
    def rank(self):
        return self._nrows

    def _rows(self):
        return self._buf[: self._nrows]

    def basis(self):
        return Mat(self.field, self._rows().copy())

    def reduce(self, v):
        """Reduce a vector (or stacked rows) against the current basis."""
        F = self.field
        v = np.asarray(v, dtype=np.int64)
        single = v.ndim == 1
        v = v.reshape(-1, self.n)
        if F.is_prime_field:
            out = reduce_rows_mod(self._rows(), self.pivots, v, F.p)
        else:
            out = v.copy()
            rows = self._rows()
            for t in range(out.shape[0]):
                for i, pc in enumerate(self.pivots):
                    f = int(out[t, pc])
                    if f:
                        for j in range(self.n):
                            out[t, j] = F.sub(
                                int(out[t, j]), F.mul(f, int(rows[i, j]))
                            )
        return out[0] if single else out

    def contains(self, v):
        return not self.reduce(v).any()

    def insert(self, v):
        """Add a vector to the span; returns True if the rank grew."""
        F = self.field
        red = self.reduce(v)
        nz = np.nonzero(red)[0]
        if nz.size == 0:
            return False
        pc = int(nz[0])
        inv = F.inv(int(red[pc]))
        if inv != 1:
            if F.is_prime_field:
                red = red * inv % F.p
            else:
                red = np.array([F.mul(int(x), inv) for x in red], dtype=np.int64)
        rows = self._rows()
        if rows.shape[0]:
            col = rows[:, pc].copy()
            if col.any():
                if F.is_prime_field:
                    rows -= np.outer(col, red)
                    rows %= F.p
                else:
                    for i in range(rows.shape[0]):
                        f = int(col[i])
                        if f:
                            for j in range(self.n):
                                rows[i, j] = F.sub(
                                    int(rows[i, j]), F.mul(f, int(red[j]))
                                )
        if self._nrows == self._buf.shape[0]:
            grown = np.zeros((2 * self._buf.shape[0], self.n), dtype=np.int64)
            grown[: self._nrows] = self._buf[: self._nrows]
            self._buf = grown
        self._buf[self._nrows] = red
        self._nrows += 1
        self.pivots.append(pc)
        return True

    def insert_many(self, vectors):
        grew = 0
        for v in vectors:
            if self.insert(v):
                grew += 1
        return grew

    def complement(self):
        """Non-pivot columns: coordinates for the quotient by this span."""
        pivset = set(self.pivots)
        return [c for c in range(self.n) if c not in pivset]

    def project(self, v):
        """Quotient coordinates of v (its class modulo the span)."""
        red = self.reduce(v)
        comp = self.complement()
        if np.asarray(v).ndim == 1:
            return red[comp]
        return red[:, comp]

    def section(self, x):
        """A representative vector with the given quotient coordinates."""
        comp = self.complement()
        v = np.zeros(self.n, dtype=np.int64)
        v[comp] = np.asarray(x, dtype=np.int64)
        return v

    def projection_matrix(self):
        """Matrix of project() on column vectors ((n - rank) x n).

        Read off the reduced basis directly: reduce(e_c) is e_c for a
        non-pivot column and e_c - row(c) for a pivot column, so no
        elimination is needed.
        """
        F = self.field
        comp = self.complement()
        p = np.zeros((len(comp), self.n), dtype=np.int64)
        for j, c in enumerate(comp):
            p[j, c] = 1
        rows = self._rows()
        for i, pc in enumerate(self.pivots):
            if F.is_prime_field:
                p[:, pc] = (-rows[i, comp]) % F.p
            else:
                p[:, pc] = [F.neg(int(x)) for x in rows[i, comp]]
        return Mat(F, p)

    def section_matrix(self):
        """Matrix of section() on column vectors (n x (n - rank))."""
        comp = self.complement()
        s = np.zeros((self.n, len(comp)), dtype=np.int64)
        for j, c in enumerate(comp):
            s[c, j] = 1
        return Mat(self.field, s)
