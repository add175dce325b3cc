import itertools
import random

import numpy as np
import pytest

from galtan import _fallback, _speedups
from galtan.fields import field_make
from galtan.linalg import Mat, RowSpan, kron, mat_kernel, mat_solve, swap_tensor

F2 = field_make(2)
F3 = field_make(3)
F4 = field_make(2, 2)


def all_vectors(F, n):
    return [np.array(v, dtype=np.int64) for v in itertools.product(range(F.q), repeat=n)]


def test_kernel_identity_empty():
    assert mat_kernel(Mat.identity(F3, 3)).cols == 0


def test_kernel_zero_matrix():
    assert mat_kernel(Mat.zeros(F3, 2, 3)).cols == 3


def test_kernel_f2_enumeration_oracle():
    M = Mat(F2, [[1, 1], [1, 1]])
    oracle = [v for v in all_vectors(F2, 2) if not M.mul_vec(v).any()]
    assert [v.tolist() for v in oracle] == [[0, 0], [1, 1]]
    K = mat_kernel(M)
    assert K.cols == 1 and K.a[:, 0].tolist() == [1, 1]


def test_solve_identity():
    A = Mat.identity(F3, 3)
    assert mat_solve(A, [1, 2, 0]).tolist() == [1, 2, 0]


def test_solve_inconsistent_returns_value():
    assert mat_solve(Mat.zeros(F2, 2, 2), [1, 0]) is None


def test_solve_f2_enumeration_oracle():
    A = Mat(F2, [[1, 1], [0, 1]])
    b = np.array([0, 1])
    oracle = [v for v in all_vectors(F2, 2) if np.array_equal(A.mul_vec(v), b)]
    assert len(oracle) == 1 and oracle[0].tolist() == [1, 1]
    assert mat_solve(A, b).tolist() == [1, 1]


def test_solve_random_consistency():
    rng = np.random.default_rng(5)
    for F in (F2, F3):
        for _ in range(30):
            m, n = rng.integers(1, 6, 2)
            A = Mat(F, rng.integers(0, F.q, (m, n)))
            x = rng.integers(0, F.q, n)
            b = A.mul_vec(x)
            got = mat_solve(A, b)
            assert got is not None
            assert np.array_equal(A.mul_vec(got), b)


def test_kron_identities():
    assert kron(Mat.identity(F3, 2), Mat.identity(F3, 3)) == Mat.identity(F3, 6)


def test_kron_shape():
    A = Mat.zeros(F3, 2, 2)
    B = Mat.zeros(F3, 3, 3)
    assert kron(A, B).shape == (6, 6)


def test_kron_bilinearity_direct_expansion():
    rng = np.random.default_rng(9)
    for _ in range(20):
        A = Mat(F3, rng.integers(0, 3, (2, 2)))
        B = Mat(F3, rng.integers(0, 3, (2, 2)))
        v = rng.integers(0, 3, 2)
        w = rng.integers(0, 3, 2)
        lhs = kron(A, B).mul_vec(np.kron(v, w) % 3)
        rhs = np.kron(A.mul_vec(v), B.mul_vec(w)) % 3
        assert np.array_equal(lhs, rhs)


def test_kron_mixed_product():
    rng = np.random.default_rng(31)
    for _ in range(15):
        A, B, C, D = (Mat(F3, rng.integers(0, 3, (2, 2))) for _ in range(4))
        assert kron(A, B) @ kron(C, D) == kron(A @ C, B @ D)


def test_rank_nullity_seeded():
    rng = np.random.default_rng(12)
    for F in (F2, F3, F4):
        for _ in range(25):
            m, n = rng.integers(1, 6, 2)
            A = Mat(F, rng.integers(0, F.q, (m, n)))
            K = A.kernel_basis()
            assert A.rank() + K.cols == n
            if K.cols:
                assert (A @ K).is_zero()


def test_extension_field_inverse():
    M = Mat(F4, [[2, 1], [1, 1]])
    assert M @ M.inverse() == Mat.identity(F4, 2)


def test_swap_tensor():
    s = swap_tensor(F3, 2, 3)
    for i in range(2):
        for j in range(3):
            v = np.zeros(6, dtype=np.int64)
            v[i * 3 + j] = 1
            out = s.mul_vec(v)
            assert out[j * 2 + i] == 1 and out.sum() == 1


def test_rowspan_incremental():
    rs = RowSpan(F3, 4)
    assert rs.insert([1, 2, 0, 1])
    assert rs.insert([0, 1, 1, 1])
    assert not rs.insert([1, 0, 1, 2])  # sum of the first two mod 3
    assert rs.rank == 2
    assert rs.contains([2, 4 % 3, 0, 2])
    x = rs.project(rs.section([1, 2]))
    assert x.tolist() == [1, 2]


def test_rowspan_generic_field_matches_prime_logic():
    rng = random.Random(3)
    for _ in range(10):
        vecs = [[rng.randrange(4) for _ in range(3)] for _ in range(4)]
        rs = RowSpan(F4, 3)
        rs.insert_many(vecs)
        for v in vecs:
            assert rs.contains(v)


def test_backend_parity():
    rng = np.random.default_rng(77)
    for p in (2, 3, 5, 7):
        for _ in range(10):
            m, n, k = rng.integers(1, 8, 3)
            a = rng.integers(0, p, (m, k))
            b = rng.integers(0, p, (k, n))
            assert np.array_equal(
                _fallback.matmul_mod(a, b, p), _speedups.matmul_mod(a, b, p)
            )
            c = rng.integers(0, p, (m, n))
            r1, p1 = _fallback.rref_mod(c, p)
            r2, p2 = _speedups.rref_mod(c, p)
            assert list(p1) == list(p2)
            assert np.array_equal(r1, r2)
            v = rng.integers(0, p, (3, n))
            assert np.array_equal(
                _fallback.reduce_rows_mod(r1, p1, v, p),
                _speedups.reduce_rows_mod(r2, p2, v, p),
            )


def test_field_mismatch_rejected():
    with pytest.raises(ValueError):
        Mat.identity(F2, 2) @ Mat.identity(F3, 2)
