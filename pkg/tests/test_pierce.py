import itertools

import numpy as np
import pytest

from galtan.errors import ValidationError
from galtan.fields import field_make
from galtan.finalg import (
    diagonal_algebra,
    points,
    product_algebra,
    quotient_poly_algebra,
    tensor_algebra,
)
from galtan.pierce import (
    StoneSpace,
    clopen_algebra,
    cont_algebra,
    idempotent_boolean_algebra,
    stone_roundtrip,
    stone_spectrum,
)

F2 = field_make(2)
F3 = field_make(3)
F5 = field_make(5)


def brute_idempotents(A):
    out = []
    for coords in itertools.product(range(A.field.q), repeat=A.dim):
        v = np.array(coords, dtype=np.int64)
        if np.array_equal(A.mul_vec(v, v), v):
            out.append(tuple(coords))
    return sorted(out)


def test_idempotent_algebra_f3xf3():
    A = diagonal_algebra(F3, 2)
    B = idempotent_boolean_algebra(A)
    assert len(B) == 4
    assert sorted(B.elements) == brute_idempotents(A)


def test_idempotent_algebra_local():
    A = quotient_poly_algebra(F2, (0, 0, 1))
    B = idempotent_boolean_algebra(A)
    assert len(B) == 2
    assert brute_idempotents(A) == [(0, 0), (1, 0)]


def test_idempotent_algebra_f2_4():
    B = idempotent_boolean_algebra(diagonal_algebra(F2, 4))
    assert len(B) == 16


def test_spectrum_sizes():
    assert stone_spectrum(idempotent_boolean_algebra(diagonal_algebra(F2, 1))).size == 1
    assert stone_spectrum(idempotent_boolean_algebra(diagonal_algebra(F2, 4))).size == 4


def test_spectrum_x6_minus_1():
    A = quotient_poly_algebra(F2, (1, 0, 0, 0, 0, 0, 1))
    B = idempotent_boolean_algebra(A)
    assert len(B) == 4  # two coprime irreducible factors
    assert stone_spectrum(B).size == 2


def test_clopen_sizes():
    assert len(clopen_algebra(StoneSpace(["x"]))) == 2
    assert len(clopen_algebra(StoneSpace(list("abc")))) == 8
    degenerate = clopen_algebra(StoneSpace([]))
    assert len(degenerate) == 1
    assert degenerate.bottom == degenerate.top


def test_cont_algebra():
    assert cont_algebra(StoneSpace(["x"]), F5).dim == 1
    A = cont_algebra(StoneSpace(list("abc")), F5)
    assert A.dim == 3
    assert len(points(A)) == 3
    with pytest.raises(ValidationError):
        cont_algebra(StoneSpace([]), F5)


def test_cont_spectrum_roundtrip():
    for n in range(1, 6):
        X = StoneSpace(list(range(n)))
        B = idempotent_boolean_algebra(cont_algebra(X, F3))
        assert stone_spectrum(B).size == n


def test_stone_roundtrip_two_element():
    B = idempotent_boolean_algebra(diagonal_algebra(F2, 1))
    atoms, mapping = stone_roundtrip(B)
    assert len(atoms) == 1
    assert sorted(mapping) == [0, 1]


def test_stone_roundtrip_sixteen():
    B = idempotent_boolean_algebra(diagonal_algebra(F2, 4))
    atoms, mapping = stone_roundtrip(B)
    assert len(atoms) == 4
    assert sorted(mapping) == list(range(16))


def test_stone_roundtrip_f3_cubed():
    B = idempotent_boolean_algebra(diagonal_algebra(F3, 3))
    assert len(B) == 8
    atoms, mapping = stone_roundtrip(B)
    assert len(atoms) == 3
    assert sorted(mapping) == list(range(8))


def test_roundtrip_on_mixed_corpus():
    samples = [
        product_algebra(quotient_poly_algebra(F2, (0, 0, 1)), diagonal_algebra(F2, 2)),
        quotient_poly_algebra(F3, (0, 2, 0, 1)),
        tensor_algebra(diagonal_algebra(F3, 2), quotient_poly_algebra(F3, (0, 0, 1))),
        quotient_poly_algebra(F5, (1, 1)),
    ]
    for A in samples:
        B = idempotent_boolean_algebra(A)
        atoms, mapping = stone_roundtrip(B)
        assert len(set(mapping)) == len(B) == 1 << len(atoms)


def test_clopen_spectrum_identity():
    for n in range(4):
        X = StoneSpace(list(range(n)))
        Y = stone_spectrum(clopen_algebra(X))
        assert Y.size == X.size
