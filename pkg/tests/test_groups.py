import pytest

from galtan.groups import (
    Group,
    cyclic_group,
    dihedral_group,
    direct_product,
    group_homs,
    group_isomorphism,
    is_homomorphism,
    quaternion_group,
    small_groups,
    symmetric_group,
    trivial_group,
)


def test_builders_validate():
    for G in small_groups(8):
        assert G.mul(0, 0) == 0
        for a in range(G.order):
            assert G.mul(a, G.inverse(a)) == 0


def test_bad_table_rejected():
    with pytest.raises(ValueError):
        Group([[0, 1], [1, 1]])  # not a latin square / no inverse for 1
    with pytest.raises(ValueError):
        Group([[1, 0], [0, 1]])  # identity not at index 0


def test_element_orders():
    S3 = symmetric_group(3)
    assert sorted(S3.element_order(a) for a in range(6)) == [1, 2, 2, 2, 3, 3]
    assert cyclic_group(6).element_order(1) == 6


def test_homs_counts():
    S3 = symmetric_group(3)
    assert len(group_homs(S3, cyclic_group(2))) == 2  # trivial and sign
    assert len(group_homs(cyclic_group(2), cyclic_group(3))) == 1
    assert len(group_homs(cyclic_group(3), cyclic_group(3))) == 3
    for mapping in group_homs(S3, cyclic_group(2)):
        assert is_homomorphism(S3, cyclic_group(2), mapping)


def test_isomorphism_search():
    assert group_isomorphism(dihedral_group(3), symmetric_group(3)) is not None
    assert group_isomorphism(quaternion_group(), dihedral_group(4)) is None
    assert group_isomorphism(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))) is None
    iso = group_isomorphism(cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(3)))
    assert iso is not None and len(set(iso)) == 6


def test_subgroups():
    S3 = symmetric_group(3)
    assert [len(s) for s in S3.subgroups()] == [1, 2, 2, 2, 3, 6]
    assert [len(s) for s in S3.subgroups_up_to_conjugacy()] == [1, 2, 3, 6]


def test_words_reconstruct_elements():
    for G in (symmetric_group(3), quaternion_group()):
        gens, words = G.words()
        assert len(words) == G.order
        for x, w in words.items():
            y = 0
            for i in w:
                y = G.mul(y, gens[i])
            assert y == x


def test_trivial_group_homs():
    T = trivial_group()
    assert group_homs(T, symmetric_group(3)) == [[0]]
