import numpy as np
import pytest

from galtan.errors import SearchBudgetExceeded, ValidationError
from galtan.groups import (
    cyclic_group,
    direct_product,
    group_isomorphism,
    small_groups,
    symmetric_group,
    trivial_group,
)
from galtan.gset import (
    EquivariantMap,
    GSet,
    all_gsets_upto,
    aut_fiber,
    check_galois,
    coequalizer_gset,
    coproduct_gset,
    coset_gset,
    empty_gset,
    equalizer_gset,
    fiber,
    gset_from_dict,
    gset_to_dict,
    homs,
    is_transitive,
    orbits,
    perm_gset,
    product_gset,
    pullback_gset,
    regular_gset,
    singleton_gset,
    sub_gset,
    trivial_gset,
)

Z2 = cyclic_group(2)
Z3 = cyclic_group(3)
S3 = symmetric_group(3)


def test_action_validation():
    with pytest.raises(ValidationError):
        GSet(Z2, [[0, 1], [0, 0]])  # g.g.x != (gg).x when g collapses points
    with pytest.raises(ValidationError):
        GSet(Z2, [[1, 0], [0, 1]])  # identity must act trivially


def test_orbits_regular():
    parts, _, _ = orbits(regular_gset(S3))
    assert [p.size for p in parts] == [6]
    assert is_transitive(parts[0])


def test_orbits_trivial_action():
    parts, _, _ = orbits(trivial_gset(Z3, 3))
    assert [p.size for p in parts] == [1, 1, 1]


def test_orbits_mixed():
    X = perm_gset(Z2, [[0, 1, 2, 3], [1, 0, 2, 3]])
    assert sorted(p.size for p in orbits(X)[0]) == [1, 1, 2]


def test_orbit_coproduct_bijection():
    X = perm_gset(Z2, [[0, 1, 2, 3], [1, 0, 2, 3]])
    _, _, bij = orbits(X)
    assert sorted(bij) == list(range(4))


def test_product_regular_z2():
    P, p1, p2 = product_gset(regular_gset(Z2), regular_gset(Z2))
    assert P.size == 4
    assert sorted(p.size for p in orbits(P)[0]) == [2, 2]
    p1.validate()
    p2.validate()


def test_equalizer_of_identity_pair():
    X = regular_gset(Z3)
    ident = EquivariantMap(X, X, list(range(3)))
    E, inc = equalizer_gset(ident, ident)
    assert E.size == X.size


def test_terminal_and_initial():
    for G in (Z2, S3):
        assert len(homs(regular_gset(G), singleton_gset(G))) == 1
        assert len(homs(empty_gset(G), regular_gset(G))) == 1


def test_pullback():
    X = regular_gset(Z2)
    T = singleton_gset(Z2)
    f = homs(X, T)[0]
    P, q1, q2 = pullback_gset(f, f)
    assert P.size == 4  # X x_pt X = X x X
    q1.validate()


def test_coproduct_sizes():
    C, i1, i2 = coproduct_gset(trivial_gset(Z2, 2), trivial_gset(Z2, 3))
    assert C.size == 5
    i1.validate()
    i2.validate()


def test_coequalizer_identity_pair():
    X = regular_gset(Z3)
    ident = EquivariantMap(X, X, list(range(3)))
    Q, _ = coequalizer_gset(ident, ident)
    assert Q.size == X.size


def test_coequalizer_merges_orbit():
    # the two endomorphisms of the regular Z2-set pick its two points
    # (maps out of the free object on one generator)
    r2 = regular_gset(Z2)
    f, g = homs(r2, r2)
    Q, _ = coequalizer_gset(f, g)
    assert Q.size == 1


def test_fiber_functorial():
    X = regular_gset(S3)
    assert len(fiber(X)) == 6
    P, _, _ = product_gset(X, X)
    assert len(fiber(P)) == 36


def test_homs_yoneda_anchor():
    for G in small_groups(6):
        reg = regular_gset(G)
        for X in all_gsets_upto(G, 4):
            assert len(homs(reg, X)) == X.size


def test_homs_singleton_fixed_points():
    X = perm_gset(Z2, [[0, 1, 2, 3], [1, 0, 2, 3]])
    assert len(homs(singleton_gset(Z2), X)) == 2


def test_homs_budget():
    with pytest.raises(SearchBudgetExceeded):
        homs(trivial_gset(Z2, 8), trivial_gset(Z2, 8), budget=10)


def test_conservativity_on_corpus():
    for G in (Z2, Z3, S3):
        objs = all_gsets_upto(G, 4)
        for X in objs:
            for Y in objs:
                for f in homs(X, Y):
                    if f.is_bijective():
                        f.inverse().validate()


def test_check_galois_acceptance_groups():
    for G in (Z2, Z3, cyclic_group(4), S3):
        report = check_galois(G, sample_budget=25, seed=0)
        assert all(v["pass"] for v in report.values()), report


def test_aut_fiber_small():
    for G in small_groups(6):
        Aut, iso, _ = aut_fiber(G, G.order)
        assert Aut.order == G.order
        assert group_isomorphism(Aut, G) is not None
        assert len(set(iso)) == G.order


def test_aut_fiber_trivial():
    Aut, _, _ = aut_fiber(trivial_group(), 1)
    assert Aut.order == 1


def test_aut_fiber_bound_rejected():
    with pytest.raises(ValueError):
        aut_fiber(S3, 3)


def test_sub_gset_invariance_check():
    X = regular_gset(Z2)
    with pytest.raises(ValidationError):
        sub_gset(X, [0])  # {e} is not Z2-invariant in the regular set


def test_coset_gset():
    sub = next(s for s in S3.subgroups() if len(s) == 2)
    X = coset_gset(S3, sub)
    assert X.size == 3
    assert is_transitive(X)


def test_serialization():
    X = coset_gset(S3, (0,))
    Y = gset_from_dict(gset_to_dict(X))
    assert np.array_equal(X.action, Y.action)
