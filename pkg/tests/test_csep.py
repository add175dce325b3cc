import random

import numpy as np
import pytest

from galtan.errors import NonRationalIdempotents, ValidationError
from galtan.fields import field_make
from galtan.finalg import quotient_poly_algebra, trace_form
from galtan.groups import cyclic_group, direct_product, symmetric_group, trivial_group
from galtan.gset import (
    all_gsets_upto,
    check_galois,
    coset_gset,
    homs,
    regular_gset,
    singleton_gset,
    trivial_gset,
)
from galtan.hopf import eta_matrix, mu_matrix
from galtan.linalg import Mat
from galtan.csep import (
    ComonoidMorphism,
    FrobeniusMonoid,
    check_csep,
    comonoid_homs,
    dual_morphism,
    frobenius_form,
    gamma_report,
    is_monoid_morphism,
    linearize,
    roundtrip_gset,
    roundtrip_monoid,
    setlike_elements,
    spectrum,
    twist_monoid,
)
from galtan.rep import Representation

F2 = field_make(2)
F5 = field_make(5)
F7 = field_make(7)
Z2 = cyclic_group(2)
Z3 = cyclic_group(3)
S3 = symmetric_group(3)


def s3_coset_3():
    sub = next(s for s in S3.subgroups() if len(s) == 2)
    return coset_gset(S3, sub)


def test_linearize_passes_csep():
    for X in (singleton_gset(Z3), regular_gset(Z3), s3_coset_3()):
        M = linearize(X, F7)
        assert check_csep(M)["first_failure"] is None


def test_linearize_empty_rejected():
    from galtan.gset import empty_gset

    with pytest.raises(ValidationError):
        linearize(empty_gset(Z2), F5)


def test_scaled_delta_fails_special_u():
    M = linearize(regular_gset(Z2), F5)
    bad = FrobeniusMonoid(M.carrier, M.mu, M.eta, M.delta.scale(2), M.eps)
    assert check_csep(bad)["first_failure"] == "SpecialU"


def test_group_like_delta_on_group_algebra_fails_u():
    # on k[Z2] with delta(g) = g (x) g, mu(delta(g)) = g^2 != g for g != e
    from galtan.hopf import group_hopf

    mats, _, _ = group_hopf(Z2, F5)
    carrier = Representation(trivial_group(), F5, [Mat.identity(F5, 2)])
    M = FrobeniusMonoid(carrier, mats["mu"], mats["eta"], mats["delta"], mats["eps"])
    assert check_csep(M)["first_failure"] == "SpecialU"


def test_spectrum_of_linearize_is_canonical():
    for X in (regular_gset(Z3), s3_coset_3(), trivial_gset(Z2, 3)):
        F = F7
        w = roundtrip_gset(X, F)
        assert w.is_bijective()
        assert w.table == list(range(X.size))


def test_spectrum_nonrational_idempotents():
    A = quotient_poly_algebra(F2, (1, 1, 1))
    B = trace_form(A)
    tr = [A.mult_operator(np.eye(2, dtype=np.int64)[i]).trace() for i in range(2)]
    eps = Mat(F2, [tr])
    delta = B.inverse().kron(B.inverse()) @ mu_matrix(A).T @ B
    carrier = Representation(trivial_group(), F2, [Mat.identity(F2, 2)])
    M = FrobeniusMonoid(carrier, mu_matrix(A), eta_matrix(A), delta, eps)
    assert check_csep(M)["first_failure"] is None
    with pytest.raises(NonRationalIdempotents) as err:
        spectrum(M)
    assert err.value.degree == 2


def test_roundtrip_monoid_identity_on_linearize():
    M = linearize(s3_coset_3(), F7)
    iso = roundtrip_monoid(M)
    assert np.array_equal(iso.matrix.a, np.eye(M.dim, dtype=np.int64))


def test_roundtrip_monoid_on_twists():
    rng = random.Random(12)
    X = regular_gset(Z3)
    M = linearize(X, F7)
    for _ in range(5):
        perm = list(range(M.dim))
        rng.shuffle(perm)
        P = Mat(F7, np.eye(M.dim, dtype=np.int64)[perm])
        iso = roundtrip_monoid(twist_monoid(M, P))
        assert iso.matrix.rank() == M.dim
    # a non-monomial change of basis
    P = Mat(F7, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    Mt = twist_monoid(M, P)
    assert check_csep(Mt)["first_failure"] is None
    iso = roundtrip_monoid(Mt)
    assert iso.matrix.rank() == M.dim
    assert is_monoid_morphism(iso.source, iso.target, iso.matrix)


def test_setlikes_are_indicators_for_linearize():
    M = linearize(regular_gset(Z3), F7)
    s = setlike_elements(M)
    assert sorted(tuple(v.tolist()) for v in s) == [
        (0, 0, 1),
        (0, 1, 0),
        (1, 0, 0),
    ]


def test_comonoid_homs_match_gset_homs_covariantly():
    F = F7
    gsets = all_gsets_upto(Z3, 4) + [regular_gset(Z3)]
    for X in gsets:
        for Y in gsets:
            MX, MY = linearize(X, F), linearize(Y, F)
            assert len(comonoid_homs(MX, MY)) == len(homs(X, Y))


def test_comonoid_homs_identity_present():
    M = linearize(regular_gset(Z3), F7)
    assert any(
        np.array_equal(h.matrix.a, np.eye(3, dtype=np.int64))
        for h in comonoid_homs(M, M)
    )


def test_comonoid_homs_from_unit_counts_fixed_points():
    # maps out of the unit object match equivariant points of the target
    unit = linearize(singleton_gset(Z2), F5)
    X = trivial_gset(Z2, 3)
    assert len(comonoid_homs(unit, linearize(X, F5))) == 3
    Y = regular_gset(Z2)
    assert len(comonoid_homs(unit, linearize(Y, F5))) == 0


def test_dual_of_identity():
    M = linearize(regular_gset(Z3), F7)
    ident = next(
        h
        for h in comonoid_homs(M, M)
        if np.array_equal(h.matrix.a, np.eye(3, dtype=np.int64))
    )
    assert np.array_equal(dual_morphism(ident).a, np.eye(3, dtype=np.int64))


def test_dual_matches_precomposition():
    # comonoid hom induced by u : Y -> X dualizes to precomposition by u
    F = F7
    X = trivial_gset(Z3, 2)
    Y = regular_gset(Z3)
    MX, MY = linearize(X, F), linearize(Y, F)
    for u in homs(Y, X):
        fmat = np.zeros((X.size, Y.size), dtype=np.int64)
        for y in range(Y.size):
            fmat[u(y), y] = 1
        f = ComonoidMorphism(MY, MX, Mat(F, fmat))
        adj = dual_morphism(f)
        # precomposition k^X -> k^Y is the transpose indicator
        assert np.array_equal(adj.a, fmat.T)


def test_dual_contravariant_on_100_pairs():
    rng = random.Random(99)
    F = F7
    gsets = [regular_gset(Z3), trivial_gset(Z3, 2), trivial_gset(Z3, 1)]
    monoids = [linearize(X, F) for X in gsets]
    pairs = 0
    while pairs < 100:
        A, B, C = (rng.choice(monoids) for _ in range(3))
        fs = comonoid_homs(A, B)
        gs = comonoid_homs(B, C)
        if not fs or not gs:
            continue
        f = rng.choice(fs)
        g = rng.choice(gs)
        comp = ComonoidMorphism(A, C, g.matrix @ f.matrix)
        assert dual_morphism(comp) == dual_morphism(f) @ dual_morphism(g)
        pairs += 1


def test_duality_is_bijection():
    M = linearize(regular_gset(Z3), F7)
    N = linearize(trivial_gset(Z3, 2), F7)
    homs_mn = comonoid_homs(M, N)
    duals = [tuple(dual_morphism(f).a.reshape(-1).tolist()) for f in homs_mn]
    assert len(set(duals)) == len(homs_mn)


def test_frobenius_form_nondegenerate():
    for X in (regular_gset(Z3), s3_coset_3()):
        M = linearize(X, F7)
        assert frobenius_form(M).rank() == M.dim


def test_spectrum_image_satisfies_galois_axioms():
    # Boolean-pretopos signal: spectra of linearized corpus live in G-sets
    for G in (Z2, Z3):
        rep = check_galois(G, sample_budget=10, seed=3)
        assert all(v["pass"] for v in rep.values())
    for X in (regular_gset(Z2), trivial_gset(Z2, 3)):
        S, _ = spectrum(linearize(X, F5))
        S.validate()


def test_gamma_report_small():
    for G in (trivial_group(), Z2, Z3):
        r = gamma_report(G, F5)
        assert r["matched"]
        assert r["aut_fiber_order"] == r["points_order"] == G.order


def test_gamma_report_s3():
    r = gamma_report(S3, F7)
    assert r["matched"] and r["order"] == 6
