import numpy as np
import pytest

from galtan.errors import SearchBudgetExceeded, ValidationError
from galtan.fields import field_make
from galtan.finalg import is_separable, pi0
from galtan.groups import (
    cyclic_group,
    direct_product,
    group_homs,
    group_isomorphism,
    small_groups,
    symmetric_group,
    trivial_group,
)
from galtan.hopf import (
    Hopf,
    constant_hopf,
    coreflection_check,
    derive_antipode,
    group_hopf,
    hopf_axiom_report,
    hopf_from_dict,
    hopf_homs,
    hopf_to_dict,
    identity_component,
    mu_n_hopf,
    natural_square_check,
    pi0_hopf,
    points_group,
)
from galtan.linalg import Mat

F2 = field_make(2)
F3 = field_make(3)
F5 = field_make(5)
F7 = field_make(7)


def test_constant_hopf_valid():
    H = constant_hopf(cyclic_group(2), F5)
    H.validate()
    # delta(e_0) = e_0 (x) e_0 + e_1 (x) e_1, from delta(phi)(g,h) = phi(gh)
    assert H.delta.a[:, 0].tolist() == [1, 0, 0, 1]
    assert H.delta.a[:, 1].tolist() == [0, 1, 1, 0]


def test_constant_hopf_trivial_group():
    H = constant_hopf(trivial_group(), F5)
    assert H.dim == 1
    assert H.eps.a.tolist() == [[1]]


def test_constant_hopf_s3_dim():
    assert constant_hopf(symmetric_group(3), F7).dim == 6


def test_broken_antipode_reported():
    H = constant_hopf(cyclic_group(2), F5)
    with pytest.raises(ValidationError) as err:
        Hopf(H.algebra, H.delta, H.eps, Mat.zeros(F5, 2, 2))
    assert err.value.axiom == "AntipodeLaw"


def test_group_hopf_reports():
    mats, report, pairing = group_hopf(symmetric_group(3), F7)
    assert all(report.values())
    assert "Commutativity" not in report  # S3 is nonabelian
    assert pairing.rank() == 6
    _, report2, _ = group_hopf(cyclic_group(2), F5)
    assert report2["Commutativity"] and report2["Cocommutativity"]


def test_group_hopf_pairing_nondegenerate_order_8():
    for G in small_groups(8):
        for F in (F5, F7):
            _, report, pairing = group_hopf(G, F)
            assert all(report.values())
            assert pairing.rank() == G.order


def test_points_group_constant():
    G, _ = points_group(constant_hopf(cyclic_group(2), F5))
    assert G.order == 2
    G6, _ = points_group(constant_hopf(symmetric_group(3), F7))
    assert G6.order == 6 and not G6.is_abelian()


def test_points_group_mu3_f2():
    # x^3 - 1 over F2 has exactly one cube root of 1 rational over F2
    G, _ = points_group(mu_n_hopf(3, F2))
    assert G.order == 1


def test_points_group_recovery_order_8():
    for G in small_groups(8):
        P, _ = points_group(constant_hopf(G, F5))
        iso = group_isomorphism(P, G)
        assert iso is not None


def test_pi0_hopf_mu6_f2():
    sub, inc = pi0_hopf(mu_n_hopf(6, F2))
    assert sub.dim == 3
    # pi0 of mu6 is mu3: its points over F2 are trivial but over F4 has 3
    assert is_separable(sub.algebra)
    inc.validate()


def test_pi0_hopf_separable_identity():
    H = constant_hopf(symmetric_group(3), F7)
    sub, _ = pi0_hopf(H)
    assert sub.dim == H.dim


def test_pi0_hopf_mu_p_connected():
    for p, F in ((2, F2), (3, F3)):
        sub, _ = pi0_hopf(mu_n_hopf(p, F))
        assert sub.dim == 1


def test_identity_component_mu6():
    Hq, _ = identity_component(mu_n_hopf(6, F2))
    assert Hq.dim == 2
    assert pi0(Hq.algebra).dim == 1


def test_identity_component_separable_trivial():
    Hq, _ = identity_component(constant_hopf(symmetric_group(3), F7))
    assert Hq.dim == 1


def test_identity_component_connected_input():
    H = mu_n_hopf(2, F2)
    Hq, _ = identity_component(H)
    assert Hq.dim == H.dim


def test_connected_etale_dimension_product():
    cases = [mu_n_hopf(n, F) for n in range(1, 7) for F in (F2, F3)]
    cases += [constant_hopf(G, F5) for G in small_groups(6)]
    for H in cases:
        sub, _ = pi0_hopf(H)
        Hq, _ = identity_component(H)
        assert H.dim == sub.dim * Hq.dim


def test_hopf_homs_counts():
    kZ2 = constant_hopf(cyclic_group(2), F7)
    kZ3 = constant_hopf(cyclic_group(3), F7)
    kS3 = constant_hopf(symmetric_group(3), F7)
    k1 = constant_hopf(trivial_group(), F7)
    assert len(hopf_homs(kZ2, kS3)) == 2  # dual to {trivial, sign}
    assert len(hopf_homs(kZ3, k1)) == 1  # only the counit
    assert len(hopf_homs(kZ3, kZ2)) == 1
    assert len(hopf_homs(kZ3, kZ3)) == 3


def test_hopf_homs_budget():
    kS3 = constant_hopf(symmetric_group(3), F7)
    with pytest.raises(SearchBudgetExceeded):
        hopf_homs(kS3, kS3, budget=10)


def test_hopf_homs_match_group_homs_dual():
    groups = [cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group(3)]
    for Gamma in groups:
        for G in groups:
            n_hopf = len(hopf_homs(constant_hopf(Gamma, F5), constant_hopf(G, F5)))
            assert n_hopf == len(group_homs(G, Gamma))


def test_coreflection_z2_ks3():
    r = coreflection_check(cyclic_group(2), constant_hopf(symmetric_group(3), F7))
    assert r["bijection"] and r["hopf_side"] == 2


def test_coreflection_mu_p_singleton():
    for Gamma in (cyclic_group(2), cyclic_group(3), symmetric_group(3)):
        r = coreflection_check(Gamma, mu_n_hopf(2, F2))
        assert r["bijection"] and r["hopf_side"] == 1


def test_coreflection_z3_mu6():
    r = coreflection_check(cyclic_group(3), mu_n_hopf(6, F2))
    assert r["bijection"] and r["hopf_side"] == 1


def test_coreflection_naturality():
    Z2 = cyclic_group(2)
    V4 = direct_product(Z2, Z2)
    u = group_homs(Z2, V4)[1]
    assert natural_square_check(Z2, V4, u, constant_hopf(symmetric_group(3), F7))


def test_derive_antipode_recovers():
    H = constant_hopf(symmetric_group(3), F7)
    S = derive_antipode(H.algebra, H.delta, H.eps)
    assert S == H.antipode


def test_hopf_axiom_report_complete():
    H = constant_hopf(cyclic_group(3), F5)
    report = hopf_axiom_report(F5, H.mu, H.eta, H.delta, H.eps, H.antipode)
    assert all(report.values())
    assert set(report) >= {
        "Associativity",
        "UnitLaw",
        "Commutativity",
        "Coassociativity",
        "CounitLaw",
        "BialgebraCompat",
        "AntipodeLaw",
    }


def test_serialization_roundtrip():
    H = mu_n_hopf(4, F3)
    H2 = hopf_from_dict(hopf_to_dict(H))
    assert H == H2
