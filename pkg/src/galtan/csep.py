"""Commutative separable Frobenius monoids in representation categories.

A separable monoid object is a representation carrying an equivariant
commutative monoid and cocommutative comonoid subject to mu . delta = 1
and the Frobenius law.  Linearization turns a finite G-set into such an
object, the spectrum goes back via primitive idempotents, comonoid
morphisms match equivariant maps covariantly, and the Frobenius-form
adjoint realizes the contravariant equivalence with monoid morphisms.
The end-to-end report cross-checks the three reconstructions of a group
against each other.
"""

import numpy as np

from galtan.errors import (
    GaltanError,
    NonRationalIdempotents,
    SearchBudgetExceeded,
    ValidationError,
)
from galtan.finalg import Algebra, base_idempotents
from galtan.groups import group_isomorphism
from galtan.gset import GSet, EquivariantMap, aut_fiber
from galtan.hopf import Hopf, constant_hopf, derive_antipode, points_group, pi0_hopf
from galtan.linalg import Mat, swap_tensor
from galtan.rep import Representation, perm_rep, verify_reconstruction


class FrobeniusMonoid:
    """Carrier representation with (mu, eta, delta, eps) structure maps."""

    def __init__(self, carrier, mu, eta, delta, eps):
        self.carrier = carrier
        self.mu = mu
        self.eta = eta
        self.delta = delta
        self.eps = eps

    @property
    def field(self):
        return self.carrier.field

    @property
    def dim(self):
        return self.carrier.dim

    def algebra(self):
        """The underlying commutative algebra of the monoid structure."""
        d = self.dim
        mult = self.mu.a.reshape(d, d, d).transpose(1, 2, 0)
        return Algebra(self.field, mult, self.eta.a[:, 0])

    def __repr__(self):
        return f"FrobeniusMonoid(dim={self.dim}, group={self.carrier.group.name})"


def check_csep(M):
    """Every separable-monoid axiom as an exact matrix identity.

    Returns an ordered dict name -> bool plus the first failure under
    "first_failure" (None when all hold).  The Frobenius law is checked
    in applicative order: (mu (x) 1)(1 (x) delta) = delta mu =
    (1 (x) mu)(delta (x) 1); the diagrammatic reading of the axiom
    composes the same maps in the same order.
    """
    F = M.field
    d = M.dim
    I = Mat.identity(F, d)
    sw = swap_tensor(F, d, d)
    rho = M.carrier
    checks = {}
    checks["CarrierRepresentation"] = _rep_valid(rho)
    checks["Associativity"] = M.mu @ M.mu.kron(I) == M.mu @ I.kron(M.mu)
    checks["Unit"] = M.mu @ M.eta.kron(I) == I and M.mu @ I.kron(M.eta) == I
    checks["Commutativity"] = M.mu @ sw == M.mu
    checks["SpecialU"] = M.mu @ M.delta == I
    frob_mid = M.delta @ M.mu
    checks["FrobeniusD"] = (
        M.mu.kron(I) @ I.kron(M.delta) == frob_mid
        and I.kron(M.mu) @ M.delta.kron(I) == frob_mid
    )
    checks["Coassociativity"] = M.delta.kron(I) @ M.delta == I.kron(M.delta) @ M.delta
    checks["Counit"] = M.eps.kron(I) @ M.delta == I and I.kron(M.eps) @ M.delta == I
    checks["Cocommutativity"] = sw @ M.delta == M.delta
    equivariant = True
    for g in range(rho.group.order):
        rg = rho.mat(g)
        rgg = rg.kron(rg)
        if not (
            rg @ M.mu == M.mu @ rgg
            and rg @ M.eta == M.eta
            and rgg @ M.delta == M.delta @ rg
            and M.eps @ rg == M.eps
        ):
            equivariant = False
            break
    checks["Equivariance"] = equivariant
    first = next((k for k, v in checks.items() if not v), None)
    checks["first_failure"] = first
    return checks


def _rep_valid(rho):
    try:
        rho.validate()
        return True
    except ValidationError:
        return False


def csep_valid(M):
    report = check_csep(M)
    if report["first_failure"] is not None:
        raise ValidationError(report["first_failure"])
    return M


def linearize(X, F):
    """The separable monoid k^X on the permutation representation of X.

    Indicators multiply pointwise, the unit is the constant function 1,
    every indicator is comonoid-setlike, and the counit is summation.
    """
    if X.size == 0:
        raise ValidationError("EmptyGSet", "linearization has no unit")
    d = X.size
    carrier = perm_rep(X, F)
    mu = np.zeros((d, d * d), dtype=np.int64)
    delta = np.zeros((d * d, d), dtype=np.int64)
    for x in range(d):
        mu[x, x * d + x] = 1
        delta[x * d + x, x] = 1
    eta = np.ones((d, 1), dtype=np.int64)
    eps = np.ones((1, d), dtype=np.int64)
    M = FrobeniusMonoid(carrier, Mat(F, mu), Mat(F, eta), Mat(F, delta), Mat(F, eps))
    return csep_valid(M)


def spectrum(M, seed=0):
    """The finite G-set of primitive idempotents of the monoid.

    Demands base-rational idempotents (the separably-closed hypothesis
    in operational form): otherwise NonRationalIdempotents carries the
    minimal extension degree.  The group permutes the idempotents
    because it acts by algebra automorphisms.
    """
    A = M.algebra()
    idems = base_idempotents(A, seed=seed)
    degs = sorted({deg for _, deg in idems})
    if degs != [1]:
        m = 1
        for dd in degs:
            m = m * dd // _gcd(m, dd)
        raise NonRationalIdempotents(m)
    if len(idems) != M.dim:
        raise ValidationError("SpectrumSize", (len(idems), M.dim))
    # order by leading coordinate so spectrum(linearize(X)) lists the
    # indicator idempotents in X's own order
    vecs = sorted(
        (e for e, _ in idems),
        key=lambda v: (int(np.nonzero(v)[0][0]), tuple(v.tolist())),
    )
    index = {tuple(v.tolist()): i for i, v in enumerate(vecs)}
    G = M.carrier.group
    action = np.zeros((G.order, len(vecs)), dtype=np.int64)
    for g in range(G.order):
        rg = M.carrier.mat(g)
        for i, v in enumerate(vecs):
            w = tuple(rg.mul_vec(v).tolist())
            if w not in index:
                raise ValidationError("SpectrumAction", (g, i))
            action[g, i] = index[w]
    return GSet(G, action), vecs


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def roundtrip_gset(X, F, seed=0):
    """Equivariant bijection X = spectrum(linearize(X)); the witness map."""
    M = linearize(X, F)
    S, vecs = spectrum(M, seed=seed)
    mapping = []
    for v in vecs:
        hits = np.nonzero(v)[0]
        if hits.size != 1 or v[hits[0]] != 1:
            raise ValidationError("RoundtripBasis", v.tolist())
        mapping.append(int(hits[0]))
    witness = EquivariantMap(S, X, mapping)
    if not witness.is_bijective():
        raise ValidationError("RoundtripBijection")
    return witness


class ComonoidMorphism:
    """Equivariant map preserving delta and eps (not necessarily mu)."""

    def __init__(self, source, target, matrix, validate=True):
        self.source = source
        self.target = target
        self.matrix = matrix
        if validate:
            self.validate()

    def validate(self):
        f = self.matrix
        M, N = self.source, self.target
        if f.shape != (N.dim, M.dim):
            raise ValidationError("MorphismShape", f.shape)
        if not f.kron(f) @ M.delta == N.delta @ f:
            raise ValidationError("MorphismComult")
        if not N.eps @ f == M.eps:
            raise ValidationError("MorphismCounit")
        for g in range(M.carrier.group.order):
            if not N.carrier.mat(g) @ f == f @ M.carrier.mat(g):
                raise ValidationError("MorphismEquivariance", g)
        return self

    def __eq__(self, other):
        return isinstance(other, ComonoidMorphism) and self.matrix == other.matrix


def roundtrip_monoid(M, seed=0):
    """Invertible ComonoidMorphism (also a monoid map) onto linearize(spectrum(M)).

    Sends the basis vector of each spectrum point to the corresponding
    primitive idempotent of M.
    """
    S, vecs = spectrum(M, seed=seed)
    N = linearize(S, M.field)
    U = Mat(M.field, np.array(vecs).T)
    iso = ComonoidMorphism(N, M, U)
    if U.rank() != M.dim:
        raise ValidationError("RoundtripInvertible")
    if not is_monoid_morphism(N, M, U):
        raise ValidationError("RoundtripMonoid")
    return iso


def is_monoid_morphism(M, N, f):
    return f @ M.mu == N.mu @ f.kron(f) and f @ M.eta == N.eta


def setlike_elements(M, seed=0):
    """Vectors v with delta(v) = v (x) v and eps(v) = 1.

    For a split separable monoid these are exactly the primitive
    idempotents of the underlying algebra, which is verified.
    """
    A = M.algebra()
    idems = base_idempotents(A, seed=seed)
    out = []
    for v, deg in idems:
        if deg != 1:
            raise NonRationalIdempotents(deg)
        vv = np.kron(v, v) % M.field.p if M.field.is_prime_field else _kron(M.field, v, v)
        if not np.array_equal(M.delta.mul_vec(v), vv):
            raise ValidationError("SetlikeComult", v.tolist())
        if M.eps.mul_vec(v)[0] != 1:
            raise ValidationError("SetlikeCounit", v.tolist())
        out.append(v)
    return out


def _kron(F, u, v):
    out = np.zeros(len(u) * len(v), dtype=np.int64)
    for i, x in enumerate(u):
        if x:
            for j, y in enumerate(v):
                if y:
                    out[i * len(v) + j] = F.mul(int(x), int(y))
    return out


def comonoid_homs(M, N, budget=200_000, seed=0):
    """All comonoid morphisms M -> N.

    A comonoid map sends setlike elements to setlike elements and is
    determined by that assignment (setlikes span).  Candidates are maps
    between the setlike sets, filtered by equivariance; they match
    equivariant maps spectrum(M) -> spectrum(N) covariantly.
    """
    from itertools import product as iproduct

    sm = setlike_elements(M, seed=seed)
    sn = setlike_elements(N, seed=seed)
    if len(sn) ** max(len(sm), 1) > budget:
        raise SearchBudgetExceeded(len(sn) ** max(len(sm), 1), budget)
    um = Mat(M.field, np.array(sm).T)
    um_inv = um.inverse()
    un = np.array(sn).T
    out = []
    for assign in iproduct(range(len(sn)), repeat=len(sm)):
        cols = un[:, list(assign)]
        f = Mat(M.field, cols.astype(np.int64)) @ um_inv
        try:
            out.append(ComonoidMorphism(M, N, f))
        except ValidationError:
            continue
    out.sort(key=lambda h: tuple(h.matrix.a.reshape(-1).tolist()))
    return out


def frobenius_form(M):
    """Gram matrix of the nondegenerate pairing eps(mu(x (x) y))."""
    d = M.dim
    return Mat(M.field, (M.eps @ M.mu).a.reshape(d, d))


def dual_morphism(f):
    """The Frobenius-form adjoint of a comonoid morphism.

    For f : M -> N this is the monoid morphism N -> M determined by
    <f*(y), x>_M = <y, f(x)>_N; adjointness is contravariantly
    functorial, which the duality tests exercise on composable pairs.
    """
    M, N = f.source, f.target
    bm = frobenius_form(M)
    bn = frobenius_form(N)
    adj = bm.inverse() @ f.matrix.T @ bn
    if not is_monoid_morphism(N, M, adj):
        raise ValidationError("DualNotMonoid")
    for g in range(M.carrier.group.order):
        if not M.carrier.mat(g) @ adj == adj @ N.carrier.mat(g):
            raise ValidationError("DualEquivariance", g)
    return adj


def twist_monoid(M, P):
    """Transport the structure along an invertible change of basis P."""
    Pi = P.inverse()
    carrier = Representation(
        M.carrier.group,
        M.field,
        [P @ m @ Pi for m in M.carrier.mats],
    )
    return FrobeniusMonoid(
        carrier,
        P @ M.mu @ Pi.kron(Pi),
        P @ M.eta,
        P.kron(P) @ M.delta @ Pi,
        M.eps @ Pi,
    )


def gamma_report(G, F, size_bound=None, hom_budget=400_000, seed=0):
    """Cross-check the three reconstructions of G against each other.

    (a) automorphisms of the fiber functor on finite G-sets, (b) points
    of pi0 of the Hopf algebra reconstructed from the restricted coend
    of k^G-comodules, (c) G itself.  All three must be isomorphic, with
    the isomorphisms exhibited.
    """
    bound = size_bound or G.order
    aut, aut_iso, corpus_size = aut_fiber(G, bound)
    H = constant_hopf(G, F)
    rec = verify_reconstruction(H, hom_budget=hom_budget, seed=seed)
    if rec["status"] != "ok":
        raise GaltanError(f"reconstruction failed: {rec['status']}")
    kappa = rec["kappa"]
    ki = kappa.inverse()
    # transport H's structure through kappa^-1 to get the reconstructed copy
    d = H.dim
    mult = np.zeros((d, d, d), dtype=np.int64)
    mu_rec = ki @ H.mu @ kappa.kron(kappa)
    for i in range(d):
        for j in range(d):
            mult[i, j] = mu_rec.a[:, i * d + j]
    alg = Algebra(F, mult, ki.mul_vec(H.algebra.unit))
    delta_rec = ki.kron(ki) @ H.delta @ kappa
    eps_rec = H.eps @ kappa
    s_rec = derive_antipode(alg, delta_rec, eps_rec)
    H_rec = Hopf(alg, delta_rec, eps_rec, s_rec)
    sub, _ = pi0_hopf(H_rec)
    pg, _ = points_group(sub, seed=seed)
    iso_b = group_isomorphism(pg, G)
    matched = iso_b is not None and aut.order == pg.order == G.order
    return {
        "order": G.order,
        "aut_fiber_order": aut.order,
        "points_order": pg.order,
        "matched": bool(matched),
        "aut_iso": aut_iso,
        "points_iso": iso_b,
        "gset_corpus": corpus_size,
        "carrier_dim": rec["carrier_dim"],
    }
