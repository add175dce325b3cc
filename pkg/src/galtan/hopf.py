"""Finite-dimensional commutative Hopf algebras over finite fields.

A Hopf algebra is an Algebra plus explicit comultiplication (d^2 x d),
counit (1 x d) and antipode (d x d) matrices; every axiom is an exact
matrix identity.  The module provides the constant Hopf algebra k^G and
the multiplicative family F[x]/(x^n - 1), the group of rational points
under convolution, pi0 as a Hopf subalgebra with its inclusion, the
connected component quotient, and the hom-set machinery behind the
coreflection between finite groups and commutative Hopf algebras.
"""

from itertools import product

import numpy as np

from galtan import fields
from galtan.errors import GaltanError, SearchBudgetExceeded, ValidationError
from galtan.finalg import (
    Algebra,
    base_idempotents,
    diagonal_algebra,
    pi0,
    points,
    quotient_poly_algebra,
)
from galtan.groups import Group, group_homs
from galtan.linalg import Mat, RowSpan, swap_tensor


def mu_matrix(A):
    """Multiplication as a matrix V (x) V -> V (columns indexed i*d+j)."""
    d = A.dim
    m = A.mult.transpose(2, 0, 1).reshape(d, d * d)
    return Mat(A.field, m)


def eta_matrix(A):
    return Mat(A.field, A.unit.reshape(-1, 1))


def hopf_axiom_report(F, mu, eta, delta, eps, antipode,
                      require_commutative=True, require_cocommutative=False):
    """Check every Hopf axiom as a matrix identity; dict of name -> bool."""
    d = mu.rows
    I = Mat.identity(F, d)
    sw = swap_tensor(F, d, d)
    one = Mat(F, [[1]])
    report = {}
    report["Associativity"] = mu @ I.kron(mu) == mu @ mu.kron(I)
    report["UnitLaw"] = mu @ eta.kron(I) == I and mu @ I.kron(eta) == I
    report["Commutativity"] = mu @ sw == mu
    report["Coassociativity"] = delta.kron(I) @ delta == I.kron(delta) @ delta
    report["CounitLaw"] = eps.kron(I) @ delta == I and I.kron(eps) @ delta == I
    report["Cocommutativity"] = sw @ delta == delta
    mu2 = mu.kron(mu) @ I.kron(sw).kron(I)  # product on V (x) V
    report["BialgebraCompat"] = (
        delta @ mu == mu2 @ delta.kron(delta)
        and eps @ mu == eps.kron(eps)
        and delta @ eta == eta.kron(eta)
        and (eps @ eta) == one
    )
    ne = eta @ eps
    report["AntipodeLaw"] = (
        mu @ antipode.kron(I) @ delta == ne
        and mu @ I.kron(antipode) @ delta == ne
    )
    if not require_commutative:
        report.pop("Commutativity")
    if not require_cocommutative:
        report.pop("Cocommutativity")
    return report


class Hopf:
    """Commutative Hopf algebra: validated algebra + coalgebra matrices."""

    def __init__(self, algebra, delta, eps, antipode, validate=True):
        d = algebra.dim
        if delta.shape != (d * d, d):
            raise ValidationError("ComultShape", delta.shape)
        if eps.shape != (1, d):
            raise ValidationError("CounitShape", eps.shape)
        if antipode.shape != (d, d):
            raise ValidationError("AntipodeShape", antipode.shape)
        self.algebra = algebra
        self.delta = delta
        self.eps = eps
        self.antipode = antipode
        if validate:
            self.validate()

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def mu(self):
        return mu_matrix(self.algebra)

    @property
    def eta(self):
        return eta_matrix(self.algebra)

    def validate(self):
        self.algebra.validate()
        report = hopf_axiom_report(
            self.field, self.mu, self.eta, self.delta, self.eps, self.antipode
        )
        for axiom, ok in report.items():
            if not ok:
                raise ValidationError(axiom)
        return self

    def __eq__(self, other):
        return (
            isinstance(other, Hopf)
            and self.algebra == other.algebra
            and self.delta == other.delta
            and self.eps == other.eps
            and self.antipode == other.antipode
        )

    def __repr__(self):
        return f"Hopf(dim={self.dim}, field={self.field!r})"


class HopfMorphism:
    """Map of Hopf algebras; preservation of mu, eta, delta, eps and S is
    checked explicitly (S preservation is automatic but cheap to confirm)."""

    def __init__(self, source, target, matrix, validate=True):
        self.source = source
        self.target = target
        self.matrix = matrix
        if validate:
            self.validate()

    def validate(self):
        f = self.matrix
        s, t = self.source, self.target
        if f.shape != (t.dim, s.dim):
            raise ValidationError("MorphismShape", f.shape)
        if not (f @ s.eta == t.eta):
            raise ValidationError("MorphismUnit")
        if not (f @ s.mu == t.mu @ f.kron(f)):
            raise ValidationError("MorphismProduct")
        if not (f.kron(f) @ s.delta == t.delta @ f):
            raise ValidationError("MorphismComult")
        if not (t.eps @ f == s.eps):
            raise ValidationError("MorphismCounit")
        if not (t.antipode @ f == f @ s.antipode):
            raise ValidationError("MorphismAntipode")
        return self

    def __eq__(self, other):
        return (
            isinstance(other, HopfMorphism)
            and self.matrix == other.matrix
            and self.source is other.source
            and self.target is other.target
        )


# -- builders -----------------------------------------------------------------


def constant_hopf(G, F):
    """k^G: functions on G with pointwise product.

    Comultiplication sends the indicator of g to the sum of e_a (x) e_b
    over ab = g, the counit evaluates at the identity, and the antipode
    permutes indicators along inversion.
    """
    d = G.order
    A = diagonal_algebra(F, d)
    delta = np.zeros((d * d, d), dtype=np.int64)
    for a in range(d):
        for b in range(d):
            delta[a * d + b, G.mul(a, b)] = 1
    eps = np.zeros((1, d), dtype=np.int64)
    eps[0, 0] = 1
    s = np.zeros((d, d), dtype=np.int64)
    for g in range(d):
        s[G.inverse(g), g] = 1
    return Hopf(A, Mat(F, delta), Mat(F, eps), Mat(F, s))


def group_hopf(G, F):
    """The group algebra k[G] with its standard (cocommutative) structure.

    Returns (matrices dict, axiom report, pairing with k^G).  k[G] is not
    commutative for nonabelian G, so it is returned as raw structure
    maps rather than a Hopf instance; the pairing <g, e_h> = [g = h] is
    the duality with constant_hopf(G, F).
    """
    d = G.order
    mu = np.zeros((d, d * d), dtype=np.int64)
    for a in range(d):
        for b in range(d):
            mu[G.mul(a, b), a * d + b] = 1
    eta = np.zeros((d, 1), dtype=np.int64)
    eta[0, 0] = 1
    delta = np.zeros((d * d, d), dtype=np.int64)
    for g in range(d):
        delta[g * d + g, g] = 1
    eps = np.ones((1, d), dtype=np.int64)
    s = np.zeros((d, d), dtype=np.int64)
    for g in range(d):
        s[G.inverse(g), g] = 1
    mats = {
        "mu": Mat(F, mu),
        "eta": Mat(F, eta),
        "delta": Mat(F, delta),
        "eps": Mat(F, eps),
        "antipode": Mat(F, s),
    }
    report = hopf_axiom_report(
        F,
        mats["mu"],
        mats["eta"],
        mats["delta"],
        mats["eps"],
        mats["antipode"],
        require_commutative=G.is_abelian(),
        require_cocommutative=True,
    )
    pairing = Mat.identity(F, d)  # <g, e_h> in the group/indicator bases
    return mats, report, pairing


def mu_n_hopf(n, F):
    """O(mu_n) = F[x]/(x^n - 1) with x group-like; connected iff p | n."""
    f = [0] * (n + 1)
    f[0] = F.neg(1)
    f[n] = 1
    A = quotient_poly_algebra(F, tuple(f))
    delta = np.zeros((n * n, n), dtype=np.int64)
    for k in range(n):
        delta[k * n + k, k] = 1
    eps = np.ones((1, n), dtype=np.int64)
    s = np.zeros((n, n), dtype=np.int64)
    for k in range(n):
        s[(-k) % n, k] = 1
    return Hopf(A, Mat(F, delta), Mat(F, eps), Mat(F, s))


# -- points group --------------------------------------------------------------


def points_group(H, seed=0):
    """Algebra morphisms H -> k as a group under convolution.

    Convolution of two points is (m1 (x) m2) . Delta; the counit is the
    identity element and inverses come from precomposition with the
    antipode.  Returns (Group, point rows) with the counit at index 0.
    """
    pts = [m.matrix for m in points(H.algebra, seed=seed)]
    rows = [tuple(m.a[0].tolist()) for m in pts]
    eps_row = tuple(H.eps.a[0].tolist())
    if eps_row not in rows:
        raise GaltanError("counit is not among the rational points")
    order = [eps_row] + sorted(r for r in rows if r != eps_row)
    index = {r: i for i, r in enumerate(order)}
    n = len(order)
    table = np.zeros((n, n), dtype=np.int64)
    for i, r1 in enumerate(order):
        m1 = Mat(H.field, [list(r1)])
        for j, r2 in enumerate(order):
            m2 = Mat(H.field, [list(r2)])
            conv = (m1.kron(m2) @ H.delta).a[0]
            key = tuple(conv.tolist())
            if key not in index:
                raise GaltanError("points are not closed under convolution")
            table[i, j] = index[key]
    G = Group(table, name=f"points({H!r})")
    return G, [Mat(H.field, [list(r)]) for r in order]


# -- pi0 and the connected component -------------------------------------------


def pi0_hopf(H):
    """pi0 of the underlying algebra with its induced Hopf structure.

    Delta- and S-stability of the subalgebra are verified; failure is a
    hard error since it would contradict the comultiplicativity of the
    separable part (and signal an upstream bug).
    """
    P = pi0(H.algebra)
    inc = P.basis.T  # (d x k): subalgebra coords -> ambient coords
    bb = P.basis.kron(P.basis)  # rows span pi0 (x) pi0 inside V (x) V
    delta_sub = bb.T.solve((H.delta @ inc).a)
    if delta_sub is None:
        raise ValidationError("Pi0DeltaStability", "Delta(pi0) not in pi0 (x) pi0")
    s_sub = inc.solve((H.antipode @ inc).a)
    if s_sub is None:
        raise ValidationError("Pi0AntipodeStability", "S(pi0) not in pi0")
    eps_sub = H.eps @ inc
    sub = Hopf(P.algebra, delta_sub, eps_sub, s_sub)
    inclusion = HopfMorphism(sub, H, inc)
    return sub, inclusion


def _ideal_span(A, generators):
    """Row span of the ideal generated by the given ambient vectors."""
    span = RowSpan(A.field, A.dim)
    basis = np.eye(A.dim, dtype=np.int64)
    queue = [np.asarray(g, dtype=np.int64) for g in generators]
    while queue:
        g = queue.pop()
        if not span.insert(g):
            continue
        for i in range(A.dim):
            queue.append(A.mul_vec(g, basis[i]))
    return span


def identity_component(H):
    """The quotient Hopf algebra by the augmentation ideal of pi0.

    Returns (quotient Hopf, quotient map).  The quotient is connected:
    its pi0 is one-dimensional, which is checked.
    """
    Psub, inclusion = pi0_hopf(H)
    inc = inclusion.matrix
    ker = (Psub.eps).kernel_basis()  # (k x (k-1)) columns
    gens = [inc.mul_vec(ker.a[:, j]) for j in range(ker.cols)]
    span = _ideal_span(H.algebra, gens)
    proj = span.projection_matrix()
    sec = span.section_matrix()
    t = proj.rows
    if t == 0:
        raise ValidationError("IdentityComponent", "quotient collapsed")
    # induced algebra structure on representatives
    mult = np.zeros((t, t, t), dtype=np.int64)
    for u in range(t):
        for v in range(t):
            prod = H.algebra.mul_vec(sec.a[:, u], sec.a[:, v])
            mult[u, v] = proj.mul_vec(prod)
    unit = proj.mul_vec(H.algebra.unit)
    Aq = Algebra(H.field, mult, unit)
    pp = proj.kron(proj)
    for g in [span.basis().a[i] for i in range(span.rank)]:
        if (pp @ H.delta).mul_vec(g).any():
            raise ValidationError("HopfIdeal", "Delta does not respect the ideal")
        if (proj @ H.antipode).mul_vec(g).any():
            raise ValidationError("HopfIdeal", "antipode does not respect the ideal")
    delta_q = pp @ H.delta @ sec
    eps_q = H.eps @ sec
    s_q = proj @ H.antipode @ sec
    Hq = Hopf(Aq, delta_q, eps_q, s_q)
    if pi0(Aq).dim != 1:
        raise ValidationError("Connectedness", pi0(Aq).dim)
    return Hq, proj


# -- Hopf hom search ------------------------------------------------------------


def is_constant_basis(A):
    """True when the basis is a complete family of orthogonal idempotents."""
    d = A.dim
    expected = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        expected[i, i, i] = 1
    return np.array_equal(A.mult, expected) and np.array_equal(
        A.unit, np.ones(d, dtype=np.int64)
    )


def hopf_homs(H1, H2, budget=200_000, seed=0):
    """All Hopf algebra maps H1 -> H2, for H1 = k^Gamma in indicator basis.

    The basis of H1 must map to a complete orthogonal family of
    idempotents of H2 indexed by Gamma, so candidates are assignments of
    the primitive idempotents of H2 to Gamma.  Comultiplicativity cuts
    down to a combinatorial condition on a precomputed incidence
    relation, and survivors get the full morphism axioms verified.
    """
    if not is_constant_basis(H1.algebra):
        raise GaltanError("hopf_homs requires the source in indicator basis (k^Gamma)")
    F = H1.field
    gsize = H1.dim
    # multiplication of Gamma, recovered from H1's comultiplication
    gamma_mul = np.zeros((gsize, gsize), dtype=np.int64)
    for a in range(gsize):
        for b in range(gsize):
            col = np.nonzero(H1.delta.a[a * gsize + b])[0]
            if col.size != 1:
                raise ValidationError("ConstantComult", (a, b))
            gamma_mul[a, b] = col[0]
    idems = [e for e, _ in base_idempotents(H2.algebra, seed=seed)]
    m = len(idems)
    if gsize**m > budget:
        raise SearchBudgetExceeded(gsize**m, budget)
    # counit index: the unique primitive idempotent with eps = 1
    eps_vals = [int(H2.eps.mul_vec(e)[0]) for e in idems]
    if sorted(eps_vals) != [0] * (m - 1) + [1]:
        raise ValidationError("CounitIdempotent", eps_vals)
    istar = eps_vals.index(1)
    # incidence relation: (i, j, l) when (e_i (x) e_j) * Delta(e_l) != 0
    d = H2.dim
    sw_mu = H2.mu.kron(H2.mu) @ Mat.identity(F, d).kron(
        swap_tensor(F, d, d)
    ).kron(Mat.identity(F, d))
    relation = []
    deltas = [H2.delta.mul_vec(e) for e in idems]
    for i in range(m):
        for j in range(m):
            eij = _kron_vec(F, idems[i], idems[j])
            for l in range(m):
                if sw_mu.mul_vec(_kron_vec(F, eij, deltas[l])).any():
                    relation.append((i, j, l))
    out = []
    for assign in product(range(gsize), repeat=m):
        if assign[istar] != 0:
            continue
        ok = True
        for i, j, l in relation:
            if assign[l] != gamma_mul[assign[i], assign[j]]:
                ok = False
                break
        if not ok:
            continue
        cols = np.zeros((d, gsize), dtype=np.int64)
        for i, g in enumerate(assign):
            cols[:, g] = (
                (cols[:, g] + idems[i]) % F.p
                if F.is_prime_field
                else np.array([F.add(int(x), int(y)) for x, y in zip(cols[:, g], idems[i])])
            )
        try:
            out.append(HopfMorphism(H1, H2, Mat(F, cols)))
        except ValidationError:
            continue
    out.sort(key=lambda h: tuple(h.matrix.a.reshape(-1).tolist()))
    return out


def _kron_vec(F, u, v):
    if F.is_prime_field:
        return np.kron(u, v) % F.p
    out = np.zeros(len(u) * len(v), dtype=np.int64)
    for i, x in enumerate(u):
        if x:
            for j, y in enumerate(v):
                if y:
                    out[i * len(v) + j] = F.mul(int(x), int(y))
    return out


def derive_antipode(algebra, delta, eps):
    """Solve the antipode law for S given the bialgebra data.

    The law mu (S (x) id) Delta = eta eps is linear in S; in a
    finite-dimensional commutative bialgebra with an antipode the
    solution is unique.  Both one-sided laws are verified on the result.
    """
    F = algebra.field
    d = algebra.dim
    mu = mu_matrix(algebra)
    eta = eta_matrix(algebra)
    I = Mat.identity(F, d)
    cols = []
    for i in range(d):
        for j in range(d):
            e = np.zeros((d, d), dtype=np.int64)
            e[i, j] = 1
            cols.append((mu @ Mat(F, e).kron(I) @ delta).a.reshape(-1))
    target = (eta @ eps).a.reshape(-1)
    sol = Mat(F, np.array(cols).T).solve(target)
    if sol is None:
        raise ValidationError("AntipodeLaw", "no antipode exists")
    S = Mat(F, sol.reshape(d, d))
    ne = eta @ eps
    if not (mu @ S.kron(I) @ delta == ne and mu @ I.kron(S) @ delta == ne):
        raise ValidationError("AntipodeLaw", "one-sided solution only")
    return S


# -- the coreflection bijection --------------------------------------------------


def coreflection_check(Gamma, H, budget=200_000, seed=0):
    """Bijection between Hopf(k^Gamma, H) and Grp(points(pi0 H), Gamma).

    Every Hopf map factors through the inclusion of pi0(H); applying the
    points functor to the factored map evaluates each point of pi0(H) at
    a unique element of Gamma.  Both sides are enumerated independently
    and the factoring map is checked to be a bijection; naturality under
    precomposition along group maps Gamma -> Gamma' is spot-checked by
    the caller via natural_square_check.
    """
    F = H.field
    kG = constant_hopf(Gamma, F)
    homs = hopf_homs(kG, H, budget=budget, seed=seed)
    Psub, inclusion = pi0_hopf(H)
    Pgroup, prows = points_group(Psub, seed=seed)
    ghoms = group_homs(Pgroup, Gamma)
    gset = {tuple(h) for h in ghoms}
    pairing = []
    seen = set()
    for phi in homs:
        factored = inclusion.matrix.solve(phi.matrix.a)
        if factored is None:
            raise ValidationError("Factorization", "image not inside pi0(H)")
        mapping = []
        for row in prows:
            ev = (row @ factored).a[0]
            hits = np.nonzero(ev)[0]
            if hits.size != 1 or ev[hits[0]] != 1:
                raise ValidationError("PointEvaluation", ev.tolist())
            mapping.append(int(hits[0]))
        key = tuple(mapping)
        if key not in gset:
            raise ValidationError("NotAGroupHom", key)
        if key in seen:
            raise ValidationError("NotInjective", key)
        seen.add(key)
        pairing.append((phi, key))
    ok = len(homs) == len(ghoms) and seen == gset
    return {
        "hopf_side": len(homs),
        "group_side": len(ghoms),
        "bijection": ok,
        "pairs": pairing,
    }


def dual_group_map(u_mapping, Gamma, GammaP, F):
    """The Hopf map k^GammaP -> k^Gamma dual to a group map u: Gamma -> GammaP."""
    src = constant_hopf(GammaP, F)
    dst = constant_hopf(Gamma, F)
    mat = np.zeros((Gamma.order, GammaP.order), dtype=np.int64)
    for g in range(Gamma.order):
        mat[g, u_mapping[g]] = 1
    return HopfMorphism(src, dst, Mat(F, mat))


def natural_square_check(Gamma, GammaP, u_mapping, H, budget=200_000, seed=0):
    """Coreflection naturality for a group map u: Gamma -> GammaP.

    Factoring commutes with precomposition by the dual map k^GammaP ->
    k^Gamma on the Hopf side and postcomposition by u on the group side.
    """
    F = H.field
    res = coreflection_check(Gamma, H, budget=budget, seed=seed)
    res_p = coreflection_check(GammaP, H, budget=budget, seed=seed)
    ustar = dual_group_map(u_mapping, Gamma, GammaP, F)
    table = {tuple(phi.matrix.a.reshape(-1).tolist()): key for phi, key in res_p["pairs"]}
    for phi, key in res["pairs"]:
        composite = phi.matrix @ ustar.matrix
        comp_key = table.get(tuple(composite.a.reshape(-1).tolist()))
        if comp_key is None:
            return False
        if list(comp_key) != [u_mapping[g] for g in key]:
            return False
    return True


# -- serialization ----------------------------------------------------------------


def hopf_to_dict(H):
    from galtan.finalg import algebra_to_dict

    return {
        **algebra_to_dict(H.algebra),
        "comult": H.delta.a.tolist(),
        "counit": H.eps.a.tolist(),
        "antipode": H.antipode.a.tolist(),
    }


def hopf_from_dict(d, validate=True):
    from galtan.finalg import algebra_from_dict

    A = algebra_from_dict(d, validate=validate)
    F = A.field
    return Hopf(
        A,
        Mat(F, d["comult"]),
        Mat(F, d["counit"]),
        Mat(F, d["antipode"]),
        validate=validate,
    )
