"""Finite-dimensional commutative algebras by structure constants.

An algebra of dimension d over F is a rank-3 array c with
b_i * b_j = sum_k c[i,j,k] b_k plus the coordinate vector of 1.  The
module computes the trace form, separability, the nilradical and the
maximal separable subalgebra via the q-power map (which is F_q-linear
in a commutative algebra over F_q), primitive idempotent splittings by
minimal-polynomial factorization, tensor products, and rational points.
"""

from functools import reduce

import numpy as np

from galtan import fields
from galtan.errors import NonRationalIdempotents, ValidationError
from galtan.linalg import Mat, RowSpan


class Algebra:
    """Commutative unital algebra presented by structure constants."""

    __slots__ = ("field", "dim", "mult", "unit")

    def __init__(self, field, mult, unit, validate=True):
        mult = np.asarray(mult, dtype=np.int64)
        unit = np.asarray(unit, dtype=np.int64).reshape(-1)
        d = unit.shape[0]
        if d < 1:
            raise ValidationError("Unit", "zero-dimensional algebra rejected")
        if mult.shape != (d, d, d):
            raise ValidationError("Shape", mult.shape)
        if field.is_prime_field:
            mult = mult % field.p
            unit = unit % field.p
        self.field = field
        self.dim = d
        self.mult = mult
        self.unit = unit
        if validate:
            self.validate()

    def validate(self):
        """Check commutativity, unit law and associativity; raise on failure."""
        c = self.mult
        d = self.dim
        F = self.field
        bad = np.nonzero(c != c.transpose(1, 0, 2))
        if bad[0].size:
            raise ValidationError(
                "Commutativity", (int(bad[0][0]), int(bad[1][0]))
            )
        for i in range(d):
            e_i = np.zeros(d, dtype=np.int64)
            e_i[i] = 1
            if not np.array_equal(self.mul_vec(self.unit, e_i), e_i):
                raise ValidationError("Unit", i)
        if F.is_prime_field:
            left = np.einsum("ijm,mlk->ijlk", c, c) % F.p
            right = np.einsum("jlm,imk->ijlk", c, c) % F.p
            bad = np.nonzero(left != right)
            if bad[0].size:
                raise ValidationError(
                    "Associativity",
                    (int(bad[0][0]), int(bad[1][0]), int(bad[2][0])),
                )
        else:
            basis = np.eye(d, dtype=np.int64)
            for i in range(d):
                for j in range(d):
                    ij = self.mul_vec(basis[i], basis[j])
                    for l in range(d):
                        lhs = self.mul_vec(ij, basis[l])
                        rhs = self.mul_vec(basis[i], self.mul_vec(basis[j], basis[l]))
                        if not np.array_equal(lhs, rhs):
                            raise ValidationError("Associativity", (i, j, l))
        return self

    # -- element arithmetic ------------------------------------------------

    def mul_vec(self, u, v):
        F = self.field
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        if F.is_prime_field:
            return np.einsum("i,j,ijk->k", u, v, self.mult) % F.p
        out = np.zeros(self.dim, dtype=np.int64)
        for i in range(self.dim):
            if u[i] == 0:
                continue
            for j in range(self.dim):
                if v[j] == 0:
                    continue
                x = F.mul(int(u[i]), int(v[j]))
                for k in range(self.dim):
                    cc = int(self.mult[i, j, k])
                    if cc:
                        out[k] = F.add(int(out[k]), F.mul(x, cc))
        return out

    def mul_vec_batch(self, U, V):
        """Row-wise products of two stacks of coordinate vectors."""
        F = self.field
        if F.is_prime_field:
            return np.einsum("bi,bj,ijk->bk", U, V, self.mult) % F.p
        return np.array([self.mul_vec(u, v) for u, v in zip(U, V)])

    def pow_vec(self, v, e):
        result = self.unit.copy()
        b = np.asarray(v, dtype=np.int64)
        while e:
            if e & 1:
                result = self.mul_vec(result, b)
            b = self.mul_vec(b, b)
            e >>= 1
        return result

    def mult_operator(self, a):
        """Matrix of x -> a*x in the chosen basis."""
        F = self.field
        a = np.asarray(a, dtype=np.int64)
        if a.shape != (self.dim,):
            raise ValueError("element has wrong length")
        if F.is_prime_field:
            m = np.tensordot(a, self.mult, axes=(0, 0)) % F.p  # (j, k)
            return Mat(F, m.T)
        cols = [self.mul_vec(a, np.eye(self.dim, dtype=np.int64)[j]) for j in range(self.dim)]
        return Mat(F, np.array(cols).T)

    def is_nilpotent(self, a):
        return not self.pow_vec(a, _pow2_at_least(self.dim)).any()

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and np.array_equal(self.mult, other.mult)
            and np.array_equal(self.unit, other.unit)
        )

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field!r})"


def _pow2_at_least(d):
    e = 1
    while e < d:
        e *= 2
    return e


class AlgebraMorphism:
    """Unital algebra map; the matrix is checked against both structures."""

    def __init__(self, source, target, matrix, validate=True):
        self.source = source
        self.target = target
        self.matrix = matrix
        if validate:
            self.validate()

    def validate(self):
        M = self.matrix
        if M.shape != (self.target.dim, self.source.dim):
            raise ValidationError("MorphismShape", M.shape)
        if not np.array_equal(M.mul_vec(self.source.unit), self.target.unit):
            raise ValidationError("MorphismUnit")
        d = self.source.dim
        basis = np.eye(d, dtype=np.int64)
        img = [M.mul_vec(basis[i]) for i in range(d)]
        for i in range(d):
            for j in range(i, d):
                lhs = M.mul_vec(self.source.mul_vec(basis[i], basis[j]))
                rhs = self.target.mul_vec(img[i], img[j])
                if not np.array_equal(lhs, rhs):
                    raise ValidationError("MorphismProduct", (i, j))
        return self

    def __call__(self, v):
        return self.matrix.mul_vec(v)

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraMorphism)
            and self.source is other.source
            and self.target is other.target
            and self.matrix == other.matrix
        )


class Subalgebra:
    """A unital subalgebra with its induced presentation.

    basis is a (k x d) matrix whose rows span the subspace; closure under
    multiplication is verified while computing the induced constants.
    """

    def __init__(self, ambient, basis_rows):
        F = ambient.field
        basis = Mat(F, np.asarray(basis_rows, dtype=np.int64))
        k, d = basis.shape
        if d != ambient.dim:
            raise ValidationError("SubalgebraShape")
        bt = basis.T
        unit_coords = bt.solve(ambient.unit)
        if unit_coords is None:
            raise ValidationError("SubalgebraUnit", "1 not in span")
        prods = []
        for u in range(k):
            for v in range(k):
                prods.append(ambient.mul_vec(basis.a[u], basis.a[v]))
        coords = bt.solve(np.array(prods).T)
        if coords is None:
            raise ValidationError("SubalgebraClosure", "not closed under product")
        mult = np.zeros((k, k, k), dtype=np.int64)
        for u in range(k):
            for v in range(k):
                mult[u, v] = coords.a[:, u * k + v]
        self.ambient = ambient
        self.basis = basis
        self.algebra = Algebra(F, mult, unit_coords, validate=False)

    @property
    def dim(self):
        return self.algebra.dim

    def to_ambient(self, v):
        """Coordinates in the subalgebra -> coordinates in the ambient."""
        return self.basis.T.mul_vec(v)

    def from_ambient(self, w):
        """Ambient coordinates -> subalgebra coordinates (must lie in it)."""
        x = self.basis.T.solve(w)
        if x is None:
            raise ValueError("vector not in subalgebra")
        return x


# -- constructions -----------------------------------------------------------


def quotient_poly_algebra(F, f):
    """F[x]/(f) in the power basis 1, x, ..., x^(deg f - 1)."""
    f = fields.poly_monic(fields.poly_strip(f), F)
    d = fields.poly_deg(f)
    if d < 1:
        raise ValueError("modulus must have positive degree")
    # x^m mod f for m up to 2d-2
    powers = [np.zeros(d, dtype=np.int64) for _ in range(2 * d - 1)]
    cur = (1,)
    for m in range(2 * d - 1):
        for idx, c in enumerate(cur):
            powers[m][idx] = c
        cur = fields.poly_rem(fields.poly_mul(cur, (0, 1), F), f, F)
    mult = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            mult[i, j] = powers[i + j]
    unit = np.zeros(d, dtype=np.int64)
    unit[0] = 1
    return Algebra(F, mult, unit, validate=False)


def product_algebra(A, B):
    """Direct product A x B (block-diagonal structure constants)."""
    if A.field != B.field:
        raise ValueError("field mismatch")
    d = A.dim + B.dim
    mult = np.zeros((d, d, d), dtype=np.int64)
    mult[: A.dim, : A.dim, : A.dim] = A.mult
    mult[A.dim :, A.dim :, A.dim :] = B.mult
    unit = np.concatenate([A.unit, B.unit])
    return Algebra(A.field, mult, unit, validate=False)


def diagonal_algebra(F, n):
    """k^n: pointwise product on the standard basis."""
    mult = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        mult[i, i, i] = 1
    return Algebra(F, mult, np.ones(n, dtype=np.int64), validate=False)


def base_field_algebra(F):
    return diagonal_algebra(F, 1)


def tensor_algebra(A, B):
    """A (x) B over the common base field."""
    if A.field != B.field:
        raise ValueError("field mismatch")
    F = A.field
    da, db = A.dim, B.dim
    if F.is_prime_field:
        mult = (
            np.einsum("ijk,abc->iajbkc", A.mult, B.mult) % F.p
        ).reshape(da * db, da * db, da * db)
    else:
        mult = np.zeros((da * db, da * db, da * db), dtype=np.int64)
        for i in range(da):
            for j in range(da):
                for k in range(da):
                    x = int(A.mult[i, j, k])
                    if x == 0:
                        continue
                    for a in range(db):
                        for b in range(db):
                            for c in range(db):
                                y = int(B.mult[a, b, c])
                                if y:
                                    mult[i * db + a, j * db + b, k * db + c] = F.mul(x, y)
    unit = np.kron(A.unit, B.unit)
    if F.is_prime_field:
        unit = unit % F.p
    return Algebra(F, mult, unit, validate=False)


def base_change(A, new_field):
    """Extend scalars along the tower embedding of A.field into new_field."""
    phi = fields.embed(A.field, new_field)
    if A.field.is_prime_field:
        mult, unit = A.mult, A.unit  # prime-field codes embed as themselves
    else:
        mult = np.vectorize(phi)(A.mult).astype(np.int64)
        unit = np.vectorize(phi)(A.unit).astype(np.int64)
    return Algebra(new_field, mult, unit, validate=False)


# -- trace form, separability, nilradical, pi0 -------------------------------


def trace_form(A):
    """Gram matrix G[i,j] = trace of multiplication by b_i b_j."""
    F = A.field
    d = A.dim
    if F.is_prime_field:
        t = np.einsum("mjj->m", A.mult) % F.p
        return Mat(F, np.tensordot(A.mult, t, axes=(2, 0)) % F.p)
    t = [reduce(F.add, (int(A.mult[m, j, j]) for j in range(d)), 0) for m in range(d)]
    g = np.zeros((d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            acc = 0
            for m in range(d):
                c = int(A.mult[i, j, m])
                if c:
                    acc = F.add(acc, F.mul(c, t[m]))
            g[i, j] = acc
    return Mat(F, g)


def is_separable(A):
    """Nondegeneracy of the trace form."""
    return trace_form(A).rank() == A.dim


def q_power_operator(A):
    """Matrix of the F_q-linear map a -> a^q."""
    d = A.dim
    cols = []
    basis = np.eye(d, dtype=np.int64)
    for i in range(d):
        cols.append(A.pow_vec(basis[i], A.field.q))
    return Mat(A.field, np.array(cols).T)


def _stable_q_power(A):
    """Q^s with q^s >= dim: kernel is the nilradical, image is pi0."""
    Q = q_power_operator(A)
    s = 1
    qs = A.field.q
    while qs < A.dim:
        qs *= A.field.q
        s += 1
    R = Q
    for _ in range(s - 1):
        R = R @ Q
    return R


def nilradical(A):
    """Rows spanning the ideal of nilpotent elements."""
    R = _stable_q_power(A)
    k = R.kernel_basis()
    return Mat(A.field, k.a.T.copy())


def pi0(A):
    """The maximal separable subalgebra, as a Subalgebra."""
    R = _stable_q_power(A)
    img, _ = R.T.rref()
    return Subalgebra(A, img.a)


# -- minimal polynomials and idempotent splitting ----------------------------


def min_poly(A, a):
    """Monic minimal polynomial of an element, coefficients low-to-high."""
    span = RowSpan(A.field, A.dim)
    powers = [A.unit.copy()]
    span.insert(A.unit)
    cur = A.unit.copy()
    a = np.asarray(a, dtype=np.int64)
    while True:
        cur = A.mul_vec(cur, a)
        if span.contains(cur):
            P = Mat(A.field, np.array(powers).T)
            x = P.solve(cur)
            coeffs = [A.field.neg(int(c)) for c in x] + [1]
            return fields.poly_strip(tuple(coeffs))
        span.insert(cur)
        powers.append(cur.copy())


def eval_poly_at(A, f, a):
    """f(a) inside A, by Horner."""
    acc = np.zeros(A.dim, dtype=np.int64)
    for c in reversed(f):
        acc = A.mul_vec(acc, a)
        if c:
            acc = (
                (acc + int(c) * A.unit) % A.field.p
                if A.field.is_prime_field
                else _add_scaled(A, acc, int(c))
            )
    return acc


def _add_scaled(A, acc, c):
    F = A.field
    out = acc.copy()
    for k in range(A.dim):
        u = int(A.unit[k])
        if u:
            out[k] = F.add(int(out[k]), F.mul(c, u))
    return out


def _element_stream(A, seed, budget=240):
    """Deterministic elements: basis, pairwise products, then seeded random."""
    import random

    d = A.dim
    basis = np.eye(d, dtype=np.int64)
    for i in range(d):
        yield basis[i]
    for i in range(d):
        for j in range(i, d):
            yield A.mul_vec(basis[i], basis[j])
    rng = random.Random(seed)
    for _ in range(budget):
        yield np.array([rng.randrange(A.field.q) for _ in range(d)], dtype=np.int64)


def _split_separable(S, seed):
    """Primitive idempotents of a separable algebra over its base field.

    Returns a list of (idempotent vector, residue degree), ordered
    deterministically by coordinate tuple.
    """
    F = S.field
    d = S.dim
    if d == 1:
        return [(S.unit.copy(), 1)]
    for a in _element_stream(S, seed):
        m = min_poly(S, a)
        if fields.poly_deg(m) == 1:
            continue
        factors = fields.poly_factor(m, F, seed=seed)
        if len(factors) == 1 and factors[0][1] == 1:
            if fields.poly_deg(m) == d:
                return [(S.unit.copy(), d)]  # S is a field
            continue
        # CRT idempotents of the factorization of the minimal polynomial
        out = []
        for f, _mult in factors:
            u = fields.poly_quo(m, f, F)
            s, _t, g = fields.poly_gcdex(u, f, F)
            if g != (1,):
                raise RuntimeError("minimal polynomial not squarefree in separable algebra")
            e = eval_poly_at(S, fields.poly_mul(s, u, F), a)
            block = _block_subalgebra(S, e)
            for sub_e, deg in _split_separable(block.algebra, seed):
                out.append((block.to_ambient(sub_e), deg))
        out.sort(key=lambda t: tuple(t[0].tolist()))
        return out
    raise RuntimeError(
        "element stream exhausted without certifying a field or splitting"
    )


def _block_subalgebra(A, e):
    """The unital block e*A (with unit e) as a Subalgebra."""
    img, _ = A.mult_operator(e).T.rref()
    rows = img.a
    F = A.field
    # build a Subalgebra whose ambient unit constraint is e, not 1
    sub = object.__new__(Subalgebra)
    basis = Mat(F, rows)
    k = basis.rows
    bt = basis.T
    unit_coords = bt.solve(np.asarray(e, dtype=np.int64))
    if unit_coords is None:
        raise ValidationError("SubalgebraUnit", "block unit not in span")
    prods = []
    for u in range(k):
        for v in range(k):
            prods.append(A.mul_vec(rows[u], rows[v]))
    coords = bt.solve(np.array(prods).T)
    if coords is None:
        raise ValidationError("SubalgebraClosure")
    mult = np.zeros((k, k, k), dtype=np.int64)
    for u in range(k):
        for v in range(k):
            mult[u, v] = coords.a[:, u * k + v]
    sub.ambient = A
    sub.basis = basis
    sub.algebra = Algebra(F, mult, unit_coords, validate=False)
    return sub


def base_idempotents(A, seed=0):
    """Primitive idempotents over the base field, with residue degrees.

    The idempotents are orthogonal, sum to 1, and each block of pi0 is a
    field of the reported degree over the base.
    """
    P = pi0(A)
    pieces = _split_separable(P.algebra, seed)
    out = [(P.to_ambient(e), deg) for e, deg in pieces]
    out.sort(key=lambda t: tuple(t[0].tolist()))
    _check_orthogonal_complete(A, [e for e, _ in out])
    return out


def _check_orthogonal_complete(A, idems):
    total = np.zeros(A.dim, dtype=np.int64)
    F = A.field
    for i, e in enumerate(idems):
        if not np.array_equal(A.mul_vec(e, e), e):
            raise RuntimeError("non-idempotent in splitting")
        for j in range(i + 1, len(idems)):
            if A.mul_vec(e, idems[j]).any():
                raise RuntimeError("idempotents not orthogonal")
        total = (
            (total + e) % F.p
            if F.is_prime_field
            else np.array([F.add(int(x), int(y)) for x, y in zip(total, e)])
        )
    if not np.array_equal(total, A.unit):
        raise RuntimeError("idempotents do not sum to 1")


def primitive_idempotents(A, allow_extension=False, seed=0):
    """Geometric primitive idempotents and the field where they live.

    Over the base field the primitive idempotents may be coarser than
    the geometric ones; when that happens and allow_extension is false,
    NonRationalIdempotents reports the minimal extension degree.  With
    allow_extension the algebra is base-changed to the minimal tower
    member splitting every residue field.
    """
    base = base_idempotents(A, seed)
    degs = sorted({deg for _, deg in base})
    if degs == [1]:
        return A.field, [e for e, _ in base]
    m = 1
    for d in degs:
        m = m * d // _gcd(m, d)
    if not allow_extension:
        raise NonRationalIdempotents(m)
    big = fields.field_make(A.field.p, A.field.n * m)
    A2 = base_change(A, big)
    base2 = base_idempotents(A2, seed)
    bad = [deg for _, deg in base2 if deg != 1]
    if bad:
        raise RuntimeError("extension did not split the algebra")
    return big, [e for e, _ in base2]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def points(A, seed=0):
    """All unital algebra morphisms A -> base field."""
    F = A.field
    target = base_field_algebra(F)
    nil_rows = nilradical(A).a
    out = []
    for e, deg in base_idempotents(A, seed):
        if deg != 1:
            continue
        span = RowSpan(F, A.dim)
        for row in nil_rows:
            span.insert(A.mul_vec(row, e))
        e_red = span.reduce(e)
        lead = int(np.nonzero(e_red)[0][0])
        inv_lead = F.inv(int(e_red[lead]))
        row = np.zeros(A.dim, dtype=np.int64)
        basis = np.eye(A.dim, dtype=np.int64)
        for i in range(A.dim):
            w = span.reduce(A.mul_vec(basis[i], e))
            lam = F.mul(int(w[lead]), inv_lead)
            if not np.array_equal(
                w, np.array([F.mul(lam, int(x)) for x in e_red], dtype=np.int64)
            ):
                raise RuntimeError("block is not rank one modulo its radical")
            row[i] = lam
        out.append(AlgebraMorphism(A, target, Mat(F, row.reshape(1, -1))))
    return out


def idempotents_all(A, seed=0, exhaustive_limit=1 << 16):
    """Every idempotent of A.

    Exhaustive scan of the whole algebra when |F|^dim is small enough,
    otherwise subset sums of the primitive base idempotents (complete
    because every idempotent is a sum of primitive ones).
    """
    F = A.field
    d = A.dim
    total = F.q**d
    if total <= exhaustive_limit:
        out = []
        if F.is_prime_field:
            codes = np.arange(total)
            vecs = np.empty((total, d), dtype=np.int64)
            for i in range(d):
                vecs[:, i] = codes % F.q
                codes //= F.q
            for lo in range(0, total, 4096):
                batch = vecs[lo : lo + 4096]
                sq = A.mul_vec_batch(batch, batch)
                hits = np.nonzero((sq == batch).all(axis=1))[0]
                out.extend(batch[h].copy() for h in hits)
        else:
            for code in range(total):
                v = np.array(
                    [(code // F.q**i) % F.q for i in range(d)], dtype=np.int64
                )
                if np.array_equal(A.mul_vec(v, v), v):
                    out.append(v)
        return sorted(out, key=lambda v: tuple(v.tolist()))
    prim = [e for e, _ in base_idempotents(A, seed)]
    out = []
    for mask in range(1 << len(prim)):
        acc = np.zeros(d, dtype=np.int64)
        for i, e in enumerate(prim):
            if mask >> i & 1:
                acc = (
                    (acc + e) % F.p
                    if F.is_prime_field
                    else np.array([F.add(int(x), int(y)) for x, y in zip(acc, e)])
                )
        out.append(acc)
    return sorted(out, key=lambda v: tuple(v.tolist()))


# -- serialization ------------------------------------------------------------


def algebra_to_dict(A):
    return {
        "field": fields.field_to_dict(A.field),
        "dim": A.dim,
        "mult": A.mult.tolist(),
        "unit": A.unit.tolist(),
    }


def algebra_from_dict(d, validate=True):
    F = fields.field_from_dict(d["field"])
    return Algebra(F, d["mult"], d["unit"], validate=validate)


def algebra_check(d):
    """CLI-facing validation: (algebra or None, report dict)."""
    try:
        A = algebra_from_dict(d, validate=True)
        return A, {"valid": True}
    except ValidationError as exc:
        return None, {
            "valid": False,
            "axiom": exc.axiom,
            "witness": list(exc.witness) if isinstance(exc.witness, tuple) else exc.witness,
        }
