"""The Boolean algebra of idempotents and finite Stone duality.

Idempotents of a commutative algebra form a Boolean algebra under
x ^ y = xy and x v y = x + y - xy.  At finite scale Stone spaces are
plain finite sets (the atoms / ultrafilters), and the spectrum/clopen
pair is an explicit bijective duality, exhibited element by element.
"""

import numpy as np

from galtan.errors import ValidationError
from galtan.finalg import diagonal_algebra, idempotents_all


class BooleanAlgebra:
    """Finite Boolean algebra with explicit operation tables.

    elements are arbitrary hashable labels; meet/join/compl are index
    tables.  Axioms are verified exhaustively on construction for
    |B| <= 32 and on seeded samples beyond that.
    """

    def __init__(self, elements, meet, join, compl, bottom, top, validate=True):
        self.elements = list(elements)
        self.meet = np.asarray(meet, dtype=np.int64)
        self.join = np.asarray(join, dtype=np.int64)
        self.compl = np.asarray(compl, dtype=np.int64)
        self.bottom = int(bottom)
        self.top = int(top)
        n = len(self.elements)
        if n & (n - 1):
            raise ValidationError("PowerOfTwo", n)
        if validate:
            self.validate()

    def __len__(self):
        return len(self.elements)

    def validate(self):
        n = len(self.elements)
        rng = np.random.default_rng(0)
        if n <= 32:
            triples = [(a, b, c) for a in range(n) for b in range(n) for c in range(n)]
        else:
            triples = [tuple(t) for t in rng.integers(0, n, (2000, 3))]
        for a in range(n):
            if self.meet[a, self.top] != a or self.join[a, self.bottom] != a:
                raise ValidationError("Identity", a)
            if (
                self.meet[a, self.compl[a]] != self.bottom
                or self.join[a, self.compl[a]] != self.top
            ):
                raise ValidationError("Complement", a)
            for b in range(n):
                if self.meet[a, b] != self.meet[b, a] or self.join[a, b] != self.join[b, a]:
                    raise ValidationError("Commutativity", (a, b))
                if (
                    self.meet[a, self.join[a, b]] != a
                    or self.join[a, self.meet[a, b]] != a
                ):
                    raise ValidationError("Absorption", (a, b))
        for a, b, c in triples:
            if self.meet[a, self.meet[b, c]] != self.meet[self.meet[a, b], c]:
                raise ValidationError("MeetAssociativity", (a, b, c))
            if self.meet[a, self.join[b, c]] != self.join[self.meet[a, b], self.meet[a, c]]:
                raise ValidationError("Distributivity", (a, b, c))
        return self

    def leq(self, a, b):
        return self.meet[a, b] == a

    def atoms(self):
        """Indices of the minimal nonzero elements."""
        n = len(self.elements)
        out = []
        for a in range(n):
            if a == self.bottom:
                continue
            strictly_below = [
                c for c in range(n) if c not in (self.bottom, a) and self.leq(c, a)
            ]
            if not strictly_below:
                out.append(a)
        return out


class StoneSpace:
    """A finite Stone space: just its points (discrete at finite scale)."""

    def __init__(self, labels):
        self.labels = list(labels)

    @property
    def size(self):
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"StoneSpace({self.size})"


def idempotent_boolean_algebra(A, seed=0):
    """Idempotents of A with x^y = xy, xvy = x+y-xy, complement 1-x."""
    F = A.field
    idems = idempotents_all(A, seed=seed)
    index = {tuple(v.tolist()): i for i, v in enumerate(idems)}
    n = len(idems)
    meet = np.zeros((n, n), dtype=np.int64)
    join = np.zeros((n, n), dtype=np.int64)
    compl = np.zeros(n, dtype=np.int64)

    def add_vec(u, v):
        if F.is_prime_field:
            return (u + v) % F.p
        return np.array([F.add(int(x), int(y)) for x, y in zip(u, v)])

    def sub_vec(u, v):
        if F.is_prime_field:
            return (u - v) % F.p
        return np.array([F.sub(int(x), int(y)) for x, y in zip(u, v)])

    for i, x in enumerate(idems):
        compl[i] = index[tuple(sub_vec(A.unit, x).tolist())]
        for j, y in enumerate(idems):
            prod = A.mul_vec(x, y)
            meet[i, j] = index[tuple(prod.tolist())]
            join[i, j] = index[tuple(sub_vec(add_vec(x, y), prod).tolist())]
    bottom = index[tuple([0] * A.dim)]
    top = index[tuple(A.unit.tolist())]
    return BooleanAlgebra(
        [tuple(v.tolist()) for v in idems], meet, join, compl, bottom, top
    )


def stone_spectrum(B):
    """The finite Stone space of atoms (= ultrafilters at finite scale)."""
    atoms = B.atoms()
    if 1 << len(atoms) != len(B):
        raise ValidationError("AtomCount", (len(atoms), len(B)))
    return StoneSpace([B.elements[a] for a in atoms])


def clopen_algebra(X):
    """The powerset algebra of a finite Stone space; subsets as bitmasks."""
    n = X.size
    size = 1 << n
    masks = list(range(size))
    meet = np.zeros((size, size), dtype=np.int64)
    join = np.zeros((size, size), dtype=np.int64)
    compl = np.zeros(size, dtype=np.int64)
    full = size - 1
    for a in masks:
        compl[a] = full ^ a
        for b in masks:
            meet[a, b] = a & b
            join[a, b] = a | b
    return BooleanAlgebra(masks, meet, join, compl, 0, full)


def cont_algebra(X, F):
    """Functions X -> F with pointwise operations: the algebra F^X."""
    if X.size == 0:
        raise ValidationError("EmptySpace", "unit would vanish")
    return diagonal_algebra(F, X.size)


def stone_roundtrip(B):
    """Boolean isomorphism from B onto the clopens of its spectrum.

    Returns (atom indices, mapping) where mapping[i] is the bitmask of
    atoms below element i.  Raises if the canonical map fails to be a
    bijective homomorphism (it cannot, for an honest Boolean algebra).
    """
    atoms = B.atoms()
    mapping = []
    for i in range(len(B)):
        mask = 0
        for bit, a in enumerate(atoms):
            if B.leq(a, i):
                mask |= 1 << bit
        mapping.append(mask)
    if len(set(mapping)) != len(B) or len(B) != 1 << len(atoms):
        raise ValidationError("StoneBijection", len(set(mapping)))
    for i in range(len(B)):
        for j in range(len(B)):
            if mapping[B.meet[i, j]] != mapping[i] & mapping[j]:
                raise ValidationError("StoneMeet", (i, j))
            if mapping[B.join[i, j]] != mapping[i] | mapping[j]:
                raise ValidationError("StoneJoin", (i, j))
        if mapping[B.compl[i]] != mapping[i] ^ ((1 << len(atoms)) - 1):
            raise ValidationError("StoneComplement", i)
    return atoms, mapping


def boolean_to_dict(B):
    return {
        "size": len(B),
        "meet": B.meet.tolist(),
        "join": B.join.tolist(),
        "compl": B.compl.tolist(),
        "bottom": B.bottom,
        "top": B.top,
    }


def stone_to_dict(X):
    return {"points": X.size}
