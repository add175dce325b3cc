"""Finite groups presented by Cayley tables.

Element 0 is always the identity.  Tables are validated exhaustively at
construction (orders here never exceed a few dozen).  The module also
provides the builders used throughout the test corpus: cyclic, dihedral,
symmetric, quaternion and direct products.
"""

from itertools import product

import numpy as np


class Group:
    """Finite group: order m, Cayley table, identity at index 0."""

    def __init__(self, table, name=None, validate=True):
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise ValueError("Cayley table must be square")
        self.order = t.shape[0]
        self.table = t
        self.name = name or f"group{self.order}"
        if validate:
            self._validate()
        self.inv = np.zeros(self.order, dtype=np.int64)
        for a in range(self.order):
            hits = np.nonzero(t[a] == 0)[0]
            if hits.size != 1:
                raise ValueError(f"element {a} has no unique inverse")
            self.inv[a] = hits[0]

    def _validate(self):
        m = self.order
        t = self.table
        if t.min() < 0 or t.max() >= m:
            raise ValueError("table entries out of range")
        if not (np.array_equal(t[0], np.arange(m)) and np.array_equal(t[:, 0], np.arange(m))):
            raise ValueError("index 0 is not an identity")
        for a in range(m):
            for b in range(m):
                tab = t[a, b]
                for c in range(m):
                    if t[tab, c] != t[a, t[b, c]]:
                        raise ValueError(f"associativity fails at ({a},{b},{c})")

    def mul(self, a, b):
        return int(self.table[a, b])

    def inverse(self, a):
        return int(self.inv[a])

    def element_order(self, a):
        x, k = a, 1
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k

    def is_abelian(self):
        return bool(np.array_equal(self.table, self.table.T))

    def closure(self, gens):
        seen = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(seen))

    def generators(self):
        """A deterministic small generating set."""
        gens = []
        have = self.closure(gens)
        for a in range(1, self.order):
            if a not in have:
                gens.append(a)
                have = self.closure(gens)
                if len(have) == self.order:
                    break
        return gens

    def subgroups(self):
        """All subgroups, as sorted element tuples."""
        found = {(0,), tuple(range(self.order))}
        frontier = {(0,)}
        while frontier:
            nxt = set()
            for sub in frontier:
                for a in range(1, self.order):
                    if a in sub:
                        continue
                    grown = self.closure(list(sub) + [a])
                    if grown not in found:
                        found.add(grown)
                        nxt.add(grown)
            frontier = nxt
        return sorted(found, key=lambda s: (len(s), s))

    def conjugate_subgroup(self, sub, g):
        gi = self.inverse(g)
        return tuple(sorted(self.mul(self.mul(g, s), gi) for s in sub))

    def subgroups_up_to_conjugacy(self):
        reps = []
        seen = set()
        for sub in self.subgroups():
            if sub in seen:
                continue
            reps.append(sub)
            for g in range(self.order):
                seen.add(self.conjugate_subgroup(sub, g))
        return reps

    def words(self):
        """Expression of every element as a word in generators() (BFS)."""
        gens = self.generators()
        word = {0: ()}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for i, g in enumerate(gens):
                    y = self.mul(x, g)
                    if y not in word:
                        word[y] = word[x] + (i,)
                        nxt.append(y)
            frontier = nxt
        return gens, word

    def __repr__(self):
        return f"Group({self.name}, order={self.order})"


def is_homomorphism(A, B, mapping):
    mapping = list(mapping)
    if mapping[0] != 0:
        return False
    for a in range(A.order):
        for b in range(A.order):
            if mapping[A.mul(a, b)] != B.mul(mapping[a], mapping[b]):
                return False
    return True


def group_homs(A, B):
    """All homomorphisms A -> B, as image lists indexed by A's elements."""
    gens, word = A.words()
    if not gens:
        return [[0] * A.order] if A.order == 1 else []
    orders = [A.element_order(g) for g in gens]
    candidates = [
        [b for b in range(B.order) if orders[i] % B.element_order(b) == 0]
        for i in range(len(gens))
    ]
    out = []
    for images in product(*candidates):
        mapping = [0] * A.order
        for x, w in word.items():
            y = 0
            for i in w:
                y = B.mul(y, images[i])
            mapping[x] = y
        if is_homomorphism(A, B, mapping):
            out.append(mapping)
    return out


def group_isomorphism(A, B):
    """An explicit isomorphism A -> B as an image list, or None."""
    if A.order != B.order:
        return None
    profile = sorted(A.element_order(a) for a in range(A.order))
    if profile != sorted(B.element_order(b) for b in range(B.order)):
        return None
    for mapping in group_homs(A, B):
        if len(set(mapping)) == A.order:
            return mapping
    return None


# -- builders ---------------------------------------------------------------


def trivial_group():
    return Group([[0]], name="1")


def cyclic_group(n):
    t = [[(i + j) % n for j in range(n)] for i in range(n)]
    return Group(t, name=f"Z{n}")


def direct_product(A, B):
    n = A.order * B.order
    t = np.zeros((n, n), dtype=np.int64)
    for a1, b1 in product(range(A.order), range(B.order)):
        for a2, b2 in product(range(A.order), range(B.order)):
            i = a1 * B.order + b1
            j = a2 * B.order + b2
            t[i, j] = A.mul(a1, a2) * B.order + B.mul(b1, b2)
    return Group(t, name=f"{A.name}x{B.name}")


def symmetric_group(n):
    perms = sorted(_permutations(tuple(range(n))))
    index = {p: i for i, p in enumerate(perms)}
    m = len(perms)
    t = np.zeros((m, m), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            comp = tuple(p[q[k]] for k in range(n))  # (p . q)(k) = p(q(k))
            t[i, j] = index[comp]
    return Group(t, name=f"S{n}")


def _permutations(items):
    if len(items) <= 1:
        return [items]
    out = []
    for i in range(len(items)):
        rest = items[:i] + items[i + 1 :]
        out.extend([(items[i],) + tail for tail in _permutations(rest)])
    return out


def dihedral_group(n):
    """Symmetries of the n-gon, order 2n; index = rotation + n * flip."""
    m = 2 * n
    t = np.zeros((m, m), dtype=np.int64)
    for i, j in product(range(n), (0, 1)):
        for k, l in product(range(n), (0, 1)):
            rot = (i + (k if j == 0 else -k)) % n
            t[i + n * j, k + n * l] = rot + n * ((j + l) % 2)
    return Group(t, name=f"D{n}")


def quaternion_group():
    """The 8-element quaternion group {+-1, +-i, +-j, +-k}."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {"1": ("1", 1), "i": ("i", 1), "j": ("j", 1), "k": ("k", 1)}

    def mul_units(x, y):
        if x == "1":
            return (y, 1)
        if y == "1":
            return (x, 1)
        if x == y:
            return ("1", -1)
        cyc = {("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j"}
        if (x, y) in cyc:
            return (cyc[(x, y)], 1)
        return (cyc[(y, x)], -1)

    def decode(s):
        sign = -1 if s.startswith("-") else 1
        return s.lstrip("-"), sign

    def encode(u, sign):
        return u if sign == 1 else "-" + u

    idx = {s: i for i, s in enumerate(names)}
    t = np.zeros((8, 8), dtype=np.int64)
    for a in names:
        for b in names:
            ua, sa = decode(a)
            ub, sb = decode(b)
            u, s = mul_units(ua, ub)
            t[idx[a], idx[b]] = idx[encode(u, sa * sb * s)]
    return Group(t, name="Q8")


def small_groups(max_order):
    """One representative per isomorphism class, orders 1..max_order (<= 8)."""
    if max_order > 8:
        raise ValueError("small_groups is tabulated only up to order 8")
    z = cyclic_group
    catalog = [
        trivial_group(),
        z(2),
        z(3),
        z(4),
        direct_product(z(2), z(2)),
        z(5),
        z(6),
        symmetric_group(3),
        z(7),
        z(8),
        direct_product(z(4), z(2)),
        direct_product(direct_product(z(2), z(2)), z(2)),
        dihedral_group(4),
        quaternion_group(),
    ]
    return [G for G in catalog if G.order <= max_order]


def group_to_dict(G):
    return {"order": G.order, "table": G.table.tolist()}


def group_from_dict(d):
    return Group(d["table"], name=d.get("name"))
