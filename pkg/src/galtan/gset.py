"""Finite G-sets as a concrete Galois category.

Actions are tables (group element, point) -> point, validated
exhaustively.  Limits and colimits are computed pointwise (products,
equalizers, pullbacks, coproducts, coequalizers via union-find), the
fiber functor is the underlying set, and the automorphism group of the
fiber functor is computed by brute force anchored at the regular G-set.
"""

import random
from itertools import product as iproduct

import numpy as np

from galtan.errors import SearchBudgetExceeded, ValidationError
from galtan.groups import Group, is_homomorphism


class GSet:
    """Finite set with a left action of a Cayley-table group."""

    def __init__(self, group, action, validate=True):
        action = np.asarray(action, dtype=np.int64).reshape(group.order, -1)
        self.group = group
        self.size = action.shape[1]
        self.action = action
        if validate:
            self.validate()

    def validate(self):
        G = self.group
        n = self.size
        if self.size and (self.action.min() < 0 or self.action.max() >= n):
            raise ValidationError("ActionRange")
        if not np.array_equal(self.action[0], np.arange(n)):
            raise ValidationError("ActionIdentity")
        for g in range(G.order):
            for h in range(G.order):
                gh = G.mul(g, h)
                for x in range(n):
                    if self.action[g, self.action[h, x]] != self.action[gh, x]:
                        raise ValidationError("ActionCompatibility", (g, h, x))
        return self

    def act(self, g, x):
        return int(self.action[g, x])

    def stabilizer(self, x):
        return [g for g in range(self.group.order) if self.act(g, x) == x]

    def fixed_points(self):
        return [x for x in range(self.size) if all(self.act(g, x) == x for g in range(self.group.order))]

    def __repr__(self):
        return f"GSet({self.group.name}, size={self.size})"


class EquivariantMap:
    def __init__(self, source, target, table, validate=True):
        if source.group is not target.group and source.group.table is not target.group.table:
            if not np.array_equal(source.group.table, target.group.table):
                raise ValidationError("GroupMismatch")
        self.source = source
        self.target = target
        self.table = list(int(t) for t in table)
        if validate:
            self.validate()

    def validate(self):
        if len(self.table) != self.source.size:
            raise ValidationError("MapLength")
        for g in range(self.source.group.order):
            for x in range(self.source.size):
                if self.table[self.source.act(g, x)] != self.target.act(g, self.table[x]):
                    raise ValidationError("Equivariance", (g, x))
        return self

    def __call__(self, x):
        return self.table[x]

    def compose(self, other):
        """self . other (apply other first)."""
        return EquivariantMap(
            other.source, self.target, [self.table[y] for y in other.table],
            validate=False,
        )

    def is_bijective(self):
        return len(set(self.table)) == self.source.size == self.target.size

    def inverse(self):
        if not self.is_bijective():
            raise ValueError("not bijective")
        inv = [0] * self.target.size
        for x, y in enumerate(self.table):
            inv[y] = x
        return EquivariantMap(self.target, self.source, inv)

    def __eq__(self, other):
        return (
            isinstance(other, EquivariantMap)
            and self.source is other.source
            and self.target is other.target
            and self.table == other.table
        )

    def __repr__(self):
        return f"EqMap({self.table})"


# -- constructors ---------------------------------------------------------------


def regular_gset(G):
    return GSet(G, G.table.copy(), validate=False)


def trivial_gset(G, n):
    return GSet(G, np.tile(np.arange(n), (G.order, 1)), validate=False)


def empty_gset(G):
    return GSet(G, np.zeros((G.order, 0), dtype=np.int64), validate=False)


def singleton_gset(G):
    return trivial_gset(G, 1)


def coset_gset(G, subgroup):
    """G / H with the left translation action; cosets sorted by least element."""
    sub = set(subgroup)
    seen = {}
    cosets = []
    for g in range(G.order):
        c = tuple(sorted(G.mul(g, h) for h in sub))
        if c not in seen:
            seen[c] = len(cosets)
            cosets.append(c)
    action = np.zeros((G.order, len(cosets)), dtype=np.int64)
    for g in range(G.order):
        for i, c in enumerate(cosets):
            img = tuple(sorted(G.mul(g, x) for x in c))
            action[g, i] = seen[img]
    return GSet(G, action)


def perm_gset(G, perms):
    """Action from one permutation per group element (list of lists)."""
    return GSet(G, np.asarray(perms, dtype=np.int64))


# -- limits ----------------------------------------------------------------------


def product_gset(X, Y):
    """X x Y with projections; points indexed x * |Y| + y."""
    G = X.group
    n = X.size * Y.size
    action = np.zeros((G.order, n), dtype=np.int64)
    for g in range(G.order):
        for x in range(X.size):
            for y in range(Y.size):
                action[g, x * Y.size + y] = X.act(g, x) * Y.size + Y.act(g, y)
    P = GSet(G, action, validate=False)
    p1 = EquivariantMap(P, X, [i // Y.size for i in range(n)], validate=False)
    p2 = EquivariantMap(P, Y, [i % Y.size for i in range(n)], validate=False)
    return P, p1, p2


def sub_gset(X, points):
    """The induced action on an invariant subset; returns (S, inclusion)."""
    points = sorted(points)
    index = {x: i for i, x in enumerate(points)}
    G = X.group
    action = np.zeros((G.order, len(points)), dtype=np.int64)
    for g in range(G.order):
        for i, x in enumerate(points):
            y = X.act(g, x)
            if y not in index:
                raise ValidationError("NotInvariant", (g, x))
            action[g, i] = index[y]
    S = GSet(G, action, validate=False)
    return S, EquivariantMap(S, X, points, validate=False)


def equalizer_gset(f, g):
    """Equalizer of f, g : X -> Y as an invariant subset of X."""
    if f.source is not g.source or f.target is not g.target:
        raise ValidationError("ParallelPair")
    pts = [x for x in range(f.source.size) if f(x) == g(x)]
    return sub_gset(f.source, pts)


def pullback_gset(f, g):
    """Pullback of f : X -> Z and g : Y -> Z inside X x Y."""
    P, p1, p2 = product_gset(f.source, g.source)
    pts = [i for i in range(P.size) if f(p1(i)) == g(p2(i))]
    S, inc = sub_gset(P, pts)
    return S, p1.compose(inc), p2.compose(inc)


# -- colimits ---------------------------------------------------------------------


def coproduct_gset(X, Y):
    G = X.group
    n = X.size + Y.size
    action = np.zeros((G.order, n), dtype=np.int64)
    action[:, : X.size] = X.action
    action[:, X.size :] = Y.action + X.size
    C = GSet(G, action, validate=False)
    i1 = EquivariantMap(X, C, list(range(X.size)), validate=False)
    i2 = EquivariantMap(Y, C, [X.size + i for i in range(Y.size)], validate=False)
    return C, i1, i2


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def coequalizer_gset(f, g):
    """Quotient of the target by the equivariant relation f(x) ~ g(x).

    Union-find on the generated pairs, then closure under the action
    (a no-op for validated equivariant maps, kept as a safety net).
    """
    if f.source is not g.source or f.target is not g.target:
        raise ValidationError("ParallelPair")
    Y = f.target
    G = Y.group
    uf = _UnionFind(Y.size)
    for x in range(f.source.size):
        uf.union(f(x), g(x))
    changed = True
    while changed:
        changed = False
        for gg in range(G.order):
            for a in range(Y.size):
                b = uf.find(a)
                if b != a:
                    ga, gb = Y.act(gg, a), Y.act(gg, b)
                    if uf.find(ga) != uf.find(gb):
                        uf.union(ga, gb)
                        changed = True
    reps = sorted({uf.find(y) for y in range(Y.size)})
    index = {r: i for i, r in enumerate(reps)}
    action = np.zeros((G.order, len(reps)), dtype=np.int64)
    for gg in range(G.order):
        for r in reps:
            action[gg, index[r]] = index[uf.find(Y.act(gg, r))]
    Q = GSet(G, action)
    proj = EquivariantMap(Y, Q, [index[uf.find(y)] for y in range(Y.size)])
    return Q, proj


# -- orbits and fiber ---------------------------------------------------------------


def orbits(X):
    """Orbit decomposition: (parts, element lists, coproduct bijection).

    parts[i] is a transitive GSet on orbit i; elements[i] lists the
    original points; the returned bijection maps the disjoint union of
    the parts back onto X.
    """
    uf = _UnionFind(X.size)
    for g in range(X.group.order):
        for x in range(X.size):
            uf.union(x, X.act(g, x))
    buckets = {}
    for x in range(X.size):
        buckets.setdefault(uf.find(x), []).append(x)
    parts = []
    elements = []
    for r in sorted(buckets):
        S, inc = sub_gset(X, buckets[r])
        parts.append(S)
        elements.append(inc.table)
    bijection = [x for elem in elements for x in elem]
    return parts, elements, bijection


def is_transitive(X):
    return len(orbits(X)[0]) == 1 if X.size else False


def fiber(X):
    """The underlying finite set of a G-set."""
    return list(range(X.size))


def fiber_map(f):
    """The underlying function of an equivariant map."""
    return list(f.table)


# -- hom enumeration -----------------------------------------------------------------


def homs(X, Y, budget=200_000):
    """Complete list of equivariant maps X -> Y.

    Orbit-by-orbit: a map on a transitive orbit is fixed by the image of
    a base point, which must be stabilized by the base point's
    stabilizer.  The enumeration size is the product of the per-orbit
    candidate counts, checked against the budget up front.
    """
    G = X.group
    parts, elements, _ = orbits(X)
    per_orbit = []
    for part, elems in zip(parts, elements):
        x0 = elems[0]
        stab = X.stabilizer(x0)
        candidates = [
            y
            for y in range(Y.size)
            if all(Y.act(s, y) == y for s in stab)
        ]
        # transporter g_x with g_x . x0 = x, per orbit element
        transporter = {}
        for g in range(G.order):
            img = X.act(g, x0)
            if img not in transporter:
                transporter[img] = g
        per_orbit.append((elems, transporter, candidates))
    total = 1
    for _, _, cand in per_orbit:
        total *= len(cand)
        if total > budget:
            raise SearchBudgetExceeded(total, budget)
    out = []
    for choice in iproduct(*[cand for _, _, cand in per_orbit]):
        table = [0] * X.size
        for (elems, transporter, _), y in zip(per_orbit, choice):
            for x in elems:
                table[x] = Y.act(transporter[x], y)
        out.append(EquivariantMap(X, Y, table, validate=False))
    return out


# -- the Galois axiom report -----------------------------------------------------------


def _random_gset(G, rng, max_size=6):
    types = [coset_gset(G, s) for s in G.subgroups_up_to_conjugacy()]
    X = empty_gset(G)
    while True:
        options = [t for t in types if t.size <= max_size - X.size]
        if not options or (X.size and rng.random() < 0.4):
            break
        X = coproduct_gset(X, rng.choice(options))[0]
    if X.size == 0:
        X = singleton_gset(G)
    return X


def _set_coequalizer_classes(pairs, n):
    uf = _UnionFind(n)
    for a, b in pairs:
        uf.union(a, b)
    return len({uf.find(i) for i in range(n)})


def check_galois(G, sample_budget=50, seed=0):
    """Verify the Galois-category axioms on seeded random diagrams.

    Returns a report dict with one entry per axiom: pass flag, number of
    checks, and a witness for any failure.
    """
    rng = random.Random(seed)
    report = {}

    def fail(axiom, witness):
        report[axiom] = {"pass": False, "witness": witness}

    checks = {k: 0 for k in ("GAL1", "GAL2", "GAL3", "GAL4", "GAL5")}
    for trial in range(sample_budget):
        X = _random_gset(G, rng)
        Y = _random_gset(G, rng)
        # GAL1 products + terminal; GAL4 fiber preserves them
        P, p1, p2 = product_gset(X, Y)
        if P.size != X.size * Y.size:
            fail("GAL4", f"product size {P.size}")
            break
        Z = _random_gset(G, rng, max_size=4)
        cone = homs(Z, X)
        cone2 = homs(Z, Y)
        if cone and cone2:
            f = rng.choice(cone)
            g = rng.choice(cone2)
            mediating = [
                m
                for m in homs(Z, P)
                if p1.compose(m).table == f.table and p2.compose(m).table == g.table
            ]
            if len(mediating) != 1:
                fail("GAL1", f"{len(mediating)} mediating maps for a product cone")
                break
        if len(homs(X, singleton_gset(G))) != 1:
            fail("GAL1", "terminal object not terminal")
            break
        checks["GAL1"] += 1
        # equalizers and their fibers
        fg = homs(X, Y)
        if len(fg) >= 2:
            f, g = rng.sample(fg, 2)
            E, inc = equalizer_gset(f, g)
            set_eq = [x for x in range(X.size) if f(x) == g(x)]
            if sorted(inc.table) != set_eq:
                fail("GAL4", "fiber of equalizer differs from set equalizer")
                break
            for m in homs(Z, X):
                if f.compose(m).table == g.compose(m).table:
                    through = [
                        h for h in homs(Z, E) if inc.compose(h).table == m.table
                    ]
                    if len(through) != 1:
                        fail("GAL1", "equalizer universal property")
                        break
        checks["GAL4"] += 1
        # GAL2 coproducts + coequalizers; GAL4 exactness on them
        C, i1, i2 = coproduct_gset(X, Y)
        if C.size != X.size + Y.size:
            fail("GAL2", "coproduct size")
            break
        if len(fg) >= 2:
            f, g = rng.sample(fg, 2)
            Q, proj = coequalizer_gset(f, g)
            set_classes = _set_coequalizer_classes(
                [(f(x), g(x)) for x in range(X.size)], Y.size
            )
            if Q.size != set_classes:
                fail("GAL4", "fiber of coequalizer differs from set coequalizer")
                break
            W = _random_gset(G, rng, max_size=4)
            for h in homs(Y, W):
                if all(h(f(x)) == h(g(x)) for x in range(X.size)):
                    through = [
                        k for k in homs(Q, W) if k.compose(proj).table == h.table
                    ]
                    if len(through) != 1:
                        fail("GAL2", "coequalizer universal property")
                        break
        checks["GAL2"] += 1
        # GAL3 orbit decomposition
        parts, elems, bij = orbits(X)
        if sorted(bij) != list(range(X.size)):
            fail("GAL3", "orbit decomposition is not a bijection")
            break
        for part in parts:
            if not is_transitive(part):
                fail("GAL3", "non-transitive orbit part")
                break
        checks["GAL3"] += 1
        # GAL5 conservativity: bijective-on-fiber maps are isomorphisms
        for m in fg:
            if m.is_bijective():
                try:
                    m.inverse().validate()
                except ValidationError as exc:
                    fail("GAL5", f"bijective non-isomorphism: {exc}")
                    break
        checks["GAL5"] += 1
    for axiom, count in checks.items():
        report.setdefault(axiom, {"pass": True, "checks": count})
    # the empty G-set is initial
    E = empty_gset(G)
    X = _random_gset(G, rng)
    report["initial"] = {"pass": len(homs(E, X)) == 1}
    return report


# -- Aut of the fiber functor -------------------------------------------------------


def all_gsets_upto(G, max_size):
    """Representatives of iso classes: multisets of transitive G-sets."""
    types = [coset_gset(G, s) for s in G.subgroups_up_to_conjugacy()]
    sizes = [t.size for t in types]
    out = []

    def rec(start, room, acc):
        if acc:
            X = acc[0]
            for part in acc[1:]:
                X = coproduct_gset(X, part)[0]
            out.append(X)
        for i in range(start, len(types)):
            if sizes[i] <= room:
                rec(i, room - sizes[i], acc + [types[i]])

    rec(0, max_size, [])
    return out


def aut_fiber(G, size_bound, budget=500_000):
    """Automorphisms of the forgetful functor on G-sets of bounded size.

    A natural family is pinned by its value on the regular G-set:
    commuting with right translations forces sigma(h) = sigma(e) . h, and
    naturality along orbit maps forces sigma_X(x) = g0 . x on every X.
    The candidates are then verified against every equivariant map
    between corpus objects.  Returns (group of families, explicit
    isomorphism image list onto G, corpus size).
    """
    if size_bound < G.order:
        raise ValueError("size_bound must be at least |G| (regular object needed)")
    corpus = all_gsets_upto(G, size_bound)
    reg = regular_gset(G)
    # candidates for sigma on the regular object: commute with End(reg)
    candidates = []
    for g0 in range(G.order):
        sigma = [G.mul(g0, x) for x in range(G.order)]
        if all(
            sigma[G.mul(x, h)] == G.mul(sigma[x], h)
            for x in range(G.order)
            for h in range(G.order)
        ):
            candidates.append(g0)
    # extend each candidate to the corpus and verify naturality exhaustively
    families = []
    hom_cache = {}
    for g0 in candidates:
        natural = True
        comp = {}
        for X in corpus:
            comp[id(X)] = [X.act(g0, x) for x in range(X.size)]
        for a, X in enumerate(corpus):
            for b, Y in enumerate(corpus):
                key = (a, b)
                if key not in hom_cache:
                    try:
                        hom_cache[key] = homs(X, Y, budget=budget)
                    except SearchBudgetExceeded:
                        hom_cache[key] = None
                maps = hom_cache[key]
                if maps is None:
                    continue
                sx, sy = comp[id(X)], comp[id(Y)]
                for f in maps:
                    if any(sy[f(x)] != f.table[sx[x]] for x in range(X.size)):
                        natural = False
                        break
                if not natural:
                    break
            if not natural:
                break
        if natural:
            families.append(g0)
    # composition: the family of g0 then g1 acts as g1 . (g0 . x)... compose as maps
    index = {g: i for i, g in enumerate(sorted(families, key=lambda g: (g != 0, g)))}
    ordered = sorted(families, key=lambda g: (g != 0, g))
    n = len(ordered)
    table = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(ordered):
        for j, b in enumerate(ordered):
            composite = G.mul(a, b)  # sigma_a . sigma_b sends x to a.(b.x)
            if composite not in index:
                raise ValidationError("AutClosure", (a, b))
            table[i, j] = index[composite]
    Aut = Group(table, name=f"Aut(fiber_{G.name})")
    # family index i corresponds to left translation by ordered[i]
    iso = list(ordered)
    if len(set(iso)) != G.order or not is_homomorphism(Aut, G, iso):
        raise ValidationError("AutIsomorphism")
    return Aut, iso, len(corpus)


# -- serialization --------------------------------------------------------------------


def gset_to_dict(X):
    from galtan.groups import group_to_dict

    return {
        "group": group_to_dict(X.group),
        "size": X.size,
        "action": X.action.tolist(),
    }


def gset_from_dict(d, group=None):
    from galtan.groups import group_from_dict

    G = group if group is not None else group_from_dict(d["group"])
    return GSet(G, d["action"])
