"""Finite fields as a lazily extendable compatible tower.

An element of F_{p^n} is an integer code in [0, p^n): the base-p digits
of the code are its coordinates in the power basis of the field modulus.
The modulus of F_{p^n} is the first monic irreducible of degree n in
code order, so descriptors are reproducible across runs without any
external polynomial tables.

Polynomials over a field are tuples of codes, lowest degree first, with
no trailing zeros ("()" is the zero polynomial).  Factorization is
distinct-degree splitting followed by equal-degree splitting driven by a
seeded deterministic element stream.

Embeddings between tower members are computed by root-finding of the
smaller modulus in the larger field.  The chosen root is the least one
consistent with the roots already pinned for smaller subfields, which
makes embeddings compose compatibly along divisibility chains.
"""

import random
from functools import lru_cache

import numpy as np


def is_prime(m):
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def _prime_factors(m):
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def _divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


class Field:
    """Descriptor and arithmetic for F_{p^n}.

    Construct through field_make so that descriptors with the same
    (p, n) share the same modulus and cached tables.
    """

    def __init__(self, p, n, modulus):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if n < 1:
            raise ValueError("degree must be >= 1")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = modulus
        self.zero = 0
        self.one = 1
        if n > 1 and not poly_is_irreducible(tuple(modulus), Field(p, 1, (0, 1))):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self._log = None
        self._exp = None
        self._pinned_roots = {}
        if n > 1 and self.q <= 1 << 16:
            self._build_tables()

    @property
    def is_prime_field(self):
        return self.n == 1

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __repr__(self):
        if self.n == 1:
            return f"F({self.p})"
        return f"F({self.p}^{self.n})"

    # -- element codes <-> digit vectors ------------------------------

    def digits(self, code):
        p = self.p
        out = []
        for _ in range(self.n):
            out.append(code % p)
            code //= p
        return out

    def from_digits(self, ds):
        code = 0
        for c in reversed(ds):
            code = code * self.p + (int(c) % self.p)
        return code

    def elements(self):
        return range(self.q)

    # -- scalar arithmetic ---------------------------------------------

    def add(self, a, b):
        if self.n == 1:
            return (a + b) % self.p
        return self.from_digits(
            [(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))]
        )

    def neg(self, a):
        if self.n == 1:
            return (-a) % self.p
        return self.from_digits([(-x) % self.p for x in self.digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.n == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._mul_poly(a, b)

    def _mul_poly(self, a, b):
        p = self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.n - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce by the monic modulus
        mod = self.modulus
        for i in range(len(prod) - 1, self.n - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(self.n):
                    prod[i - self.n + j] = (prod[i - self.n + j] - c * mod[j]) % p
        return self.from_digits(prod[: self.n])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.n == 1:
            return pow(a, self.p - 2, self.p)
        if self._log is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0
        e %= self.q - 1
        r = 1
        b = a
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def _build_tables(self):
        order_factors = _prime_factors(self.q - 1)
        gen = None
        for c in range(2, self.q):
            if all(
                self._pow_poly(c, (self.q - 1) // r) != 1 for r in order_factors
            ):
                gen = c
                break
        exp = [1] * (self.q - 1)
        for i in range(1, self.q - 1):
            exp[i] = self._mul_poly(exp[i - 1], gen)
        log = [0] * self.q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

    def _pow_poly(self, a, e):
        r = 1
        b = a
        while e:
            if e & 1:
                r = self._mul_poly(r, b)
            b = self._mul_poly(b, b)
            e >>= 1
        return r

    # -- vectorized helpers for prime fields ---------------------------

    def to_array(self, data):
        a = np.asarray(data, dtype=np.int64)
        return a % self.p if self.n == 1 else a % self.q

    # -- compatible embeddings -----------------------------------------

    def pinned_root(self, d):
        """Image in this field of the power-basis generator of F_{p^d}."""
        if self.n % d != 0:
            raise ValueError(f"F_{self.p}^{d} is not a subfield of {self!r}")
        if d == 1:
            return self.from_digits([0])  # class of x in F_p[x]/(x) is 0
        if d in self._pinned_roots:
            return self._pinned_roots[d]
        sub = field_make(self.p, d)
        candidates = [
            y for y in self.elements() if poly_eval(sub.modulus, y, self) == 0
        ]
        for e in _divisors(d):
            if e in (1, d):
                continue
            se_here = self.pinned_root(e)
            se_sub = sub.pinned_root(e)
            digs = sub.digits(se_sub)
            candidates = [
                y
                for y in candidates
                if _eval_digits(digs, y, self) == se_here
            ]
        if not candidates:
            raise RuntimeError(f"no consistent root of degree {d} in {self!r}")
        root = min(candidates)
        self._pinned_roots[d] = root
        return root


def _eval_digits(digs, y, F):
    acc = 0
    ypow = 1
    for c in digs:
        if c:
            acc = F.add(acc, F.mul(c % F.p, ypow))
        ypow = F.mul(ypow, y)
    return acc


def embed(src, dst):
    """Field embedding F_{p^m} -> F_{p^r} as a code-to-code function.

    Requires src.n | dst.n and equal characteristic.  Embeddings built
    this way satisfy embed(m, r) == embed(n, r) . embed(m, n) whenever
    m | n | r.
    """
    if src.p != dst.p:
        raise ValueError("different characteristics")
    if dst.n % src.n != 0:
        raise ValueError(f"{src!r} does not embed in {dst!r}")
    if src == dst:
        return lambda c: c
    root = dst.pinned_root(src.n)
    powers = [1]
    for _ in range(src.n - 1):
        powers.append(dst.mul(powers[-1], root))

    def phi(code):
        acc = 0
        for c, ypow in zip(src.digits(code), powers):
            if c:
                acc = dst.add(acc, dst.mul(c, ypow))
        return acc

    return phi


@lru_cache(maxsize=None)
def field_make(p, n=1):
    """F_{p^n} with the deterministic (least in code order) modulus."""
    p, n = int(p), int(n)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("degree must be >= 1")
    if n == 1:
        return Field(p, 1, (0, 1))
    base = field_make(p)
    # enumerate the non-leading coefficient block in ascending code order
    for m in range(p**n):
        coeffs = []
        mm = m
        for _ in range(n):
            coeffs.append(mm % p)
            mm //= p
        f = tuple(coeffs) + (1,)
        if poly_is_irreducible(f, base):
            return Field(p, n, f)
    raise RuntimeError("unreachable: irreducibles of every degree exist")


def splitting_field(F, degree):
    """Tower member containing all residue fields of the given degrees."""
    m = 1
    for d in degree if isinstance(degree, (list, tuple)) else [degree]:
        m = m * d // _gcd_int(m, d)
    return field_make(F.p, F.n * m), m


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


# ----------------------------------------------------------------------
# dense univariate polynomials (tuples of codes, lowest degree first)
# ----------------------------------------------------------------------


def poly_strip(f):
    f = tuple(f)
    k = len(f)
    while k and f[k - 1] == 0:
        k -= 1
    return f[:k]


def poly_deg(f):
    return len(f) - 1


def poly_add(f, g, F):
    n = max(len(f), len(g))
    f = f + (0,) * (n - len(f))
    g = g + (0,) * (n - len(g))
    return poly_strip(tuple(F.add(a, b) for a, b in zip(f, g)))


def poly_neg(f, F):
    return tuple(F.neg(a) for a in f)


def poly_sub(f, g, F):
    return poly_add(f, poly_neg(g, F), F)


def poly_scale(f, c, F):
    if c == 0:
        return ()
    return tuple(F.mul(a, c) for a in f)


def poly_mul(f, g, F):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return poly_strip(out)


def poly_divmod(f, g, F):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = poly_deg(g)
    lc_inv = F.inv(g[-1])
    quo = [0] * max(len(f) - dg, 0)
    for i in range(len(f) - 1, dg - 1, -1):
        c = F.mul(f[i], lc_inv)
        if c:
            quo[i - dg] = c
            for j, b in enumerate(g):
                f[i - dg + j] = F.sub(f[i - dg + j], F.mul(c, b))
    return poly_strip(quo), poly_strip(f)


def poly_rem(f, g, F):
    return poly_divmod(f, g, F)[1]


def poly_quo(f, g, F):
    return poly_divmod(f, g, F)[0]


def poly_monic(f, F):
    if not f:
        return ()
    lc = f[-1]
    if lc == 1:
        return f
    return poly_scale(f, F.inv(lc), F)


def poly_gcd(f, g, F):
    while g:
        f, g = g, poly_rem(f, g, F)
    return poly_monic(f, F)


def poly_gcdex(f, g, F):
    """(s, t, h) with s*f + t*g = h = monic gcd(f, g)."""
    r0, r1 = f, g
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = poly_divmod(r0, r1, F)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1, F), F)
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1, F), F)
    if not r0:
        return (), (), ()
    c = F.inv(r0[-1])
    return poly_scale(s0, c, F), poly_scale(t0, c, F), poly_scale(r0, c, F)


def poly_pow_mod(f, e, mod, F):
    r = (1,)
    b = poly_rem(f, mod, F)
    while e:
        if e & 1:
            r = poly_rem(poly_mul(r, b, F), mod, F)
        b = poly_rem(poly_mul(b, b, F), mod, F)
        e >>= 1
    return r


def poly_eval(f, x, F):
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_deriv(f, F):
    out = []
    for i in range(1, len(f)):
        out.append(F.mul(f[i], i % F.p))
    return poly_strip(out)


_X = (0, 1)


def poly_is_irreducible(f, F):
    """Rabin irreducibility test over F (f need not be monic)."""
    f = poly_monic(poly_strip(f), F)
    d = poly_deg(f)
    if d <= 0:
        return False
    if d == 1:
        return True
    q = F.q
    h = poly_pow_mod(_X, q**d, f, F)
    if poly_sub(h, _X, F):
        return False
    for r in _prime_factors(d):
        h = poly_pow_mod(_X, q ** (d // r), f, F)
        if poly_deg(poly_gcd(poly_sub(h, _X, F), f, F)) != 0:
            return False
    return True


def _poly_pth_root(f, F):
    """g with g(x)^p = f(x), defined when f' = 0 (f is in x^p)."""
    p = F.p
    root_exp = F.q // p  # c^(q/p) is the p-th root of c in F_q
    out = []
    for i in range(0, len(f), p):
        out.append(F.pow(f[i], root_exp))
    return poly_strip(out)


def _sqf_list(f, F):
    """Squarefree decomposition [(g, e)] of monic f, prod g^e = f."""
    p = F.p
    factors = []
    n = 1
    while True:
        df = poly_deriv(f, F)
        if df:
            g = poly_gcd(f, df, F)
            h = poly_quo(f, g, F)
            i = 1
            while h != (1,):
                gh = poly_gcd(g, h, F)
                part = poly_quo(h, gh, F)
                if poly_deg(part) > 0:
                    factors.append((part, i * n))
                i += 1
                g, h = poly_quo(g, gh, F), gh
            if g == (1,):
                return factors
            f = g  # remaining part is a p-th power
        d = poly_deg(f)
        if d == 0:
            return factors
        f = _poly_pth_root(f, F)
        n *= p


def _ddf(f, F):
    """Distinct-degree split of squarefree monic f: [(product, degree)]."""
    q = F.q
    out = []
    g = _X
    i = 1
    while 2 * i <= poly_deg(f):
        g = poly_pow_mod(g, q, f, F)
        h = poly_gcd(poly_sub(g, _X, F), f, F)
        if h != (1,):
            out.append((h, i))
            f = poly_quo(f, h, F)
            g = poly_rem(g, f, F)
        i += 1
    if f != (1,):
        out.append((f, poly_deg(f)))
    return out


def _random_poly(num_coeffs, F, rng):
    """Nonzero polynomial of degree < num_coeffs, all coefficients random.

    The leading coefficient must not be forced: over F_{2^n} a monic-only
    stream can have constant trace difference across factors and never
    split.
    """
    while True:
        r = poly_strip([rng.randrange(F.q) for _ in range(num_coeffs)])
        if r:
            return r


def _edf(f, d, F, rng):
    """Equal-degree split of squarefree monic f into irreducibles of degree d."""
    if poly_deg(f) <= d:
        return [f]
    q = F.q
    while True:
        r = _random_poly(2 * d, F, rng)
        if F.p == 2:
            h = r
            acc = r
            for _ in range(d * F.n - 1):
                acc = poly_pow_mod(acc, 2, f, F)
                h = poly_add(h, acc, F)
            g = poly_gcd(h, f, F)
        else:
            h = poly_pow_mod(r, (q**d - 1) // 2, f, F)
            g = poly_gcd(poly_sub(h, (1,), F), f, F)
        if g not in ((1,), f):
            return _edf(g, d, F, rng) + _edf(poly_quo(f, g, F), d, F, rng)


def poly_factor(f, F, seed=0):
    """Factor f into monic irreducibles over F.

    Returns a list of (factor, multiplicity) sorted by degree then by
    coefficient tuple; the product of the factors with multiplicities
    reproduces f up to the leading unit.  The equal-degree stage draws
    from random.Random(seed), so results are reproducible.
    """
    f = poly_strip(f)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    found = {}
    for sqf, mult in _sqf_list(poly_monic(f, F), F):
        for part, deg in _ddf(sqf, F):
            for irr in _edf(part, deg, F, rng):
                found[irr] = found.get(irr, 0) + mult
    return sorted(found.items(), key=lambda t: (poly_deg(t[0]), t[0]))


def poly_roots(f, F):
    """Roots in F of a nonzero polynomial, by scanning the field."""
    return [x for x in F.elements() if poly_eval(f, x, F) == 0]


# ----------------------------------------------------------------------
# serialization
# ----------------------------------------------------------------------


def field_to_dict(F):
    return {"p": F.p, "n": F.n, "modulus": list(F.modulus)}


def field_from_dict(d):
    F = field_make(int(d["p"]), int(d["n"]))
    if list(F.modulus) != [c % F.p for c in d["modulus"]]:
        # accept any valid irreducible modulus, not only the canonical one
        return Field(int(d["p"]), int(d["n"]), tuple(d["modulus"]))
    return F
