"""Seeded random algebra corpus shared by tests and the acceptance suite.

Each sample is a finite product of quotients F[x]/(f), built from random
monic polynomials.  The construction data (the moduli) rides along so
that separability and pi0 dimension can be cross-checked by an oracle
that never looks at the structure constants.
"""

import random
from functools import reduce

from galtan import fields
from galtan.finalg import product_algebra, quotient_poly_algebra


def random_monic(F, deg, rng):
    return tuple(rng.randrange(F.q) for _ in range(deg)) + (1,)


def random_quotient_sample(F, rng, max_dim=6):
    """(algebra, moduli): one F[x]/(f) or a product of two quotients."""
    if rng.random() < 0.5:
        deg = rng.randrange(1, max_dim + 1)
        moduli = [random_monic(F, deg, rng)]
    else:
        d1 = rng.randrange(1, max_dim)
        d2 = rng.randrange(1, max_dim + 1 - d1)
        moduli = [random_monic(F, d1, rng), random_monic(F, d2, rng)]
    algebra = reduce(
        product_algebra, [quotient_poly_algebra(F, f) for f in moduli]
    )
    return algebra, moduli


def algebra_corpus(count, seed=0, chars=(2, 3, 5), max_dim=6):
    """Deterministic stream of (algebra, moduli) samples."""
    rng = random.Random(seed)
    out = []
    flds = [fields.field_make(p) for p in chars]
    for i in range(count):
        F = flds[i % len(flds)]
        out.append(random_quotient_sample(F, rng, max_dim))
    return out


def oracle_is_separable(F, moduli):
    """Constructive oracle: every modulus squarefree (gcd(f, f') = 1)."""
    for f in moduli:
        df = fields.poly_deriv(f, F)
        if not df or fields.poly_deg(fields.poly_gcd(f, df, F)) != 0:
            return False
    return True


def oracle_pi0_dim(F, moduli, seed=0):
    """Oracle: dim pi0 = total degree of the distinct irreducible factors."""
    total = 0
    for f in moduli:
        for g, _mult in fields.poly_factor(f, F, seed=seed):
            total += fields.poly_deg(g)
    return total
