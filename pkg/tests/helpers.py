"""Independent oracles and small classical algebras for the tests.

The oracles evaluate identities element by element through ``multiply`` and
``apply_map`` with plain Python loops, sharing no code with the tensor engine.
Quadratic identities are tested on x = e_i and x = e_i + e_j, which decides a
quadratic form in characteristic 0.
"""

import itertools
import random
from fractions import Fraction

from homalg.algebra import HomAlgebra, apply_map, multiply
from homalg.matrix import Matrix

F = Fraction


def basis(n):
    return [tuple(F(int(k == i)) for k in range(n)) for i in range(n)]


def add(*vs):
    return tuple(sum(c, F(0)) for c in zip(*vs))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def quad_points(n):
    b = basis(n)
    return b + [add(b[i], b[j]) for i in range(n) for j in range(i + 1, n)]


class Naive:
    def __init__(self, alg, product=None):
        self.alg, self.p = alg, product

    def m(self, x, y):
        return multiply(self.alg, self.p, x, y)

    def a(self, x, k=1):
        for _ in range(k):
            x = apply_map(self.alg.alpha, x)
        return x

    def assoc(self, x, y, z):
        return sub(self.m(self.m(x, y), self.a(z)), self.m(self.a(x), self.m(y, z)))

    def jac(self, x, y, z):
        m, a = self.m, self.a
        return add(m(m(x, y), a(z)), m(m(y, z), a(x)), m(m(z, x), a(y)))

    def com(self, x, y):
        return sub(self.m(x, y), self.m(y, x))


def zero(v):
    return all(c == 0 for c in v)


def naive_antisymmetric(alg):
    o = Naive(alg)
    b = basis(alg.dim)
    return all(zero(add(o.m(x, y), o.m(y, x))) for x in b for y in b)


def naive_malcev_four_var(alg, bracket=None):
    o = Naive(alg)
    br = bracket or o.m
    a = o.a
    b = basis(alg.dim)
    for x, y, z, t in itertools.product(b, repeat=4):
        lhs = br(a(br(x, z)), a(br(y, t)))
        rhs = add(br(br(br(x, y), a(z)), a(t, 2)), br(br(br(y, z), a(t)), a(x, 2)),
                  br(br(br(z, t), a(x)), a(y, 2)), br(br(br(t, x), a(y)), a(z, 2)))
        if lhs != rhs:
            return False
    return True


def naive_malcev_jacobian(alg):
    o = Naive(alg)
    b = basis(alg.dim)
    for x in quad_points(alg.dim):
        for y, z in itertools.product(b, repeat=2):
            lhs = o.jac(o.a(x), o.a(y), o.m(x, z))
            rhs = o.m(o.jac(x, y, z), o.a(x, 2))
            if lhs != rhs:
                return False
    return True


def naive_alternative(alg, product=None):
    o = Naive(alg, product)
    b = basis(alg.dim)
    for x in quad_points(alg.dim):
        for y in b:
            if not zero(o.assoc(x, x, y)) or not zero(o.assoc(y, x, x)):
                return False
    return True


def naive_hpm(alg):
    o = Naive(alg)
    m, a = o.m, o.a
    for x, y, z, t in itertools.product(basis(alg.dim), repeat=4):
        terms = [
            m(a(m(y, z)), a(m(x, t))), tuple(-c for c in m(a(m(z, y)), a(m(x, t)))),
            m(m(m(x, y), a(z)), a(t, 2)), tuple(-c for c in m(m(m(y, x), a(z)), a(t, 2))),
            tuple(-c for c in m(m(a(z), m(x, y)), a(t, 2))), m(m(a(z), m(y, x)), a(t, 2)),
            m(a(y, 2), m(m(x, z), a(t))), tuple(-c for c in m(a(y, 2), m(m(z, x), a(t)))),
            tuple(-c for c in m(a(x, 2), m(a(y), m(z, t)))), m(a(z, 2), m(a(x), m(y, t))),
        ]
        if not zero(add(*terms)):
            return False
    return True


def naive_multiplicative(alg):
    b = basis(alg.dim)
    for name in alg.product_names:
        o = Naive(alg, name)
        for x, y in itertools.product(b, repeat=2):
            if o.a(o.m(x, y)) != o.m(o.a(x), o.a(y)):
                return False
    return True


# ---------------------------------------------------------------------------
# classical algebras

FANO = [(1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3)]


def octonions():
    """The 8-dim octonion algebra (basis 1, e1..e7): alternative, not associative."""
    t = {}
    for i in range(1, 8):
        t[(0, i, i)] = 1
        t[(i, 0, i)] = 1
        t[(i, i, 0)] = -1
    t[(0, 0, 0)] = 1
    for a, b, c in FANO:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            t[(x, y, z)] = 1
            t[(y, x, z)] = -1
    return HomAlgebra.from_entries(8, t, kind="alternative")


def imaginary_octonions():
    """The 7-dim Malcev algebra of imaginary octonions under the commutator (not Lie)."""
    t = {}
    for a, b, c in FANO:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            t[(x - 1, y - 1, z - 1)] = 2
            t[(y - 1, x - 1, z - 1)] = -2
    return HomAlgebra.from_entries(7, t, kind="malcev")


def sl2():
    """[h, e] = 2e, [h, f] = -2f, [e, f] = h with basis (h, e, f)."""
    return HomAlgebra.from_entries(3, {(0, 1, 1): 2, (1, 0, 1): -2, (0, 2, 2): -2, (2, 0, 2): 2,
                                       (1, 2, 0): 1, (2, 1, 0): -1}, kind="malcev")


def abelian(n, alpha=None):
    return HomAlgebra.from_entries(n, {}, alpha)


def random_algebra(rng, n, density=0.3, antisymmetric=False, alpha=None):
    t = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        if antisymmetric and i >= j:
            continue
        if rng.random() < density:
            c = rng.choice([-2, -1, 1, 2])
            t[(i, j, k)] = c
            if antisymmetric:
                t[(j, i, k)] = -c
    return HomAlgebra.from_entries(n, t, alpha)


def random_matrix(rng, rows, cols, lo=-2, hi=2):
    return Matrix.from_rows([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def corrupt_table(alg, rng, product="mul"):
    """Change one structure constant by a nonzero amount; return (new algebra, (i, j, k))."""
    n = alg.dim
    i, j, k = rng.randrange(n), rng.randrange(n), rng.randrange(n)
    t = [[list(r) for r in p] for p in alg.table(product)]
    t[i][j][k] = t[i][j][k] + rng.choice([-1, 1])
    products = dict(alg.products)
    products[product] = t
    return HomAlgebra(n, products, alg.alpha, alg.kind), (i, j, k)


def seeded(seed):
    return random.Random(seed)


# ---------------------------------------------------------------------------
# modules and semidirect products

def corrupt_matrices(mats, rng):
    """Change one entry of one action matrix by +-1; return (new matrices, (i, row, col))."""
    mats = list(mats)
    i = rng.randrange(len(mats))
    M = mats[i]
    r, c = rng.randrange(M.rows), rng.randrange(M.cols)
    rows = [list(row) for row in M.data]
    rows[r][c] += rng.choice([-1, 1])
    mats[i] = Matrix.from_rows(rows)
    return tuple(mats), (i, r, c)


def module_verdict(mod):
    from homalg.representations import Bimodule, check_bimodule, check_representation

    return (check_bimodule(mod) if isinstance(mod, Bimodule) else check_representation(mod)).passed


def semidirect_verdict(mod):
    """Identity check on the semidirect product.

    For representations and pre-Malcev bimodules the twist axioms
    (beta rho(x) = rho(alpha x) beta) are invisible to the identity itself;
    they are exactly multiplicativity of alpha + beta, so that is checked too.
    """
    from homalg.algebra import check_multiplicative
    from homalg.identities import check_structure
    from homalg.representations import Bimodule, semidirect_product

    S = semidirect_product(mod.algebra, mod)
    if isinstance(mod, Bimodule) and mod.flavor == "alternative":
        return check_structure(S, "alternative").passed
    kind = "pre-malcev" if isinstance(mod, Bimodule) else "malcev"
    return check_structure(S, kind).passed and check_multiplicative(S).passed


def corrupted_module(mod, rng):
    from homalg.representations import Bimodule, Representation

    if isinstance(mod, Representation):
        rho, _ = corrupt_matrices(mod.rho, rng)
        return Representation(mod.algebra, mod.dim_v, rho, mod.beta)
    if rng.random() < 0.5:
        ell, _ = corrupt_matrices(mod.ell, rng)
        return Bimodule(mod.algebra, mod.dim_v, ell, mod.r, mod.beta, mod.flavor)
    r, _ = corrupt_matrices(mod.r, rng)
    return Bimodule(mod.algebra, mod.dim_v, mod.ell, r, mod.beta, mod.flavor)


def semidirect_contexts():
    """Passing representations and bimodules drawn from the corpus."""
    from homalg.corpus import load_example
    from homalg.representations import coadjoint_rep, regular_bimodule

    m4 = load_example("malcev4")
    aut = load_example("malcev4_aut")
    m5 = load_example("malcev5", a4=1, lam2=2)
    nil2 = load_example("nil2_hom")
    return [
        ("malcev4_aut twisted adjoint", aut["twisted_adjoint"]),
        ("malcev5 twisted adjoint", m5["twisted_adjoint"]),
        ("malcev5 coadjoint", coadjoint_rep(m5["algebra"])),
        ("malcev4 pre-Malcev regular bimodule", regular_bimodule(m4["premalcev"], "pre_malcev")),
        ("malcev5 twisted pre-Malcev regular bimodule", regular_bimodule(m5["twisted_premalcev"], "pre_malcev")),
        ("nil2_hom alternative bimodule", nil2["bimodule"]),
        ("octonion alternative bimodule", regular_bimodule(octonions(), "alternative")),
    ]
