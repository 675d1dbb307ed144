"""Representations and bimodules of Hom-algebras.

Action matrices act on column vectors: ``rho[i] @ a`` is ``rho(e_i)(a)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from .algebra import HomAlgebra, check_multiplicative
from .constructions import commutator_algebra, yau_twist
from .engine import CheckReport, Condition, Family, run_conditions
from .errors import DimensionError, PreconditionError, ProductError
from .matrix import Matrix, direct_sum, mat_inverse
from .scalars import as_scalar

__all__ = [
    "Representation",
    "Bimodule",
    "FLAVORS",
    "check_representation",
    "check_bimodule",
    "semidirect_product",
    "adjoint_rep",
    "regular_bimodule",
    "left_regular_rep",
    "induced_representations",
    "dual_representation",
    "coadjoint_rep",
    "coadjoint_semidirect",
    "twist_rep",
    "rep_conditions",
    "linear_combination",
]

FLAVORS = ("alternative", "pre_malcev")


def _as_matrix(m) -> Matrix:
    return m if isinstance(m, Matrix) else Matrix.from_rows(m)


def _check_actions(name: str, mats: Sequence[Matrix], n: int, dv: int) -> tuple:
    mats = tuple(_as_matrix(m) for m in mats)
    if len(mats) != n:
        raise DimensionError(f"{name} has {len(mats)} matrices, algebra has dimension {n}")
    for i, m in enumerate(mats):
        if m.shape != (dv, dv):
            raise DimensionError(f"{name}[{i}] must be {dv}x{dv}, got {m.shape}")
    return mats


def _actions_family(mats: Sequence[Matrix], dv: int) -> Family:
    return Family.from_scalars([m.data for m in mats]) if mats else Family.from_scalars([[[0] * dv] * dv])


def linear_combination(mats: Sequence[Matrix], coords: Sequence) -> Matrix:
    """``sum_i coords[i] * mats[i]`` (the action of a non-basis element)."""
    rows, cols = mats[0].shape
    out = Matrix.zeros(rows, cols)
    for c, m in zip(coords, mats):
        c = as_scalar(c)
        if c:
            out = out + m.scale(c)
    return out


@dataclass(frozen=True, eq=False)
class Representation:
    """``(V, rho, beta)`` over ``algebra``; ``rho[i]`` is the action of ``e_i``."""

    algebra: HomAlgebra
    dim_v: int
    rho: tuple
    beta: Optional[Matrix] = None

    def __post_init__(self):
        if not isinstance(self.dim_v, int) or self.dim_v < 1:
            raise DimensionError(f"dim_v must be a positive integer, got {self.dim_v!r}")
        object.__setattr__(self, "rho", _check_actions("rho", self.rho, self.algebra.dim, self.dim_v))
        beta = Matrix.identity(self.dim_v) if self.beta is None else _as_matrix(self.beta)
        if beta.shape != (self.dim_v, self.dim_v):
            raise DimensionError(f"beta must be {self.dim_v}x{self.dim_v}, got {beta.shape}")
        object.__setattr__(self, "beta", beta)

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.algebra, self.dim_v, self.rho, self.beta) == (
            other.algebra, other.dim_v, other.rho, other.beta)

    def __hash__(self):
        return hash((self.algebra, self.rho, self.beta))

    def action(self, coords: Sequence) -> Matrix:
        return linear_combination(self.rho, coords)

    @cached_property
    def rho_family(self) -> Family:
        return _actions_family(self.rho, self.dim_v)

    @cached_property
    def beta_family(self) -> Family:
        return Family.from_scalars(self.beta.data)


@dataclass(frozen=True, eq=False)
class Bimodule:
    """``(V, ell, r, beta)``; ``flavor`` selects the axiom set."""

    algebra: HomAlgebra
    dim_v: int
    ell: tuple
    r: tuple
    beta: Optional[Matrix] = None
    flavor: str = "pre_malcev"

    def __post_init__(self):
        if not isinstance(self.dim_v, int) or self.dim_v < 1:
            raise DimensionError(f"dim_v must be a positive integer, got {self.dim_v!r}")
        n = self.algebra.dim
        object.__setattr__(self, "ell", _check_actions("ell", self.ell, n, self.dim_v))
        object.__setattr__(self, "r", _check_actions("r", self.r, n, self.dim_v))
        beta = Matrix.identity(self.dim_v) if self.beta is None else _as_matrix(self.beta)
        if beta.shape != (self.dim_v, self.dim_v):
            raise DimensionError(f"beta must be {self.dim_v}x{self.dim_v}, got {beta.shape}")
        object.__setattr__(self, "beta", beta)
        flavor = self.flavor.replace("-", "_")
        if flavor not in FLAVORS:
            raise ValueError(f"unknown bimodule flavor {self.flavor!r}")
        object.__setattr__(self, "flavor", flavor)

    def __eq__(self, other):
        if not isinstance(other, Bimodule):
            return NotImplemented
        return (self.algebra, self.dim_v, self.ell, self.r, self.beta, self.flavor) == (
            other.algebra, other.dim_v, other.ell, other.r, other.beta, other.flavor)

    def __hash__(self):
        return hash((self.algebra, self.ell, self.r, self.beta, self.flavor))

    @property
    def rho(self) -> tuple:
        """``ell - r``, computed on demand."""
        return tuple(a - b for a, b in zip(self.ell, self.r))

    @cached_property
    def ell_family(self) -> Family:
        return _actions_family(self.ell, self.dim_v)

    @cached_property
    def r_family(self) -> Family:
        return _actions_family(self.r, self.dim_v)

    @cached_property
    def beta_family(self) -> Family:
        return Family.from_scalars(self.beta.data)


# ---------------------------------------------------------------------------
# axiom checkers


def _vars(letters, n):
    return [(v, n) for v in letters]


def rep_conditions(alg: HomAlgebra, rho: Family, beta: Family, label: str = "rep") -> list:
    """The two representation axioms as conditions over basis x, y, z."""
    if alg.is_pair:
        raise ProductError("representations need a single-product (bracket) algebra")
    n = alg.dim
    C, A = alg.table_family(), alg.alpha_family
    b = lambda u, v: u.mul(v, C)

    def a(u, k=1):
        for _ in range(k):
            u = u.lin(A)
        return u

    P = lambda u: u.act(rho)
    B = beta
    B2 = beta.mm(beta)

    def compat(v):
        x = v["x"]
        return P(a(x)).mm(B), B.mm(P(x))

    def malcev(v):
        x, y, z = v["x"], v["y"], v["z"]
        lhs = P(b(b(x, y), a(z))).mm(B2)
        rhs = (
            P(a(x, 2)).mm(P(a(y))).mm(P(z))
            - P(a(z, 2)).mm(P(a(x))).mm(P(y))
            + P(a(y, 2)).mm(P(b(z, x))).mm(B)
            - P(a(b(y, z))).mm(P(a(x))).mm(B)
        )
        return lhs, rhs

    return [
        Condition(f"{label}-compatibility", _vars("x", n), compat),
        Condition(f"{label}-malcev", _vars("xyz", n), malcev),
    ]


def check_representation(rep: Representation, jobs: Optional[int] = None) -> CheckReport:
    """``rho(alpha x) beta = beta rho(x)`` and the four-term Hom-Malcev axiom."""
    return run_conditions("Representation", rep_conditions(rep.algebra, rep.rho_family, rep.beta_family), jobs)


def _alternative_conditions(bm: Bimodule) -> list:
    alg = bm.algebra
    n = alg.dim
    C, A = alg.table_family(), alg.alpha_family
    m = lambda u, v: u.mul(v, C)
    a = lambda u: u.lin(A)
    l = lambda u: u.act(bm.ell_family)
    r = lambda u: u.act(bm.r_family)
    B = bm.beta_family

    # the x^2 axioms polarized in x (partner w)
    def alt1(v):
        x, w = v["x"], v["w"]
        return l(m(x, w) + m(w, x)).mm(B), l(a(x)).mm(l(w)) + l(a(w)).mm(l(x))

    def alt2(v):
        x, w = v["x"], v["w"]
        return r(m(x, w) + m(w, x)).mm(B), r(a(x)).mm(r(w)) + r(a(w)).mm(r(x))

    def alt3(v):
        x, y = v["x"], v["y"]
        return r(a(y)).mm(l(x)) - l(a(x)).mm(r(y)), r(m(x, y)).mm(B) - r(a(y)).mm(r(x))

    def alt4(v):
        x, y = v["x"], v["y"]
        return l(m(y, x)).mm(B) - l(a(y)).mm(l(x)), l(a(y)).mm(r(x)) - r(a(x)).mm(l(y))

    return [
        Condition("bimodule-alternative-1", _vars("xw", n), alt1),
        Condition("bimodule-alternative-2", _vars("xw", n), alt2),
        Condition("bimodule-alternative-3", _vars("xy", n), alt3),
        Condition("bimodule-alternative-4", _vars("xy", n), alt4),
    ]


def _pre_malcev_conditions(bm: Bimodule, flip_sign: bool = False) -> list:
    alg = bm.algebra
    n = alg.dim
    C, A = alg.table_family(), alg.alpha_family
    m = lambda u, v: u.mul(v, C)
    br = lambda u, v: m(u, v) - m(v, u)

    def a(u, k=1):
        for _ in range(k):
            u = u.lin(A)
        return u

    l = lambda u: u.act(bm.ell_family)
    r = lambda u: u.act(bm.r_family)
    p = lambda u: l(u) - r(u)
    B = bm.beta_family
    B2 = B.mm(B)

    def twist_l(v):
        x = v["x"]
        return B.mm(l(x)), l(a(x)).mm(B)

    def twist_r(v):
        x = v["x"]
        return B.mm(r(x)), r(a(x)).mm(B)

    def zero(e):
        return e, e.zero_like()

    # The ell(alpha[y,z]) term of the first r-axiom carries the sign forced
    # by expanding HPM on the semidirect product with the module argument
    # first; the opposite sign is available as ``flip_sign`` for comparison.
    sign = 1 if flip_sign else -1

    def r_first(v):
        x, y, z = v["x"], v["y"], v["z"]
        return zero(
            r(a(x, 2)).mm(p(a(y))).mm(p(z))
            - r(m(a(z), m(y, x))).mm(B2)
            + l(a(y, 2)).mm(r(m(z, x))).mm(B)
            + l(a(br(y, z))).mm(r(a(x))).mm(B).scaled(sign)
            - l(a(z, 2)).mm(r(a(x))).mm(p(y))
        )

    def r_second(v):
        x, y, z = v["x"], v["y"], v["z"]
        return zero(
            l(a(y, 2)).mm(l(a(z))).mm(r(x))
            - r(a(x, 2)).mm(p(a(y))).mm(p(z))
            - l(a(z, 2)).mm(r(m(y, x))).mm(B)
            - r(a(m(z, x))).mm(p(a(y))).mm(B)
            + r(m(br(z, y), a(x))).mm(B2)
        )

    def r_third(v):
        x, y, z = v["x"], v["y"], v["z"]
        return zero(
            r(m(a(y), m(z, x))).mm(B2)
            + r(a(x, 2)).mm(p(br(y, z))).mm(B)
            - l(a(y, 2)).mm(l(a(z))).mm(r(x))
            + r(a(m(y, x))).mm(p(a(z))).mm(B)
            + l(a(z, 2)).mm(r(a(x))).mm(p(y))
        )

    def ell_bracket(v):
        x, y, z = v["x"], v["y"], v["z"]
        return zero(
            l(br(br(x, y), a(z))).mm(B2)
            - l(a(x, 2)).mm(l(a(y))).mm(l(z))
            + l(a(z, 2)).mm(l(a(x))).mm(l(y))
            + l(a(br(y, z))).mm(l(a(x))).mm(B)
            + l(a(y, 2)).mm(l(br(x, z))).mm(B)
        )

    return [
        Condition("bimodule-ell-twist", _vars("x", n), twist_l),
        Condition("bimodule-r-twist", _vars("x", n), twist_r),
        Condition("bimodule-r-first", _vars("xyz", n), r_first),
        Condition("bimodule-r-second", _vars("xyz", n), r_second),
        Condition("bimodule-r-third", _vars("xyz", n), r_third),
        Condition("bimodule-ell-bracket", _vars("xyz", n), ell_bracket),
    ]


def check_bimodule(bm: Bimodule, jobs: Optional[int] = None, flip_sign: bool = False) -> CheckReport:
    """All bimodule axioms of ``bm.flavor`` on every basis tuple."""
    if bm.algebra.is_pair:
        raise ProductError("bimodules need a single-product algebra")
    if bm.flavor == "alternative":
        return run_conditions("AlternativeBimodule", _alternative_conditions(bm), jobs)
    return run_conditions("PreMalcevBimodule", _pre_malcev_conditions(bm, flip_sign), jobs)


# ---------------------------------------------------------------------------
# constructions


def _semidirect_table(base: HomAlgebra, left: Sequence[Matrix], right: Sequence[Matrix], dv: int) -> tuple:
    # (x + a)(y + b) = x y + left(x) b + right(y) a
    n = base.dim
    N = n + dv
    c = base.table()
    t = [[[as_scalar(0)] * N for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for j in range(n):
            t[i][j][:n] = list(c[i][j])
    for i in range(n):
        for bb in range(dv):
            for k in range(dv):
                t[i][n + bb][n + k] = left[i][k, bb]
    for j in range(n):
        for aa in range(dv):
            for k in range(dv):
                t[n + aa][j][n + k] = right[j][k, aa]
    return tuple(tuple(tuple(r) for r in p) for p in t)


def semidirect_product(base: HomAlgebra, rep_or_bm) -> HomAlgebra:
    """``A + V`` with twist ``alpha (+) beta``.

    For a representation the bracket is ``[x,y] + rho(x) b - rho(y) a``; for a
    bimodule the product is ``x.y + ell(x) b + r(y) a``.
    """
    if rep_or_bm.algebra != base:
        if rep_or_bm.algebra.dim != base.dim:
            raise DimensionError("module is over an algebra of a different dimension")
    if base.is_pair:
        raise ProductError("semidirect products need a single-product algebra")
    dv = rep_or_bm.dim_v
    if isinstance(rep_or_bm, Representation):
        neg = tuple(-m for m in rep_or_bm.rho)
        table = _semidirect_table(base, rep_or_bm.rho, neg, dv)
    elif isinstance(rep_or_bm, Bimodule):
        table = _semidirect_table(base, rep_or_bm.ell, rep_or_bm.r, dv)
    else:
        raise TypeError("expected a Representation or a Bimodule")
    return HomAlgebra(base.dim + dv, {"mul": table}, direct_sum(base.alpha, rep_or_bm.beta))


def _left_mult(alg: HomAlgebra) -> tuple:
    c = alg.table()
    n = alg.dim
    return tuple(Matrix(tuple(tuple(c[i][j][k] for j in range(n)) for k in range(n))) for i in range(n))


def _right_mult(alg: HomAlgebra) -> tuple:
    c = alg.table()
    n = alg.dim
    return tuple(Matrix(tuple(tuple(c[j][i][k] for j in range(n)) for k in range(n))) for i in range(n))


def adjoint_rep(alg: HomAlgebra) -> Representation:
    """``ad(e_i) y = [e_i, y]`` with ``beta = alpha``."""
    return Representation(alg, alg.dim, _left_mult(alg), alg.alpha)


def left_regular_rep(alg: HomAlgebra) -> Representation:
    """``(A, L, alpha)`` of a single-product algebra, as a rep of its commutator algebra."""
    return Representation(commutator_algebra(alg), alg.dim, _left_mult(alg), alg.alpha)


def regular_bimodule(alg: HomAlgebra, flavor: str = "pre_malcev") -> Bimodule:
    """``(A, L, R, alpha)`` with left and right multiplications."""
    return Bimodule(alg, alg.dim, _left_mult(alg), _right_mult(alg), alg.alpha, flavor)


def induced_representations(bm: Bimodule) -> tuple:
    """``(V, ell, beta)`` and ``(V, ell - r, beta)`` over the commutator algebra."""
    sub = commutator_algebra(bm.algebra)
    return (Representation(sub, bm.dim_v, bm.ell, bm.beta),
            Representation(sub, bm.dim_v, bm.rho, bm.beta))


def dual_representation(rep: Representation, jobs: Optional[int] = None) -> Representation:
    """``rho*(x) = -(beta^-2 rho(alpha x))^T`` on ``V*`` with twist ``(beta^-1)^T``."""
    beta_inv = mat_inverse(rep.beta)
    alg = rep.algebra
    report = check_multiplicative(alg, jobs)
    if not report.passed:
        raise PreconditionError("dual representation needs a multiplicative algebra", report)
    report = check_representation(rep, jobs)
    if not report.passed:
        raise PreconditionError("input is not a representation", report)
    b2 = beta_inv @ beta_inv
    mats = []
    for i in range(alg.dim):
        act = rep.action(alg.alpha.column(i))
        mats.append(-(b2 @ act).T)
    return Representation(alg, rep.dim_v, tuple(mats), beta_inv.T)


def coadjoint_rep(alg: HomAlgebra, jobs: Optional[int] = None) -> Representation:
    """The dual of the adjoint representation."""
    return dual_representation(adjoint_rep(alg), jobs)


def coadjoint_semidirect(alg: HomAlgebra, jobs: Optional[int] = None) -> HomAlgebra:
    """The semidirect algebra on ``A + A*`` built from the coadjoint representation."""
    return semidirect_product(alg, coadjoint_rep(alg, jobs))


def _alpha_power(alg: HomAlgebra, mats: Sequence[Matrix]) -> tuple:
    a2 = alg.alpha @ alg.alpha
    return tuple(linear_combination(mats, a2.column(i)) for i in range(alg.dim))


def twist_rep(rep, mode: str = "alpha_power", gamma: Optional[Matrix] = None,
              beta: Optional[Matrix] = None, jobs: Optional[int] = None):
    """Twisted representations.

    ``alpha_power``: ``rho(alpha^2 x)`` over the same algebra (bimodules twist
    both ``ell`` and ``r``).  ``yau``: ``rho(gamma x) beta`` over
    ``yau_twist(algebra, gamma)``; requires ``beta rho(x) = rho(gamma x) beta``.
    """
    mode = mode.replace("-", "_")
    alg = rep.algebra
    if mode == "alpha_power":
        if isinstance(rep, Bimodule):
            return Bimodule(alg, rep.dim_v, _alpha_power(alg, rep.ell), _alpha_power(alg, rep.r),
                            rep.beta, rep.flavor)
        return Representation(alg, rep.dim_v, _alpha_power(alg, rep.rho), rep.beta)
    if mode != "yau":
        raise ValueError(f"unknown twist mode {mode!r}")
    if not isinstance(rep, Representation):
        raise TypeError("yau mode twists representations")
    if gamma is None:
        raise ValueError("yau mode needs the twisting morphism gamma")
    gamma = _as_matrix(gamma)
    beta = rep.beta if beta is None else _as_matrix(beta)
    if beta.shape != (rep.dim_v, rep.dim_v):
        raise DimensionError(f"beta must be {rep.dim_v}x{rep.dim_v}")
    n = alg.dim
    G = Family.from_scalars(gamma.data)
    Bf = Family.from_scalars(beta.data)
    compat = Condition("twist-compatibility", [("x", n)],
                       lambda v: (Bf.mm(v["x"].act(rep.rho_family)), v["x"].lin(G).act(rep.rho_family).mm(Bf)))
    report = run_conditions("TwistCompatibility", [compat], jobs)
    if not report.passed:
        raise PreconditionError("beta rho(x) != rho(gamma x) beta", report)
    twisted = yau_twist(alg, gamma, jobs)
    mats = tuple(rep.action(gamma.column(i)) @ beta for i in range(n))
    return Representation(twisted, rep.dim_v, mats, beta)
