"""Kupershmidt, Rota-Baxter and Nijenhuis operators.

A Kupershmidt operator ``T: V -> A`` is stored as a ``dim A x dim V`` matrix
whose column ``a`` is ``T(e_a)``.  Its context is a :class:`Representation`
(Malcev flavor) or a :class:`Bimodule` (pre-Malcev or alternative flavor).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import HomAlgebra, multiply
from .constructions import commutator_algebra, prealt_sum
from .engine import CheckReport, Condition, Family, Witness, run_conditions
from .errors import DimensionError, PreconditionError, ProductError, SingularMatrixError
from .matrix import Matrix, direct_sum, in_column_span, mat_inverse, rank
from .representations import (
    Bimodule,
    Representation,
    adjoint_rep,
    linear_combination,
    regular_bimodule,
    semidirect_product,
)
from .scalars import as_scalar

__all__ = [
    "LinearOperator",
    "OPERATOR_FLAVORS",
    "resolve_context",
    "kupershmidt_conditions",
    "check_kupershmidt",
    "check_rota_baxter",
    "kupershmidt_split",
    "graph_is_subalgebra",
    "check_nijenhuis",
    "nijenhuis_from_kupershmidt",
    "compatible_from_invertible",
    "symplectic_to_premalcev",
]

OPERATOR_FLAVORS = ("malcev", "pre_malcev", "alternative")
SOURCES = ("module", "algebra")


@dataclass(frozen=True)
class LinearOperator:
    """A linear map given by its matrix.

    ``source`` says whether it reads a module (``V -> A``) or the algebra
    itself (``A -> A``); ``context`` optionally pins the representation,
    bimodule or algebra it is meant for.  An algebra context stands for its
    adjoint representation, or its regular bimodule when labelled alternative.
    """

    matrix: Matrix
    source: str = "module"
    context: object = None

    def __post_init__(self):
        m = self.matrix if isinstance(self.matrix, Matrix) else Matrix.from_rows(self.matrix)
        object.__setattr__(self, "matrix", m)
        if self.source not in SOURCES:
            raise ValueError(f"operator source must be one of {SOURCES}, got {self.source!r}")

    @property
    def shape(self) -> tuple:
        return self.matrix.shape

    @property
    def family(self) -> Family:
        return Family.from_scalars(self.matrix.data)

    def __call__(self, v: Sequence) -> tuple:
        return tuple(as_scalar(c) for c in self.matrix.apply(tuple(v)))


def _as_operator(T) -> LinearOperator:
    return T if isinstance(T, LinearOperator) else LinearOperator(T)


def resolve_context(T: LinearOperator, context=None):
    """The explicit context, else the operator's own; algebras resolve as in ``rota_baxter_context``."""
    context = T.context if context is None else context
    if context is None:
        raise ValueError("operator has no context; pass a representation, bimodule or algebra")
    if isinstance(context, HomAlgebra):
        return rota_baxter_context(context, "alternative" if context.kind == "alternative" else "malcev")
    return context


def _flavor_of(context) -> str:
    if isinstance(context, Representation):
        return "malcev"
    if isinstance(context, Bimodule):
        return context.flavor
    raise TypeError("context must be a Representation or a Bimodule")


def _check_shape(T: LinearOperator, context):
    want = (context.algebra.dim, context.dim_v)
    if T.shape != want:
        raise DimensionError(f"operator must be {want[0]}x{want[1]} (V -> A), got {T.shape[0]}x{T.shape[1]}")


def _vars(letters: str, n: int):
    return [(v, n) for v in letters]


def _twist_condition(alg: HomAlgebra, beta: Family, Tf: Family, dv: int, label: str) -> Condition:
    A = alg.alpha_family
    return Condition(f"{label}-twist", _vars("a", dv),
                     lambda v: (v["a"].lin(Tf).lin(A), v["a"].lin(beta).lin(Tf)))


def _malcev_conditions(alg: HomAlgebra, rho: Family, beta: Family, Tf: Family, dv: int,
                       label: str = "kupershmidt") -> list:
    # [T a, T b] = T(rho(T a) b - rho(T b) a)
    C = alg.table_family()
    P = lambda u: u.act(rho)

    def bracket(v):
        ta, tb = v["a"].lin(Tf), v["b"].lin(Tf)
        return ta.mul(tb, C), (P(ta).mm(v["b"]) - P(tb).mm(v["a"])).lin(Tf)

    return [_twist_condition(alg, beta, Tf, dv, label),
            Condition(f"{label}-bracket", _vars("ab", dv), bracket)]


def _bimodule_conditions(bm: Bimodule, Tf: Family, label: str) -> list:
    # T a * T b = T(l(T a) b + r(T b) a)
    alg = bm.algebra
    C = alg.table_family()
    L, R = bm.ell_family, bm.r_family

    def product(v):
        ta, tb = v["a"].lin(Tf), v["b"].lin(Tf)
        return ta.mul(tb, C), (ta.act(L).mm(v["b"]) + tb.act(R).mm(v["a"])).lin(Tf)

    return [_twist_condition(alg, bm.beta_family, Tf, bm.dim_v, label),
            Condition(f"{label}-product", _vars("ab", bm.dim_v), product)]


def kupershmidt_conditions(T, context=None, flavor: Optional[str] = None) -> list:
    """Ordered conditions characterizing ``T`` as a Kupershmidt operator on ``context``."""
    T = _as_operator(T)
    context = resolve_context(T, context)
    _check_shape(T, context)
    native = _flavor_of(context)
    flavor = native if flavor is None else flavor.replace("-", "_")
    if flavor != native:
        raise ValueError(f"{flavor} flavor needs a {'representation' if flavor == 'malcev' else flavor + ' bimodule'}"
                         f"; got a {native} context")
    if context.algebra.is_pair:
        raise ProductError("Kupershmidt operators need a single-product algebra")
    Tf = T.family
    if flavor == "malcev":
        return _malcev_conditions(context.algebra, context.rho_family, context.beta_family, Tf, context.dim_v)
    conds = _bimodule_conditions(context, Tf, "kupershmidt")
    if flavor == "pre_malcev":
        # T is then also Kupershmidt for the sub-adjacent algebra acting by ell - r
        sub = commutator_algebra(context.algebra)
        rho = context.ell_family - context.r_family
        conds += _malcev_conditions(sub, rho, context.beta_family, Tf, context.dim_v, "sub-adjacent")[1:]
    return conds


def check_kupershmidt(T, context=None, flavor: Optional[str] = None, jobs: Optional[int] = None) -> CheckReport:
    """``alpha T = T beta`` plus the Kupershmidt identity of the context's flavor.

    A representation gives the Malcev flavor; a pre-Malcev bimodule is also
    cross-checked against the sub-adjacent algebra with ``rho = ell - r``.
    """
    return run_conditions("Kupershmidt", kupershmidt_conditions(T, context, flavor), jobs)


def rota_baxter_context(alg: HomAlgebra, flavor: str = "malcev"):
    flavor = flavor.replace("-", "_")
    if flavor == "malcev":
        return adjoint_rep(alg)
    if flavor == "alternative":
        return regular_bimodule(alg, "alternative")
    raise ValueError(f"Rota-Baxter operators come in malcev or alternative flavor, not {flavor!r}")


def check_rota_baxter(R, alg: Optional[HomAlgebra] = None, flavor: Optional[str] = None,
                      jobs: Optional[int] = None) -> CheckReport:
    """Weight-0 Rota-Baxter: Kupershmidt for the adjoint (or regular) context, with ``R alpha = alpha R``."""
    R = _as_operator(R)
    alg = R.context if alg is None else alg
    if not isinstance(alg, HomAlgebra):
        raise TypeError("Rota-Baxter operators are checked against an algebra")
    if alg.is_pair:
        raise ProductError("Rota-Baxter operators need a single-product algebra")
    if flavor is None:
        flavor = "alternative" if alg.kind == "alternative" else "malcev"
    return check_kupershmidt(R, rota_baxter_context(alg, flavor), jobs=jobs).renamed("RotaBaxter")


def _require(report: CheckReport, message: str):
    if not report.passed:
        raise PreconditionError(message, report)


def _vector_table(dv: int, value) -> tuple:
    return tuple(tuple(tuple(as_scalar(c) for c in value(i, j)) for j in range(dv)) for i in range(dv))


def kupershmidt_split(T, context=None, jobs: Optional[int] = None) -> HomAlgebra:
    """The algebra induced on ``V`` by a Kupershmidt operator.

    Representation: ``a . b = rho(T a) b`` (Hom-pre-Malcev).  Alternative
    bimodule: ``a > b = l(T a) b`` and ``a < b = r(T b) a`` (Hom-pre-alternative).
    ``T`` is verified to be a homomorphism from the induced sub-adjacent
    algebra to the context algebra.
    """
    T = _as_operator(T)
    context = resolve_context(T, context)
    flavor = _flavor_of(context)
    if flavor == "pre_malcev":
        raise ValueError("splitting is defined for Malcev representations and alternative bimodules")
    _require(check_kupershmidt(T, context, jobs=jobs), "operator is not Kupershmidt")
    dv, m = context.dim_v, T.matrix
    act = lambda mats, i: linear_combination(mats, m.column(i))
    if flavor == "malcev":
        rho = [act(context.rho, i) for i in range(dv)]
        out = HomAlgebra(dv, {"mul": _vector_table(dv, lambda i, j: rho[i].column(j))}, context.beta, "pre_malcev")
        induced = commutator_algebra(out)
    else:
        ell = [act(context.ell, i) for i in range(dv)]
        r = [act(context.r, j) for j in range(dv)]
        out = HomAlgebra(dv, {"left": _vector_table(dv, lambda i, j: r[j].column(i)),
                              "right": _vector_table(dv, lambda i, j: ell[i].column(j))},
                         context.beta, "pre_alternative")
        induced = prealt_sum(out)
    _require(_homomorphism_report(T, induced, context.algebra, jobs), "operator is not a homomorphism of the induced algebra")
    return out


def _homomorphism_report(T: LinearOperator, src: HomAlgebra, dst: HomAlgebra, jobs) -> CheckReport:
    Tf = T.family
    C_src, C_dst = src.table_family(), dst.table_family()
    cond = Condition("split-homomorphism", _vars("ab", src.dim),
                     lambda v: (v["a"].mul(v["b"], C_src).lin(Tf), v["a"].lin(Tf).mul(v["b"].lin(Tf), C_dst)))
    return run_conditions("SplitHomomorphism", [cond], jobs)


def graph_is_subalgebra(T, rep: Optional[Representation] = None, jobs: Optional[int] = None) -> CheckReport:
    """Closure of ``Gr(T) = {(T a, a)}`` in the semidirect product, by exact rank tests.

    The twist ``alpha + beta`` is checked first, then the bracket on every
    ordered pair of graph basis vectors.  A witness shows the offending
    vector next to the graph point with the same ``V`` coordinates.
    """
    T = _as_operator(T)
    rep = resolve_context(T, rep)
    if not isinstance(rep, Representation):
        raise TypeError("graph test needs a Representation")
    _check_shape(T, rep)
    n, dv = rep.algebra.dim, rep.dim_v
    S = semidirect_product(rep.algebra, rep)
    gens = [tuple(T.matrix.column(a)) + tuple(as_scalar(int(k == a)) for k in range(dv)) for a in range(dv)]
    G = Matrix.from_columns(gens)
    twist = direct_sum(rep.algebra.alpha, rep.beta)

    def graph_point(v):
        return tuple(as_scalar(c) for c in G.apply(v[n:]))

    checked = 0
    for a in range(dv):
        checked += 1
        v = tuple(as_scalar(c) for c in twist.apply(gens[a]))
        if not in_column_span(G, v):
            return CheckReport("GraphSubalgebra", "fail", Witness((a,), v, graph_point(v)), checked, "graph-twist")
    for a in range(dv):
        for b in range(dv):
            checked += 1
            v = multiply(S, None, gens[a], gens[b])
            if not in_column_span(G, v):
                return CheckReport("GraphSubalgebra", "fail", Witness((a, b), v, graph_point(v)), checked,
                                   "graph-bracket")
    return CheckReport("GraphSubalgebra", "pass", None, checked)


def check_nijenhuis(N, alg: Optional[HomAlgebra] = None, flavor: str = "malcev", jobs: Optional[int] = None) -> CheckReport:
    """``N alpha = alpha N`` and the Nijenhuis identity.

    malcev: ``[Nx, Ny] = N([Nx, y] - [Ny, x] - N[x, y])``;
    pre_malcev: ``Nx . Ny = N(Nx . y + x . Ny - N(x . y))``.
    """
    N = _as_operator(N)
    alg = N.context if alg is None else alg
    if not isinstance(alg, HomAlgebra):
        raise TypeError("Nijenhuis operators are checked against an algebra")
    if alg.is_pair:
        raise ProductError("Nijenhuis operators need a single-product algebra")
    if N.shape != (alg.dim, alg.dim):
        raise DimensionError(f"Nijenhuis operator must be {alg.dim}x{alg.dim}, got {N.shape}")
    flavor = flavor.replace("-", "_")
    if flavor not in ("malcev", "pre_malcev"):
        raise ValueError(f"Nijenhuis flavor must be malcev or pre_malcev, got {flavor!r}")
    n = alg.dim
    Nf, A, C = N.family, alg.alpha_family, alg.table_family()
    m = lambda u, v: u.mul(v, C)

    def identity(v):
        x, y = v["x"], v["y"]
        nx, ny = x.lin(Nf), y.lin(Nf)
        if flavor == "malcev":
            inner = m(nx, y) - m(ny, x) - m(x, y).lin(Nf)
        else:
            inner = m(nx, y) + m(x, ny) - m(x, y).lin(Nf)
        return m(nx, ny), inner.lin(Nf)

    conds = [Condition("nijenhuis-twist", _vars("x", n), lambda v: (v["x"].lin(A).lin(Nf), v["x"].lin(Nf).lin(A))),
             Condition(f"nijenhuis-{flavor.replace('_', '-')}", _vars("xy", n), identity)]
    return run_conditions("Nijenhuis", conds, jobs)


def nijenhuis_from_kupershmidt(T, rep: Optional[Representation] = None) -> LinearOperator:
    """The block operator ``[[0, T], [0, 0]]`` on ``A + V``, attached to the semidirect product."""
    T = _as_operator(T)
    rep = resolve_context(T, rep)
    _check_shape(T, rep)
    n, dv = rep.algebra.dim, rep.dim_v
    rows = [[as_scalar(0)] * (n + dv) for _ in range(n + dv)]
    for i in range(n):
        for a in range(dv):
            rows[i][n + a] = T.matrix[i, a]
    return LinearOperator(Matrix.from_rows(rows), "algebra", semidirect_product(rep.algebra, rep))


def compatible_from_invertible(T, rep: Optional[Representation] = None, jobs: Optional[int] = None) -> HomAlgebra:
    """``x . y = T(rho(x) T^-1 y)`` on ``A`` for an invertible Kupershmidt operator."""
    T = _as_operator(T)
    rep = resolve_context(T, rep)
    if not isinstance(rep, Representation):
        raise TypeError("compatible structures come from a Representation")
    _check_shape(T, rep)
    if not T.matrix.is_square:
        raise SingularMatrixError("a non-square operator is not invertible")
    inv = mat_inverse(T.matrix)
    _require(check_kupershmidt(T, rep, jobs=jobs), "operator is not Kupershmidt")
    n = rep.algebra.dim
    mats = [T.matrix @ rep.rho[i] @ inv for i in range(n)]
    table = _vector_table(n, lambda i, j: mats[i].column(j))
    return HomAlgebra(n, {"mul": table}, rep.algebra.alpha, "pre_malcev")


def _form(W: Family):
    Wt = Family(W.vars, W.data.swapaxes(-1, -2), W.den)
    return lambda u, v: u.lin(Wt).contract("P", v, "P", "")


def symplectic_conditions(omega: Matrix, alg: HomAlgebra) -> list:
    n = alg.dim
    w = _form(Family.from_scalars(omega.data))
    A, C = alg.alpha_family, alg.table_family()
    b = lambda u, v: u.mul(v, C)

    def cocycle(v):
        x, y, z = v["x"], v["y"], v["z"]
        s = w(b(x, y), z.lin(A)) + w(b(y, z), x.lin(A)) + w(b(z, x), y.lin(A))
        return s, s.zero_like()

    return [
        Condition("form-antisymmetric", _vars("xy", n), lambda v: (w(v["x"], v["y"]), -w(v["y"], v["x"]))),
        Condition("form-alpha-invariant", _vars("xy", n),
                  lambda v: (w(v["x"].lin(A), v["y"].lin(A)), w(v["x"], v["y"]))),
        Condition("form-cocycle", _vars("xyz", n), cocycle),
    ]


def symplectic_to_premalcev(omega, alg: HomAlgebra, jobs: Optional[int] = None) -> HomAlgebra:
    """The product defined by ``omega(x . y, alpha z) = omega(alpha y, [z, x])`` for all ``z``."""
    omega = omega if isinstance(omega, Matrix) else Matrix.from_rows(omega)
    if alg.is_pair:
        raise ProductError("symplectic structures live on single-product algebras")
    n = alg.dim
    if omega.shape != (n, n):
        raise DimensionError(f"form must be {n}x{n}, got {omega.shape}")
    if not (omega.is_rational and alg.is_rational):
        raise TypeError("symplectic construction needs rational scalars")
    if rank(omega) < n:
        raise SingularMatrixError("the form is degenerate")
    mat_inverse(alg.alpha)  # the twist must be invertible
    _require(run_conditions("Symplectic", symplectic_conditions(omega, alg), jobs), "not a symplectic structure")
    # row k of M reads omega(u, alpha e_k)
    M = (omega @ alg.alpha).T
    M_inv = mat_inverse(M)
    alpha = alg.alpha

    def product(i, j):
        ay = alpha.column(j)
        rhs = []
        for k in range(n):
            zx = multiply(alg, None, tuple(as_scalar(int(t == k)) for t in range(n)),
                          tuple(as_scalar(int(t == i)) for t in range(n)))
            rhs.append(sum((ay[p] * omega[p, q] * zx[q] for p in range(n) for q in range(n)), as_scalar(0)))
        return M_inv.apply(tuple(rhs))

    return HomAlgebra(n, {"mul": _vector_table(n, product)}, alpha, "pre_malcev")
