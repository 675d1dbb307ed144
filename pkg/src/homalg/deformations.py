"""Linear deformations ``T + t*T1`` of Kupershmidt operators and Nijenhuis elements.

Polynomial scalars in the formal parameter ``t`` (see :data:`homalg.scalars.T`)
let every statement "for all t" be checked once, exactly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import HomAlgebra, apply_map, multiply
from .constructions import commutator_algebra
from .engine import CheckReport, Condition, Family, run_conditions
from .errors import DimensionError, HomAlgError, PreconditionError
from .matrix import Matrix
from .operators import LinearOperator, check_kupershmidt, kupershmidt_split, resolve_context
from .representations import Representation, adjoint_rep
from .scalars import T as t_poly
from .scalars import as_scalar

__all__ = [
    "Deformation",
    "KupershmidtMorphism",
    "NijenhuisElement",
    "check_deformation",
    "deformation_conditions",
    "check_kupershmidt_morphism",
    "equivalence_morphism",
    "induced_deformation_products",
    "is_nijenhuis_element",
    "trivial_deformation",
    "find_nijenhuis_elements",
]

METHODS = ("coefficients", "polynomial", "both")


def _as_operator(T) -> LinearOperator:
    return T if isinstance(T, LinearOperator) else LinearOperator(T)


def _rep(T: LinearOperator, rep) -> Representation:
    rep = resolve_context(T, rep)
    if not isinstance(rep, Representation):
        raise TypeError("deformations are defined for operators on a representation")
    return rep


def _require(report: CheckReport, message: str):
    if not report.passed:
        raise PreconditionError(message, report)


def _vars(letters: str, n: int):
    return [(v, n) for v in letters]


@dataclass(frozen=True)
class Deformation:
    """``T_t = T + t * T1`` over ``context``."""

    T: LinearOperator
    T1: LinearOperator
    context: Representation

    def __post_init__(self):
        object.__setattr__(self, "T", _as_operator(self.T))
        object.__setattr__(self, "T1", _as_operator(self.T1))
        want = (self.context.algebra.dim, self.context.dim_v)
        for name in ("T", "T1"):
            if getattr(self, name).shape != want:
                raise DimensionError(f"{name} must be {want[0]}x{want[1]}, got {getattr(self, name).shape}")

    @property
    def operator(self) -> LinearOperator:
        """``T + t * T1`` with polynomial entries."""
        return LinearOperator(self.T.matrix + self.T1.matrix.scale(t_poly), self.T.source, self.context)


@dataclass(frozen=True)
class KupershmidtMorphism:
    """``(phi_A, phi_V)``, a candidate morphism between Kupershmidt operators."""

    phi_A: Matrix
    phi_V: Matrix

    def __post_init__(self):
        for name in ("phi_A", "phi_V"):
            m = getattr(self, name)
            m = m if isinstance(m, Matrix) else Matrix.from_rows(m)
            if not m.is_square:
                raise DimensionError(f"{name} must be square, got {m.shape}")
            object.__setattr__(self, name, m)


@dataclass(frozen=True)
class NijenhuisElement:
    """An element ``x`` with ``alpha(x) = x``; the remaining conditions are checked separately."""

    x: tuple
    algebra: HomAlgebra

    def __post_init__(self):
        x = tuple(as_scalar(c) for c in self.x)
        if len(x) != self.algebra.dim:
            raise DimensionError(f"element has {len(x)} coordinates, algebra has dimension {self.algebra.dim}")
        if apply_map(self.algebra.alpha, x) != x:
            raise ValueError("a Nijenhuis element must be fixed by alpha")
        object.__setattr__(self, "x", x)


# ---------------------------------------------------------------------------
# deformations


def deformation_conditions(d: Deformation) -> list:
    """The t^1 and t^2 coefficients of the Kupershmidt conditions for ``T + t T1``."""
    rep = d.context
    alg, dv = rep.algebra, rep.dim_v
    C, A, B, P = alg.table_family(), alg.alpha_family, rep.beta_family, rep.rho_family
    T, T1 = d.T.family, d.T1.family
    br = lambda u, v: u.mul(v, C)
    act = lambda u, w: u.act(P).mm(w)

    def mixed(v):
        a, b = v["a"], v["b"]
        ta, tb, ua, ub = a.lin(T), b.lin(T), a.lin(T1), b.lin(T1)
        lhs = br(ta, ub) + br(ua, tb)
        rhs = (act(ua, b) - act(ub, a)).lin(T) + (act(ta, b) - act(tb, a)).lin(T1)
        return lhs, rhs

    def generator(v):
        a, b = v["a"], v["b"]
        ua, ub = a.lin(T1), b.lin(T1)
        return br(ua, ub), (act(ua, b) - act(ub, a)).lin(T1)

    return [
        Condition("deform-twist", _vars("a", dv), lambda v: (v["a"].lin(B).lin(T1), v["a"].lin(T1).lin(A))),
        Condition("deform-mixed", _vars("ab", dv), mixed),
        Condition("deform-generator", _vars("ab", dv), generator),
    ]


def check_deformation(d: Deformation, jobs: Optional[int] = None, method: str = "both") -> CheckReport:
    """Decide whether ``T + t T1`` is Kupershmidt for every ``t``.

    ``coefficients`` checks the t^1 and t^2 equations over the rationals;
    ``polynomial`` runs the Kupershmidt check on ``T + t T1`` over Q[t].
    ``both`` runs the two and insists they agree.
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    _require(check_kupershmidt(d.T, d.context, jobs=jobs), "T is not a Kupershmidt operator")
    reports = {}
    if method in ("coefficients", "both"):
        reports["coefficients"] = run_conditions("Deformation", deformation_conditions(d), jobs)
    if method in ("polynomial", "both"):
        reports["polynomial"] = check_kupershmidt(d.operator, d.context, jobs=jobs).renamed("Deformation")
    if method == "both":
        a, b = reports["coefficients"], reports["polynomial"]
        if a.passed != b.passed:
            raise HomAlgError(f"coefficient-wise ({a.status}) and polynomial ({b.status}) deformation checks disagree")
        return a
    return reports[method]


def induced_deformation_products(d: Deformation, jobs: Optional[int] = None) -> tuple:
    """``(V, . + t psi, beta)`` and its sub-adjacent algebra, over Q[t]."""
    _require(check_deformation(d, jobs, "coefficients"), "T1 does not generate a deformation")
    pre = kupershmidt_split(d.operator, d.context, jobs)
    return pre, commutator_algebra(pre)


# ---------------------------------------------------------------------------
# morphisms


def check_kupershmidt_morphism(m: KupershmidtMorphism, T_from, T_to, rep=None,
                               jobs: Optional[int] = None) -> CheckReport:
    """``(phi_A, phi_V)`` from ``T_from`` to ``T_to``.

    Checks that ``phi_A`` is a Hom-Malcev homomorphism, ``T_to phi_V = phi_A T_from``,
    ``phi_V beta = beta phi_V``, ``phi_V rho(x) = rho(phi_A x) phi_V``, and that
    ``phi_V`` is then a homomorphism of the induced pre-Malcev products.
    """
    T_from, T_to = _as_operator(T_from), _as_operator(T_to)
    rep = _rep(T_to, rep)
    alg, n, dv = rep.algebra, rep.algebra.dim, rep.dim_v
    if m.phi_A.shape != (n, n) or m.phi_V.shape != (dv, dv):
        raise DimensionError(f"morphism must be ({n}x{n}, {dv}x{dv})")
    for op in (T_from, T_to):
        if op.shape != (n, dv):
            raise DimensionError(f"operators must be {n}x{dv}")
    C, A, B, P = alg.table_family(), alg.alpha_family, rep.beta_family, rep.rho_family
    fA, fV = Family.from_scalars(m.phi_A.data), Family.from_scalars(m.phi_V.data)
    Tf, Tt = T_from.family, T_to.family
    br = lambda u, v: u.mul(v, C)
    conds = [
        Condition("morphism-bracket", _vars("xy", n),
                  lambda v: (br(v["x"], v["y"]).lin(fA), br(v["x"].lin(fA), v["y"].lin(fA)))),
        Condition("morphism-alpha", _vars("x", n), lambda v: (v["x"].lin(A).lin(fA), v["x"].lin(fA).lin(A))),
        Condition("morphism-operator", _vars("a", dv), lambda v: (v["a"].lin(fV).lin(Tt), v["a"].lin(Tf).lin(fA))),
        Condition("morphism-beta", _vars("a", dv), lambda v: (v["a"].lin(B).lin(fV), v["a"].lin(fV).lin(B))),
        Condition("morphism-action", [("x", n), ("a", dv)],
                  lambda v: (v["x"].act(P).mm(v["a"]).lin(fV), v["x"].lin(fA).act(P).mm(v["a"].lin(fV)))),
        Condition("morphism-pre-malcev", _vars("ab", dv),
                  lambda v: (v["a"].lin(Tf).act(P).mm(v["b"]).lin(fV),
                             v["a"].lin(fV).lin(Tt).act(P).mm(v["b"].lin(fV)))),
    ]
    return run_conditions("KupershmidtMorphism", conds, jobs)


def equivalence_morphism(x: Sequence, rep: Representation) -> KupershmidtMorphism:
    """``(Id + t ad_x, Id + t rho(x))`` over Q[t]."""
    x = tuple(as_scalar(c) for c in x)
    n, dv = rep.algebra.dim, rep.dim_v
    ad = adjoint_rep(rep.algebra).action(x)
    return KupershmidtMorphism(Matrix.identity(n) + ad.scale(t_poly),
                               Matrix.identity(dv) + rep.action(x).scale(t_poly))


# ---------------------------------------------------------------------------
# Nijenhuis elements


def _coords(x) -> tuple:
    return x.x if isinstance(x, NijenhuisElement) else tuple(as_scalar(c) for c in x)


def nijenhuis_conditions(x, T: LinearOperator, rep: Representation) -> list:
    alg, n, dv = rep.algebra, rep.algebra.dim, rep.dim_v
    if len(x) != n:
        raise DimensionError(f"element has {len(x)} coordinates, algebra has dimension {n}")
    C, A, P, Tf = alg.table_family(), alg.alpha_family, rep.rho_family, T.family
    X = Family.from_scalars(list(x))
    br = lambda u, v: u.mul(v, C)

    def nij3(v):
        a = v["a"]
        inner = br(a.lin(Tf), X) + X.act(P).mm(a).lin(Tf)
        e = br(X, inner)
        return e, e.zero_like()

    def nij1(v):
        e = br(br(X, v["y"]), br(X, v["z"]))
        return e, e.zero_like()

    def nij2(v):
        e = br(X, v["y"]).act(P).mm(X.act(P))
        return e, e.zero_like()

    return [
        Condition("nij-fixed", [], lambda v: (X.lin(A), X)),
        Condition("nij-bracket", _vars("yz", n), nij1),
        Condition("nij-action", _vars("y", n), nij2),
        Condition("nij-operator", _vars("a", dv), nij3),
    ]


def is_nijenhuis_element(x, T, rep=None, jobs: Optional[int] = None) -> CheckReport:
    """``alpha(x) = x``, ``[[x,y],[x,z]] = 0``, ``rho([x,y]) rho(x) = 0`` and ``[x, [T a, x] + T rho(x) a] = 0``."""
    T = _as_operator(T)
    rep = _rep(T, rep)
    _require(check_kupershmidt(T, rep, jobs=jobs), "T is not a Kupershmidt operator")
    return run_conditions("NijenhuisElement", nijenhuis_conditions(_coords(x), T, rep), jobs)


def trivial_deformation(x, T, rep=None, jobs: Optional[int] = None) -> Deformation:
    """The deformation generated by ``T1(a) = T rho(x) a + [T a, x]``."""
    T = _as_operator(T)
    rep = _rep(T, rep)
    coords = _coords(x)
    _require(is_nijenhuis_element(coords, T, rep, jobs), "x is not a Nijenhuis element")
    alg = rep.algebra
    rho_x = rep.action(coords)
    cols = []
    for a in range(rep.dim_v):
        ta = T.matrix.column(a)
        first = T.matrix.apply(rho_x.column(a))
        second = multiply(alg, None, ta, coords)
        cols.append([as_scalar(u + w) for u, w in zip(first, second)])
    gen = LinearOperator(Matrix.from_columns(cols), T.source, rep)
    return Deformation(T, gen, rep)


def _canonical(v: tuple) -> tuple:
    g = math.gcd(*v)
    if g == 0:
        return v
    lead = next(c for c in v if c)
    g = g if lead > 0 else -g
    return tuple(c // g for c in v)


def find_nijenhuis_elements(T, rep=None, coeff_bound: int = 1, jobs: Optional[int] = None) -> list:
    """All Nijenhuis elements with integer coordinates in ``[-coeff_bound, coeff_bound]``.

    Vectors are reduced to primitive form with a positive leading coordinate,
    so each line through the origin appears once; the zero element is always
    first.  The order is by coordinate weight, then lexicographic.
    """
    if not isinstance(coeff_bound, int) or coeff_bound < 0:
        raise ValueError(f"coeff_bound must be a non-negative integer, got {coeff_bound!r}")
    T = _as_operator(T)
    rep = _rep(T, rep)
    _require(check_kupershmidt(T, rep, jobs=jobs), "T is not a Kupershmidt operator")
    alg = rep.algebra
    seen = {tuple([0] * alg.dim)}
    found = [tuple(Fraction(0) for _ in range(alg.dim))]
    for v in itertools.product(range(-coeff_bound, coeff_bound + 1), repeat=alg.dim):
        v = _canonical(v)
        if v in seen:
            continue
        seen.add(v)
        x = tuple(Fraction(c) for c in v)
        if apply_map(alg.alpha, x) != x:
            continue
        if run_conditions("NijenhuisElement", nijenhuis_conditions(x, T, rep), jobs).passed:
            found.append(x)
    zero, rest = found[0], found[1:]
    rest.sort(key=lambda x: (sum(abs(c) for c in x), tuple(-c for c in x)))
    return [zero] + rest
