"""Exhaustive checkers for the structural identities of Hom-algebras.

Each identity is multilinear, so it is decided by evaluating it on every tuple
of basis vectors.  Identities that are quadratic in one argument (the
Hom-alternative laws and the Jacobian form of the Hom-Malcev identity) are
checked through their polarization, which is equivalent in characteristic 0.
"""

from __future__ import annotations

import enum
from typing import Optional

from .algebra import HomAlgebra
from .engine import CheckReport, Condition, Family, run_conditions
from .errors import ProductError

__all__ = ["IdentityKind", "Ops", "check_structure", "check_malcev_admissible", "structure_conditions"]


class IdentityKind(enum.Enum):
    """Identity names with the number of quantified arguments."""

    HomMalcevJacobianForm = ("HomMalcevJacobianForm", 3)
    HomMalcevFourVar = ("HomMalcevFourVar", 4)
    HomAlternative = ("HomAlternative", 2)
    HomPreMalcev = ("HomPreMalcev", 4)
    HomPreLie = ("HomPreLie", 3)
    HomPreAlternative = ("HomPreAlternative", 3)
    Antisymmetry = ("Antisymmetry", 2)
    HomMalcevAdmissible = ("HomMalcevAdmissible", 4)
    HomLieJacobi = ("HomLieJacobi", 3)

    def __init__(self, label: str, arity: int):
        self.label = label
        self.arity = arity

    @classmethod
    def parse(cls, name) -> "IdentityKind":
        if isinstance(name, IdentityKind):
            return name
        key = str(name).strip().lower().replace("_", "-")
        if key in CLI_NAMES:
            return CLI_NAMES[key]
        for member in cls:
            if member.label.lower() == key.replace("-", ""):
                return member
        raise ValueError(f"unknown identity {name!r}")


CLI_NAMES = {
    "malcev": IdentityKind.HomMalcevFourVar,
    "malcev-jacobian": IdentityKind.HomMalcevJacobianForm,
    "pre-malcev": IdentityKind.HomPreMalcev,
    "alternative": IdentityKind.HomAlternative,
    "pre-alternative": IdentityKind.HomPreAlternative,
    "pre-lie": IdentityKind.HomPreLie,
    "malcev-admissible": IdentityKind.HomMalcevAdmissible,
    "lie": IdentityKind.HomLieJacobi,
    "antisymmetry": IdentityKind.Antisymmetry,
}


class Ops:
    """Expression builder over families for one product table and one twist."""

    def __init__(self, table: Family, alpha: Family):
        self.table = table
        self.alpha = alpha

    @classmethod
    def of(cls, alg: HomAlgebra, product: Optional[str] = None) -> "Ops":
        return cls(alg.table_family(product), alg.alpha_family)

    def m(self, u: Family, v: Family) -> Family:
        return u.mul(v, self.table)

    def com(self, u: Family, v: Family) -> Family:
        """Commutator ``u*v - v*u``."""
        return self.m(u, v) - self.m(v, u)

    def a(self, u: Family, k: int = 1) -> Family:
        for _ in range(k):
            u = u.lin(self.alpha)
        return u

    def assoc(self, x, y, z) -> Family:
        return self.m(self.m(x, y), self.a(z)) - self.m(self.a(x), self.m(y, z))

    def jac(self, x, y, z) -> Family:
        b, a = self.m, self.a
        return b(b(x, y), a(z)) + b(b(y, z), a(x)) + b(b(z, x), a(y))


def _vars(letters: str, n: int):
    return [(v, n) for v in letters]


# ---------------------------------------------------------------------------
# per-identity condition lists


def _antisymmetry(o: Ops, n: int) -> Condition:
    return Condition("Antisymmetry", _vars("xy", n), lambda v: (o.m(v["x"], v["y"]), -o.m(v["y"], v["x"])))


def _malcev_four_var(o: Ops, n: int) -> Condition:
    b, a = o.m, o.a

    def build(v):
        x, y, z, t = v["x"], v["y"], v["z"], v["t"]
        lhs = b(a(b(x, z)), a(b(y, t)))
        rhs = (
            b(b(b(x, y), a(z)), a(t, 2))
            + b(b(b(y, z), a(t)), a(x, 2))
            + b(b(b(z, t), a(x)), a(y, 2))
            + b(b(b(t, x), a(y)), a(z, 2))
        )
        return lhs, rhs

    return Condition("HomMalcevFourVar", _vars("xyzt", n), build)


def _malcev_jacobian(o: Ops, n: int) -> Condition:
    # J(a x, a y, [x, z]) = [J(x, y, z), a^2 x], polarized in x with partner w;
    # witness tuples read (x, y, z, w)
    b, a, J = o.m, o.a, o.jac

    def build(v):
        x, y, z, w = v["x"], v["y"], v["z"], v["w"]
        lhs = J(a(x), a(y), b(w, z)) + J(a(w), a(y), b(x, z))
        rhs = b(J(x, y, z), a(w, 2)) + b(J(w, y, z), a(x, 2))
        return lhs, rhs

    return Condition("HomMalcevJacobianForm", _vars("xyzw", n), build)


def _lie_jacobi(o: Ops, n: int) -> Condition:
    def build(v):
        j = o.jac(v["x"], v["y"], v["z"])
        return j, j.zero_like()

    return Condition("HomLieJacobi", _vars("xyz", n), build)


def _alternative(o: Ops, n: int) -> list:
    # as(x,x,z) = 0 and as(z,x,x) = 0, polarized
    s = o.assoc
    left = Condition("left-alternative", _vars("xyz", n),
                     lambda v: (s(v["x"], v["y"], v["z"]), -s(v["y"], v["x"], v["z"])))
    right = Condition("right-alternative", _vars("xyz", n),
                      lambda v: (s(v["x"], v["y"], v["z"]), -s(v["x"], v["z"], v["y"])))
    return [left, right]


def _pre_lie(o: Ops, n: int) -> Condition:
    s = o.assoc
    return Condition("HomPreLie", _vars("xyz", n),
                     lambda v: (s(v["x"], v["y"], v["z"]), s(v["y"], v["x"], v["z"])))


def hpm(o: Ops, x, y, z, t) -> Family:
    """The ten-term expansion ``HPM(x, y, z, t)``."""
    m, a = o.m, o.a
    return (
        m(a(m(y, z)), a(m(x, t)))
        - m(a(m(z, y)), a(m(x, t)))
        + m(m(m(x, y), a(z)), a(t, 2))
        - m(m(m(y, x), a(z)), a(t, 2))
        - m(m(a(z), m(x, y)), a(t, 2))
        + m(m(a(z), m(y, x)), a(t, 2))
        + m(a(y, 2), m(m(x, z), a(t)))
        - m(a(y, 2), m(m(z, x), a(t)))
        - m(a(x, 2), m(a(y), m(z, t)))
        + m(a(z, 2), m(a(x), m(y, t)))
    )


def _pre_malcev(o: Ops, n: int) -> Condition:
    def build(v):
        h = hpm(o, v["x"], v["y"], v["z"], v["t"])
        return h, h.zero_like()

    return Condition("HomPreMalcev", _vars("xyzt", n), build)


def _pre_alternative(alg: HomAlgebra) -> list:
    n = alg.dim
    A = alg.alpha_family
    L, R = alg.table_family("left"), alg.table_family("right")
    lt = lambda u, v: u.mul(v, L)  # x < y
    gt = lambda u, v: u.mul(v, R)  # x > y
    st = lambda u, v: lt(u, v) + gt(u, v)
    a = lambda u: u.lin(A)

    def ax1(v):
        x, y, z = v["x"], v["y"], v["z"]
        e = lt(gt(x, y), a(z)) - gt(a(x), lt(y, z)) + lt(lt(y, x), a(z)) - lt(a(y), st(x, z))
        return e, e.zero_like()

    def ax2(v):
        x, y, z = v["x"], v["y"], v["z"]
        e = lt(gt(x, y), a(z)) - gt(a(x), lt(y, z)) + gt(st(x, z), a(y)) - gt(a(x), gt(z, y))
        return e, e.zero_like()

    def ax3(v):
        x, y, z = v["x"], v["y"], v["z"]
        e = gt(st(x, y), a(z)) - gt(a(x), gt(y, z)) + gt(st(y, x), a(z)) - gt(a(y), gt(x, z))
        return e, e.zero_like()

    def ax4(v):
        x, y, z = v["x"], v["y"], v["z"]
        e = lt(lt(x, y), a(z)) - lt(a(x), st(y, z)) + lt(lt(x, z), a(y)) - lt(a(x), st(z, y))
        return e, e.zero_like()

    return [Condition(f"pre-alternative-{k}", _vars("xyz", n), f)
            for k, f in enumerate((ax1, ax2, ax3, ax4), start=1)]


def structure_conditions(alg: HomAlgebra, kind: IdentityKind) -> list:
    """The ordered condition list deciding ``kind`` on ``alg``."""
    kind = IdentityKind.parse(kind)
    n = alg.dim
    if kind is IdentityKind.HomPreAlternative:
        if not alg.is_pair:
            raise ProductError("HomPreAlternative needs 'left' and 'right' products")
        return _pre_alternative(alg)
    if alg.is_pair:
        raise ProductError(f"{kind.label} needs a single product; got 'left'/'right'")
    if kind is IdentityKind.HomMalcevAdmissible:
        o = Ops.of(alg)
        bracket = o.table - o.table.transposed_table()
        return [_malcev_four_var(Ops(bracket, o.alpha), n)]
    o = Ops.of(alg)
    if kind is IdentityKind.Antisymmetry:
        return [_antisymmetry(o, n)]
    if kind is IdentityKind.HomMalcevFourVar:
        return [_antisymmetry(o, n), _malcev_four_var(o, n)]
    if kind is IdentityKind.HomMalcevJacobianForm:
        return [_antisymmetry(o, n), _malcev_jacobian(o, n)]
    if kind is IdentityKind.HomLieJacobi:
        return [_antisymmetry(o, n), _lie_jacobi(o, n)]
    if kind is IdentityKind.HomAlternative:
        return _alternative(o, n)
    if kind is IdentityKind.HomPreLie:
        return [_pre_lie(o, n)]
    if kind is IdentityKind.HomPreMalcev:
        return [_pre_malcev(o, n)]
    raise ValueError(f"unhandled identity {kind}")  # pragma: no cover


def check_structure(alg: HomAlgebra, kind, jobs: Optional[int] = None) -> CheckReport:
    """Decide ``kind`` on ``alg`` over all basis tuples."""
    kind = IdentityKind.parse(kind)
    return run_conditions(kind.label, structure_conditions(alg, kind), jobs)


def check_malcev_admissible(alg: HomAlgebra, jobs: Optional[int] = None) -> CheckReport:
    """Run the four-variable Hom-Malcev identity on the commutator bracket."""
    return check_structure(alg, IdentityKind.HomMalcevAdmissible, jobs)
