"""Hom-algebras given by structure constants.

Basis indices are 0-based throughout: a basis written e1..en is 0..n-1 here.
``table[i][j][k]`` is the coefficient of basis ``k`` in ``e_i * e_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Optional, Sequence

from .engine import CheckReport, Condition, Family, run_conditions
from .errors import DimensionError, ProductError
from .matrix import Matrix
from .scalars import as_scalar, is_rational

__all__ = [
    "KINDS",
    "HomAlgebra",
    "basis_vector",
    "multiply",
    "apply_map",
    "hom_associator",
    "hom_jacobian",
    "check_multiplicative",
    "check_morphism",
    "structure_table",
]

KINDS = ("malcev", "pre_malcev", "alternative", "pre_alternative", "generic")
SINGLE = ("mul",)
PAIR = ("left", "right")

_ZERO = Fraction(0)


def _freeze_table(table, dim: int, name: str) -> tuple:
    try:
        frozen = tuple(tuple(tuple(as_scalar(c) for c in row) for row in plane) for plane in table)
    except TypeError as exc:
        raise DimensionError(f"product {name!r}: not a dim x dim x dim array") from exc
    if len(frozen) != dim or any(len(p) != dim or any(len(r) != dim for r in p) for p in frozen):
        raise DimensionError(f"product {name!r} must be a {dim}x{dim}x{dim} array")
    return frozen


def zero_table(dim: int) -> tuple:
    return tuple(tuple((_ZERO,) * dim for _ in range(dim)) for _ in range(dim))


def structure_table(dim: int, entries: Mapping[tuple, object]) -> tuple:
    """Dense table from a sparse ``{(i, j, k): coefficient}`` mapping."""
    t = [[[_ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j, k), c in entries.items():
        t[i][j][k] = t[i][j][k] + as_scalar(c)
    return tuple(tuple(tuple(r) for r in p) for p in t)


@dataclass(frozen=True, eq=False)
class HomAlgebra:
    """A finite-dimensional Hom-algebra ``(A, products, alpha)``.

    ``products`` holds either ``{"mul": table}`` or ``{"left": table, "right":
    table}`` (left is the ``<`` product, right is ``>``).  ``kind`` is only a
    label carried from input files and is never consulted by checkers.
    """

    dim: int
    products: Mapping[str, tuple]
    alpha: Optional[Matrix] = None
    kind: str = "generic"

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise DimensionError(f"dimension must be a positive integer, got {self.dim!r}")
        names = tuple(sorted(self.products))
        if names not in (SINGLE, PAIR):
            raise ProductError(f"products must be ('mul',) or ('left', 'right'), got {names}")
        frozen = {name: _freeze_table(self.products[name], self.dim, name) for name in names}
        object.__setattr__(self, "products", frozen)
        alpha = Matrix.identity(self.dim) if self.alpha is None else self.alpha
        if not isinstance(alpha, Matrix):
            alpha = Matrix.from_rows(alpha)
        if alpha.shape != (self.dim, self.dim):
            raise DimensionError(f"alpha must be {self.dim}x{self.dim}, got {alpha.shape}")
        object.__setattr__(self, "alpha", alpha)
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")

    # convenience ---------------------------------------------------------
    @classmethod
    def from_entries(cls, dim, entries, alpha=None, kind="generic", name="mul"):
        """Single-product algebra from sparse ``{(i, j, k): c}`` entries."""
        return cls(dim, {name: structure_table(dim, entries)}, alpha, kind)

    @property
    def product_names(self) -> tuple:
        return tuple(self.products)

    @property
    def is_pair(self) -> bool:
        return "left" in self.products

    @property
    def is_rational(self) -> bool:
        return self.alpha.is_rational and all(
            is_rational(c) for t in self.products.values() for p in t for r in p for c in r
        )

    def table(self, name: Optional[str] = None) -> tuple:
        return self.products[self._resolve(name)]

    def _resolve(self, name: Optional[str]) -> str:
        if name is None:
            if self.is_pair:
                raise ProductError("two-product algebra: select 'left' or 'right' explicitly")
            return "mul"
        if name not in self.products:
            raise ProductError(f"unknown product {name!r}; have {sorted(self.products)}")
        return name

    def with_products(self, products, alpha=None, kind=None) -> "HomAlgebra":
        return HomAlgebra(self.dim, products, self.alpha if alpha is None else alpha,
                          self.kind if kind is None else kind)

    def __eq__(self, other):
        if not isinstance(other, HomAlgebra):
            return NotImplemented
        return (self.dim, self.products, self.alpha) == (other.dim, other.products, other.alpha)

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self.products.items())), self.alpha))

    # engine hooks --------------------------------------------------------
    @cached_property
    def _families(self) -> dict:
        return {name: Family.from_scalars(t) for name, t in self.products.items()}

    @cached_property
    def _alpha_family(self) -> Family:
        return Family.from_scalars(self.alpha.data)

    def table_family(self, name: Optional[str] = None) -> Family:
        return self._families[self._resolve(name)]

    @property
    def alpha_family(self) -> Family:
        return self._alpha_family


def basis_vector(n: int, i: int) -> tuple:
    return tuple(Fraction(1) if k == i else _ZERO for k in range(n))


def _check_len(x: Sequence, n: int, what: str = "element"):
    if len(x) != n:
        raise DimensionError(f"{what} has {len(x)} coordinates, algebra has dimension {n}")


def multiply(alg: HomAlgebra, product_name: Optional[str], x: Sequence, y: Sequence) -> tuple:
    """Bilinear extension of the structure constants."""
    table = alg.table(product_name)
    n = alg.dim
    _check_len(x, n)
    _check_len(y, n)
    out = [_ZERO] * n
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = xi * yj
            for k, ck in enumerate(table[i][j]):
                if ck:
                    out[k] = out[k] + c * ck
    return tuple(as_scalar(v) for v in out)


def apply_map(m: Matrix, x: Sequence) -> tuple:
    if m.cols != len(x):
        raise DimensionError(f"map has {m.cols} columns, element has {len(x)} coordinates")
    return tuple(as_scalar(v) for v in m.apply(tuple(x)))


def _sub(u, v):
    return tuple(as_scalar(a - b) for a, b in zip(u, v))


def _add(*vs):
    return tuple(as_scalar(sum(parts, _ZERO)) for parts in zip(*vs))


def hom_associator(alg: HomAlgebra, x, y, z, product: Optional[str] = None) -> tuple:
    """``(x*y)*alpha(z) - alpha(x)*(y*z)``."""
    m = lambda u, v: multiply(alg, product, u, v)
    a = alg.alpha
    return _sub(m(m(x, y), apply_map(a, z)), m(apply_map(a, x), m(y, z)))


def hom_jacobian(alg: HomAlgebra, x, y, z, product: Optional[str] = None) -> tuple:
    """``[[x,y],alpha(z)] + [[y,z],alpha(x)] + [[z,x],alpha(y)]``."""
    b = lambda u, v: multiply(alg, product, u, v)
    a = lambda u: apply_map(alg.alpha, u)
    return _add(b(b(x, y), a(z)), b(b(y, z), a(x)), b(b(z, x), a(y)))


def check_multiplicative(alg: HomAlgebra, jobs=None) -> CheckReport:
    """``alpha(e_i * e_j) == alpha(e_i) * alpha(e_j)`` for every product."""
    n = alg.dim
    A = alg.alpha_family
    conds = []
    for name in alg.product_names:
        C = alg.table_family(name)

        def build(v, C=C):
            x, y = v["x"], v["y"]
            return x.mul(y, C).lin(A), x.lin(A).mul(y.lin(A), C)

        conds.append(Condition(f"multiplicative[{name}]", [("x", n), ("y", n)], build))
    return run_conditions("Multiplicative", conds, jobs)


def check_morphism(f: Matrix, src: HomAlgebra, dst: HomAlgebra, jobs=None) -> CheckReport:
    """``f(x)*'f(y) == f(x*y)`` on every product and ``f alpha == alpha' f``."""
    if f.shape != (dst.dim, src.dim):
        raise DimensionError(f"map must be {dst.dim}x{src.dim}, got {f.shape}")
    if set(src.product_names) != set(dst.product_names):
        raise ProductError("source and target have different product signatures")
    F = Family.from_scalars(f.data)
    n = src.dim
    conds = []
    for name in src.product_names:
        Cs, Cd = src.table_family(name), dst.table_family(name)

        def build(v, Cs=Cs, Cd=Cd):
            x, y = v["x"], v["y"]
            return x.lin(F).mul(y.lin(F), Cd), x.mul(y, Cs).lin(F)

        conds.append(Condition(f"morphism[{name}]", [("x", n), ("y", n)], build))
    As, Ad = src.alpha_family, dst.alpha_family
    conds.append(Condition("commutes-with-alpha", [("x", n)],
                           lambda v: (v["x"].lin(As).lin(F), v["x"].lin(F).lin(Ad))))
    return run_conditions("Morphism", conds, jobs)
