"""Product-building constructions: twists, untwists, derived and commutator algebras."""

from __future__ import annotations

from typing import Optional

from .algebra import HomAlgebra, check_morphism, check_multiplicative
from .errors import DimensionError, PreconditionError, ProductError
from .matrix import Matrix, mat_inverse
from .scalars import as_scalar

__all__ = [
    "commutator_algebra",
    "yau_twist",
    "compose_twist",
    "untwist_regular",
    "derived_algebra",
    "prealt_sum",
    "prealt_to_premalcev",
    "map_table",
]


def map_table(table: tuple, m: Matrix) -> tuple:
    """Compose a product with a linear map: ``(m o mu)(e_i, e_j)``."""
    return tuple(tuple(m.apply(col) for col in plane) for plane in table)


def _combine(a: tuple, b: tuple, sign: int = 1) -> tuple:
    return tuple(
        tuple(tuple(as_scalar(u + sign * v) for u, v in zip(ra, rb)) for ra, rb in zip(pa, pb))
        for pa, pb in zip(a, b)
    )


def _transpose(table: tuple) -> tuple:
    n = len(table)
    return tuple(tuple(table[j][i] for j in range(n)) for i in range(n))


def _single(alg: HomAlgebra, what: str) -> tuple:
    if alg.is_pair:
        raise ProductError(f"{what} needs a single-product algebra")
    return alg.table()


def _pair(alg: HomAlgebra, what: str) -> tuple:
    if not alg.is_pair:
        raise ProductError(f"{what} needs a two-product ('left', 'right') algebra")
    return alg.table("left"), alg.table("right")


def commutator_algebra(alg: HomAlgebra) -> HomAlgebra:
    """``[x, y] = x*y - y*x`` with the same twist."""
    c = _single(alg, "commutator_algebra")
    return HomAlgebra(alg.dim, {"mul": _combine(c, _transpose(c), -1)}, alg.alpha, "generic")


def yau_twist(alg: HomAlgebra, gamma: Matrix, jobs: Optional[int] = None) -> HomAlgebra:
    """Products composed with the morphism ``gamma``; new twist ``gamma . alpha``."""
    report = check_morphism(gamma, alg, alg, jobs)
    if not report.passed:
        raise PreconditionError("gamma is not a morphism of the algebra", report)
    return compose_twist(alg, gamma)


def compose_twist(alg: HomAlgebra, gamma: Matrix) -> HomAlgebra:
    """``yau_twist`` without the morphism check: products ``gamma o mu``, twist ``gamma . alpha``.

    Used to reproduce published tables whose twisting map is not verified to
    be a morphism; the result carries no structural guarantee.
    """
    if gamma.shape != (alg.dim, alg.dim):
        raise DimensionError(f"twisting map must be {alg.dim}x{alg.dim}, got {gamma.shape}")
    products = {name: map_table(t, gamma) for name, t in alg.products.items()}
    return HomAlgebra(alg.dim, products, gamma @ alg.alpha, alg.kind)


def untwist_regular(alg: HomAlgebra) -> HomAlgebra:
    """Products composed with ``alpha^-1``; the result has ``alpha = Id``."""
    inv = mat_inverse(alg.alpha)
    products = {name: map_table(t, inv) for name, t in alg.products.items()}
    return HomAlgebra(alg.dim, products, Matrix.identity(alg.dim), alg.kind)


def derived_algebra(alg: HomAlgebra, n: int, jobs: Optional[int] = None) -> HomAlgebra:
    """The ``n``-th derived algebra: product ``alpha^(2^n - 1) o mu``, twist ``alpha^(2^n)``."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"derived_algebra needs a non-negative integer, got {n!r}")
    report = check_multiplicative(alg, jobs)
    if not report.passed:
        raise PreconditionError("derived algebras need a multiplicative twist", report)
    if n == 0:
        return alg
    k = 2 ** n
    power = alg.alpha ** (k - 1)
    products = {name: map_table(t, power) for name, t in alg.products.items()}
    return HomAlgebra(alg.dim, products, alg.alpha ** k, alg.kind)


def prealt_sum(alg: HomAlgebra) -> HomAlgebra:
    """``x * y = x < y + x > y``."""
    left, right = _pair(alg, "prealt_sum")
    return HomAlgebra(alg.dim, {"mul": _combine(left, right)}, alg.alpha, "generic")


def prealt_to_premalcev(alg: HomAlgebra) -> HomAlgebra:
    """``x . y = x > y - y < x``."""
    left, right = _pair(alg, "prealt_to_premalcev")
    return HomAlgebra(alg.dim, {"mul": _combine(right, _transpose(left), -1)}, alg.alpha, "generic")
