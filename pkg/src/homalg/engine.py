"""Exhaustive multilinear evaluation over basis tuples.

Every identity in the library is multilinear in its quantified arguments, so it
holds everywhere iff it holds on all tuples of basis vectors.  Rather than loop
over tuples, a :class:`Family` carries the value of an expression at *every*
basis tuple at once: a numpy object array whose leading axes are indexed by the
free variables (one axis per variable letter) and whose trailing one or two
axes hold a vector or a matrix value.  Products are einsum contractions in which
a repeated variable letter means "the same basis element", so expressions such
as ``J(alpha(x), alpha(y), [x, z])`` evaluate directly.

Rational data is stored as Python integers over one common denominator, which
keeps the inner loops on machine-speed big-int arithmetic.  Polynomial data
(formal ``t``) is stored as scalar objects with denominator 1.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from .scalars import format_scalar, is_rational

__all__ = ["Family", "CheckReport", "Witness", "Condition", "run_conditions", "DEFAULT_JOBS"]

DEFAULT_JOBS = 1

_VALUE_LETTERS = "PQRSUVW"


def _lcm(values) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


def _as_object_array(values) -> np.ndarray:
    arr = np.empty(np.shape(values), dtype=object)
    arr[...] = values
    return arr


class Family:
    """Values of an expression on every tuple of basis vectors.

    ``vars`` is a string of distinct lowercase letters, one per leading axis of
    ``data``; the remaining axes are the value (vector or matrix).  The true
    values are ``data / den``.
    """

    __slots__ = ("vars", "data", "den")

    def __init__(self, vars: str, data: np.ndarray, den: int = 1):
        self.vars = vars
        self.data = data
        self.den = den

    # constructors ------------------------------------------------------
    @classmethod
    def from_scalars(cls, values) -> "Family":
        """A constant (no free variables) from a nested sequence of scalars."""
        arr = _as_object_array(values)
        flat = arr.ravel()
        if all(is_rational(v) for v in flat):
            den = _lcm(Fraction(v).denominator for v in flat) if flat.size else 1
            ints = np.empty(arr.shape, dtype=object)
            ints.ravel()[:] = [Fraction(v).numerator * (den // Fraction(v).denominator) for v in flat]
            return cls("", ints, den)
        return cls("", arr, 1)

    @classmethod
    def basis(cls, letter: str, n: int, rows: Optional[range] = None) -> "Family":
        """The variable ``letter`` ranging over basis vectors ``e_i`` (i in rows)."""
        rows = range(n) if rows is None else rows
        data = np.zeros((len(rows), n), dtype=object)
        for k, i in enumerate(rows):
            data[k, i] = 1
        return cls(letter, data, 1)

    def zero_like(self) -> "Family":
        return Family(self.vars, np.zeros(self.data.shape, dtype=object), 1)

    @property
    def value_rank(self) -> int:
        return self.data.ndim - len(self.vars)

    # core contraction ----------------------------------------------------
    def contract(self, fval: str, other: "Family", gval: str, outval: str) -> "Family":
        """Einsum of two families; shared variable letters are identified."""
        vs = self.vars + "".join(v for v in other.vars if v not in self.vars)
        data = np.einsum(f"{self.vars}{fval},{other.vars}{gval}->{vs}{outval}", self.data, other.data)
        if not isinstance(data, np.ndarray) or data.dtype != object:
            data = _as_object_array(data)
        return Family(vs, data, self.den * other.den)

    def _aligned(self, vars_: str, shape_of: dict) -> np.ndarray:
        # transpose/broadcast data onto the variable order ``vars_``
        vals = _VALUE_LETTERS[: self.value_rank]
        present = "".join(v for v in vars_ if v in self.vars)
        data = self.data
        if present != self.vars:
            data = np.einsum(f"{self.vars}{vals}->{present}{vals}", data)
        if present != vars_:
            shape = []
            for v in vars_:
                shape.append(data.shape[present.index(v)] if v in self.vars else 1)
            data = data.reshape(tuple(shape) + data.shape[len(present):])
            full = tuple(shape_of[v] for v in vars_) + data.shape[len(vars_):]
            data = np.broadcast_to(data, full)
        return data

    def _combine(self, other: "Family", sign: int) -> "Family":
        if self.value_rank != other.value_rank:
            raise ValueError("adding families of different value rank")
        vs = self.vars + "".join(v for v in other.vars if v not in self.vars)
        shape_of = {v: self.data.shape[i] for i, v in enumerate(self.vars)}
        shape_of.update({v: other.data.shape[i] for i, v in enumerate(other.vars)})
        den = self.den * other.den // math.gcd(self.den, other.den)
        a = self._aligned(vs, shape_of)
        b = other._aligned(vs, shape_of)
        fa, fb = den // self.den, den // other.den
        if fa != 1:
            a = a * fa
        if fb != 1:
            b = b * fb
        data = a + b if sign > 0 else a - b
        return Family(vs, _as_object_array(data) if data.dtype != object else data, den)

    def __add__(self, other: "Family") -> "Family":
        return self._combine(other, 1)

    def __sub__(self, other: "Family") -> "Family":
        return self._combine(other, -1)

    def __neg__(self) -> "Family":
        return Family(self.vars, -self.data, self.den)

    def scaled(self, c) -> "Family":
        c = Fraction(c) if is_rational(c) else c
        if isinstance(c, Fraction):
            return Family(self.vars, self.data * c.numerator, self.den * c.denominator)
        return Family(self.vars, self.data * c, self.den)

    # algebraic helpers -----------------------------------------------------
    def lin(self, matrix: "Family") -> "Family":
        """Apply a constant linear map to a vector-valued family."""
        return matrix.contract("RP", self, "P", "R")

    def mul(self, other: "Family", table: "Family") -> "Family":
        """Bilinear product through a structure-constant table ``c[i][j][k]``."""
        left = self.contract("P", table, "PQR", "QR")
        return left.contract("QR", other, "Q", "R")

    def act(self, action: "Family") -> "Family":
        """Matrix-valued family ``rho(self)`` from action matrices ``rho[i]``."""
        return self.contract("P", action, "PQR", "QR")

    def mm(self, other: "Family") -> "Family":
        """Product of two matrix-valued families (or matrix times vector)."""
        if other.value_rank == 2:
            return self.contract("PQ", other, "QR", "PR")
        return self.contract("PQ", other, "Q", "P")

    def transposed_table(self) -> "Family":
        """Swap the two argument axes of a constant structure table."""
        return Family(self.vars, np.ascontiguousarray(self.data.swapaxes(-3, -2)), self.den)

    # reading values ------------------------------------------------------
    def value_at(self, index: tuple) -> list:
        """Scalars (flattened row-major) at one tuple of basis indices."""
        cell = self.data[index] if self.vars else self.data
        out = []
        for v in np.asarray(cell, dtype=object).ravel():
            if is_rational(v):
                out.append(Fraction(v, self.den) if isinstance(v, int) else Fraction(v) / self.den)
            else:
                out.append(v / self.den if self.den != 1 else v)
        return out

    def ordered(self, order: str) -> "Family":
        if self.vars == order:
            return self
        shape_of = {v: self.data.shape[i] for i, v in enumerate(self.vars)}
        if set(order) - set(self.vars):
            raise ValueError("ordering names unknown variables")
        return Family(order, np.ascontiguousarray(self._aligned(order, shape_of)), self.den)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Witness:
    tuple: tuple
    lhs: tuple
    rhs: tuple

    def to_json(self) -> dict:
        return {
            "tuple": list(self.tuple),
            "lhs": [format_scalar(v) for v in self.lhs],
            "rhs": [format_scalar(v) for v in self.rhs],
        }


@dataclass(frozen=True)
class CheckReport:
    """Verdict of one check.

    ``condition`` names the sub-identity that failed (``None`` on pass); the
    witness tuple is the lexicographically smallest violating basis tuple.
    """

    identity: str
    status: str
    witness: Optional[Witness] = None
    tuples_checked: int = 0
    condition: Optional[str] = None

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == "fail") != (self.witness is not None):
            raise ValueError("a report fails exactly when it carries a witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {
            "check": self.identity,
            "condition": self.condition,
            "status": self.status,
            "witness": self.witness.to_json() if self.witness else None,
            "tuples_checked": self.tuples_checked,
        }

    def renamed(self, identity: str) -> "CheckReport":
        return CheckReport(identity, self.status, self.witness, self.tuples_checked, self.condition)


def passing(identity: str, tuples: int = 0) -> CheckReport:
    return CheckReport(identity, "pass", None, tuples)


# ---------------------------------------------------------------------------
# condition runner


@dataclass
class Condition:
    """``lhs == rhs`` for all basis tuples of ``variables``.

    ``variables`` is a sequence of ``(letter, dim)`` in reporting order and
    ``build`` maps ``{letter: Family}`` to the two sides.
    """

    name: str
    variables: Sequence[tuple]
    build: Callable[[dict], tuple]
    size: int = field(init=False)

    def __post_init__(self):
        self.size = math.prod(d for _, d in self.variables)


def _nonzero_mask(data: np.ndarray, nvars: int) -> np.ndarray:
    flags = np.frompyfunc(lambda v: v != 0, 1, 1)(data).astype(bool) if data.size else np.zeros(data.shape, bool)
    if flags.ndim > nvars:
        flags = flags.reshape(flags.shape[:nvars] + (-1,)).any(axis=-1)
    return flags


def _first_violation(cond: Condition, rows: Optional[range]):
    letters = [v for v, _ in cond.variables]
    fams = {}
    for k, (v, d) in enumerate(cond.variables):
        fams[v] = Family.basis(v, d, rows if k == 0 else None)
    lhs, rhs = cond.build(fams)
    order = "".join(letters)
    # terms that do not mention a variable are broadcast along it
    lhs = _complete(lhs, fams, order)
    rhs = _complete(rhs, fams, order)
    diff = lhs - rhs
    mask = _nonzero_mask(diff.data, len(order))
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    idx = tuple(int(i) for i in hits[0])
    offset = rows.start if rows is not None else 0
    full = (idx[0] + offset,) + idx[1:] if idx else idx
    return full, lhs.value_at(idx), rhs.value_at(idx)


def _complete(fam: Family, fams: dict, order: str) -> Family:
    missing = [v for v in order if v not in fam.vars]
    for v in missing:
        # multiply by a ones-vector along v to introduce the axis
        n = fams[v].data.shape[0]
        ones = Family(v, np.ones((n,), dtype=object), 1)
        vals = _VALUE_LETTERS[: fam.value_rank]
        fam = fam.contract(vals, ones, "", vals)
    return fam.ordered(order)


def run_conditions(identity: str, conditions: Sequence[Condition], jobs: Optional[int] = None) -> CheckReport:
    """Evaluate conditions in order; stop at the first failing one.

    With ``jobs > 1`` the range of the first variable is split across worker
    threads; the minimal witness is chosen after all chunks finish, so the
    report does not depend on ``jobs``.
    """
    jobs = DEFAULT_JOBS if jobs is None else max(1, int(jobs))
    checked = 0
    for cond in conditions:
        checked += cond.size
        if cond.size == 0:
            continue
        first_dim = cond.variables[0][1] if cond.variables else 1
        if jobs == 1 or not cond.variables or first_dim < 2:
            hit = _first_violation(cond, None)
        else:
            bounds = np.linspace(0, first_dim, min(jobs, first_dim) + 1).astype(int)
            chunks = [range(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
            with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
                hits = list(pool.map(lambda r: _first_violation(cond, r), chunks))
            found = [h for h in hits if h is not None]
            hit = min(found, key=lambda h: h[0]) if found else None
        if hit is not None:
            idx, lhs, rhs = hit
            return CheckReport(identity, "fail", Witness(idx, tuple(lhs), tuple(rhs)), checked, cond.name)
    return CheckReport(identity, "pass", None, checked)
