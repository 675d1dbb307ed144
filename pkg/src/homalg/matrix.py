"""Dense exact matrices over the scalars of :mod:`homalg.scalars`."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, ScalarRingError, SingularMatrixError
from .scalars import as_scalar, is_rational

__all__ = [
    "Matrix",
    "mat_mul",
    "mat_inverse",
    "direct_sum",
    "rank",
    "in_column_span",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Matrix:
    """Immutable ``rows x cols`` matrix stored row-major as nested tuples."""

    data: tuple

    def __post_init__(self):
        rows = tuple(tuple(as_scalar(v) for v in row) for row in self.data)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise DimensionError(f"ragged matrix rows: widths {sorted(widths)}")
        object.__setattr__(self, "data", rows)
        object.__setattr__(self, "_cols", widths.pop() if widths else 0)

    # construction -------------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(((_ZERO,) * cols,) * rows)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls(tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        if not columns:
            raise DimensionError("no columns given")
        return cls(tuple(zip(*columns)))

    # shape ---------------------------------------------------------------
    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_rational(self) -> bool:
        return all(is_rational(v) for row in self.data for v in row)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.data)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> "Matrix":
        return Matrix(tuple(zip(*self.data))) if self.rows else Matrix.zeros(self.cols, 0)

    # arithmetic ----------------------------------------------------------
    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        return self.apply(other)

    def apply(self, vector: Sequence) -> tuple:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise DimensionError(f"vector of length {len(vector)} for {self.rows}x{self.cols} matrix")
        return tuple(sum((a * b for a, b in zip(row, vector) if a and b), _ZERO) for row in self.data)

    def _check_same(self, other):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-a for a in r) for r in self.data))

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix(tuple(tuple(c * a for a in r) for r in self.data))

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            return mat_inverse(self) ** (-k)
        out = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.data for v in row)

    def is_identity(self) -> bool:
        return self.is_square and all(
            v == (1 if i == j else 0) for i, row in enumerate(self.data) for j, v in enumerate(row)
        )

    def inverse(self) -> "Matrix":
        return mat_inverse(self)

    def __repr__(self):
        from .scalars import format_scalar

        body = "; ".join(" ".join(format_scalar(v) for v in row) for row in self.data)
        return f"Matrix([{body}])"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bcols = b.columns()
    return Matrix(
        tuple(
            tuple(sum((x * y for x, y in zip(row, col) if x and y), _ZERO) for col in bcols)
            for row in a.data
        )
    )


def _require_rational(m: Matrix, what: str):
    if not m.is_rational:
        raise ScalarRingError(f"{what} needs rational scalars; polynomials are not a field")


def _row_reduce(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """In-place reduced row echelon form; returns pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def mat_inverse(m: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    if not m.is_square:
        raise DimensionError(f"cannot invert a {m.rows}x{m.cols} matrix")
    _require_rational(m, "matrix inverse")
    n = m.rows
    aug = [list(row) + [_ONE if i == j else _ZERO for j in range(n)] for i, row in enumerate(m.data)]
    pivots = _row_reduce(aug, n)
    if len(pivots) < n:
        raise SingularMatrixError(f"matrix is singular (rank {len(pivots)} < {n})")
    return Matrix(tuple(tuple(row[n:]) for row in aug))


def rank(m: Matrix) -> int:
    _require_rational(m, "rank")
    rows = [list(r) for r in m.data]
    return len(_row_reduce(rows, m.cols))


def solve(m: Matrix, rhs: Sequence) -> tuple:
    """Unique solution of ``m x = rhs`` for invertible square ``m``."""
    if not m.is_square or len(rhs) != m.rows:
        raise DimensionError("solve needs a square system")
    _require_rational(m, "solve")
    n = m.rows
    aug = [list(row) + [as_scalar(b)] for row, b in zip(m.data, rhs)]
    pivots = _row_reduce(aug, n)
    if len(pivots) < n:
        raise SingularMatrixError("singular system")
    return tuple(row[n] for row in aug)


def in_column_span(basis: Matrix, vector: Sequence) -> bool:
    """True iff ``vector`` lies in the column span of ``basis`` (rank test)."""
    if len(vector) != basis.rows:
        raise DimensionError("vector length does not match basis rows")
    extended = Matrix(tuple(tuple(row) + (v,) for row, v in zip(basis.data, vector)))
    return rank(extended) == rank(basis)


def direct_sum(a: Matrix, b: Matrix) -> Matrix:
    """Block-diagonal ``a (+) b``."""
    top = tuple(tuple(row) + (_ZERO,) * b.cols for row in a.data)
    bottom = tuple((_ZERO,) * a.cols + tuple(row) for row in b.data)
    return Matrix(top + bottom)
