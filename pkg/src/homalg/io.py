"""JSON files for algebras, representations, bimodules, operators and reports.

Scalars are written as canonical strings ("3", "-1/2", "1 + 2*t^2"); on input
plain JSON integers are accepted too.  Nested ``algebra`` / ``context`` fields
may be inline objects or paths, resolved relative to the file that names them.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any, Optional, Union

from .algebra import HomAlgebra, structure_table
from .engine import CheckReport
from .errors import HomAlgError, InputError, ScalarSyntaxError
from .matrix import Matrix
from .operators import LinearOperator
from .representations import Bimodule, Representation
from .scalars import format_scalar, is_rational, parse_scalar

__all__ = [
    "parse_input",
    "load_json",
    "from_json",
    "to_json",
    "dumps",
    "write_json",
    "emit_report",
    "parse_matrix",
    "serialize",
]

SCALAR_MODES = ("rational", "poly_t")


# ---------------------------------------------------------------------------
# reading


def _reject_duplicates(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise ValueError(f"duplicate key {key!r}")
        out[key] = value
    return out


def load_json(path: Union[str, Path]) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(exc.strerror or str(exc), str(path)) from exc
    try:
        return json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg}", f"{path}:{exc.lineno}:{exc.colno}") from exc
    except ValueError as exc:
        raise InputError(str(exc), str(path)) from exc


class _Reader:
    """Field-path bookkeeping for diagnostics."""

    def __init__(self, origin: str, base: Optional[Path], scalars: str = "rational"):
        self.origin = origin
        self.base = base
        self.scalars = scalars

    def fail(self, field: str, message: str):
        raise InputError(message, f"{self.origin}: {field}" if field else self.origin)

    def need(self, obj: dict, key: str, field: str):
        if not isinstance(obj, dict):
            self.fail(field, "expected a JSON object")
        if key not in obj:
            self.fail(field, f"missing field {key!r}")
        return obj[key]

    def integer(self, value, field: str, minimum: Optional[int] = None) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            self.fail(field, f"expected an integer, got {value!r}")
        if minimum is not None and value < minimum:
            self.fail(field, f"must be at least {minimum}, got {value}")
        return value

    def scalar(self, value, field: str):
        if isinstance(value, bool):
            self.fail(field, f"expected a scalar, got {value!r}")
        if isinstance(value, int):
            return parse_scalar(str(value))
        if not isinstance(value, str):
            self.fail(field, f"scalars are strings or integers, got {value!r}")
        try:
            s = parse_scalar(value)
        except ScalarSyntaxError as exc:
            self.fail(field, str(exc))
        if self.scalars == "rational" and not is_rational(s):
            self.fail(field, f"polynomial scalar {value!r} in a file declared \"scalars\": \"rational\"")
        return s

    def matrix(self, value, rows: int, cols: int, field: str) -> Matrix:
        if not isinstance(value, list) or len(value) != rows:
            self.fail(field, f"expected {rows} rows")
        out = []
        for i, row in enumerate(value):
            if not isinstance(row, list) or len(row) != cols:
                self.fail(f"{field}[{i}]", f"expected {cols} entries")
            out.append([self.scalar(c, f"{field}[{i}][{j}]") for j, c in enumerate(row)])
        return Matrix.from_rows(out)

    def nested(self, value, field: str):
        """An inline object or a path relative to this file."""
        if isinstance(value, str):
            path = Path(value)
            if not path.is_absolute() and self.base is not None:
                path = self.base / path
            return parse_input(path)
        if isinstance(value, dict):
            return from_json(value, f"{self.origin}: {field}", self.base)
        self.fail(field, "expected an inline object or a path")


def _scalar_mode(r: _Reader, obj: dict) -> str:
    mode = obj.get("scalars", "rational")
    if mode not in SCALAR_MODES:
        r.fail("scalars", f"must be one of {SCALAR_MODES}, got {mode!r}")
    return mode


def _read_algebra(obj: dict, r: _Reader) -> HomAlgebra:
    r.scalars = _scalar_mode(r, obj)
    dim = r.integer(r.need(obj, "dim", ""), "dim", 1)
    kind = obj.get("kind", "generic")
    products = r.need(obj, "products", "")
    if not isinstance(products, dict):
        r.fail("products", "expected an object")
    names = tuple(sorted(products))
    if names not in (("mul",), ("left", "right")):
        r.fail("products", f"products must be 'mul' or both 'left' and 'right', got {list(names)}")
    tables = {}
    for name in names:
        entries = products[name]
        if not isinstance(entries, list):
            r.fail(f"products.{name}", "expected a list of [i, j, k, scalar] entries")
        seen = {}
        for n, entry in enumerate(entries):
            field = f"products.{name}[{n}]"
            if not isinstance(entry, list) or len(entry) != 4:
                r.fail(field, "entries are [i, j, k, scalar]")
            idx = tuple(r.integer(v, field) for v in entry[:3])
            if any(not 0 <= v < dim for v in idx):
                r.fail(field, f"index {list(idx)} out of range for dimension {dim}")
            if idx in seen:
                r.fail(field, f"duplicate entry {list(idx)} (first at products.{name}[{seen[idx]}])")
            seen[idx] = n
            tables.setdefault(name, {})[idx] = r.scalar(entry[3], field + "[3]")
    dense = {name: structure_table(dim, tables.get(name, {})) for name in names}
    alpha = r.matrix(obj["alpha"], dim, dim, "alpha") if "alpha" in obj else None
    try:
        return HomAlgebra(dim, dense, alpha, kind)
    except (HomAlgError, ValueError) as exc:
        r.fail("", str(exc))


def _read_actions(r: _Reader, obj: dict, key: str, n: int, dv: int) -> tuple:
    mats = r.need(obj, key, "")
    if not isinstance(mats, list) or len(mats) != n:
        r.fail(key, f"expected {n} matrices (one per basis element of the algebra)")
    return tuple(r.matrix(m, dv, dv, f"{key}[{i}]") for i, m in enumerate(mats))


def _read_module(obj: dict, r: _Reader):
    alg = r.nested(r.need(obj, "algebra", ""), "algebra")
    if not isinstance(alg, HomAlgebra):
        r.fail("algebra", "expected an algebra")
    r.scalars = _scalar_mode(r, obj)
    dv = r.integer(r.need(obj, "dim_v", ""), "dim_v", 1)
    beta = r.matrix(obj["beta"], dv, dv, "beta") if "beta" in obj else None
    try:
        if "rho" in obj:
            return Representation(alg, dv, _read_actions(r, obj, "rho", alg.dim, dv), beta)
        ell = _read_actions(r, obj, "ell", alg.dim, dv)
        right = _read_actions(r, obj, "r", alg.dim, dv)
        return Bimodule(alg, dv, ell, right, beta, obj.get("flavor", "pre_malcev"))
    except (HomAlgError, ValueError) as exc:
        r.fail("", str(exc))


def _read_operator(obj: dict, r: _Reader) -> LinearOperator:
    r.scalars = _scalar_mode(r, obj)
    raw = r.need(obj, "matrix", "")
    if not isinstance(raw, list) or not raw or not isinstance(raw[0], list):
        r.fail("matrix", "expected a non-empty list of rows")
    m = r.matrix(raw, len(raw), len(raw[0]), "matrix")
    context = r.nested(obj["context"], "context") if "context" in obj else None
    source = obj.get("source", "algebra" if isinstance(context, HomAlgebra) else "module")
    try:
        return LinearOperator(m, source, context)
    except (HomAlgError, ValueError) as exc:
        r.fail("", str(exc))


def from_json(obj: Any, origin: str = "<input>", base: Optional[Path] = None):
    """Build an object from decoded JSON; the kind is recognised by its fields."""
    r = _Reader(origin, base)
    if not isinstance(obj, dict):
        r.fail("", "expected a JSON object")
    if "products" in obj:
        return _read_algebra(obj, r)
    if "rho" in obj or "ell" in obj:
        return _read_module(obj, r)
    if "matrix" in obj:
        return _read_operator(obj, r)
    r.fail("", "unrecognised file: expected 'products' (algebra), 'rho' or 'ell' (module) or 'matrix' (operator)")


def parse_input(source: Union[str, Path, dict]):
    """Parse an algebra, representation, bimodule or operator from a path or decoded JSON."""
    if isinstance(source, dict):
        return from_json(source)
    path = Path(source)
    return from_json(load_json(path), str(path), path.parent)


def parse_matrix(source: Union[str, Path]) -> Matrix:
    """A bare matrix: a file holding ``{"matrix": ...}`` or a list of rows."""
    path = Path(source)
    data = load_json(path)
    r = _Reader(str(path), path.parent, "poly_t")
    raw = data.get("matrix") if isinstance(data, dict) else data
    if not isinstance(raw, list) or not raw or not isinstance(raw[0], list):
        r.fail("matrix", "expected a non-empty list of rows")
    return r.matrix(raw, len(raw), len(raw[0]), "matrix")


# ---------------------------------------------------------------------------
# writing


def _matrix_json(m: Matrix) -> list:
    return [[format_scalar(c) for c in row] for row in m.data]


def _mode(*rational_flags) -> str:
    return "rational" if all(rational_flags) else "poly_t"


def _algebra_json(alg: HomAlgebra) -> dict:
    products = {}
    for name in alg.product_names:
        t = alg.table(name)
        products[name] = [[i, j, k, format_scalar(c)]
                          for i in range(alg.dim) for j in range(alg.dim) for k, c in enumerate(t[i][j]) if c]
    return {"kind": alg.kind, "dim": alg.dim, "scalars": _mode(alg.is_rational), "products": products,
            "alpha": _matrix_json(alg.alpha)}


def _actions_rational(mats) -> bool:
    return all(m.is_rational for m in mats)


def to_json(obj) -> dict:
    """The canonical JSON form of a library object (inverse of :func:`from_json`)."""
    if isinstance(obj, HomAlgebra):
        return _algebra_json(obj)
    if isinstance(obj, Representation):
        return {"algebra": _algebra_json(obj.algebra), "dim_v": obj.dim_v,
                "scalars": _mode(_actions_rational(obj.rho), obj.beta.is_rational),
                "rho": [_matrix_json(m) for m in obj.rho], "beta": _matrix_json(obj.beta)}
    if isinstance(obj, Bimodule):
        return {"algebra": _algebra_json(obj.algebra), "dim_v": obj.dim_v, "flavor": obj.flavor,
                "scalars": _mode(_actions_rational(obj.ell + obj.r), obj.beta.is_rational),
                "ell": [_matrix_json(m) for m in obj.ell], "r": [_matrix_json(m) for m in obj.r],
                "beta": _matrix_json(obj.beta)}
    if isinstance(obj, LinearOperator):
        out = {"matrix": _matrix_json(obj.matrix), "source": obj.source, "scalars": _mode(obj.matrix.is_rational)}
        if obj.context is not None:
            out["context"] = to_json(obj.context)
        return out
    if isinstance(obj, Matrix):
        return {"matrix": _matrix_json(obj), "scalars": _mode(obj.is_rational)}
    if isinstance(obj, CheckReport):
        return obj.to_json()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


serialize = to_json


def dumps(data) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline."""
    if not isinstance(data, (dict, list)):
        data = to_json(data)
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(data, path: Union[str, Path, None]) -> None:
    """Write to ``path``; ``None`` or ``"-"`` means stdout."""
    text = dumps(data)
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(exc.strerror or str(exc), str(path)) from exc


def emit_report(report: CheckReport, path: Union[str, Path, None] = "-") -> None:
    write_json(report.to_json(), path)
