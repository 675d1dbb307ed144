"""Built-in example algebras, operators and representations.

Published examples are encoded twice: once as the printed multiplication tables
(``printed_tables``) and once as the ingredients (bracket, twisting map and
Rota-Baxter operator) from which the pipeline recomputes those tables.

Each entry lists *claims*: a check on one generated object together with the
verdict this library establishes for it.  Most claims are expected to pass;
where a published statement is refuted by exhaustive checking the claim says
so, with the parameter range and a short reason.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Optional

from .algebra import HomAlgebra, check_morphism, check_multiplicative, structure_table
from .constructions import compose_twist
from .engine import CheckReport
from .identities import check_structure
from .matrix import Matrix
from .operators import LinearOperator, check_rota_baxter, kupershmidt_split
from .representations import adjoint_rep, check_bimodule, check_representation, regular_bimodule

__all__ = [
    "Parameter",
    "Claim",
    "CorpusEntry",
    "Example",
    "CORPUS",
    "list_examples",
    "load_example",
    "run_claim",
    "PRINTED_TABLES",
]


@dataclass(frozen=True)
class Parameter:
    name: str
    default: Fraction
    nonzero: bool = False
    doc: str = ""


@dataclass(frozen=True)
class Claim:
    """``check`` run on ``target``; ``expected(params)`` is the established verdict."""

    target: str
    check: str
    expected: Callable[[Mapping], bool] = lambda p: True
    note: str = ""
    published: bool = True


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    description: str
    parameters: tuple
    build: Callable[[Mapping], dict]
    claims: tuple = ()
    published: bool = True

    def defaults(self) -> dict:
        return {p.name: p.default for p in self.parameters}


@dataclass(frozen=True)
class Example:
    name: str
    params: Mapping
    objects: Mapping
    entry: CorpusEntry = field(repr=False)

    def __getitem__(self, key):
        return self.objects[key]

    def __contains__(self, key):
        return key in self.objects

    def claims(self):
        return self.entry.claims


def _F(x) -> Fraction:
    return Fraction(x)


def _col(n: int, entries: Mapping[int, object]) -> list:
    return [Fraction(entries.get(k, 0)) for k in range(n)]


# ---------------------------------------------------------------------------
# printed tables (0-based basis: e1 -> 0)


def _malcev4_printed(p) -> dict:
    a4, b3, l1 = p["a4"], p["b3"], p["lam1"]
    bracket = {(0, 1, 1): -1, (0, 2, 2): -1, (0, 3, 3): 1, (1, 0, 1): 1, (1, 2, 3): 2,
               (2, 0, 2): 1, (2, 1, 3): -2, (3, 0, 3): -1}
    premalcev = {(0, 0, 3): -a4 / 2, (0, 1, 1): -1, (0, 2, 2): -1, (0, 3, 3): 1,
                 (1, 0, 2): l1, (1, 1, 3): -2 * l1}
    # -alpha(e2) = e2 - b3 e3
    twisted = {(0, 1, 1): 1, (0, 1, 2): -b3, (0, 2, 2): 1, (0, 3, 3): -1,
               (1, 0, 1): -1, (1, 0, 2): b3, (1, 2, 3): -2,
               (2, 0, 2): -1, (2, 1, 3): 2, (3, 0, 3): 1}
    twisted_premalcev = {(0, 0, 3): a4 / 2, (0, 1, 1): 1, (0, 1, 2): -b3, (0, 2, 2): 1, (0, 3, 3): -1,
                         (1, 0, 2): -l1, (1, 1, 3): 2 * l1}
    return {"algebra": structure_table(4, bracket), "premalcev": structure_table(4, premalcev),
            "twisted": structure_table(4, twisted), "twisted_premalcev": structure_table(4, twisted_premalcev)}


def _malcev5_printed(p) -> dict:
    a4, a5, b = p["a4"], p["a5"], p["b"]
    bracket = {(0, 3, 1): 1, (1, 4, 2): 1, (3, 0, 1): -1, (4, 1, 2): -1}
    premalcev = {(0, 0, 1): -a4, (0, 1, 2): -a5, (0, 3, 1): 1, (3, 4, 2): -b / a5}
    return {"algebra": structure_table(5, bracket), "premalcev": structure_table(5, premalcev),
            "twisted": structure_table(5, bracket), "twisted_premalcev": structure_table(5, premalcev)}


PRINTED_TABLES = {"malcev4": _malcev4_printed, "malcev5": _malcev5_printed}


# ---------------------------------------------------------------------------
# builders


def _malcev_pipeline(alg: HomAlgebra, alpha: Matrix, R: Matrix, printed: dict) -> dict:
    rb = LinearOperator(R, "algebra", alg)
    premalcev = kupershmidt_split(rb)
    twisted = compose_twist(alg, alpha)
    twisted_premalcev = compose_twist(premalcev, alpha)
    return {
        "algebra": alg,
        "alpha": alpha,
        "rota_baxter": rb,
        "premalcev": premalcev,
        "twisted": twisted,
        "twisted_rota_baxter": LinearOperator(R, "algebra", twisted),
        "twisted_premalcev": twisted_premalcev,
        "adjoint": adjoint_rep(alg),
        "twisted_adjoint": adjoint_rep(twisted),
        "printed_tables": printed,
    }


def _alpha4(p, e3_sign: int) -> Matrix:
    a4, b3 = p["a4"], p["b3"]
    return Matrix.from_columns([_col(4, {0: 1, 3: a4}), _col(4, {1: -1, 2: b3}), _col(4, {2: e3_sign}),
                                _col(4, {3: -1})])


def _rb4(p) -> Matrix:
    return Matrix.from_columns([_col(4, {0: 1, 3: p["a4"] / 2}), _col(4, {2: p["lam1"]}), _col(4, {}), _col(4, {})])


def _build_malcev4(p) -> dict:
    printed = _malcev4_printed(p)
    alg = HomAlgebra(4, {"mul": printed["algebra"]}, None, "malcev")
    return _malcev_pipeline(alg, _alpha4(p, -1), _rb4(p), printed)


def _build_malcev4_aut(p) -> dict:
    printed = _malcev4_printed(p)
    alg = HomAlgebra(4, {"mul": printed["algebra"]}, None, "malcev")
    alpha = _alpha4(p, 1)
    twisted = compose_twist(alg, alpha)
    return {"algebra": alg, "alpha": alpha, "twisted": twisted, "twisted_adjoint": adjoint_rep(twisted),
            "adjoint": adjoint_rep(alg)}


def _build_malcev5(p) -> dict:
    a4, a5, b, l2 = p["a4"], p["a5"], p["b"], p["lam2"]
    if a5 == 0:
        raise ValueError("malcev5 needs a5 != 0")
    printed = _malcev5_printed(p)
    alg = HomAlgebra(5, {"mul": printed["algebra"]}, None, "malcev")
    alpha = Matrix.from_columns([_col(5, {0: 1}), _col(5, {1: 1}), _col(5, {2: 1}), _col(5, {2: l2, 3: 1}),
                                 _col(5, {2: a4 / a5 * l2, 4: 1})])
    R = Matrix.from_columns([_col(5, {0: 1, 3: a4, 4: a5}), _col(5, {2: b}), _col(5, {}),
                             _col(5, {1: -b / a5}), _col(5, {})])
    return _malcev_pipeline(alg, alpha, R, printed)


def _build_nil2(p) -> dict:
    # a * a = b on span{a, b}
    alg = HomAlgebra.from_entries(2, {(0, 0, 1): 1}, Matrix.diag([-1, 1]), "alternative")
    rb = LinearOperator(Matrix.diag([2, 1]), "algebra", alg)
    bimodule = regular_bimodule(alg, "alternative")
    return {"algebra": alg, "rota_baxter": rb, "bimodule": bimodule,
            "prealternative": kupershmidt_split(rb, bimodule)}


_NOT_MORPHISM = ("the printed twisting map sends e3 to -e3; it does not preserve [e2, e3] = 2 e4, "
                 "so the twist is not multiplicative and the Hom-Malcev identities fail")

_MALCEV_CLAIMS = (
    Claim("algebra", "malcev"),
    Claim("algebra", "malcev-jacobian"),
    Claim("rota_baxter", "rota-baxter"),
    Claim("premalcev", "pre-malcev"),
    Claim("adjoint", "representation"),
)

CORPUS = {
    "malcev4": CorpusEntry(
        "malcev4",
        "four-dimensional Malcev algebra with a Rota-Baxter operator and a twisting map",
        (Parameter("a4", _F(2), doc="e1 -> e1 + a4 e4 under alpha; R(e1) = e1 + a4/2 e4"),
         Parameter("b3", _F(1), doc="e2 -> -e2 + b3 e3 under alpha"),
         Parameter("lam1", _F(1), doc="R(e2) = lam1 e3")),
        _build_malcev4,
        _MALCEV_CLAIMS + (
            Claim("alpha", "morphism", lambda p: False, _NOT_MORPHISM),
            Claim("twisted", "multiplicative", lambda p: False, _NOT_MORPHISM),
            Claim("twisted", "malcev", lambda p: False, _NOT_MORPHISM),
            Claim("twisted", "malcev-jacobian", lambda p: False, _NOT_MORPHISM),
            Claim("twisted_adjoint", "representation", lambda p: False, _NOT_MORPHISM),
            Claim("twisted_rota_baxter", "rota-baxter"),
            Claim("twisted_premalcev", "pre-malcev", lambda p: p["lam1"] == 0,
                  "fails whenever lam1 != 0, again because the twist is not multiplicative"),
        ),
    ),
    "malcev4_aut": CorpusEntry(
        "malcev4_aut",
        "auxiliary, unpublished: malcev4 twisted by the automorphism with alpha(e3) = +e3",
        (Parameter("a4", _F(2)), Parameter("b3", _F(1)), Parameter("lam1", _F(1))),
        _build_malcev4_aut,
        (Claim("alpha", "morphism", published=False),
         Claim("twisted", "multiplicative", published=False),
         Claim("twisted", "malcev", published=False),
         Claim("twisted", "malcev-jacobian", published=False),
         Claim("twisted_adjoint", "representation", published=False)),
        published=False,
    ),
    "malcev5": CorpusEntry(
        "malcev5",
        "five-dimensional Malcev algebra with a Rota-Baxter operator and a twisting map",
        (Parameter("a4", _F(0), doc="R(e1) = e1 + a4 e4 + a5 e5"),
         Parameter("a5", _F(1), nonzero=True),
         Parameter("b", _F(1), doc="R(e2) = b e3, R(e4) = -b/a5 e2"),
         Parameter("lam2", _F(0), doc="alpha(e4) = lam2 e3 + e4, alpha(e5) = a4/a5 lam2 e3 + e5")),
        _build_malcev5,
        _MALCEV_CLAIMS + (
            Claim("alpha", "morphism"),
            Claim("twisted", "multiplicative"),
            Claim("twisted", "malcev"),
            Claim("twisted", "malcev-jacobian"),
            Claim("twisted_adjoint", "representation"),
            Claim("twisted_premalcev", "pre-malcev"),
            Claim("twisted_rota_baxter", "rota-baxter", lambda p: p["a4"] * p["lam2"] == 0,
                  "R and the twisting map commute only when a4 * lam2 = 0", published=False),
        ),
    ),
    "nil2_hom": CorpusEntry(
        "nil2_hom",
        "auxiliary, unpublished: a * a = b with alpha = diag(-1, 1) and Rota-Baxter R = diag(2, 1)",
        (),
        _build_nil2,
        (Claim("algebra", "alternative", published=False),
         Claim("algebra", "multiplicative", published=False),
         Claim("rota_baxter", "rota-baxter", published=False),
         Claim("bimodule", "bimodule", published=False),
         Claim("prealternative", "pre-alternative", published=False)),
        published=False,
    ),
}


def list_examples() -> list:
    return sorted(CORPUS)


def load_example(name: str, params: Optional[Mapping] = None, **kwargs) -> Example:
    """Instantiate a corpus entry; unspecified parameters take their defaults."""
    if name not in CORPUS:
        raise KeyError(f"unknown example {name!r}; have {list_examples()}")
    entry = CORPUS[name]
    given = dict(params or {})
    given.update(kwargs)
    known = {p.name for p in entry.parameters}
    unknown = set(given) - known
    if unknown:
        raise ValueError(f"{name} has no parameter(s) {sorted(unknown)}; parameters are {sorted(known)}")
    values = entry.defaults()
    values.update({k: Fraction(v) for k, v in given.items()})
    for p in entry.parameters:
        if p.nonzero and values[p.name] == 0:
            raise ValueError(f"{name} needs {p.name} != 0")
    return Example(name, values, entry.build(values), entry)


def run_claim(example: Example, claim: Claim, jobs: Optional[int] = None) -> CheckReport:
    """Run one claim's check on the example's object."""
    obj = example[claim.target]
    check = claim.check
    if check == "morphism":
        return check_morphism(obj, example["algebra"], example["algebra"], jobs)
    if check == "multiplicative":
        return check_multiplicative(obj, jobs)
    if check == "rota-baxter":
        return check_rota_baxter(obj, jobs=jobs)
    if check == "representation":
        return check_representation(obj, jobs)
    if check == "bimodule":
        return check_bimodule(obj, jobs)
    return check_structure(obj, check, jobs)
