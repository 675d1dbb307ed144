"""Command-line interface: ``homalg <verb> <subcommand> ...``.

Exit codes: 0 when every check passes, 1 when a check fails (the failing
report is still written), 2 for malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional

from . import corpus as corpus_mod
from .algebra import HomAlgebra
from .constructions import (
    commutator_algebra,
    derived_algebra,
    prealt_sum,
    prealt_to_premalcev,
    untwist_regular,
    yau_twist,
)
from .deformations import (
    Deformation,
    check_deformation,
    find_nijenhuis_elements,
    trivial_deformation,
)
from .engine import passing
from .errors import HomAlgError, InputError, PreconditionError, ScalarSyntaxError
from .identities import CLI_NAMES, check_structure
from .io import parse_input, parse_matrix, to_json, write_json
from .matrix import Matrix
from .operators import (
    LinearOperator,
    check_kupershmidt,
    check_nijenhuis,
    check_rota_baxter,
    graph_is_subalgebra,
    kupershmidt_split,
    symplectic_to_premalcev,
)
from .representations import (
    Bimodule,
    Representation,
    adjoint_rep,
    check_bimodule,
    check_representation,
    coadjoint_rep,
    dual_representation,
    semidirect_product,
    twist_rep,
)
from .scalars import format_scalar, parse_scalar

__all__ = ["main", "build_parser"]


class UsageError(HomAlgError):
    pass


# ---------------------------------------------------------------------------
# loading helpers


def _load(path: str, *types, what: str):
    obj = parse_input(path)
    if types and not isinstance(obj, types):
        raise UsageError(f"{path}: expected {what}, got {type(obj).__name__}")
    return obj


def _algebra(path):
    return _load(path, HomAlgebra, what="an algebra file")


def _module(path):
    return _load(path, Representation, Bimodule, what="a representation or bimodule file")


def _operator(path):
    return _load(path, LinearOperator, what="an operator file")


def _representation(path):
    return _load(path, Representation, what="a representation file")


def _matrix(path) -> Matrix:
    return parse_matrix(path)


def _coords(text: str) -> tuple:
    parts = [p for p in text.replace(",", " ").split() if p]
    if not parts:
        raise UsageError("--element needs at least one coordinate")
    try:
        return tuple(parse_scalar(p) for p in parts)
    except ScalarSyntaxError as exc:
        raise UsageError(f"--element: {exc}") from exc


def _assignments(items) -> dict:
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise UsageError(f"--set expects name=value, got {item!r}")
        try:
            out[name.strip()] = Fraction(parse_scalar(value))
        except (ScalarSyntaxError, TypeError) as exc:
            raise UsageError(f"--set {item!r}: parameters are rational numbers") from exc
    return out


# ---------------------------------------------------------------------------
# commands; each returns (object to write or None, report or None)


def cmd_check(args):
    alg = _algebra(args.file)
    return None, check_structure(alg, CLI_NAMES[args.kind], args.jobs)


def cmd_construct(args):
    alg = _algebra(args.file)
    op = args.operation
    if op == "commutator":
        return commutator_algebra(alg), None
    if op == "yau-twist":
        if args.gamma is None:
            raise UsageError("construct yau-twist needs --gamma")
        gamma = _matrix(args.gamma)
        return yau_twist(alg, gamma, args.jobs), passing("Morphism")
    if op == "untwist":
        return untwist_regular(alg), None
    if op == "derived":
        if args.n is None:
            raise UsageError("construct derived needs --n")
        return derived_algebra(alg, args.n, args.jobs), passing("Multiplicative")
    if op == "prealt-sum":
        return prealt_sum(alg), None
    return prealt_to_premalcev(alg), None


def cmd_rep(args):
    op = args.operation
    if op == "coadjoint":
        return coadjoint_rep(_algebra(args.file), args.jobs), None
    mod = _module(args.file)
    if op == "check":
        if isinstance(mod, Bimodule):
            return None, check_bimodule(mod, args.jobs)
        return None, check_representation(mod, args.jobs)
    if op == "dual":
        if not isinstance(mod, Representation):
            raise UsageError("rep dual needs a representation file")
        return dual_representation(mod, args.jobs), None
    if op == "semidirect":
        return semidirect_product(mod.algebra, mod), None
    gamma = _matrix(args.gamma) if args.gamma else None
    beta = _matrix(args.beta) if args.beta else None
    return twist_rep(mod, args.mode, gamma, beta, args.jobs), None


_OP_FLAVORS = {"malcev": "malcev", "pre-malcev": "pre_malcev", "alternative": "alternative"}


def cmd_op(args):
    op = args.operation
    if op == "symplectic":
        if args.algebra is None:
            raise UsageError("op symplectic needs <omega.json> <algebra.json>")
        return symplectic_to_premalcev(_matrix(args.file), _algebra(args.algebra), args.jobs), None
    if args.algebra is not None:
        raise UsageError(f"op {op} takes a single operator file")
    T = _operator(args.file)
    flavor = _OP_FLAVORS[args.flavor] if args.flavor else None
    if op == "check":
        if args.kind is None:
            raise UsageError("op check needs --as kupershmidt|rota-baxter|nijenhuis")
        if args.kind == "kupershmidt":
            return None, check_kupershmidt(T, flavor=flavor, jobs=args.jobs)
        if args.kind == "rota-baxter":
            return None, check_rota_baxter(T, flavor=flavor, jobs=args.jobs)
        if flavor == "alternative":
            raise UsageError("Nijenhuis operators have flavors malcev and pre-malcev")
        return None, check_nijenhuis(T, flavor=flavor or "malcev", jobs=args.jobs)
    if op == "split":
        return kupershmidt_split(T, jobs=args.jobs), passing("Kupershmidt")
    return None, graph_is_subalgebra(T, jobs=args.jobs)


def _context(args, T: LinearOperator):
    if args.context:
        return _representation(args.context)
    if isinstance(T.context, Representation):
        return T.context
    if isinstance(T.context, HomAlgebra):
        return adjoint_rep(T.context)
    raise UsageError("--context <rep.json> is required when the operator file names no representation")


def cmd_deform(args):
    op = args.operation
    T = _operator(args.file)
    rep = _context(args, T)
    if op == "check":
        if args.generator is None:
            raise UsageError("deform check needs <T.json> <gen.json>")
        return None, check_deformation(Deformation(T, _matrix(args.generator), rep), args.jobs)
    if op == "nijenhuis-elements":
        elements = find_nijenhuis_elements(T, rep, args.bound, args.jobs)
        data = {"coeff_bound": args.bound, "elements": [[format_scalar(c) for c in x] for x in elements]}
        return data, None
    if args.element is None:
        raise UsageError("deform trivialize needs --element \"c1 c2 ...\"")
    d = trivial_deformation(_coords(args.element), T, rep, args.jobs)
    return d.T1, passing("NijenhuisElement")


def cmd_corpus(args):
    if args.operation == "list":
        if args.name is not None:
            raise UsageError("corpus list takes no name")
        data = [{"name": e.name, "description": e.description, "published": e.published,
                 "parameters": {p.name: format_scalar(p.default) for p in e.parameters}}
                for e in (corpus_mod.CORPUS[n] for n in corpus_mod.list_examples())]
        return data, None
    if args.name is None:
        raise UsageError("corpus show needs an example name")
    try:
        ex = corpus_mod.load_example(args.name, _assignments(args.set))
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    serializable = {k: v for k, v in ex.objects.items() if not isinstance(v, dict)}
    if args.object is not None:
        if args.object not in serializable:
            raise UsageError(f"{args.name} has objects {sorted(serializable)}, not {args.object!r}")
        return serializable[args.object], None
    data = {"example": ex.name, "parameters": {k: format_scalar(v) for k, v in ex.params.items()},
            "objects": {k: to_json(v) for k, v in serializable.items()}}
    return data, None


# ---------------------------------------------------------------------------
# parser


def _common(p: argparse.ArgumentParser, output: bool = True):
    p.add_argument("--report", metavar="PATH", help="write the JSON check report here ('-' for stdout)")
    p.add_argument("--jobs", type=int, default=None, metavar="N", help="worker threads for exhaustive checks")
    if output:
        p.add_argument("-o", "--output", metavar="PATH", default="-", help="output file ('-' for stdout, the default)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="homalg", description=__doc__.splitlines()[0])
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("check", help="decide a structural identity on an algebra file")
    p.add_argument("file")
    p.add_argument("--as", dest="kind", required=True, choices=sorted(CLI_NAMES))
    _common(p, output=False)
    p.set_defaults(func=cmd_check)

    p = verbs.add_parser("construct", help="build a new algebra from an algebra file")
    p.add_argument("operation", choices=["commutator", "yau-twist", "untwist", "derived", "prealt-sum", "prealt-split"])
    p.add_argument("file")
    p.add_argument("--gamma", metavar="PATH", help="twisting morphism (matrix file)")
    p.add_argument("--n", type=int, metavar="K", help="order of the derived algebra")
    _common(p)
    p.set_defaults(func=cmd_construct)

    p = verbs.add_parser("rep", help="representations and bimodules")
    p.add_argument("operation", choices=["check", "dual", "coadjoint", "semidirect", "twist"])
    p.add_argument("file")
    p.add_argument("--mode", choices=["yau", "alpha-power"], default="alpha-power")
    p.add_argument("--gamma", metavar="PATH", help="algebra morphism for --mode yau")
    p.add_argument("--beta", metavar="PATH", help="module map for --mode yau (default: the file's beta)")
    _common(p)
    p.set_defaults(func=cmd_rep)

    p = verbs.add_parser("op", help="Kupershmidt, Rota-Baxter and Nijenhuis operators")
    p.add_argument("operation", choices=["check", "split", "graph-test", "symplectic"])
    p.add_argument("file")
    p.add_argument("algebra", nargs="?", help="algebra file (op symplectic only)")
    p.add_argument("--as", dest="kind", choices=["kupershmidt", "rota-baxter", "nijenhuis"])
    p.add_argument("--flavor", choices=sorted(_OP_FLAVORS))
    _common(p)
    p.set_defaults(func=cmd_op)

    p = verbs.add_parser("deform", help="linear deformations of Kupershmidt operators")
    p.add_argument("operation", choices=["check", "nijenhuis-elements", "trivialize"])
    p.add_argument("file")
    p.add_argument("generator", nargs="?", help="generator operator (deform check only)")
    p.add_argument("--context", metavar="PATH", help="representation file")
    p.add_argument("--bound", type=int, default=1, metavar="K", help="coordinate bound for the lattice search")
    p.add_argument("--element", metavar="COORDS", help='coordinates, e.g. "0 1 0 0 0"')
    _common(p)
    p.set_defaults(func=cmd_deform)

    p = verbs.add_parser("corpus", help="built-in examples")
    p.add_argument("operation", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.add_argument("--set", action="append", metavar="P=V", help="parameter value (repeatable)")
    p.add_argument("--object", metavar="NAME", help="emit only this object as a standard file")
    _common(p)
    p.set_defaults(func=cmd_corpus)
    return parser


def _check_flags(args):
    if args.jobs is not None and args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if getattr(args, "n", None) is not None and args.n < 0:
        raise UsageError("--n must be non-negative")
    if getattr(args, "bound", None) is not None and args.bound < 0:
        raise UsageError("--bound must be non-negative")
    outputs = [p for p in (getattr(args, "output", None), args.report) if p not in (None, "-")]
    if len(set(outputs)) != len(outputs):
        raise UsageError("-o and --report must name different files")
    if getattr(args, "output", "-") == "-" and args.report == "-" and args.verb != "check":
        raise UsageError("-o and --report cannot both go to stdout")


def _error(message: str) -> int:
    print(f"homalg: error: {message}", file=sys.stderr)
    return 2


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _check_flags(args)
        result, report = args.func(args)
    except PreconditionError as exc:
        if exc.report is None:
            return _error(str(exc))
        print(f"homalg: {exc}", file=sys.stderr)
        write_json(exc.report.to_json(), args.report or "-")
        return 1
    except (HomAlgError, ValueError) as exc:
        return _error(str(exc))

    try:
        if result is not None:
            write_json(result if isinstance(result, (dict, list)) else to_json(result), args.output)
        if report is not None and (args.report is not None or result is None):
            write_json(report.to_json(), args.report or "-")
    except InputError as exc:
        return _error(str(exc))
    if report is not None and not report.passed:
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
