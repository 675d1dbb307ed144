"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest -v -s tests/test_acceptance.py`` to see the lines inline;
they are also printed (uncaptured) under a plain ``pytest -v``.
"""

import itertools
import time

import pytest

from helpers import corrupted_module, module_verdict, random_matrix, seeded, semidirect_contexts, semidirect_verdict
from homalg.algebra import check_morphism, check_multiplicative
from homalg.constructions import compose_twist, derived_algebra, untwist_regular, yau_twist
from homalg.corpus import PRINTED_TABLES, list_examples, load_example, run_claim
from homalg.deformations import (
    check_deformation,
    check_kupershmidt_morphism,
    equivalence_morphism,
    find_nijenhuis_elements,
    trivial_deformation,
)
from homalg.errors import PreconditionError
from homalg.identities import check_structure
from homalg.io import dumps
from homalg.matrix import Matrix, rank
from homalg.operators import LinearOperator, check_kupershmidt, check_nijenhuis, graph_is_subalgebra, nijenhuis_from_kupershmidt
from homalg.representations import check_representation, coadjoint_rep, coadjoint_semidirect, dual_representation

GRID = (-1, 0, 1, 2)
IFF_SEED = 20240601


@pytest.fixture
def verdict(capsys):
    def _line(n, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
        return ok
    return _line


# 1 -------------------------------------------------------------------------


def test_criterion_1_table_reproduction(verdict):
    start = time.perf_counter()
    mismatches, points = [], 0
    for a4, b3, lam1 in itertools.product(GRID, repeat=3):
        points += 1
        ex = load_example("malcev4", a4=a4, b3=b3, lam1=lam1)
        printed = PRINTED_TABLES["malcev4"](ex.params)
        for key in ("premalcev", "twisted", "twisted_premalcev"):
            if ex[key].products["mul"] != printed[key]:
                mismatches.append(("malcev4", ex.params, key))
    for a4, b, lam2, a5 in itertools.product(GRID, GRID, GRID, (1, 2)):
        points += 1
        ex = load_example("malcev5", a4=a4, a5=a5, b=b, lam2=lam2)
        printed = PRINTED_TABLES["malcev5"](ex.params)
        for key in ("premalcev", "twisted", "twisted_premalcev"):
            if ex[key].products["mul"] != printed[key]:
                mismatches.append(("malcev5", ex.params, key))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 5
    verdict(1, ok, f"{points} parameter points, 3 tables each, {len(mismatches)} mismatches, {elapsed:.2f}s (< 5s)")
    assert not mismatches
    assert elapsed < 5


# 2 -------------------------------------------------------------------------


def identity_suite_failures():
    failures = []
    for name in ("malcev4", "malcev5"):
        ex = load_example(name)
        if not check_structure(ex["algebra"], "malcev").passed:
            failures.append(f"{name} algebra: malcev")
        tw = ex["twisted"]
        four, jac = check_structure(tw, "malcev"), check_structure(tw, "malcev-jacobian")
        if four.passed != jac.passed:
            failures.append(f"{name} twisted: Malcev forms disagree")
        if not check_multiplicative(tw).passed:
            failures.append(f"{name} twisted: multiplicative")
        if not four.passed:
            failures.append(f"{name} twisted: malcev at {four.witness.tuple}")
        for key in ("premalcev", "twisted_premalcev"):
            r = check_structure(ex[key], "pre-malcev")
            if not r.passed:
                failures.append(f"{name} {key}: pre-malcev at {r.witness.tuple}")
    nil2 = load_example("nil2_hom")
    if not check_structure(nil2["algebra"], "alternative").passed:
        failures.append("nil2_hom: alternative")
    if not check_structure(nil2["prealternative"], "pre-alternative").passed:
        failures.append("nil2_hom split: pre-alternative")
    return failures


@pytest.mark.xfail(strict=True, reason="the published 4-dim twisting map is not an algebra morphism "
                                       "(alpha[e2, e3] != [alpha e2, alpha e3]), so its twisted tables fail")
def test_criterion_2_identity_suites(verdict):
    failures = identity_suite_failures()
    verdict(2, not failures, "all suites pass" if not failures else "; ".join(failures))
    # everything except the 4-dim twisted tables does pass
    assert all(f.startswith("malcev4 twisted") for f in failures)
    assert not failures


# 3 -------------------------------------------------------------------------


def iff_contexts():
    m4, m5 = load_example("malcev4"), load_example("malcev5")
    aut = load_example("malcev4_aut")
    m5b = load_example("malcev5", a4=1, a5=2, b=-1, lam2=2)
    return [
        ("malcev4 adjoint", m4["adjoint"], [m4["rota_baxter"]]),
        ("malcev4 twisted adjoint", m4["twisted_adjoint"], [m4["twisted_rota_baxter"]]),
        ("malcev4_aut twisted adjoint", aut["twisted_adjoint"], []),
        ("malcev5 adjoint", m5["adjoint"], [m5["rota_baxter"]]),
        ("malcev5 twisted adjoint", m5["twisted_adjoint"], [m5["twisted_rota_baxter"]]),
        ("malcev5 (1,2,-1,2) twisted adjoint", m5b["twisted_adjoint"], [m5b["twisted_rota_baxter"]]),
        ("malcev5 coadjoint", coadjoint_rep(m5["algebra"]), []),
    ]


def test_criterion_3_iff_triangle(verdict):
    total, disagree = 0, []
    for label, rep, known in iff_contexts():
        n, dv = rep.algebra.dim, rep.dim_v
        rng = seeded(IFF_SEED)
        ops = list(known) + [LinearOperator(random_matrix(rng, n, dv, -2, 2)) for _ in range(20)]
        for T in ops:
            total += 1
            v = (check_kupershmidt(T, rep).passed, graph_is_subalgebra(T, rep).passed,
                 check_nijenhuis(nijenhuis_from_kupershmidt(T, rep)).passed)
            if len(set(v)) != 1:
                disagree.append((label, v))
    verdict(3, not disagree, f"{total} operators over {len(iff_contexts())} contexts, {len(disagree)} disagreements")
    assert not disagree


# 4 -------------------------------------------------------------------------


def test_criterion_4_dual_laws(verdict):
    reps, skipped, bad = [], [], []
    for name in list_examples():
        ex = load_example(name)
        for key, obj in ex.objects.items():
            if key.endswith("adjoint"):
                if rank(obj.beta) < obj.dim_v:
                    continue
                if not check_representation(obj).passed:
                    skipped.append(f"{name}.{key}")
                    continue
                reps.append((f"{name}.{key}", obj))
    for label, rep in reps:
        d = dual_representation(rep)
        dd = dual_representation(d)
        if not check_representation(d).passed or dd.rho != rep.rho or dd.beta != rep.beta:
            bad.append(label)
    algebras = []
    for name in list_examples():
        ex = load_example(name)
        for key in ("algebra", "twisted"):
            if key in ex and check_multiplicative(ex[key]).passed:
                algebras.append((f"{name}.{key}", ex[key]))
    for label, alg in algebras:
        if alg.kind == "malcev" and not check_structure(coadjoint_semidirect(alg), "malcev").passed:
            bad.append(f"{label} coadjoint semidirect")
    detail = (f"{len(reps)} representations (dual passes, dual^2 = id), "
              f"{sum(a.kind == 'malcev' for _, a in algebras)} coadjoint semidirect products; "
              f"not representations, excluded: {', '.join(skipped) or 'none'}; failures: {bad or 'none'}")
    verdict(4, not bad, detail)
    assert not bad
    assert skipped == ["malcev4.twisted_adjoint"]


# 5 -------------------------------------------------------------------------


def test_criterion_5_semidirect_iff(verdict):
    mismatches, flips, total = [], 0, 0
    contexts = semidirect_contexts()
    for label, mod in contexts:
        if not module_verdict(mod) or not semidirect_verdict(mod):
            mismatches.append((label, "uncorrupted"))
        rng = seeded(len(label))
        for _ in range(10):
            total += 1
            bad = corrupted_module(mod, rng)
            v = module_verdict(bad)
            flips += not v
            if v != semidirect_verdict(bad):
                mismatches.append(label)
    verdict(5, not mismatches, f"{len(contexts)} contexts x 10 corruptions: {flips}/{total} broke the module, "
                               f"semidirect verdict agreed in {total - len(mismatches)}/{total} "
                               "(Malcev-type semidirect verdict = identity + multiplicativity)")
    assert not mismatches


# 6 -------------------------------------------------------------------------


def test_criterion_6_deformation_pipeline(verdict):
    start = time.perf_counter()
    ex = load_example("malcev5", a4=0, a5=1, b=1, lam2=0)
    R, rep = ex["rota_baxter"], ex["adjoint"]
    found = find_nijenhuis_elements(R, rep, coeff_bound=1)
    e2, e3 = (0, 1, 0, 0, 0), (0, 0, 1, 0, 0)
    has = e2 in found and e3 in found
    d = trivial_deformation(e2, R, rep)
    generator = d.T1.matrix == Matrix.from_columns([[0, 0, -1, 0, 0]] + [[0] * 5] * 4)
    coeff = check_deformation(d, method="coefficients").passed
    poly = check_deformation(d, method="polynomial").passed
    morph = check_kupershmidt_morphism(equivalence_morphism(e2, rep), d.operator, R, rep).passed
    elapsed = time.perf_counter() - start
    ok = has and generator and coeff and poly and morph and elapsed < 10
    verdict(6, ok, f"e2, e3 found: {has}; T1(e1) = -e3 only: {generator}; deformation coefficient/polynomial: "
                   f"{coeff}/{poly}; equivalence morphism: {morph}; {elapsed:.2f}s (< 10s)")
    assert ok


# 7 -------------------------------------------------------------------------


def test_criterion_7_functor_round_trips(verdict):
    problems, checked, refused = [], 0, []
    pairs = [("malcev4", load_example("malcev4")), ("malcev4_aut", load_example("malcev4_aut"))]
    pairs += [(f"malcev5{p}", load_example("malcev5", dict(zip(("a4", "a5", "b", "lam2"), p))))
              for p in ((0, 1, 1, 0), (0, 1, 1, 2), (1, 2, -1, 0), (2, 1, 1, 1))]
    for label, ex in pairs:
        gamma = ex["alpha"]
        for key in ("algebra", "premalcev"):
            if key not in ex:
                continue
            alg = ex[key]
            checked += 1
            if check_morphism(gamma, alg, alg).passed:
                twisted = yau_twist(alg, gamma)
            else:
                with pytest.raises(PreconditionError):
                    yau_twist(alg, gamma)
                refused.append(f"{label}.{key}")
                twisted = compose_twist(alg, gamma)
            if untwist_regular(twisted) != alg:
                problems.append(f"{label}.{key} round trip")
    derived = 0
    for name in list_examples():
        ex = load_example(name, {"lam1": 0} if name.startswith("malcev4") else None)
        for key, obj in ex.objects.items():
            if not hasattr(obj, "products") or not check_multiplicative(obj).passed:
                continue
            if derived_algebra(obj, 0) is not obj:
                problems.append(f"{name}.{key} derived 0")
            kind = {"malcev": "malcev", "pre_malcev": "pre-malcev", "alternative": "alternative",
                    "pre_alternative": "pre-alternative"}.get(obj.kind)
            if kind and check_structure(obj, kind).passed:
                derived += 1
                if not check_structure(derived_algebra(obj, 1), kind).passed:
                    problems.append(f"{name}.{key} derived 1")
    verdict(7, not problems, f"{checked} yau/untwist round trips ({len(refused)} with a non-morphism twist, "
                             f"refused by yau_twist and checked unguarded: {', '.join(sorted(set(refused)))}); "
                             f"{derived} derived algebras pass; problems: {problems or 'none'}")
    assert not problems


# 8 -------------------------------------------------------------------------


def all_reports(jobs):
    out = []
    for name in list_examples():
        ex = load_example(name)
        for claim in ex.claims():
            out.append(dumps(run_claim(ex, claim, jobs)))
    return "".join(out)


def test_criterion_8_determinism(verdict):
    first, second, parallel = all_reports(1), all_reports(1), all_reports(4)
    ok = first == second == parallel
    count = first.count('"status"')
    verdict(8, ok, f"{count} reports byte-identical across two serial runs and --jobs 4: {ok}")
    assert ok
