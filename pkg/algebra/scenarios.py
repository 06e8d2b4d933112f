"""
Classification scenarios run by `manage.py verify_classification`.

Each scenario recomputes one classification statement from scratch (catalog
self-checks, rank equality across seeds, the line classification, rank-two
types, the B2 and G2 non-extensions, Chevalley constants, Levi data) and
returns a ScenarioResult instead of raising.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Tuple

from .cartan_roots import chevalley_basis, chevalley_constants, chevalley_index, identify_type
from .catalog import fixture, list_fixtures, load_fixture, verify_all
from .dsl import parse_field
from .errors import LieToolkitError
from .georank import geometric_rank, rank_equality_report
from .liepresent import Subspace, bracket_span, check_levi, coordinates_in, is_nilpotent, is_solvable, radical
from .modsearch import BorelChoice, ansatz_space, highest_weight_vectors, staged_extension_protocol
from .rootsystems import enumerate_types_up_to_rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScenarioResult:
    name: str
    passed: bool
    detail: str = ""


def _presentation(name):
    return fixture(name).presentation()


def catalog_scenario(pattern=None):
    report = verify_all(pattern)
    detail = f"{len(report.reports)} fixtures" + (f", failed: {', '.join(report.failed)}" if report.failed else "")
    return ScenarioResult("catalog self-verification", report.ok, detail)


def rank_one_family_scenario(sizes=range(1, 7)):
    bad = []
    for n in sizes:
        L = _presentation(f"rank1.family({n})")
        if L.dim != n + 1 or geometric_rank(L).rank != 1:
            bad.append(n)
    return ScenarioResult("rank-one family", not bad, f"failing N: {bad}" if bad else f"N = {min(sizes)}..{max(sizes)}")


def csa_equality_scenario(seeds=range(5), pattern=None):
    bad = []
    for name in list_fixtures(pattern):
        if not load_fixture(name).expected.get("semisimple"):
            continue
        L = _presentation(name)
        for seed in seeds:
            if not rank_equality_report(L, seed=seed).equal:
                bad.append((name, seed))
    return ScenarioResult("CSA dimension equals its geometric rank", not bad, f"failing: {bad}" if bad else "")


def line_scenario(degree=6):
    affine = _presentation("line.affine")
    whole = Subspace.whole(affine)
    derived = bracket_span(affine, whole, whole)
    dx = parse_field("Dx", 1)
    checks = {
        "affine solvable": is_solvable(affine),
        "affine not nilpotent": not is_nilpotent(affine),
        "affine derived is <Dx>": derived == Subspace.span(affine, [coordinates_in(affine, dx)]),
    }
    sl2, sl2_exp = _presentation("line.sl2"), _presentation("line.sl2.exp")
    checks["sl2 types"] = str(identify_type(sl2)) == str(identify_type(sl2_exp)) == "A1"
    checks["same Chevalley constants"] = chevalley_basis(sl2).sc == chevalley_basis(sl2_exp).sc
    borel = BorelChoice((parse_field("-2*x*Dx", 1),), (dx,))
    checks["no highest weight vectors"] = highest_weight_vectors(sl2, borel, ansatz_space(1, degree)) == []
    failed = [name for name, ok in checks.items() if not ok]
    return ScenarioResult("line classification", not failed, ", ".join(failed))


def rank_two_scenario(degree=3):
    types = {str(label) for label in enumerate_types_up_to_rank(2)}
    checks = {"rank <= 2 types": types == {"A1", "A1xA1", "A2", "B2", "G2"}}
    for name, label in (("line.sl2", "A1"), ("C2.sl2xsl2", "A1xA1"), ("C2.sl3", "A2")):
        checks[f"{name} is {label}"] = str(identify_type(_presentation(name))) == label
    outcome = staged_extension_protocol(_presentation("C2.sl2xsl2"), "B2", A=ansatz_space(2, degree))
    checks["B2 not realizable on C2"] = not outcome.feasible
    failed = [name for name, ok in checks.items() if not ok]
    return ScenarioResult("rank-two types on the plane", not failed, ", ".join(failed))


def g2_scenario(names=("C3.sl3.proj", "C3.sl3.lin"), degree=3):
    feasible = []
    for name in names:
        outcome = staged_extension_protocol(_presentation(name), "G2", A=ansatz_space(3, degree))
        if outcome.feasible:
            feasible.append(name)
        else:
            logger.info(f"{name}: G2 extension fails at stage {outcome.report.stage}")
    return ScenarioResult("A2 on C3 does not extend to G2", not feasible, f"extended: {feasible}" if feasible else "")


def _root_support_ok(L):
    _, roots = chevalley_index(L)
    for (a, i), (b, j) in itertools.combinations(roots.items(), 2):
        total = tuple(x + y for x, y in zip(a, b))
        if not any(total):
            continue
        nonzero = any(L.bracket_vectors(L.basis_vector(i), L.basis_vector(j)))
        if nonzero != (total in roots):
            return False
    return True


def chevalley_scenario(dims=(("A1", 3), ("A2", 8), ("B2", 10), ("G2", 14), ("A3", 15))):
    bad = []
    for label, dim in dims:
        L = chevalley_constants(label)
        try:
            L.check_axioms()
        except LieToolkitError:
            bad.append(label)
            continue
        if L.dim != dim or not _root_support_ok(L):
            bad.append(label)
    return ScenarioResult("Chevalley constants", not bad, f"failing: {bad}" if bad else "")


def levi_scenario():
    L = _presentation("C2.sl2.plus.radical")
    dy = coordinates_in(L, parse_field("Dy", 2))
    R = Subspace.span(L, [dy])
    S = Subspace.span(L, [L.basis_vector(k) for k in range(3)])
    report = check_levi(L, S, R)
    passed = radical(L) == R and report.ok
    return ScenarioResult("Levi decomposition", passed, ", ".join(report.failures()))


SCENARIOS = (
    catalog_scenario,
    rank_one_family_scenario,
    csa_equality_scenario,
    line_scenario,
    rank_two_scenario,
    g2_scenario,
    chevalley_scenario,
    levi_scenario,
)


def run_scenarios(only=None) -> Tuple[ScenarioResult, ...]:
    results = []
    for scenario in SCENARIOS:
        if only and scenario.__name__.removesuffix("_scenario") not in only:
            continue
        try:
            result = scenario()
        except LieToolkitError as exc:
            result = ScenarioResult(scenario.__name__, False, f"{type(exc).__name__}: {exc}")
        logger.info(f"{result.name}: {'pass' if result.passed else 'FAIL'}")
        results.append(result)
    return tuple(results)
