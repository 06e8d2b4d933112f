"""
Shipped realizations and their self-verification.

Each fixture is a pair of files in the realizations directory:

    <stem>.fields   one vector field per line in the field DSL ('#' comments)
    <stem>.json     {"format": 1, "name", "N", "source", "expected": {...}}

The expectation block is never trusted: every value is recomputed by the
library when the fixture is loaded or verified. See docs/FIXTURES.md.
"""
import json
import logging
from dataclasses import dataclass, field
from fnmatch import fnmatch
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from .conf import lie_setting
from .dsl import format_field, parse_field, parse_fields, parse_function
from .errors import LieInternalError, LieToolkitError, NotClosed, UnknownFixture
from .liepresent import (
    Subspace,
    bracket_span,
    closure_check,
    coordinates_in,
    is_abelian,
    is_nilpotent,
    is_semisimple,
    is_solvable,
    radical,
)
from .vfields import PolyAutomorphism

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1

FLAG_KEYS = ("abelian", "nilpotent", "solvable", "semisimple")
# invariants that must agree between fixtures related by an automorphism
PUSHFORWARD_KEYS = ("dim", *FLAG_KEYS, "type", "geometric_rank", "csa_rank", "radical", "derived")


def realizations_dir(directory=None) -> Path:
    configured = lie_setting("REALIZATIONS_DIR", directory)
    return Path(configured) if configured else Path(__file__).resolve().parent / "realizations"


@dataclass(frozen=True)
class Fixture:
    name: str
    dim: int
    source: Path
    fields: Tuple[str, ...]
    expected: Dict[str, Any]
    pushforward: Optional[Dict[str, Any]] = None
    radical_fields: Tuple[str, ...] = ()
    description: str = ""
    aliases: Tuple[str, ...] = ()

    def vector_fields(self):
        return parse_fields("\n".join(self.fields), self.dim)

    def presentation(self):
        return closure_check(self.vector_fields())


def _read_fixture(path: Path) -> Fixture:
    try:
        meta = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise LieToolkitError(f"{path.name}: invalid JSON ({exc})") from exc
    if meta.get("format") != FORMAT_VERSION:
        raise LieToolkitError(f"{path.name}: unsupported fixture format {meta.get('format')!r}")
    source = path.parent / meta["source"]
    raw_lines = source.read_text(encoding="utf-8").splitlines()
    lines = [text for text in (raw.split("#", 1)[0].strip() for raw in raw_lines) if text]
    comments = [raw[1:].strip() for raw in raw_lines if raw.startswith("#")]
    description = next((c for c in comments if c != meta["name"]), "")
    return Fixture(
        name=meta["name"],
        dim=int(meta["N"]),
        source=source,
        fields=tuple(lines),
        expected=dict(meta["expected"]),
        pushforward=meta.get("pushforward"),
        radical_fields=tuple(meta.get("radical_fields", ())),
        description=description,
        aliases=tuple(meta.get("aliases", ())),
    )


@lru_cache(maxsize=None)
def _index(directory: Path):
    fixtures = {}
    for path in sorted(directory.glob("*.json")):
        fix = _read_fixture(path)
        if fix.name in fixtures:
            raise LieToolkitError(f"duplicate fixture name {fix.name!r} in {path.name}")
        fixtures[fix.name] = fix
    logger.debug(f"indexed {len(fixtures)} fixtures in {directory}")
    return fixtures


@lru_cache(maxsize=None)
def _aliases(directory: Path):
    fixtures = _index(directory)
    names = {}
    for fix in fixtures.values():
        for alias in fix.aliases:
            if alias in fixtures or alias in names:
                raise LieToolkitError(f"alias {alias!r} of {fix.name!r} is already taken")
            names[alias] = fix.name
    return names


def load_fixture(name, directory=None) -> Fixture:
    """Read a fixture (by name or alias) without verifying it."""
    directory = realizations_dir(directory)
    fixtures = _index(directory)
    name = _aliases(directory).get(name, name)
    if name not in fixtures:
        raise UnknownFixture(f"unknown fixture {name!r}", name=name)
    return fixtures[name]


def list_fixtures(pattern=None, directory=None):
    names = _index(realizations_dir(directory))
    return [name for name in names if pattern is None or fnmatch(name, pattern)]


@dataclass(frozen=True)
class FixtureCheck:
    key: str
    expected: Any
    actual: Any

    @property
    def passed(self):
        return self.expected == self.actual


@dataclass(frozen=True)
class FixtureReport:
    name: str
    checks: Tuple[FixtureCheck, ...] = ()
    error: str = ""

    @property
    def ok(self):
        return not self.error and all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]


@dataclass(frozen=True)
class CatalogReport:
    reports: Tuple[FixtureReport, ...] = field(default=())

    @property
    def ok(self):
        return all(r.ok for r in self.reports)

    @property
    def failed(self):
        return [r.name for r in self.reports if not r.ok]


def compute_invariants(L, seed=None) -> Dict[str, Any]:
    """Everything the expectation block can state, recomputed from the presentation."""
    from .cartan_roots import find_cartan, identify_type, root_decomposition
    from .georank import geometric_rank

    whole = Subspace.whole(L)
    actual = {
        "closed": True,
        "dim": L.dim,
        "abelian": is_abelian(L),
        "nilpotent": is_nilpotent(L),
        "solvable": is_solvable(L),
        "semisimple": is_semisimple(L),
        "radical": radical(L).dim,
        "derived": bracket_span(L, whole, whole).dim,
        "geometric_rank": geometric_rank(L, seed=seed).rank,
        "type": None,
        "csa_rank": None,
    }
    if actual["semisimple"] and L.dim:
        C = find_cartan(L, seed=seed)
        actual["type"] = str(identify_type(root_decomposition(L, C)))
        actual["csa_rank"] = C.rank
        actual["csa_geometric_rank"] = geometric_rank(C.csa.fields(), seed=seed).rank
    return actual


def _round_trip_failures(fields):
    return [n for n, v in enumerate(fields) if parse_field(format_field(v), v.dim) != v]


def _pushforward_checks(fix: Fixture, L, actual, directory):
    block = fix.pushforward
    other = load_fixture(block["of"], directory)
    phi = PolyAutomorphism(
        fix.dim,
        [parse_function(text, fix.dim) for text in block["forward"]],
        [parse_function(text, fix.dim) for text in block["inverse"]],
    )
    pushed = [phi.pushforward(v) for v in other.vector_fields()]
    try:
        for v in pushed:
            coordinates_in(L, v)
        same_span = len(pushed) == L.dim
    except LieToolkitError:
        same_span = False
    checks = [FixtureCheck("pushforward span", True, same_span)]
    for key in PUSHFORWARD_KEYS:
        checks.append(FixtureCheck(f"pushforward {key}", other.expected.get(key), actual.get(key)))
    return checks


def verify_fixture(fix: Fixture, seed=None, directory=None) -> FixtureReport:
    """Recompute every expectation of `fix`; failures are report entries, not exceptions."""
    logger.info(f"verifying fixture {fix.name}")
    try:
        fields = fix.vector_fields()
        checks = [FixtureCheck("round trip", [], _round_trip_failures(fields))]
        try:
            L = closure_check(fields)
        except NotClosed as exc:
            checks.append(FixtureCheck("closed", fix.expected.get("closed"), False))
            logger.warning(f"{fix.name}: bracket of fields {exc.i + 1} and {exc.j + 1} leaves the span")
            return FixtureReport(fix.name, tuple(checks))

        actual = compute_invariants(L, seed=seed)
        for key, expected in fix.expected.items():
            checks.append(FixtureCheck(key, expected, actual.get(key)))
        if actual["csa_rank"] is not None:
            checks.append(FixtureCheck("csa rank equality", actual["csa_rank"], actual["csa_geometric_rank"]))
        if fix.radical_fields:
            R = Subspace.span(L, [coordinates_in(L, parse_field(text, fix.dim)) for text in fix.radical_fields])
            checks.append(FixtureCheck("radical fields", True, R == radical(L)))
        if fix.pushforward:
            checks.extend(_pushforward_checks(fix, L, actual, directory))
    except LieToolkitError as exc:
        logger.warning(f"{fix.name}: verification error {exc}")
        return FixtureReport(fix.name, error=f"{type(exc).__name__}: {exc}")

    report = FixtureReport(fix.name, tuple(checks))
    for check in report.failures():
        logger.warning(f"{fix.name}: {check.key} expected {check.expected!r}, got {check.actual!r}")
    return report


@lru_cache(maxsize=None)
def _verified(name, directory: Path):
    fix = load_fixture(name, directory)
    report = verify_fixture(fix, directory=directory)
    if not report.ok:
        failed = ", ".join(c.key for c in report.failures()) or report.error
        raise LieInternalError(f"fixture {name} fails self-verification: {failed}", name=name)
    return fix


def fixture(name, directory=None) -> Fixture:
    """Load a fixture and verify its expectations (once per process)."""
    directory = realizations_dir(directory)
    return _verified(load_fixture(name, directory).name, directory)


def verify_all(pattern=None, seed=None, directory=None) -> CatalogReport:
    reports = []
    for name in list_fixtures(pattern, directory):
        reports.append(verify_fixture(load_fixture(name, directory), seed=seed, directory=directory))
    result = CatalogReport(tuple(reports))
    logger.info(f"catalog verification: {len(reports) - len(result.failed)}/{len(reports)} passed")
    return result
