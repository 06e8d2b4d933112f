"""
Finite-dimensional Lie algebras given by structure constants.

`LieStructure` is the abstract algebra (sc tensor plus labels); a
`LiePresentation` additionally carries the vector fields the constants were
solved from. All structural questions (Killing form, series, radical, ...)
are answered on the sc tensor by exact linear algebra.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Tuple

from .errors import DimensionMismatch, LieInternalError, LieToolkitError, NotClosed
from .linalg import RowSpan, mat_det, mat_kernel, matrix, rref, rows_of
from .utils.scalars import ZERO, to_scalar
from .vfields import VectorField, combine, coordinate_keys, coordinate_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LieStructure:
    """Structure constants sc[i][j][k]: [X_i, X_j] = sum_k sc[i][j][k] X_k."""
    sc: Tuple[Tuple[Tuple, ...], ...]
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        d = len(self.sc)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"X{k + 1}" for k in range(d)))
        if len(self.labels) != d:
            raise DimensionMismatch(d, len(self.labels))

    @classmethod
    def from_table(cls, dim, table, labels=()):
        """Build from a sparse {(i, j): {k: c}} table given for i < j."""
        sc = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), row in table.items():
            for k, c in row.items():
                c = to_scalar(c)
                sc[i][j][k] += c
                sc[j][i][k] -= c
        return cls(_freeze(sc), tuple(labels))

    @property
    def dim(self):
        return len(self.sc)

    @cached_property
    def table(self):
        """Sparse bracket table {(i, j): {k: c}} with all nonzero entries."""
        out = {}
        for i, plane in enumerate(self.sc):
            for j, vec in enumerate(plane):
                row = {k: c for k, c in enumerate(vec) if c}
                if row:
                    out[(i, j)] = row
        return out

    def is_abelian(self):
        return not self.table

    def bracket_vectors(self, u, v):
        out = [ZERO] * self.dim
        for (i, j), row in self.table.items():
            a, b = u[i], v[j]
            if a and b:
                ab = a * b
                for k, c in row.items():
                    out[k] += ab * c
        return tuple(out)

    def basis_vector(self, i):
        return tuple(to_scalar(1) if k == i else ZERO for k in range(self.dim))

    def ad_rows(self, u):
        """Rows of ad(u): entry [k][j] is the X_k coefficient of [u, X_j]."""
        d = self.dim
        out = [[ZERO] * d for _ in range(d)]
        for (i, j), row in self.table.items():
            a = u[i]
            if a:
                for k, c in row.items():
                    out[k][j] += a * c
        return out

    def ad_matrix(self, u):
        return matrix(self.ad_rows(u), self.dim)

    def check_axioms(self):
        """Assert antisymmetry and the Jacobi identity exactly."""
        d = self.dim
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    if self.sc[i][j][k] != -self.sc[j][i][k]:
                        raise LieInternalError(f"structure constants not antisymmetric at ({i}, {j}, {k})")
        for i in range(d):
            for j in range(i + 1, d):
                for l in range(j + 1, d):
                    total = [ZERO] * d
                    for a, b, c in ((i, j, l), (j, l, i), (l, i, j)):
                        for m, coeff in self.table.get((a, b), {}).items():
                            for n, inner in self.table.get((m, c), {}).items():
                                total[n] += coeff * inner
                    if any(total):
                        raise LieInternalError(f"Jacobi identity fails for ({i}, {j}, {l})")
        return True


def _freeze(sc):
    return tuple(tuple(tuple(vec) for vec in plane) for plane in sc)


@dataclass(frozen=True)
class LiePresentation(LieStructure):
    """Structure constants together with the vector fields they describe."""
    ambient_dim: int = 0
    basis: Tuple[VectorField, ...] = field(default=())

    def field_of(self, coords):
        return combine(self.basis, coords, self.ambient_dim)


@dataclass(frozen=True)
class Subspace:
    """A subspace of a Lie algebra, stored as rows in reduced echelon form."""
    parent: LieStructure
    rows: Tuple[Tuple, ...]

    @classmethod
    def span(cls, parent, vectors):
        vectors = [tuple(to_scalar(c) for c in v) for v in vectors]
        return cls(parent, tuple(RowSpan(vectors, parent.dim).basis()))

    @classmethod
    def whole(cls, parent):
        return cls.span(parent, [parent.basis_vector(i) for i in range(parent.dim)])

    @classmethod
    def zero(cls, parent):
        return cls(parent, ())

    @property
    def dim(self):
        return len(self.rows)

    @cached_property
    def _span(self):
        return RowSpan(self.rows, self.parent.dim)

    def contains(self, v):
        return self._span.contains(v)

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.rows)

    def coordinates(self, v):
        return self._span.coordinates(v)

    def fields(self):
        if not isinstance(self.parent, LiePresentation):
            raise LieToolkitError("subspace of an abstract structure has no fields")
        return [self.parent.field_of(row) for row in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.parent is other.parent and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)


def span_reduce(fields):
    """Maximal independent sublist of `fields`, first-seen order."""
    fields = list(fields)
    if not fields:
        return []
    dim = fields[0].dim
    for v in fields:
        if v.dim != dim:
            raise DimensionMismatch(dim, v.dim)
    keys, rows = coordinate_matrix(fields)
    if not keys:
        return []
    # columns are the fields, so pivot columns are the first independent ones
    _, pivots = rref(matrix(rows, len(keys)).transpose())
    return [fields[p] for p in pivots]


def closure_check(basis, labels=()) -> LiePresentation:
    """Solve all pairwise brackets against the span of `basis`.

    Raises NotClosed(i, j, residual) at the first pair (i < j, lexicographic)
    whose bracket leaves the span.
    """
    basis = list(basis)
    d = len(basis)
    dim = basis[0].dim if basis else 0
    for v in basis:
        if v.dim != dim:
            raise DimensionMismatch(dim, v.dim)
    keys, rows = coordinate_matrix(basis)
    span = RowSpan(rows, len(keys))
    if span.rank != d:
        raise LieToolkitError("basis fields are linearly dependent")
    key_index = {key: n for n, key in enumerate(keys)}
    logger.info(f"closure check: {d} fields on C^{dim}")

    table = {}
    for i in range(d):
        for j in range(i + 1, d):
            coords = basis[i].bracket(basis[j]).coordinates()
            outside = {key: c for key, c in coords.items() if key not in key_index}
            vec = [ZERO] * len(keys)
            for key, c in coords.items():
                if key in key_index:
                    vec[key_index[key]] = c
            residual, solution = span.reduce(vec)
            if outside or any(residual):
                leftover = dict(outside)
                leftover.update({keys[n]: c for n, c in enumerate(residual) if c})
                logger.debug(f"bracket ({i}, {j}) leaves the span")
                raise NotClosed(i, j, VectorField.from_coordinates(dim, leftover))
            row = {k: c for k, c in enumerate(solution) if c}
            if row:
                table[(i, j)] = row

    base = LieStructure.from_table(d, table, labels)
    presentation = LiePresentation(base.sc, base.labels, ambient_dim=dim, basis=tuple(basis))
    presentation.check_axioms()
    return presentation


def killing_form(L: LieStructure):
    """K(x, y) = trace(ad x o ad y) on the basis, as a DomainMatrix."""
    d = L.dim
    ads = [L.ad_rows(L.basis_vector(i)) for i in range(d)]
    rows = [[ZERO] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            a, b = ads[i], ads[j]
            value = sum((a[k][l] * b[l][k] for k in range(d) for l in range(d) if a[k][l] and b[l][k]), ZERO)
            rows[i][j] = rows[j][i] = value
    return matrix(rows, d)


def bracket_span(L: LieStructure, A: Subspace, B: Subspace) -> Subspace:
    """The subspace [A, B]."""
    return Subspace.span(L, [L.bracket_vectors(a, b) for a in A.rows for b in B.rows])


def derived_series(L: LieStructure):
    series = [Subspace.whole(L)]
    while series[-1].dim:
        nxt = bracket_span(L, series[-1], series[-1])
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
    return series


def lower_central_series(L: LieStructure):
    whole = Subspace.whole(L)
    series = [whole]
    while series[-1].dim:
        nxt = bracket_span(L, whole, series[-1])
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
    return series


def _annihilator_rows(L, S: Subspace):
    """Rows w with w . s = 0 for every s in S."""
    if not S.dim:
        return [L.basis_vector(k) for k in range(L.dim)]
    return mat_kernel(matrix(S.rows, L.dim))


def normalizer(L: LieStructure, S: Subspace) -> Subspace:
    """{x : [x, S] in S}."""
    d = L.dim
    annihilator = _annihilator_rows(L, S)
    constraints = []
    for s in S.rows:
        # column i of the image map is [X_i, s]
        images = [L.bracket_vectors(L.basis_vector(i), s) for i in range(d)]
        for w in annihilator:
            constraints.append([sum((a * b for a, b in zip(w, images[i])), ZERO) for i in range(d)])
    if not constraints:
        return Subspace.whole(L)
    return Subspace.span(L, mat_kernel(matrix(constraints, d)))


def centralizer(L: LieStructure, S: Subspace) -> Subspace:
    """{x : [x, S] = 0}."""
    d = L.dim
    constraints = []
    for s in S.rows:
        images = [L.bracket_vectors(L.basis_vector(i), s) for i in range(d)]
        constraints.extend([images[i][k] for i in range(d)] for k in range(d))
    if not constraints:
        return Subspace.whole(L)
    return Subspace.span(L, mat_kernel(matrix(constraints, d)))


def center(L: LieStructure) -> Subspace:
    return centralizer(L, Subspace.whole(L))


def is_ideal(L: LieStructure, S: Subspace) -> bool:
    return all(S.contains(L.bracket_vectors(L.basis_vector(i), s)) for i in range(L.dim) for s in S.rows)


def subalgebra(L: LieStructure, S: Subspace) -> LieStructure:
    """Structure constants of a closed subspace in its rref basis."""
    k = S.dim
    table = {}
    for a in range(k):
        for b in range(a + 1, k):
            image = L.bracket_vectors(S.rows[a], S.rows[b])
            residual, coords = S._span.reduce(image)
            if any(residual):
                raise NotClosed(a, b, residual)
            row = {n: c for n, c in enumerate(coords) if c}
            if row:
                table[(a, b)] = row
    return LieStructure.from_table(k, table)


def is_abelian(L: LieStructure) -> bool:
    return L.is_abelian()


def is_nilpotent(L: LieStructure) -> bool:
    return lower_central_series(L)[-1].dim == 0


def is_semisimple(L: LieStructure) -> bool:
    if L.dim == 0:
        return True
    return bool(mat_det(killing_form(L)))


def is_solvable(L: LieStructure) -> bool:
    """Cartan criterion K(L, [L, L]) = 0, cross-checked against the derived series."""
    derived = bracket_span(L, Subspace.whole(L), Subspace.whole(L))
    K = killing_form(L)
    cartan = all(not any(row) for row in rows_of(matrix(derived.rows, L.dim) * K)) if derived.dim else True
    by_series = derived_series(L)[-1].dim == 0
    if cartan != by_series:
        raise LieInternalError("Cartan criterion disagrees with the derived series")
    return cartan


def _subspace_is_solvable(L, S: Subspace) -> bool:
    current = S
    while current.dim:
        nxt = bracket_span(L, current, current)
        if nxt.dim == current.dim:
            return False
        current = nxt
    return True


def radical(L: LieStructure) -> Subspace:
    """Solvable radical {x : K(x, [L, L]) = 0}."""
    derived = bracket_span(L, Subspace.whole(L), Subspace.whole(L))
    if not derived.dim:
        return Subspace.whole(L)
    constraints = matrix(derived.rows, L.dim) * killing_form(L)
    rad = Subspace.span(L, mat_kernel(constraints))
    if not _subspace_is_solvable(L, rad):
        raise LieInternalError("Killing-orthogonal of [L, L] is not solvable")
    return rad


@dataclass(frozen=True)
class LeviCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class LeviReport:
    checks: Tuple[LeviCheck, ...]

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c.name for c in self.checks if not c.passed]


def check_levi(L: LieStructure, S: Subspace, R: Subspace) -> LeviReport:
    """Verify a supplied decomposition L = S + R; each failed condition is a report entry."""
    checks = []
    try:
        structure = subalgebra(L, S)
        checks.append(LeviCheck("S closed", True))
        semisimple = is_semisimple(structure)
        checks.append(LeviCheck("S semisimple", semisimple, "" if semisimple else "S not semisimple"))
    except NotClosed:
        checks.append(LeviCheck("S closed", False, "S is not a subalgebra"))
        checks.append(LeviCheck("S semisimple", False, "S not semisimple"))
    rad = radical(L)
    same = rad.rows == R.rows
    checks.append(LeviCheck("R is the radical", same, "" if same else f"radical has dimension {rad.dim}"))
    ideal = is_ideal(L, R)
    checks.append(LeviCheck("R ideal", ideal, "" if ideal else "R is not an ideal"))
    total = Subspace.span(L, list(S.rows) + list(R.rows))
    direct = S.dim + R.dim == L.dim and total.dim == L.dim
    checks.append(LeviCheck("L = S + R direct", direct, "" if direct else "S and R do not span L directly"))
    return LeviReport(tuple(checks))


def coordinates_in(L: LiePresentation, v: VectorField):
    """Coordinates of a field in the presentation basis (Infeasible if outside)."""
    keys = coordinate_keys(list(L.basis) + [v])
    _, rows = coordinate_matrix(L.basis, keys)
    _, (target,) = coordinate_matrix([v], keys)
    return RowSpan(rows, len(keys)).coordinates(target)

