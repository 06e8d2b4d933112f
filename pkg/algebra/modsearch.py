"""
Searches inside finite ansatz spaces of vector fields.

An AnsatzSpace is the span of x^alpha e^<lambda,x> d/dx_k with |alpha| <= d
and lambda in a finite frequency set. Every search here is linear algebra on
the coordinates of that span; infeasibility is always a statement about the
given (d, frequencies) and is reported together with them.
"""
import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Mapping, Optional, Tuple

from .cartan_roots import (
    chevalley_basis, chevalley_index, find_cartan, identify_type, root_decomposition, root_is_positive,
    simple_system,
)
from .conf import lie_setting
from .errors import (
    Infeasible, IrrationalSpectrum, LieInternalError, LieToolkitError, NotClosed, NotSemisimple, Truncation,
)
from .linalg import RowSpan, eigenvalues, identity, mat_kernel, mat_solve, mat_vec, matrix
from .liepresent import LiePresentation, closure_check, span_reduce
from .rootsystems import TypeLabel, label_cartan_matrix, positive_roots
from .utils.scalars import ZERO, format_scalar, scalar, scalar_key, to_scalar
from .vfields import VectorField, combine, coordinate_key_order

logger = logging.getLogger(__name__)


def monomials(dim, degree):
    """Exponent tuples with total degree <= degree."""
    return [alpha for alpha in itertools.product(range(degree + 1), repeat=dim) if sum(alpha) <= degree]


@dataclass(frozen=True)
class AnsatzSpace:
    dim: int
    degree: int
    freqs: Tuple[Tuple, ...] = ()

    def __post_init__(self):
        freqs = self.freqs or ((ZERO,) * self.dim,)
        object.__setattr__(self, "freqs", tuple(tuple(to_scalar(c) for c in lam) for lam in freqs))

    @cached_property
    def keys(self):
        keys = [(k, alpha, lam) for lam in self.freqs for k in range(self.dim) for alpha in monomials(self.dim, self.degree)]
        return sorted(keys, key=coordinate_key_order)

    @cached_property
    def index(self):
        return {key: n for n, key in enumerate(self.keys)}

    @property
    def size(self):
        return len(self.keys)

    @cached_property
    def basis(self):
        return tuple(VectorField.from_coordinates(self.dim, {key: scalar(1)}) for key in self.keys)

    def contains(self, v: VectorField):
        return all(key in self.index for key in v.coordinates())

    def coordinates(self, v: VectorField):
        coords = [ZERO] * self.size
        for key, c in v.coordinates().items():
            if key not in self.index:
                raise Truncation(f"field leaves the ansatz (degree {self.degree})", field=v)
            coords[self.index[key]] = c
        return tuple(coords)

    def field(self, coords):
        return VectorField.from_coordinates(self.dim, {key: c for key, c in zip(self.keys, coords) if c})

    def describe(self):
        return {"d": self.degree, "lambda_set": [[format_scalar(c) for c in lam] for lam in self.freqs]}


def ansatz_space(dim, degree=None, freqs=()):
    return AnsatzSpace(dim, lie_setting("DEFAULT_DEGREE", degree), tuple(freqs))


@dataclass(frozen=True)
class BorelChoice:
    cartan: Tuple[VectorField, ...]
    positives: Tuple[VectorField, ...]


def _signed_lex(perm, signs):
    """Lex positivity on the permuted, sign-flipped root coordinates."""
    def positive(root):
        return root_is_positive(tuple(root[p] if s > 0 else -root[p] for p, s in zip(perm, signs)))
    return positive


def _borel(R, is_positive=None):
    system = simple_system(R, is_positive)
    return BorelChoice(
        tuple(R.cartan.csa.fields()),
        tuple(R.root_spaces[root].fields()[0] for root in system.simple),
    )


def borel_from_roots(L: LiePresentation, R=None, A: Optional[AnsatzSpace] = None) -> BorelChoice:
    """CSA fields and simple positive root vectors.

    Without an ansatz this is the lex positivity choice. Given one, the signed
    lex orderings are tried in turn (plain lex first) and the first Borel whose
    fields keep A stable wins; Truncation when none does.
    """
    R = R or root_decomposition(L)
    if A is None:
        return _borel(R)
    rank = R.cartan.rank
    failure = None
    for perm in itertools.permutations(range(rank)):
        for signs in itertools.product((1, -1), repeat=rank):
            borel = _borel(R, _signed_lex(perm, signs))
            try:
                check_stable(A, borel.cartan + borel.positives)
            except Truncation as exc:
                failure = failure or exc
                continue
            logger.info(f"Borel choice: order {perm} signs {signs} keeps {A.describe()}")
            return borel
    raise failure


@dataclass(frozen=True)
class WeightVector:
    field: VectorField
    weight: Tuple


def check_stable(A: AnsatzSpace, generators):
    """Raise Truncation unless ad(g) maps A into A for every generator."""
    for g in generators:
        for b in A.basis:
            image = g.bracket(b)
            if not A.contains(image):
                raise Truncation(f"ad of a generator maps {b!r} out of the ansatz", field=b, generator=g)


def _ad_matrix(A, g):
    """Matrix of ad(g) on A (columns are images of basis fields)."""
    cols = [A.coordinates(g.bracket(b)) for b in A.basis]
    return matrix([[cols[j][i] for j in range(A.size)] for i in range(A.size)], A.size)


def _intersection_with_ansatz(S_fields, A):
    """Coordinates (in A) of a basis of span(S) intersected with A."""
    if not S_fields:
        return []
    outside = sorted({key for v in S_fields for key in v.coordinates() if key not in A.index}, key=coordinate_key_order)
    if not outside:
        return RowSpan([A.coordinates(v) for v in S_fields], A.size).basis()
    constraints = [[v.coordinates().get(key, ZERO) for v in S_fields] for key in outside]
    combos = mat_kernel(matrix(constraints, len(S_fields)))
    vectors = []
    for c in combos:
        inside = combine(S_fields, c, A.dim)
        vectors.append(A.coordinates(inside))
    return RowSpan(vectors, A.size).basis()


def highest_weight_vectors(S, B: BorelChoice, A: AnsatzSpace):
    """Highest-weight vectors in A modulo S: [e, W] = 0 for the positives, [h, W] = w(h) W.

    Representatives are rows of the reduced echelon basis of each weight space
    that are independent modulo (S inside A), first row first.
    """
    S_fields = list(S.basis) if isinstance(S, LiePresentation) else list(S)
    check_stable(A, list(B.cartan) + list(B.positives))

    if B.positives:
        stacked = []
        for e in B.positives:
            stacked.extend(_ad_matrix(A, e).to_list())
        kernel = mat_kernel(matrix(stacked, A.size))
    else:
        kernel = [tuple(scalar(1) if k == n else ZERO for k in range(A.size)) for n in range(A.size)]
    logger.info(f"highest weight search: joint kernel of dimension {len(kernel)} in an ansatz of size {A.size}")

    spaces = [((), kernel)] if kernel else []
    for h in B.cartan:
        H = _ad_matrix(A, h)
        refined = []
        for weight, vectors in spaces:
            span = RowSpan(vectors, A.size)
            try:
                cols = [span.coordinates(mat_vec(H, v)) for v in vectors]
            except Infeasible:
                raise LieToolkitError("Cartan fields do not preserve the joint kernel; inconsistent Borel choice")
            m = len(vectors)
            R = matrix([[cols[j][i] for j in range(m)] for i in range(m)], m)
            for mu in eigenvalues(R):
                coeffs = mat_kernel(R - identity(m) * mu)
                new = [tuple(sum((c * v[k] for c, v in zip(cc, vectors)), ZERO) for k in range(A.size)) for cc in coeffs]
                refined.append((weight + (mu,), new))
        spaces = refined

    inside = _intersection_with_ansatz(S_fields, A)
    found = []
    for weight, vectors in sorted(spaces, key=lambda item: [scalar_key(c) for c in item[0]]):
        canonical = RowSpan(vectors, A.size).basis()
        running = list(inside)
        for row in canonical:
            if RowSpan(running, A.size).contains(row):
                continue
            running.append(row)
            W = A.field(row)
            _assert_highest_weight(B, W, weight)
            found.append(WeightVector(W, tuple(weight)))
    return found


def _assert_highest_weight(B, W, weight):
    for e in B.positives:
        if not e.bracket(W).is_zero():
            raise LieInternalError("highest weight vector is not annihilated by a positive generator")
    for h, mu in zip(B.cartan, weight):
        if h.bracket(W) != W.scale(mu):
            raise LieInternalError("highest weight vector is not an eigenvector of the Cartan fields")


@dataclass(frozen=True)
class Relation:
    """[known, W] = sum_j c_j * known_j + w_coeff * W; c_j = None is a free parameter."""
    known: str
    expansion: Mapping[str, Optional[object]] = field(default_factory=dict)
    w_coeff: object = ZERO


@dataclass(frozen=True)
class SolutionFamily:
    particular: VectorField
    directions: Tuple[VectorField, ...]
    parameters: Dict[Tuple[int, str], object] = field(default_factory=dict)

    def member(self, coeffs):
        total = self.particular
        for v, c in zip(self.directions, coeffs):
            total = total + v.scale(c)
        return total


class _RelationSystem:
    """Linear system in the unknowns (coordinates of W in A, free parameters)."""

    def __init__(self, known, relations, A):
        self.known = dict(known)
        self.relations = list(relations)
        self.A = A
        for rel in self.relations:
            for label in [rel.known, *rel.expansion]:
                if label not in self.known:
                    raise LieToolkitError(f"relation refers to unknown label {label!r}")
        self.params = [(n, label) for n, rel in enumerate(self.relations) for label, c in rel.expansion.items() if c is None]
        self.width = A.size + len(self.params)
        self._images = {}
        self.blocks = [self._block(n, rel) for n, rel in enumerate(self.relations)]

    def _brackets(self, label):
        if label not in self._images:
            K = self.known[label]
            self._images[label] = [K.bracket(b).coordinates() for b in self.A.basis]
        return self._images[label]

    def _block(self, n, rel):
        mu = to_scalar(rel.w_coeff)
        columns = []
        for b, image in zip(self.A.basis, self._brackets(rel.known)):
            col = dict(image)
            if mu:
                for key, c in b.coordinates().items():
                    col[key] = col.get(key, ZERO) - mu * c
            columns.append(col)
        for m, label in self.params:
            columns.append({key: -c for key, c in self.known[label].coordinates().items()} if m == n else {})
        rhs = {}
        for label, c in rel.expansion.items():
            if c is not None:
                for key, value in self.known[label].coordinates().items():
                    rhs[key] = rhs.get(key, ZERO) + to_scalar(c) * value
        keys = sorted({key for col in columns for key in col} | set(rhs), key=coordinate_key_order)
        rows = [[col.get(key, ZERO) for col in columns] for key in keys]
        return rows, [rhs.get(key, ZERO) for key in keys]

    def solve(self, upto=None):
        rows, rhs = [], []
        for block_rows, block_rhs in self.blocks[:upto]:
            rows.extend(block_rows)
            rhs.extend(block_rhs)
        if not rows:
            zero = tuple([ZERO] * self.width)
            return zero, [tuple(scalar(1) if k == n else ZERO for k in range(self.width)) for n in range(self.width)]
        solution = mat_solve(matrix(rows, self.width), rhs)
        return solution.particular, list(solution.kernel)

    def w_field(self, z):
        return self.A.field(z[: self.A.size])

    def residual(self, n, z):
        """RHS - ([known, W] - mu W - free terms) of relation n at the unknown vector z."""
        rel = self.relations[n]
        W = self.w_field(z)
        lhs = self.known[rel.known].bracket(W) - W.scale(to_scalar(rel.w_coeff))
        rhs = VectorField.zero(self.A.dim)
        for label, c in rel.expansion.items():
            if c is not None:
                rhs = rhs + self.known[label].scale(c)
        return rhs - lhs


def extend_by_relations(known: Mapping[str, VectorField], relations, A: AnsatzSpace) -> SolutionFamily:
    """Affine family of W in A satisfying every relation, or Infeasible at the first violated one."""
    system = _RelationSystem(known, relations, A)
    try:
        particular, kernel = system.solve()
    except Infeasible:
        previous = ((ZERO,) * system.width, [])
        for n in range(1, len(system.relations) + 1):
            try:
                previous = system.solve(n)
            except Infeasible:
                residual = system.residual(n - 1, previous[0])
                raise Infeasible(
                    f"relation {n} is inconsistent with the ones before it",
                    relation_index=n - 1, residual=residual,
                )
        raise LieInternalError("full system infeasible but every prefix is feasible")
    W_parts = [v[: A.size] for v in kernel]
    directions = tuple(A.field(row) for row in RowSpan(W_parts, A.size).basis())
    params = {system.params[k]: particular[A.size + k] for k in range(len(system.params))}
    return SolutionFamily(system.w_field(particular), directions, params)


def centralizer_in_ansatz(fields, A: AnsatzSpace):
    """Fields of A commuting with every given field: [f, W] = 0."""
    known = {f"K{n + 1}": v for n, v in enumerate(fields)}
    family = extend_by_relations(known, [Relation(label) for label in known], A)
    return list(family.directions)


DEFAULT_EMBEDDINGS = {
    ("A1xA1", "B2"): ((1, 0), (1, 2)),
    ("A2", "G2"): ((0, 1), (3, 1)),
}


@dataclass(frozen=True)
class InfeasibilityReport:
    stage: object
    unknown_root: Optional[Tuple[int, ...]]
    relation_index: Optional[int]
    residual_field: Optional[VectorField]
    ansatz: AnsatzSpace
    exhaustive: bool
    message: str
    degree_independent: bool = False


@dataclass(frozen=True)
class ExtensionOutcome:
    feasible: bool
    presentation: Optional[LiePresentation] = None
    report: Optional[InfeasibilityReport] = None
    stages: Tuple[Tuple[int, ...], ...] = ()


def _root_label(root):
    return f"r({','.join(map(str, root))})"


def staged_extension_protocol(S: LiePresentation, target, embedding=None, A: AnsatzSpace = None, seed=None) -> ExtensionOutcome:
    """Try to extend the realized algebra S to the target type one missing root vector at a time.

    Each stage imposes, on the unknown W of target root g, only relations that
    are linear and free of scale: [h, W] = g(h) W, [e_b, W] = t e_(g+b) when
    g+b is a known root, [e_b, W] in the Cartan span when g+b = 0, and
    [e_b, W] = 0 when g+b is neither. The root with the most such relations
    goes first. A full closure check and type comparison finish the protocol.
    """
    target = TypeLabel.parse(target) if isinstance(target, str) else target
    A = A or ansatz_space(S.ambient_dim)
    source = identify_type(root_decomposition(S, find_cartan(S, seed=seed)))
    if source.rank != target.rank:
        raise LieToolkitError(f"embedding needs equal ranks, got {source} into {target}")
    if embedding is None:
        embedding = (
            tuple(tuple(1 if k == i else 0 for k in range(target.rank)) for i in range(target.rank))
            if source == target else DEFAULT_EMBEDDINGS.get((str(source), str(target)))
        )
        if embedding is None:
            raise LieToolkitError(f"no default embedding of {source} into {target}")
    r = target.rank

    chev = chevalley_basis(S, find_cartan(S, seed=seed))
    cartan_idx, source_roots = chevalley_index(chev)
    source_cartan = label_cartan_matrix(source)
    target_cartan = label_cartan_matrix(target)
    target_pos = positive_roots(target_cartan)
    target_roots = target_pos + [tuple(-c for c in root) for root in target_pos]
    root_set = set(target_roots)

    E = RowSpan([[scalar(c) for c in row] for row in embedding], r)
    if E.rank != r:
        raise LieToolkitError("embedding images are not independent")

    def image(root):
        return tuple(sum(c * e[k] for c, e in zip(root, embedding)) for k in range(r))

    def weight(root):
        a = E.coordinates([scalar(c) for c in root])
        return tuple(sum((a[j] * source_cartan[i][j] for j in range(r)), ZERO) for i in range(r))

    known = {f"h{i + 1}": chev.basis[k] for i, k in enumerate(cartan_idx)}
    known_roots = {}
    for root, k in source_roots.items():
        img = image(root)
        if img not in root_set:
            raise LieToolkitError(f"embedding sends root {root} to {img}, not a root of {target}")
        known_roots[img] = chev.basis[k]
    missing = [root for root in target_roots if root not in known_roots]
    logger.info(f"staged extension {source} -> {target}: {len(missing)} missing roots, ansatz degree {A.degree}")

    if not missing:
        if source != target:
            raise LieInternalError("no missing roots but types differ")
        return ExtensionOutcome(True, S)

    def relations_for(gamma):
        rels = [Relation(f"h{i + 1}", {}, w) for i, w in enumerate(weight(gamma))]
        for beta in target_roots:
            if beta not in known_roots:
                continue
            total = tuple(a + b for a, b in zip(gamma, beta))
            label = _root_label(beta)
            if not any(total):
                rels.append(Relation(label, {f"h{i + 1}": None for i in range(r)}))
            elif total in known_roots:
                rels.append(Relation(label, {_root_label(total): None}))
            elif total not in root_set:
                rels.append(Relation(label))
        return rels

    exhaustive = True
    stages = []
    while missing:
        for root, v in known_roots.items():
            known[_root_label(root)] = v
        gamma = max(missing, key=lambda g: (len(relations_for(g)), -target_roots.index(g)))
        stage = len(stages) + 1
        rels = relations_for(gamma)
        system = _RelationSystem(known, rels, A)
        logger.debug(f"stage {stage}: root {gamma} with {len(rels)} relations")

        def directions(upto):
            _, kernel = system.solve(upto)
            return RowSpan([v[: A.size] for v in kernel], A.size).basis()

        found = directions(None)
        if not found:
            index = next(n for n in range(1, len(rels) + 1) if not directions(n)) - 1
            report = InfeasibilityReport(
                stage, gamma, index, None, A, exhaustive,
                f"no nonzero root vector for {gamma} in the ansatz (degree {A.degree})",
            )
            return ExtensionOutcome(False, None, report, tuple(stages))
        if len(found) > 1:
            exhaustive = False
        known_roots[gamma] = A.field(found[0])
        missing.remove(gamma)
        stages.append(gamma)

    fields = list(chev.basis) + [known_roots[g] for g in stages]
    try:
        assembled = closure_check(span_reduce(fields))
    except NotClosed as exc:
        report = InfeasibilityReport(
            "closure", None, None, exc.residual, A, exhaustive,
            f"assembled fields do not close (basis elements {exc.i + 1}, {exc.j + 1})",
        )
        return ExtensionOutcome(False, None, report, tuple(stages))
    try:
        label = identify_type(root_decomposition(assembled, find_cartan(assembled, seed=seed)))
    except (NotSemisimple, IrrationalSpectrum):
        label = None
    if assembled.dim != target.dimension or label != target:
        report = InfeasibilityReport("type", None, None, None, A, exhaustive, f"assembled algebra is not of type {target}")
        return ExtensionOutcome(False, None, report, tuple(stages))
    return ExtensionOutcome(True, assembled, None, tuple(stages))
