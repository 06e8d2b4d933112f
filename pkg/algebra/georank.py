"""
Geometric rank: the generic rank of the evaluation matrix of an algebra of
vector fields, i.e. max over p of dim span{X(p) : X in L}.

Certificates are exact: a minor is nonzero iff its canonical CoeffFn is
nonempty. Random evaluation only reorders the minor search.
"""
import itertools
import logging
import random
from dataclasses import dataclass
from typing import Optional, Tuple

import mpmath

from .conf import lie_setting
from .errors import LieInternalError, NoExactWitness, NotSemisimple
from .kernel import ApproxValue, CoeffFn
from .linalg import mat_rank, matrix, rref
from .liepresent import LiePresentation, is_semisimple
from .utils.scalars import scalar

logger = logging.getLogger(__name__)

PREFILTER_RANGE = 7


@dataclass(frozen=True)
class GeometricRank:
    rank: int
    certificate: CoeffFn
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]


@dataclass(frozen=True)
class Witness:
    point: Tuple[int, ...]
    value: object
    exact: bool


def _fields(L):
    return list(L.basis) if isinstance(L, LiePresentation) else list(L)


def determinant(entries):
    """Exact determinant of a square matrix of CoeffFns (Laplace along the first row)."""
    n = len(entries)
    if n == 0:
        return None
    if n == 1:
        return entries[0][0]
    total = None
    for j, head in enumerate(entries[0]):
        if head.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in entries[1:]]
        sub = determinant(minor)
        if sub.is_zero():
            continue
        term = head * sub
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else CoeffFn.zero(entries[0][0].dim)


def _minor(fields, rows, cols):
    return determinant([[fields[i].comps[k] for k in cols] for i in rows])


def _prefilter(fields, dim, seed):
    """Rank and a pivot minor of the evaluation matrix at a random integer point."""
    rng = random.Random(seed)
    point = tuple(scalar(rng.randint(-PREFILTER_RANGE, PREFILTER_RANGE)) for _ in range(dim))
    M = matrix([list(v.evaluate(point)) for v in fields], dim)
    _, cols = rref(M)
    _, rows = rref(M.transpose())
    return len(cols), tuple(rows), tuple(cols)


def geometric_rank(L, seed=None) -> GeometricRank:
    """Largest r with a nonzero r x r minor, searched by increasing size.

    Minors of one size are visited in lex order on row subsets, then column
    subsets; for polynomial algebras the pivot minor of a random evaluation is
    tried first and certifies every size up to its rank.
    """
    fields = _fields(L)
    if not fields:
        return GeometricRank(0, CoeffFn.constant(getattr(L, "ambient_dim", 1) or 1, 1), (), ())
    dim = fields[0].dim
    d = len(fields)
    top = min(d, dim)
    seed = lie_setting("SEED", seed)

    best = GeometricRank(0, CoeffFn.constant(dim, 1), (), ())
    start = 1
    if all(v.is_polynomial() for v in fields):
        r0, rows, cols = _prefilter(fields, dim, seed)
        if r0:
            best = GeometricRank(r0, _minor(fields, rows, cols), rows, cols)
            if best.certificate.is_zero():
                raise LieInternalError("pivot minor vanishes identically")
            start = r0 + 1
        logger.debug(f"pre-filter rank {r0}")

    for size in range(start, top + 1):
        found = None
        for rows in itertools.combinations(range(d), size):
            for cols in itertools.combinations(range(dim), size):
                minor = _minor(fields, rows, cols)
                if not minor.is_zero():
                    found = GeometricRank(size, minor, rows, cols)
                    break
            if found:
                break
        if found is None:
            break
        best = found
    logger.info(f"geometric rank {best.rank} for {d} fields on C^{dim}")
    return best


def _search_order(dim, box):
    points = itertools.product(range(-box, box + 1), repeat=dim)
    return sorted(points, key=lambda p: (sum(abs(c) for c in p), tuple(abs(c) for c in p), tuple(c < 0 for c in p)))


def witness_point(certificate: CoeffFn, box=None, precision=None) -> Witness:
    """First point of the box (by L1 norm, then |coords|, positive signs first) where the certificate is nonzero.

    Exponential certificates give an approximate witness flagged as such.
    The box is enlarged once before NoExactWitness is raised.
    """
    box = lie_setting("WITNESS_BOX", box)
    if certificate.is_zero():
        raise NoExactWitness("certificate vanishes identically")
    tried = set()
    for half_width in (box, 2 * box):
        for point in _search_order(certificate.dim, half_width):
            if point in tried:
                continue
            tried.add(point)
            value = certificate.evaluate(point, precision=precision)
            if isinstance(value, ApproxValue):
                with mpmath.workdps(value.digits):
                    if abs(value.value) > mpmath.mpf(10) ** (-(value.digits // 2)):
                        return Witness(point, value, False)
            elif value:
                return Witness(point, value, True)
        logger.debug(f"no witness in box of half-width {half_width}")
    raise NoExactWitness(f"no witness point with coordinates in [-{2 * box}, {2 * box}]")


def rank_at_point(L, point) -> int:
    """Exact rank of the evaluation matrix at a point (polynomial fields only)."""
    fields = _fields(L)
    if not fields:
        return 0
    return mat_rank(matrix([list(v.evaluate(point)) for v in fields], fields[0].dim))


@dataclass(frozen=True)
class RankEqualityReport:
    csa_dim: int
    csa_geometric_rank: int
    algebra_dim: int
    algebra_geometric_rank: int
    witness: Optional[Witness] = None

    @property
    def equal(self):
        return self.csa_dim == self.csa_geometric_rank


def rank_equality_report(L: LiePresentation, seed=None, trials=None) -> RankEqualityReport:
    """CSA dimension against the geometric rank of the CSA fields, plus L's own rank."""
    from .cartan_roots import find_cartan

    if not is_semisimple(L):
        raise NotSemisimple("rank equality is stated for semisimple algebras")
    C = find_cartan(L, seed=seed, trials=trials)
    csa_rank = geometric_rank(C.csa.fields(), seed=seed)
    whole = geometric_rank(L, seed=seed)
    witness = witness_point(csa_rank.certificate) if csa_rank.rank else None
    return RankEqualityReport(C.rank, csa_rank.rank, L.dim, whole.rank, witness)
