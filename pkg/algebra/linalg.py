"""
Exact linear algebra over QQ_I, on top of sympy's DomainMatrix.

Vectors are plain tuples of Scalars; matrices are DomainMatrix objects over
QQ_I. Elimination is always exact.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

from sympy import Poly, Symbol, factor_list
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from .errors import DimensionMismatch, Infeasible, IrrationalSpectrum, LieInternalError
from .utils.scalars import ZERO, scalar_key, to_scalar

logger = logging.getLogger(__name__)


def matrix(rows, ncols=None) -> DomainMatrix:
    """DomainMatrix over QQ_I from a list of rows (entries coerced to Scalars)."""
    rows = [[to_scalar(e) for e in row] for row in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    for row in rows:
        if len(row) != ncols:
            raise DimensionMismatch(ncols, len(row))
    return DomainMatrix(rows, (len(rows), ncols), QQ_I)


def zeros(m, n) -> DomainMatrix:
    return DomainMatrix.zeros((m, n), QQ_I)


def identity(n) -> DomainMatrix:
    return DomainMatrix.eye(n, QQ_I)


def rows_of(M: DomainMatrix):
    return [tuple(row) for row in M.to_list()]


def rref(M: DomainMatrix):
    """Reduced row echelon form and pivot columns; handles empty shapes."""
    m, n = M.shape
    if m == 0 or n == 0:
        return M, ()
    R, pivots = M.rref()
    return R, tuple(pivots)


def mat_rank(M: DomainMatrix) -> int:
    return len(rref(M)[1])


def _kernel_from_rref(rows, pivots, n):
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [ZERO] * n
        vec[f] = QQ_I.one
        for i, p in enumerate(pivots):
            vec[p] = -rows[i][f]
        basis.append(tuple(vec))
    return basis


def mat_kernel(M: DomainMatrix):
    """Basis of {v : M v = 0}; one vector per free column, free entry equal to 1."""
    _, n = M.shape
    R, pivots = rref(M)
    return _kernel_from_rref(rows_of(R), pivots, n)


@dataclass(frozen=True)
class Solution:
    particular: Tuple
    kernel: Tuple[Tuple, ...]


def _first_inconsistent_row(rows, n):
    """Index of the first equation (row of [A | b]) that contradicts the ones above it."""
    for k in range(1, len(rows) + 1):
        if n in rref(matrix(rows[:k], n + 1))[1]:
            return k - 1
    raise LieInternalError("inconsistent system with no inconsistent prefix")


def mat_solve(A: DomainMatrix, b) -> Solution:
    """One solution of A x = b plus a kernel basis, or Infeasible."""
    m, n = A.shape
    b = [to_scalar(c) for c in b]
    if len(b) != m:
        raise DimensionMismatch(m, len(b))
    aug = A.hstack(matrix([[c] for c in b], 1)) if m else zeros(0, n + 1)
    R, pivots = rref(aug)
    if n in pivots:
        raise Infeasible("inconsistent linear system", relation_index=_first_inconsistent_row(rows_of(aug), n))
    rows = rows_of(R)
    particular = [ZERO] * n
    for i, p in enumerate(pivots):
        particular[p] = rows[i][n]
    return Solution(tuple(particular), tuple(_kernel_from_rref(rows, pivots, n)))


def mat_det(M: DomainMatrix):
    m, n = M.shape
    if m != n:
        raise DimensionMismatch(m, n)
    if m == 0:
        return QQ_I.one
    return M.det()


def mat_inverse(M: DomainMatrix) -> DomainMatrix:
    return M.inv()


def mat_vec(M: DomainMatrix, v):
    return tuple(sum((a * b for a, b in zip(row, v)), ZERO) for row in M.to_list())


def is_zero_vector(v):
    return not any(v)


class RowSpan:
    """Span of a list of vectors with coordinate tracking.

    The rref of [V | I] records, for every echelon row, which combination of
    the input vectors produced it, so `coordinates` can express any vector of
    the span in terms of the inputs.
    """

    def __init__(self, vectors, width):
        self.width = width
        self.inputs = [tuple(to_scalar(c) for c in v) for v in vectors]
        k = len(self.inputs)
        self.rows = []
        self.pivots = []
        if not k or not width:
            return
        aug = matrix([list(v) + [QQ_I.one if j == i else ZERO for j in range(k)] for i, v in enumerate(self.inputs)])
        R, pivots = rref(aug)
        for row, p in zip(rows_of(R), pivots):
            if p >= width:
                break
            self.rows.append(row)
            self.pivots.append(p)

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, v):
        """Return (residual, coefficients): v = sum(c_i * input_i) + residual."""
        v = [to_scalar(c) for c in v]
        if len(v) != self.width:
            raise DimensionMismatch(self.width, len(v))
        coeffs = [ZERO] * len(self.inputs)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not c:
                continue
            for j in range(self.width):
                v[j] -= c * row[j]
            for j in range(len(self.inputs)):
                coeffs[j] += c * row[self.width + j]
        return tuple(v), tuple(coeffs)

    def contains(self, v):
        return is_zero_vector(self.reduce(v)[0])

    def coordinates(self, v):
        residual, coeffs = self.reduce(v)
        if not is_zero_vector(residual):
            raise Infeasible("vector is not in the span", residual=residual)
        return coeffs

    def basis(self):
        """Canonical (rref) basis of the span."""
        return [row[: self.width] for row in self.rows]


def eigenvalues(M: DomainMatrix):
    """Distinct eigenvalues of a square matrix, all required to lie in Q(i).

    The characteristic polynomial is factored over the Gaussian rationals;
    any factor of degree > 1 is reported as IrrationalSpectrum.
    """
    n, m = M.shape
    if n != m:
        raise DimensionMismatch(n, m)
    if n == 0:
        return []
    t = Symbol("t")
    coeffs = M.charpoly()
    expr = sum(QQ_I.to_sympy(c) * t ** (n - k) for k, c in enumerate(coeffs))
    _, factors = factor_list(expr, t, gaussian=True)
    values = []
    for factor, _ in factors:
        poly = Poly(factor, t)
        if poly.degree() == 0:
            continue
        if poly.degree() > 1:
            raise IrrationalSpectrum(f"characteristic polynomial factor {factor} has no roots in Q(i)", factor=str(factor))
        a, b = poly.all_coeffs()
        values.append(QQ_I.from_sympy(-b / a))
    return sorted(set(values), key=scalar_key)


def splits(M: DomainMatrix) -> bool:
    try:
        eigenvalues(M)
    except IrrationalSpectrum:
        return False
    return True
