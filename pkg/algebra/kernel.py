"""
Exponential-polynomial coefficient functions.

A CoeffFn is a finite sum of terms c * x^alpha * exp(<lambda, x>) with
Gaussian-rational c and lambda. Internally the terms sharing one frequency
vector lambda are grouped into a single sympy sparse polynomial over QQ_I,
so the representation is a map lambda -> nonzero polynomial. The functions
x^alpha * exp(<lambda, x>) are linearly independent, which makes the empty
map the one and only zero.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import mpmath
from sympy.polys.domains import QQ_I
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

from .conf import lie_setting
from .errors import DimensionMismatch, OutOfClass
from .utils.scalars import Scalar, ZERO, scalar_key, to_mpc, to_scalar

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def coefficient_ring(dim: int) -> PolyRing:
    """Polynomial ring QQ_I[x1..xN] with graded-lex order."""
    names = ",".join(f"x{k}" for k in range(1, dim + 1))
    return PolyRing(names, QQ_I, grlex)


def _lam_key(lam):
    return tuple(scalar_key(c) for c in lam)


def zero_frequency(dim: int):
    return (ZERO,) * dim


@dataclass(frozen=True)
class ExpTerm:
    coeff: Scalar
    alpha: Tuple[int, ...]
    lam: Tuple[Scalar, ...]

    def __post_init__(self):
        if not self.coeff:
            raise ValueError(f"zero coefficient for x^{self.alpha} exp<{self.lam}, x>")

    @property
    def degree(self):
        return sum(self.alpha)

    @property
    def is_polynomial(self):
        return not any(self.lam)


@dataclass(frozen=True)
class ApproxValue:
    """Floating value of a function with exponential terms, never used for exact decisions."""
    value: object
    digits: int
    exact: bool = False

    def __str__(self):
        return mpmath.nstr(self.value, min(self.digits, 20))


class CoeffFn:
    """Immutable exponential polynomial on C^dim in canonical form."""

    __slots__ = ("dim", "parts")

    def __init__(self, dim, parts=()):
        ring = coefficient_ring(dim)
        merged = {}
        for lam, poly in parts:
            lam = tuple(to_scalar(c) for c in lam)
            if len(lam) != dim:
                raise DimensionMismatch(dim, len(lam))
            merged[lam] = merged.get(lam, ring.zero) + ring(poly)
        canonical = sorted(((lam, p) for lam, p in merged.items() if p), key=lambda item: _lam_key(item[0]))
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "parts", tuple(canonical))

    def __setattr__(self, name, value):
        raise AttributeError("CoeffFn is immutable")

    # constructors

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    @classmethod
    def constant(cls, dim, c):
        return cls(dim, [(zero_frequency(dim), coefficient_ring(dim)(to_scalar(c)))])

    @classmethod
    def variable(cls, dim, axis):
        """The coordinate function x_{axis+1} (axis is 0-based)."""
        ring = coefficient_ring(dim)
        return cls(dim, [(zero_frequency(dim), ring.gens[axis])])

    @classmethod
    def exponential(cls, dim, lam):
        return cls(dim, [(tuple(lam), coefficient_ring(dim).one)])

    @classmethod
    def monomial(cls, dim, alpha, coeff=1, lam=None):
        ring = coefficient_ring(dim)
        poly = ring.from_dict({tuple(alpha): to_scalar(coeff)})
        return cls(dim, [(tuple(lam) if lam is not None else zero_frequency(dim), poly)])

    @classmethod
    def from_terms(cls, dim, terms):
        """Build from (coeff, alpha, lam) triples or ExpTerms."""
        ring = coefficient_ring(dim)
        parts = []
        for term in terms:
            coeff, alpha, lam = (term.coeff, term.alpha, term.lam) if isinstance(term, ExpTerm) else term
            parts.append((tuple(lam), ring.from_dict({tuple(alpha): to_scalar(coeff)})))
        return cls(dim, parts)

    @classmethod
    def from_poly(cls, dim, poly):
        return cls(dim, [(zero_frequency(dim), poly)])

    # inspection

    @property
    def ring(self):
        return coefficient_ring(self.dim)

    def is_zero(self):
        return not self.parts

    def is_polynomial(self):
        return all(not any(lam) for lam, _ in self.parts)

    def as_poly(self):
        """The underlying polynomial; only valid when `is_polynomial()`."""
        if not self.is_polynomial():
            raise OutOfClass("function has exponential terms")
        return self.parts[0][1] if self.parts else self.ring.zero

    def frequencies(self):
        return tuple(lam for lam, _ in self.parts)

    def degree(self):
        return max((max(sum(m) for m in p.itermonoms()) for _, p in self.parts), default=-1)

    def terms(self):
        """Terms in canonical order: graded-lex (descending) on alpha, then lex on lambda."""
        out = [ExpTerm(c, tuple(m), lam) for lam, p in self.parts for m, c in p.terms()]
        out.sort(key=lambda t: (-t.degree, tuple(-a for a in t.alpha), _lam_key(t.lam)))
        return out

    def _check(self, other):
        if not isinstance(other, CoeffFn):
            return CoeffFn.constant(self.dim, other)
        if other.dim != self.dim:
            raise DimensionMismatch(self.dim, other.dim)
        return other

    # arithmetic

    def __add__(self, other):
        other = self._check(other)
        return CoeffFn(self.dim, self.parts + other.parts)

    __radd__ = __add__

    def __neg__(self):
        return CoeffFn(self.dim, [(lam, -p) for lam, p in self.parts])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c):
        c = to_scalar(c)
        if not c:
            return CoeffFn.zero(self.dim)
        return CoeffFn(self.dim, [(lam, p * c) for lam, p in self.parts])

    def __mul__(self, other):
        if not isinstance(other, CoeffFn):
            return self.scale(other)
        other = self._check(other)
        parts = []
        for lam1, p1 in self.parts:
            for lam2, p2 in other.parts:
                parts.append((tuple(a + b for a, b in zip(lam1, lam2)), p1 * p2))
        return CoeffFn(self.dim, parts)

    __rmul__ = __mul__

    def diff(self, axis):
        """Partial derivative along the 0-based `axis`."""
        if not 0 <= axis < self.dim:
            raise IndexError(f"axis {axis} out of range for dimension {self.dim}")
        gen = self.ring.gens[axis]
        return CoeffFn(self.dim, [(lam, p.diff(gen) + p * lam[axis]) for lam, p in self.parts])

    def evaluate(self, point, precision=None):
        """Exact Scalar for polynomials, otherwise an ApproxValue."""
        point = tuple(to_scalar(c) for c in point)
        if len(point) != self.dim:
            raise DimensionMismatch(self.dim, len(point))
        if self.is_polynomial():
            return self.as_poly()(*point) if self.parts else ZERO
        digits = lie_setting("PRECISION", precision)
        with mpmath.workdps(digits):
            total = mpmath.mpc(0)
            for lam, p in self.parts:
                exponent = sum((a * b for a, b in zip(lam, point)), ZERO)
                total += to_mpc(p(*point)) * mpmath.exp(to_mpc(exponent))
            return ApproxValue(+total, digits)

    def compose(self, substitution):
        """f(psi(y)) for a polynomial map psi given as `dim` polynomial CoeffFns.

        Frequencies are carried through only when <lambda, psi(y)> is a
        homogeneous linear form; anything else leaves the class.
        """
        if len(substitution) != self.dim:
            raise DimensionMismatch(self.dim, len(substitution))
        polys = [g.as_poly() for g in substitution]
        ring = self.ring
        pairs = list(zip(ring.gens, polys))
        parts = []
        for lam, p in self.parts:
            linear = sum((poly * c for c, poly in zip(lam, polys)), ring.zero)
            new_lam = [ZERO] * self.dim
            for monom, coeff in linear.terms():
                if sum(monom) != 1:
                    raise OutOfClass(f"substitution turns exp({lam}) into a non-linear exponent")
                new_lam[monom.index(1)] = coeff
            parts.append((tuple(new_lam), p.compose(pairs)))
        return CoeffFn(self.dim, parts)

    # comparison

    def __eq__(self, other):
        if isinstance(other, CoeffFn):
            return self.dim == other.dim and self.parts == other.parts
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.dim, self.parts))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        from .dsl import format_function

        return f"CoeffFn({format_function(self)!r})"


def cf_add(f: CoeffFn, g: CoeffFn) -> CoeffFn:
    return f + g


def cf_mul(f: CoeffFn, g: CoeffFn) -> CoeffFn:
    return f * g


def cf_diff(f: CoeffFn, axis: int) -> CoeffFn:
    return f.diff(axis)


def cf_eval(f: CoeffFn, point, precision=None):
    return f.evaluate(point, precision=precision)


def cf_is_zero(f: CoeffFn) -> bool:
    return f.is_zero()
