"""
Vector fields on C^N as derivations.

A VectorField holds one CoeffFn per coordinate direction. The bracket uses
the component formula [V, W]_k = sum_i (a_i db_k/dx_i - b_i da_k/dx_i), so
results stay first order by construction.
"""
import logging
from typing import Tuple

from .errors import DimensionMismatch, NotInvertible
from .kernel import CoeffFn, _lam_key
from .utils.scalars import ZERO, to_scalar

logger = logging.getLogger(__name__)


def coordinate_key_order(key):
    k, alpha, lam = key
    return (k, -sum(alpha), tuple(-a for a in alpha), _lam_key(lam))


class VectorField:
    """Immutable N-tuple of coefficient functions (a_1, ..., a_N)."""

    __slots__ = ("dim", "comps")

    def __init__(self, dim, comps):
        comps = tuple(comps)
        if len(comps) != dim:
            raise DimensionMismatch(dim, len(comps))
        for c in comps:
            if c.dim != dim:
                raise DimensionMismatch(dim, c.dim)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "comps", comps)

    def __setattr__(self, name, value):
        raise AttributeError("VectorField is immutable")

    @classmethod
    def zero(cls, dim):
        return cls(dim, [CoeffFn.zero(dim)] * dim)

    @classmethod
    def partial(cls, dim, axis, coeff=None):
        """coeff * d/dx_{axis+1}; coeff defaults to the constant 1."""
        coeff = coeff if coeff is not None else CoeffFn.constant(dim, 1)
        return cls(dim, [coeff if k == axis else CoeffFn.zero(dim) for k in range(dim)])

    def _check(self, other):
        if other.dim != self.dim:
            raise DimensionMismatch(self.dim, other.dim)
        return other

    def is_zero(self):
        return all(c.is_zero() for c in self.comps)

    def is_polynomial(self):
        return all(c.is_polynomial() for c in self.comps)

    def degree(self):
        return max(c.degree() for c in self.comps)

    def __add__(self, other):
        self._check(other)
        return VectorField(self.dim, [a + b for a, b in zip(self.comps, other.comps)])

    def __neg__(self):
        return VectorField(self.dim, [-a for a in self.comps])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return VectorField(self.dim, [a.scale(c) for a in self.comps])

    def multiply(self, f: CoeffFn):
        """The field f * V."""
        return VectorField(self.dim, [f * a for a in self.comps])

    def apply(self, f: CoeffFn) -> CoeffFn:
        if f.dim != self.dim:
            raise DimensionMismatch(self.dim, f.dim)
        total = CoeffFn.zero(self.dim)
        for i, a in enumerate(self.comps):
            if a:
                total = total + a * f.diff(i)
        return total

    def bracket(self, other):
        self._check(other)
        return VectorField(self.dim, [self.apply(b) - other.apply(a) for a, b in zip(self.comps, other.comps)])

    def evaluate(self, point, precision=None):
        return tuple(c.evaluate(point, precision=precision) for c in self.comps)

    def coordinates(self):
        """Sparse coordinates {(k, alpha, lambda): coeff} in the basis x^alpha e^<lambda,x> d/dx_k."""
        coords = {}
        for k, comp in enumerate(self.comps):
            for term in comp.terms():
                coords[(k, term.alpha, term.lam)] = term.coeff
        return coords

    @classmethod
    def from_coordinates(cls, dim, coords):
        per_axis = [[] for _ in range(dim)]
        for (k, alpha, lam), coeff in coords.items():
            if coeff:
                per_axis[k].append((coeff, alpha, lam))
        return cls(dim, [CoeffFn.from_terms(dim, terms) for terms in per_axis])

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.dim == other.dim and self.comps == other.comps

    def __hash__(self):
        return hash((self.dim, self.comps))

    def __repr__(self):
        from .dsl import format_field

        return f"VectorField({format_field(self)!r})"


def coordinate_keys(fields):
    keys = set()
    for v in fields:
        keys.update(v.coordinates())
    return sorted(keys, key=coordinate_key_order)


def coordinate_matrix(fields, keys=None):
    """Return (keys, rows) where row j holds the coordinates of fields[j] on `keys`."""
    keys = list(keys) if keys is not None else coordinate_keys(fields)
    rows = []
    for v in fields:
        coords = v.coordinates()
        rows.append(tuple(coords.get(key, ZERO) for key in keys))
    return keys, rows


def combine(fields, coeffs, dim):
    """sum_j coeffs[j] * fields[j]."""
    total = VectorField.zero(dim)
    for v, c in zip(fields, coeffs):
        c = to_scalar(c)
        if c:
            total = total + v.scale(c)
    return total


class PolyAutomorphism:
    """A polynomial automorphism of C^N given by a verified forward/inverse pair."""

    def __init__(self, dim, forward, inverse):
        self.dim = dim
        self.forward: Tuple[CoeffFn, ...] = tuple(forward)
        self.inverse: Tuple[CoeffFn, ...] = tuple(inverse)
        for part in (self.forward, self.inverse):
            if len(part) != dim:
                raise DimensionMismatch(dim, len(part))
            if not all(f.is_polynomial() for f in part):
                raise NotInvertible("automorphism components must be polynomial")
        ids = tuple(CoeffFn.variable(dim, k) for k in range(dim))
        if tuple(f.compose(self.inverse) for f in self.forward) != ids:
            raise NotInvertible("forward o inverse is not the identity")
        if tuple(g.compose(self.forward) for g in self.inverse) != ids:
            raise NotInvertible("inverse o forward is not the identity")

    @classmethod
    def identity(cls, dim):
        ids = [CoeffFn.variable(dim, k) for k in range(dim)]
        return cls(dim, ids, ids)

    def invert(self):
        return PolyAutomorphism(self.dim, self.inverse, self.forward)

    def pushforward(self, field: VectorField) -> VectorField:
        """(phi_* V)_k = sum_i (dphi_k/dx_i o psi) * (V_i o psi), psi the inverse."""
        if field.dim != self.dim:
            raise DimensionMismatch(self.dim, field.dim)
        pulled = [a.compose(self.inverse) for a in field.comps]
        comps = []
        for phi_k in self.forward:
            total = CoeffFn.zero(self.dim)
            for i, a in enumerate(pulled):
                if a:
                    total = total + phi_k.diff(i).compose(self.inverse) * a
            comps.append(total)
        return VectorField(self.dim, comps)


def vf_apply(V: VectorField, f: CoeffFn) -> CoeffFn:
    return V.apply(f)


def vf_bracket(V: VectorField, W: VectorField) -> VectorField:
    return V.bracket(W)


def vf_eval(V: VectorField, point, precision=None):
    return V.evaluate(point, precision=precision)


def vf_pushforward(phi: PolyAutomorphism, V: VectorField) -> VectorField:
    return phi.pushforward(V)
