"""
Cartan subalgebras, root decompositions, type identification and
Chevalley bases.

Roots are covectors on the computed CSA basis, i.e. tuples alpha with
alpha[t] = alpha(h_t) for the rows h_t of the CSA subspace. Positivity is
lexicographic on the (re, im) parts of these tuples.
"""
import logging
import random
from dataclasses import dataclass
from typing import Dict, Tuple

from .conf import lie_setting
from .errors import CartanNotFound, LieInternalError, NotSemisimple, UnrecognizedDiagram, UnsupportedType
from .linalg import RowSpan, eigenvalues, identity, mat_inverse, mat_kernel, matrix, rows_of, splits
from .liepresent import (
    LiePresentation, LieStructure, Subspace, is_nilpotent, is_semisimple, killing_form, normalizer, subalgebra,
)
from .rootsystems import (
    TypeLabel, cartan_matrix, identify_components, positive_roots, type_of_cartan,
)
from .utils.scalars import ONE, ZERO, is_integer, is_positive, scalar, scalar_key, to_fraction

logger = logging.getLogger(__name__)

COEFF_RANGE = 9
TWO = scalar(2)


@dataclass(frozen=True)
class CartanData:
    csa: Subspace
    regular_element: Tuple

    @property
    def rank(self):
        return self.csa.dim


@dataclass(frozen=True)
class RootData:
    cartan: CartanData
    roots: Tuple[Tuple, ...]
    root_spaces: Dict[Tuple, Subspace]
    zero_space: Subspace

    def positive_roots(self):
        return [r for r in self.roots if root_is_positive(r)]


def root_is_positive(root):
    for c in root:
        if c:
            return is_positive(c)
    return False


def root_key(root):
    return tuple(scalar_key(c) for c in root)


def _generalized_kernel(L, x):
    """Basis of ker(ad x)^d, by repeated squaring until the kernel stabilizes."""
    A = L.ad_matrix(x)
    kernel = mat_kernel(A)
    while True:
        A = A * A
        nxt = mat_kernel(A)
        if len(nxt) == len(kernel):
            return nxt
        kernel = nxt


def _toral_candidates(L):
    """Greedy commuting family of basis elements with split, non-nilpotent ad."""
    chosen = []
    for i in range(L.dim):
        e = L.basis_vector(i)
        A = L.ad_matrix(e)
        if not splits(A) or not any(eigenvalues(A)):
            continue
        if all(not any(L.bracket_vectors(e, L.basis_vector(j))) for j in chosen):
            chosen.append(i)
    return chosen


def find_cartan(L: LieStructure, seed=None, trials=None) -> CartanData:
    """Cartan subalgebra as the generalized null space of a regular element.

    Candidates alternate between random combinations of a commuting toral
    family of basis elements and random combinations of the whole basis. The
    minimum generalized-kernel dimension is the rank; among candidates
    reaching it, one whose ad-spectrum splits over Q(i) is preferred.
    """
    seed = lie_setting("SEED", seed)
    trials = lie_setting("CARTAN_TRIALS", trials)
    d = L.dim
    if d == 0:
        return CartanData(Subspace.zero(L), ())
    rng = random.Random(seed)
    toral = _toral_candidates(L)
    candidates = []
    for trial in range(trials):
        coeffs = [ZERO] * d
        support = toral if toral and trial % 2 == 0 else range(d)
        for i in support:
            coeffs[i] = scalar(rng.randint(1, COEFF_RANGE) * rng.choice((1, -1)))
        x = tuple(coeffs)
        kernel = _generalized_kernel(L, x)
        candidates.append((len(kernel), trial, x, kernel))
    rank = min(c[0] for c in candidates)
    logger.info(f"Cartan search: rank {rank} over {trials} trials (seed {seed})")

    fallback = None
    for size, trial, x, kernel in candidates:
        if size != rank:
            continue
        csa = Subspace.span(L, kernel)
        if not is_nilpotent(subalgebra(L, csa)) or normalizer(L, csa).dim != csa.dim:
            logger.debug(f"trial {trial}: candidate failed verification")
            continue
        if splits(L.ad_matrix(x)):
            return CartanData(csa, x)
        fallback = fallback or CartanData(csa, x)
    if fallback is None:
        raise CartanNotFound(f"no verified Cartan subalgebra in {trials} trials")
    return fallback


def _restricted(L, h, vectors):
    """Matrix of ad h restricted to the invariant span of `vectors` (in that basis)."""
    span = RowSpan(vectors, L.dim)
    cols = [span.coordinates(L.bracket_vectors(h, v)) for v in vectors]
    m = len(vectors)
    return matrix([[cols[j][i] for j in range(m)] for i in range(m)], m)


def root_decomposition(L: LieStructure, C: CartanData = None) -> RootData:
    """Simultaneous eigenspaces of ad(h_1), ..., ad(h_r) on a semisimple L."""
    if not is_semisimple(L):
        raise NotSemisimple("root decomposition needs a semisimple algebra")
    C = C or find_cartan(L)
    spaces = [((), [L.basis_vector(i) for i in range(L.dim)])]
    for h in C.csa.rows:
        refined = []
        for weight, vectors in spaces:
            R = _restricted(L, h, vectors)
            total = 0
            for mu in eigenvalues(R):
                shifted = R - identity(len(vectors)) * mu
                kernel = mat_kernel(shifted)
                total += len(kernel)
                new = [tuple(sum((c * v[k] for c, v in zip(coeffs, vectors)), ZERO) for k in range(L.dim)) for coeffs in kernel]
                refined.append((weight + (mu,), new))
            if total != len(vectors):
                raise LieInternalError("ad of a Cartan element is not diagonalizable")
        spaces = refined

    zero = tuple([ZERO] * C.rank)
    root_spaces = {}
    zero_space = Subspace.zero(L)
    for weight, vectors in spaces:
        weight = tuple(weight) if C.rank else zero
        if not any(weight):
            zero_space = Subspace.span(L, vectors)
        else:
            if len(vectors) != 1:
                raise LieInternalError(f"root space of dimension {len(vectors)}")
            root_spaces[weight] = Subspace.span(L, vectors)
    if zero_space.dim != C.rank:
        raise LieInternalError("zero weight space differs from the Cartan subalgebra")
    positives = sorted((r for r in root_spaces if root_is_positive(r)), key=root_key)
    negatives = [tuple(-c for c in r) for r in positives]
    if set(negatives) | set(positives) != set(root_spaces):
        raise LieInternalError("root set is not closed under negation")
    logger.info(f"root decomposition: rank {C.rank}, {len(root_spaces)} roots")
    return RootData(C, tuple(positives + negatives), root_spaces, zero_space)


@dataclass(frozen=True)
class SimpleSystem:
    positive: Tuple[Tuple, ...]
    simple: Tuple[Tuple, ...]
    cartan: Tuple[Tuple[int, ...], ...]


def _csa_gram_inverse(L, R: RootData):
    rows = R.cartan.csa.rows
    K = killing_form(L)
    H = matrix(rows, L.dim)
    return mat_inverse(H * K * H.transpose())


def inner_product(gram_inverse, a, b):
    Ginv = rows_of(gram_inverse)
    return sum((a[i] * Ginv[i][j] * b[j] for i in range(len(a)) for j in range(len(b))), ZERO)


def simple_system(R: RootData, is_positive=None) -> SimpleSystem:
    """Simple roots and Cartan matrix; `is_positive` overrides the lex order on roots."""
    L = R.cartan.csa.parent
    if is_positive is None:
        positive = R.positive_roots()
    else:
        positive = tuple(sorted((r for r in R.roots if is_positive(r)), key=root_key))
    sums = {tuple(x + y for x, y in zip(a, b)) for a in positive for b in positive}
    simple = [r for r in positive if r not in sums]
    if len(simple) != R.cartan.rank:
        raise UnrecognizedDiagram(f"{len(simple)} simple roots for rank {R.cartan.rank}")
    Ginv = _csa_gram_inverse(L, R)
    cartan = []
    for a in simple:
        norm = inner_product(Ginv, a, a)
        row = []
        for b in simple:
            value = TWO * inner_product(Ginv, a, b) / norm
            if not is_integer(value):
                raise UnrecognizedDiagram(f"non-integral Cartan entry {value}")
            row.append(int(to_fraction(value.x)))
        cartan.append(tuple(row))
    return SimpleSystem(tuple(positive), tuple(simple), tuple(cartan))


def identify_type(R) -> TypeLabel:
    """Type label from the Dynkin components of the simple-root Cartan matrix.

    Accepts RootData, or a LieStructure whose root decomposition is computed.
    """
    if isinstance(R, LieStructure):
        R = root_decomposition(R)
    if not R.roots:
        return TypeLabel(())
    return type_of_cartan(simple_system(R).cartan)


def _eval_root(C: CartanData, root, h):
    coords = C.csa.coordinates(h)
    return sum((c * a for c, a in zip(coords, root)), ZERO)


def _simple_coordinates(span, root):
    coords = span.coordinates(root)
    if not all(is_integer(c) for c in coords):
        raise LieInternalError(f"root {root} is not an integral combination of simple roots")
    return tuple(int(to_fraction(c.x)) for c in coords)


def chevalley_basis(L: LieStructure, C: CartanData = None) -> LieStructure:
    """Rebase a semisimple algebra onto a Chevalley basis (h_i, e_alpha, f_alpha).

    Simple roots are put in Bourbaki order per component, components sorted
    like the type label. e_alpha = [e_i, e_beta] / (p + 1) for the smallest i
    with beta = alpha - alpha_i a root, p the length of the alpha_i-string
    below beta; f_alpha is scaled so that alpha([e_alpha, f_alpha]) = 2.
    """
    R = root_decomposition(L, C)
    C = R.cartan
    system = simple_system(R)
    comps = identify_components(system.cartan)
    comps.sort(key=lambda comp: (comp[0], comp[1], comp[2][0]))
    order = [node for _, _, nodes in comps for node in nodes]
    simple = [system.simple[k] for k in order]
    span = RowSpan(simple, C.rank)

    coords = {root: _simple_coordinates(span, root) for root in system.positive}
    by_coords = {v: k for k, v in coords.items()}
    canonical = [cartan_matrix(letter, n) for letter, n, _ in comps]
    expected = []
    offset = 0
    for block in canonical:
        for root in positive_roots(block):
            expected.append(tuple([0] * offset + list(root) + [0] * (C.rank - offset - len(block))))
        offset += len(block)
    expected.sort(key=lambda r: (sum(r), tuple(-c for c in r)))
    if set(expected) != set(by_coords):
        raise LieInternalError("positive roots do not match the identified type")

    r = C.rank
    unit = [tuple(1 if k == i else 0 for k in range(r)) for i in range(r)]
    e, f = {}, {}
    for i, a in enumerate(unit):
        root = by_coords[a]
        e[a] = R.root_spaces[root].rows[0]
        f_raw = R.root_spaces[tuple(-c for c in root)].rows[0]
        value = _eval_root(C, root, L.bracket_vectors(e[a], f_raw))
        f[a] = tuple(c * (TWO / value) for c in f_raw)

    for alpha in expected:
        if sum(alpha) == 1:
            continue
        i = next(i for i in range(r) if alpha[i] and tuple(x - y for x, y in zip(alpha, unit[i])) in by_coords)
        beta = tuple(x - y for x, y in zip(alpha, unit[i]))
        p = 0
        lowered = list(beta)
        while True:
            lowered[i] -= 1
            if tuple(lowered) not in by_coords:
                break
            p += 1
        scale = ONE / scalar(p + 1)
        e[alpha] = tuple(c * scale for c in L.bracket_vectors(e[unit[i]], e[beta]))
        f_raw = L.bracket_vectors(f[unit[i]], f[beta])
        value = _eval_root(C, by_coords[alpha], L.bracket_vectors(e[alpha], f_raw))
        f[alpha] = tuple(c * (TWO / value) for c in f_raw)

    hs = [L.bracket_vectors(e[a], f[a]) for a in unit]
    new_basis = hs + [e[a] for a in expected] + [f[a] for a in expected]
    labels = [f"h{i + 1}" for i in range(r)]
    labels += [f"e({','.join(map(str, a))})" for a in expected]
    labels += [f"f({','.join(map(str, a))})" for a in expected]
    return rebase(L, new_basis, labels)


def rebase(L: LieStructure, vectors, labels=()):
    """Structure constants of L in a new basis given by coordinate vectors."""
    span = RowSpan(vectors, L.dim)
    if span.rank != len(vectors) or len(vectors) != L.dim:
        raise LieInternalError("new basis is not a basis")
    table = {}
    for a in range(len(vectors)):
        for b in range(a + 1, len(vectors)):
            coords = span.coordinates(L.bracket_vectors(vectors[a], vectors[b]))
            row = {k: c for k, c in enumerate(coords) if c}
            if row:
                table[(a, b)] = row
    base = LieStructure.from_table(len(vectors), table, labels)
    if isinstance(L, LiePresentation):
        fields = tuple(L.field_of(v) for v in vectors)
        base = LiePresentation(base.sc, base.labels, ambient_dim=L.ambient_dim, basis=fields)
    base.check_axioms()
    return base


# Chevalley constants from simply laced models and diagram folding

SUPPORTED_CONSTANTS = {("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("G", 2)}


def _orientation_sign(edges, beta, gamma):
    """Bimultiplicative sign cocycle: -1 on (i, i) and on oriented edges (i, j)."""
    parity = 0
    for i, b in enumerate(beta):
        if not b:
            continue
        for j, g in enumerate(gamma):
            if g and (i == j or (i, j) in edges):
                parity += b * g
    return -1 if parity % 2 else 1


def simply_laced_structure(cartan, edges):
    """Simply laced algebra on the root lattice.

    [h_i, E_a] = (a_i, a) E_a, [E_a, E_-a] = -a, [E_a, E_b] = eps(a, b) E_{a+b}
    with eps the sign cocycle of the oriented diagram.
    """
    n = len(cartan)
    pos = positive_roots(cartan)
    roots = pos + [tuple(-c for c in r) for r in pos]
    index = {root: n + k for k, root in enumerate(roots)}
    d = n + len(roots)
    table = {}

    def put(a, b, k, c):
        if a < b:
            table.setdefault((a, b), {})[k] = scalar(c)
        else:
            table.setdefault((b, a), {})[k] = scalar(-c)

    for i in range(n):
        for root in roots:
            value = sum(cartan[i][j] * root[j] for j in range(n))
            if value:
                put(i, index[root], index[root], value)
    for x, a in enumerate(roots):
        for b in roots[x + 1:]:
            total = tuple(p + q for p, q in zip(a, b))
            if not any(total):
                for i in range(n):
                    if a[i]:
                        put(index[a], index[b], i, -a[i])
            elif total in index:
                put(index[a], index[b], index[total], _orientation_sign(edges, a, b))
    labels = [f"h{i + 1}" for i in range(n)] + [f"E({','.join(map(str, r))})" for r in roots]
    return LieStructure.from_table(d, table, labels), roots


def _cover(letter, n):
    """Simply laced cover: (cartan, oriented edges, node permutation)."""
    if letter == "A":
        cart = cartan_matrix("A", n)
        return cart, {(i, i + 1) for i in range(n - 1)}, list(range(n))
    if letter == "B":
        m = n + 1
        cart = cartan_matrix("D", m)
        edges = {(i, i + 1) for i in range(m - 2)} | {(m - 3, m - 1)}
        perm = list(range(m - 2)) + [m - 1, m - 2]
        return cart, edges, perm
    if letter == "C":
        m = 2 * n - 1
        cart = cartan_matrix("A", m)
        centre = n - 1
        edges = {(i, i + 1) for i in range(centre)} | {(i + 1, i) for i in range(centre, m - 1)}
        return cart, edges, [m - 1 - i for i in range(m)]
    if letter == "G":
        cart = cartan_matrix("D", 4)
        return cart, {(0, 1), (2, 1), (3, 1)}, [2, 1, 3, 0]
    raise UnsupportedType(f"no Chevalley model for {letter}{n}")


def _folded_model(letter, n):
    """Simply laced model of the factor, or its fixed points under a diagram automorphism."""
    cart, edges, perm = _cover(letter, n)
    for i, j in edges:
        if (perm[i], perm[j]) not in edges:
            raise LieInternalError("orientation is not invariant under the diagram automorphism")
    L, roots = simply_laced_structure(cart, edges)
    if perm == list(range(len(cart))):
        return L
    m = len(cart)
    index = {root: m + k for k, root in enumerate(roots)}

    def act(root):
        out = [0] * m
        for i, c in enumerate(root):
            out[perm[i]] = c
        return tuple(out)

    def orbit(start, step):
        seen = [start]
        while True:
            nxt = step(seen[-1])
            if nxt == start:
                return seen
            seen.append(nxt)

    vectors, done = [], set()
    for i in range(m):
        if i in done:
            continue
        nodes = orbit(i, lambda k: perm[k])
        done.update(nodes)
        vectors.append(tuple(ONE if k in nodes else ZERO for k in range(L.dim)))
    for root in roots:
        if root in done:
            continue
        members = orbit(root, act)
        done.update(members)
        slots = {index[r] for r in members}
        vectors.append(tuple(ONE if k in slots else ZERO for k in range(L.dim)))
    return subalgebra(L, Subspace.span(L, vectors))


def direct_sum(structures):
    offset, total = 0, sum(s.dim for s in structures)
    table, labels = {}, []
    for s in structures:
        for (i, j), row in s.table.items():
            if i < j:
                table[(offset + i, offset + j)] = {offset + k: c for k, c in row.items()}
        labels.extend(s.labels)
        offset += s.dim
    return LieStructure.from_table(total, table, labels)


def chevalley_constants(label) -> LieStructure:
    """Structure constants of a Chevalley basis for a supported type (products allowed)."""
    if isinstance(label, str):
        label = TypeLabel.parse(label)
    if not label.factors:
        raise UnsupportedType("empty type label")
    for factor in label.factors:
        if factor not in SUPPORTED_CONSTANTS:
            raise UnsupportedType(f"Chevalley constants are provided for A1, A2, A3, B2, B3, C3, G2; got {factor[0]}{factor[1]}")
    model = direct_sum([_folded_model(letter, n) for letter, n in label.factors])
    result = chevalley_basis(model)
    if result.dim != label.dimension:
        raise LieInternalError(f"model of {label} has dimension {result.dim}")
    return result


def chevalley_index(L: LieStructure):
    """Map the labels of a Chevalley basis back to roots.

    Returns (cartan_indices, roots) where roots maps a root in simple-root
    coordinates (negative for f-labels) to its basis index.
    """
    cartan, roots = [], {}
    for k, label in enumerate(L.labels):
        if label.startswith("h"):
            cartan.append(k)
            continue
        coords = tuple(int(c) for c in label[2:-1].split(","))
        roots[coords if label.startswith("e") else tuple(-c for c in coords)] = k
    return cartan, roots
