"""
Simple types, Cartan matrices and root enumeration.

Cartan matrices follow a_ij = 2 (a_i, a_j) / (a_i, a_i), computed from the
Gram matrix of the simple roots with Bourbaki node numbering. Type labels
print as "A1xA2" and are normalized so that isomorphic labels coincide.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .errors import UnrecognizedDiagram, UnsupportedType

FAMILIES = "ABCDEFG"
_FACTOR_RE = re.compile(r"^([A-G])(\d+)$")


def is_legal(letter, n):
    return {
        "A": n >= 1,
        "B": n >= 2,
        "C": n >= 3,
        "D": n >= 4,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "G": n == 2,
    }.get(letter, False)


def normalize_factor(letter, n):
    """Map coincident low-rank labels to one name: B1, C1 -> A1, C2 -> B2, D3 -> A3, D2 -> A1xA1."""
    if letter in "BC" and n == 1:
        return (("A", 1),)
    if letter == "C" and n == 2:
        return (("B", 2),)
    if letter == "D" and n == 3:
        return (("A", 3),)
    if letter == "D" and n == 2:
        return (("A", 1), ("A", 1))
    if not is_legal(letter, n):
        raise UnsupportedType(f"no simple type {letter}{n}")
    return ((letter, n),)


@dataclass(frozen=True)
class TypeLabel:
    """A direct product of simple types, factors sorted by (letter, rank)."""
    factors: Tuple[Tuple[str, int], ...]

    @classmethod
    def of(cls, factors):
        out = []
        for letter, n in factors:
            out.extend(normalize_factor(letter, int(n)))
        return cls(tuple(sorted(out)))

    @classmethod
    def parse(cls, text):
        text = text.strip().replace("×", "x").replace("*", "x")
        if not text:
            raise UnsupportedType("empty type label")
        factors = []
        for part in text.split("x"):
            match = _FACTOR_RE.match(part.strip())
            if not match:
                raise UnsupportedType(f"cannot read type factor {part!r}")
            factors.append((match.group(1), int(match.group(2))))
        return cls.of(factors)

    @property
    def rank(self):
        return sum(n for _, n in self.factors)

    @property
    def dimension(self):
        return sum(simple_dimension(letter, n) for letter, n in self.factors)

    def __str__(self):
        return "x".join(f"{letter}{n}" for letter, n in self.factors) or "0"


def simple_dimension(letter, n):
    if letter == "A":
        return n * (n + 2)
    if letter in "BC":
        return n * (2 * n + 1)
    if letter == "D":
        return n * (2 * n - 1)
    return {("E", 6): 78, ("E", 7): 133, ("E", 8): 248, ("F", 4): 52, ("G", 2): 14}[(letter, n)]


def rank_dim_table(label):
    """(rank, dimension) of a type label, additive over factors."""
    if isinstance(label, str):
        label = TypeLabel.parse(label)
    return label.rank, label.dimension


def simple_types_of_rank(n):
    return [(letter, n) for letter in FAMILIES if is_legal(letter, n)]


def enumerate_types_up_to_rank(r):
    """All type labels (simple or products) of total rank 1..r, sorted by (rank, label)."""
    simple = [t for n in range(1, r + 1) for t in simple_types_of_rank(n)]
    labels = set()

    def extend(start, remaining, chosen):
        if chosen:
            labels.add(TypeLabel(tuple(sorted(chosen))))
        for idx in range(start, len(simple)):
            letter, n = simple[idx]
            if n <= remaining:
                extend(idx, remaining - n, chosen + [(letter, n)])

    extend(0, r, [])
    return sorted(labels, key=lambda t: (t.rank, str(t)))


@lru_cache(maxsize=None)
def gram_matrix(letter, n):
    """Inner products of simple roots, Bourbaki numbering."""
    if not (is_legal(letter, n) or (letter in "ABC" and n >= 1) or (letter == "D" and n >= 3)):
        raise UnsupportedType(f"no simple type {letter}{n}")
    half = Fraction(1, 2)
    G = [[Fraction(0)] * n for _ in range(n)]

    def link(i, j, value=-1):
        G[i][j] = G[j][i] = Fraction(value)

    if letter == "A":
        for i in range(n):
            G[i][i] = Fraction(2)
        for i in range(n - 1):
            link(i, i + 1)
    elif letter == "B":
        for i in range(n):
            G[i][i] = Fraction(2 if i < n - 1 else 1)
        for i in range(n - 1):
            link(i, i + 1)
    elif letter == "C":
        for i in range(n):
            G[i][i] = Fraction(1 if i < n - 1 else 2)
        for i in range(n - 2):
            link(i, i + 1, -half)
        if n >= 2:
            link(n - 2, n - 1)
    elif letter == "D":
        for i in range(n):
            G[i][i] = Fraction(2)
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 1, n - 3)
    elif letter == "E":
        for i in range(n):
            G[i][i] = Fraction(2)
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F":
        for i, length in enumerate((2, 2, 1, 1)):
            G[i][i] = Fraction(length)
        link(0, 1)
        link(1, 2)
        link(2, 3, -half)
    elif letter == "G":
        G[0][0], G[1][1] = Fraction(2), Fraction(6)
        link(0, 1, -3)
    return tuple(tuple(row) for row in G)


def cartan_from_gram(G):
    n = len(G)
    A = [[2 * G[i][j] / G[i][i] for j in range(n)] for i in range(n)]
    for row in A:
        for a in row:
            if a.denominator != 1:
                raise UnrecognizedDiagram("Gram matrix does not give an integral Cartan matrix")
    return tuple(tuple(int(a) for a in row) for row in A)


@lru_cache(maxsize=None)
def cartan_matrix(letter, n):
    return cartan_from_gram(gram_matrix(letter, n))


def block_diagonal(blocks):
    size = sum(len(b) for b in blocks)
    out = [[0] * size for _ in range(size)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, a in enumerate(row):
                out[offset + i][offset + j] = a
        offset += len(b)
    return tuple(tuple(row) for row in out)


def label_cartan_matrix(label: TypeLabel):
    return block_diagonal([cartan_matrix(letter, n) for letter, n in label.factors])


def positive_roots(cartan):
    """Positive roots as integer tuples in simple-root coordinates, by height then lex.

    Root strings: beta + a_i is a root iff q > 0 where p - q = <beta, a_i^v>
    and p is the largest k with beta - k a_i a root.
    """
    n = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                p = 0
                lowered = list(beta)
                while True:
                    lowered[i] -= 1
                    if tuple(lowered) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = tuple(b + (1 if k == i else 0) for k, b in enumerate(beta))
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), tuple(-c for c in r)))


def components(cartan):
    """Connected components of the Dynkin graph, each a sorted list of node indices."""
    n = len(cartan)
    seen, out = set(), []
    for start in range(n):
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and cartan[i][j]:
                    seen.add(j)
                    stack.append(j)
        out.append(sorted(comp))
    return out


def _match_order(sub, target):
    """Node order `order` with sub[order[a]][order[b]] == target[a][b], or None."""
    n = len(target)
    order = []

    def place(k):
        if k == n:
            return True
        for node in range(n):
            if node in order:
                continue
            if sub[node][node] != target[k][k]:
                continue
            if all(sub[node][order[a]] == target[k][a] and sub[order[a]][node] == target[a][k] for a in range(k)):
                order.append(node)
                if place(k + 1):
                    return True
                order.pop()
        return False

    return list(order) if place(0) else None


def identify_components(cartan):
    """Return [(letter, rank, nodes)] where nodes lists the input indices in Bourbaki order."""
    found = []
    for comp in components(cartan):
        sub = [[cartan[i][j] for j in comp] for i in comp]
        match = None
        for letter, n in simple_types_of_rank(len(comp)):
            order = _match_order(sub, cartan_matrix(letter, n))
            if order is not None:
                match = (letter, n, [comp[k] for k in order])
                break
        if match is None:
            raise UnrecognizedDiagram(f"Cartan matrix block {sub} matches no simple type")
        found.append(match)
    return found


def type_of_cartan(cartan) -> TypeLabel:
    return TypeLabel.of((letter, n) for letter, n, _ in identify_components(cartan))
