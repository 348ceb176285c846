"""Graphs on coordinates 1..n, linearization, and graph equivalence.

An edge (i,j) of a dependency graph records that coordinates i and j are
mutually independent; the complement therefore records dependence.  The
linearization of a graph is the linear system whose matrix is the
adjacency matrix of the complement.
"""

from __future__ import annotations

import itertools
import json
import re
from collections import deque
from dataclasses import dataclass

from .anf import Anf, TruthTable, check_dimension, tt_to_anf
from .errors import BudgetExceededError, DimensionMismatchError, ParseError
from .system import System, phi

ISO_DEFAULT_CAP = 10

# n x n symmetric 0/1 matrix with zero diagonal, as a tuple of row tuples.
BitMatrix = tuple

# perm[i-1] is the image of vertex i.
Permutation = tuple


def norm_edge(i: int, j: int) -> tuple[int, int]:
    if i == j:
        raise ParseError(f"self-loop ({i},{j}) not allowed")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class DepGraph:
    """Undirected simple graph on vertices 1..n."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        check_dimension(self.n)
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise ParseError(f"bad edge ({i},{j}) for n={self.n}")

    @staticmethod
    def from_edges(n: int, edges) -> "DepGraph":
        return DepGraph(n, frozenset(norm_edge(i, j) for i, j in edges))

    @staticmethod
    def complete(n: int) -> "DepGraph":
        return DepGraph.from_edges(n, itertools.combinations(range(1, n + 1), 2))

    @staticmethod
    def empty(n: int) -> "DepGraph":
        return DepGraph(n, frozenset())

    def has_edge(self, i: int, j: int) -> bool:
        return norm_edge(i, j) in self.edges

    def neighbors(self, i: int) -> frozenset[int]:
        return frozenset(
            j for j in range(1, self.n + 1) if j != i and self.has_edge(i, j)
        )

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(i) for i in range(1, self.n + 1)))

    def complement(self) -> "DepGraph":
        return DepGraph(self.n, DepGraph.complete(self.n).edges - self.edges)

    def adjacency(self) -> BitMatrix:
        return tuple(
            tuple(1 if i != j and self.has_edge(i, j) else 0 for j in range(1, self.n + 1))
            for i in range(1, self.n + 1)
        )

    def relabel(self, p: Permutation) -> "DepGraph":
        """Image graph: edge (p(i),p(j)) for every edge (i,j)."""
        return DepGraph.from_edges(
            self.n, ((p[i - 1], p[j - 1]) for i, j in self.edges)
        )

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def __str__(self) -> str:
        edges = ", ".join(f"({i},{j})" for i, j in self.sorted_edges())
        return f"vertices: {self.n}\nedges: {edges}\n"


_EDGE_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_graph(text: str) -> DepGraph:
    """Parse `vertices: <n>` then `edges: (i,j), (k,l), ...` (possibly empty)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].lower().startswith("vertices:"):
        raise ParseError("graph file must start with a `vertices: <n>` line")
    try:
        n = int(lines[0].split(":", 1)[1])
    except ValueError:
        raise ParseError(f"bad vertices line: {lines[0]!r}")
    edges = []
    if len(lines) > 1:
        if not lines[1].lower().startswith("edges:"):
            raise ParseError(f"expected an `edges:` line, got {lines[1]!r}")
        body = lines[1].split(":", 1)[1]
        stripped = re.sub(_EDGE_RE, "", body).replace(",", "").strip()
        if stripped:
            raise ParseError(f"bad edge list: {body!r}")
        for m in _EDGE_RE.finditer(body):
            i, j = int(m.group(1)), int(m.group(2))
            if not (1 <= i <= n and 1 <= j <= n):
                raise ParseError(f"edge ({i},{j}) out of range 1..{n}")
            edges.append((i, j))
    return DepGraph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Linearization

def linearize(g: DepGraph) -> BitMatrix:
    """Adjacency matrix of the complement, zero diagonal.

    Row i, read as a linear update for coordinate i, rebuilds g under phi.
    """
    return g.complement().adjacency()


def system_from_matrix(m: BitMatrix) -> System:
    """Interpret row i as the linear update x_i <- XOR of the marked variables."""
    n = len(m)
    updates = []
    for row in m:
        if len(row) != n:
            raise DimensionMismatchError("matrix is not square")
        masks = [1 << j for j, entry in enumerate(row) if entry]
        updates.append(Anf.from_masks(n, masks))
    return System.from_updates(updates)


def linear_system(g: DepGraph) -> System:
    return system_from_matrix(linearize(g))


# ---------------------------------------------------------------------------
# The symmetric-group action on matrices

def identity_perm(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def invert_perm(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, image in enumerate(p, start=1):
        inv[image - 1] = i
    return tuple(inv)


def compose_perms(p: Permutation, q: Permutation) -> Permutation:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[q[i - 1] - 1] for i in range(1, len(p) + 1))


def parse_perm(text: str, n: int) -> Permutation:
    parts = [s for s in text.replace(" ", "").split(",") if s]
    try:
        p = tuple(int(s) for s in parts)
    except ValueError:
        raise ParseError(f"bad permutation {text!r}")
    if sorted(p) != list(range(1, n + 1)):
        raise ParseError(f"{text!r} is not a permutation of 1..{n}")
    return p


def perm_act(p: Permutation, m: BitMatrix) -> BitMatrix:
    """(pM)_ij = M_{p^-1(i), p^-1(j)}: permute rows and columns together."""
    n = len(m)
    if len(p) != n:
        raise DimensionMismatchError(f"permutation size {len(p)} != matrix size {n}")
    inv = invert_perm(p)
    return tuple(
        tuple(m[inv[i - 1] - 1][inv[j - 1] - 1] for j in range(1, n + 1))
        for i in range(1, n + 1)
    )


def find_graph_iso(g1: DepGraph, g2: DepGraph, cap: int = ISO_DEFAULT_CAP):
    """First permutation (lexicographic) carrying g1's adjacency to g2's,
    or None.  Exhaustive search over S_n; refuses large n."""
    if g1.n != g2.n:
        return None
    if g1.n > cap:
        raise BudgetExceededError(
            f"isomorphism search refuses n={g1.n} > cap {cap}",
            required=None,
        )
    if len(g1.edges) != len(g2.edges):
        return None
    if g1.degree_sequence() != g2.degree_sequence():
        return None
    m1, m2 = g1.adjacency(), g2.adjacency()
    for p in itertools.permutations(range(1, g1.n + 1)):
        if perm_act(p, m1) == m2:
            return p
    return None


def graph_equivalent(f: System, g: System, cap: int = ISO_DEFAULT_CAP):
    """Permutation carrying linearize(phi(f)) to linearize(phi(g)), or None.

    Equivalent to phi(f) being isomorphic to phi(g): complementation
    commutes with relabelling.
    """
    if f.n != g.n:
        return None
    gf, gg = phi(f), phi(g)
    p = find_graph_iso(gf.complement(), gg.complement(), cap=cap)
    if p is not None:
        assert perm_act(p, linearize(gf)) == linearize(gg)
    return p


# ---------------------------------------------------------------------------
# d-locality and the Psi side of the correspondence

def distances_from(g: DepGraph, start: int) -> dict[int, int]:
    """BFS distances; unreachable vertices are absent."""
    dist = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def ball(g: DepGraph, center: int, radius: int) -> frozenset[int]:
    dist = distances_from(g, center)
    return frozenset(v for v, d in dist.items() if d <= radius)


def is_d_local(f: System, y: DepGraph, d: int) -> bool:
    """Every coordinate update reads only variables within distance d in y."""
    if f.n != y.n:
        raise DimensionMismatchError(f"system n={f.n} vs graph n={y.n}")
    if d < 0:
        raise ParseError("locality radius must be nonnegative")
    for j in range(1, f.n + 1):
        if not f.update(j).support() <= ball(y, j, d):
            return False
    return True


def psi_membership(f: System, g: DepGraph) -> bool:
    """Is f a member of the tuple set attached to g: each coordinate update
    1-local on the complement of g."""
    return is_d_local(f, g.complement(), 1)


def psi_cardinality(g: DepGraph) -> int:
    """Number of member tuples: each coordinate ranges over all Boolean
    functions of its closed complement-neighborhood."""
    gbar = g.complement()
    total = 1
    for i in range(1, g.n + 1):
        total *= 1 << (1 << (1 + gbar.degree(i)))
    return total


def sample_psi(g: DepGraph, rng) -> System:
    """Random member: each coordinate's update drawn uniformly from the
    Boolean functions on its closed complement-neighborhood."""
    gbar = g.complement()
    n = g.n
    updates = []
    for i in range(1, n + 1):
        allowed = sorted(gbar.neighbors(i) | {i})
        k = len(allowed)
        small_bits = [rng.randrange(2) for _ in range(1 << k)]
        # Lift the k-variable table to all n variables.
        bits = []
        for s in range(1 << n):
            idx = 0
            for pos, v in enumerate(allowed):
                idx |= ((s >> (v - 1)) & 1) << pos
            bits.append(small_bits[idx])
        updates.append(tt_to_anf(TruthTable(n, tuple(bits))))
    return System.from_updates(updates)


def graph_to_json_text(g: DepGraph) -> str:
    return json.dumps(g.to_json(), sort_keys=True)
