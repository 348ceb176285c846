"""Update schedules as words, their equivalence classes, and system counts.

Words over the coordinates 1..n are identified when adjacent letters that
are equal or non-adjacent in a reference graph are swapped.  Each class
carries an occurrence graph together with an acyclic orientation, and
counting acyclic orientations yields an upper bound on how many distinct
composed systems a tuple of local functions can produce.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BudgetExceededError, ParseError
from .graphs import DepGraph
from .system import System, compose_word, phi

CLASS_DEFAULT_CAP = 10**6
WORDS_DEFAULT_BUDGET = 10**7


def _check_word(w, g: DepGraph):
    if not w:
        raise ParseError("word must be nonempty")
    for letter in w:
        if not 1 <= letter <= g.n:
            raise ParseError(f"letter {letter} out of range 1..{g.n}")


def swappable(a: int, b: int, g: DepGraph) -> bool:
    """Adjacent letters a,b may be transposed: equal, or no edge in g."""
    return a == b or not g.has_edge(a, b)


def word_class(w, g: DepGraph, cap: int = CLASS_DEFAULT_CAP) -> frozenset:
    """Full equivalence class of w by breadth-first closure under allowed
    adjacent transpositions.  Refuses once the class exceeds the cap."""
    w = tuple(w)
    _check_word(w, g)
    seen = {w}
    queue = deque([w])
    while queue:
        cur = queue.popleft()
        for k in range(len(cur) - 1):
            a, b = cur[k], cur[k + 1]
            if a != b and swappable(a, b, g):
                nxt = cur[:k] + (b, a) + cur[k + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > cap:
                        raise BudgetExceededError(
                            f"equivalence class exceeds cap {cap}", required=None
                        )
                    queue.append(nxt)
    return frozenset(seen)


def words_equivalent(w1, w2, g: DepGraph, cap: int = CLASS_DEFAULT_CAP) -> bool:
    """Breadth-first decision of word equivalence; refuses rather than guess
    when the class is larger than the cap."""
    w1, w2 = tuple(w1), tuple(w2)
    _check_word(w1, g)
    _check_word(w2, g)
    if len(w1) != len(w2):
        return False
    if Counter(w1) != Counter(w2):
        return False
    if w1 == w2:
        return True
    return w2 in word_class(w1, g, cap=cap)


def normal_form(w, g: DepGraph) -> tuple:
    """Lexicographically least word in the class of w.

    Greedy extraction: repeatedly move to the front the smallest letter
    none of whose predecessors blocks it (distinct and adjacent in g).
    Equal classes have equal normal forms.
    """
    remaining = list(w)
    _check_word(remaining, g)
    out = []
    while remaining:
        best_letter = None
        best_idx = None
        blocked: set[int] = set()
        for idx, letter in enumerate(remaining):
            movable = letter not in blocked and not any(
                g.has_edge(b, letter) for b in blocked if b != letter
            )
            if movable and (best_letter is None or letter < best_letter):
                best_letter, best_idx = letter, idx
            blocked.add(letter)
        out.append(remaining.pop(best_idx))
    return tuple(out)


# ---------------------------------------------------------------------------
# Occurrence graphs and their orientations

@dataclass(frozen=True)
class OrientedHGraph:
    """Occurrence graph of a word: one vertex (letter, k) per position, an
    edge between distinct letters not adjacent in the reference graph, each
    edge oriented toward the occurrence appearing first in the word."""

    vertices: tuple            # (letter, occurrence) per word position
    edges: frozenset           # unordered pairs, each a sorted 2-tuple of vertices
    orientation: frozenset     # directed (src, dst): dst occurs earlier

    def underlying_edges(self) -> frozenset:
        return self.edges

    def canonical(self) -> tuple:
        """Identity usable as a dictionary key across words."""
        return (
            tuple(sorted(self.vertices)),
            frozenset(self.edges),
            frozenset(self.orientation),
        )

    def is_acyclic(self) -> bool:
        order = {v: i for i, v in enumerate(self.vertices)}
        return all(order[dst] < order[src] for src, dst in self.orientation)


def h_graph(w, g: DepGraph) -> OrientedHGraph:
    w = tuple(w)
    _check_word(w, g)
    counts: Counter = Counter()
    vertices = []
    for letter in w:
        counts[letter] += 1
        vertices.append((letter, counts[letter]))
    edges = set()
    orientation = set()
    for a in range(len(w)):
        for b in range(a + 1, len(w)):
            if w[a] != w[b] and not g.has_edge(w[a], w[b]):
                va, vb = vertices[a], vertices[b]
                edges.add(tuple(sorted((va, vb))))
                orientation.add((vb, va))  # toward the earlier occurrence
    return OrientedHGraph(tuple(vertices), frozenset(edges), frozenset(orientation))


# ---------------------------------------------------------------------------
# Counting acyclic orientations

def _merge_vertex(v, old, new):
    return new if v == old else v


@lru_cache(maxsize=None)
def _acyclic_count(edges: frozenset) -> int:
    # Deletion-contraction: a(G) = a(G - e) + a(G / e); loops vanish and
    # parallel edges collapse because edges live in a set.
    if not edges:
        return 1
    e = min(edges)
    u, v = e
    deleted = edges - {e}
    contracted = frozenset(
        tuple(sorted((_merge_vertex(a, v, u), _merge_vertex(b, v, u))))
        for a, b in deleted
        if _merge_vertex(a, v, u) != _merge_vertex(b, v, u)
    )
    return _acyclic_count(deleted) + _acyclic_count(contracted)


def count_acyclic_orientations(g) -> int:
    """Number of acyclic orientations, via deletion-contraction.

    Accepts a DepGraph or an OrientedHGraph (counts its underlying graph).
    """
    if isinstance(g, OrientedHGraph):
        edges = g.edges
    else:
        edges = frozenset(g.sorted_edges())
    return _acyclic_count(frozenset(tuple(sorted(e)) for e in edges))


def brute_force_acyclic_count(edges) -> int:
    """Oracle: try all 2^|E| orientations, keep the cycle-free ones."""
    edges = [tuple(e) for e in edges]
    vertices = sorted({v for e in edges for v in e})
    count = 0
    for choice in itertools.product((0, 1), repeat=len(edges)):
        adj = {v: [] for v in vertices}
        for (u, v), flip in zip(edges, choice):
            if flip:
                u, v = v, u
            adj[u].append(v)
        indeg = {v: 0 for v in vertices}
        for u in vertices:
            for v in adj[u]:
                indeg[v] += 1
        queue = deque(v for v in vertices if indeg[v] == 0)
        removed = 0
        while queue:
            u = queue.popleft()
            removed += 1
            for v in adj[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    queue.append(v)
        if removed == len(vertices):
            count += 1
    return count


# ---------------------------------------------------------------------------
# The bound report

@dataclass(frozen=True)
class BoundReport:
    """Counts for all words of one length over a system's coordinates.

    distinct   -- composed maps, deduplicated extensionally
    classes    -- word classes under the dependence-graph equivalence
    realized   -- distinct (occurrence graph, orientation) pairs
    paper_sum  -- acyclic-orientation count summed per distinct occurrence graph
    word_sum   -- the same count summed once per word (the literal displayed sum)
    witnesses  -- pairs of inequivalent words with identical composed maps
    """

    t: int
    word_count: int
    distinct: int
    classes: int
    realized: int
    paper_sum: int
    word_sum: int
    witnesses: tuple = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "word_count": self.word_count,
            "distinct": self.distinct,
            "classes": self.classes,
            "realized": self.realized,
            "paper_sum": self.paper_sum,
            "word_sum": self.word_sum,
            "witnesses": [[list(w1), list(w2)] for w1, w2 in self.witnesses],
        }


def _iter_words(n: int, t: int, perms_only: bool):
    if perms_only:
        if t != n:
            raise ParseError(f"permutation words need t = n, got t={t}, n={n}")
        return itertools.permutations(range(1, n + 1))
    return itertools.product(range(1, n + 1), repeat=t)


def bound_report(
    f: System,
    t: int,
    perms_only: bool = False,
    budget: int = WORDS_DEFAULT_BUDGET,
) -> BoundReport:
    """Enumerate every word of length t and tabulate the bound chain."""
    if t < 1:
        raise ParseError("word length must be at least 1")
    import math

    total = math.factorial(f.n) if perms_only else f.n**t
    if total > budget:
        raise BudgetExceededError(
            f"enumeration needs {total} words, budget is {budget}", required=total
        )
    g = phi(f)
    gbar = g.complement()

    maps_to_forms: dict = {}
    class_forms: set = set()
    realized_keys: set = set()
    h_counts: dict = {}
    word_sum = 0
    for w in _iter_words(f.n, t, perms_only):
        m = compose_word(f, w)
        nf = normal_form(w, gbar)
        maps_to_forms.setdefault(m, {})
        forms = maps_to_forms[m]
        if nf not in forms:
            forms[nf] = w
        class_forms.add(nf)
        h = h_graph(w, g)
        realized_keys.add(h.canonical())
        h_key = (tuple(sorted(h.vertices)), h.edges)
        if h_key not in h_counts:
            h_counts[h_key] = count_acyclic_orientations(h)
        word_sum += h_counts[h_key]

    witnesses = []
    for m in sorted(maps_to_forms):
        forms = maps_to_forms[m]
        if len(forms) > 1:
            reps = sorted(forms.values())
            witnesses.append((reps[0], reps[1]))
    witnesses.sort()

    return BoundReport(
        t=t,
        word_count=total,
        distinct=len(maps_to_forms),
        classes=len(class_forms),
        realized=len(realized_keys),
        paper_sum=sum(h_counts.values()),
        word_sum=word_sum,
        witnesses=tuple(witnesses),
    )


def enumerate_classes(
    n: int, t: int, g: DepGraph, budget: int = WORDS_DEFAULT_BUDGET
) -> list[tuple]:
    """Sorted normal forms of all words of length t under the g-equivalence."""
    total = n**t
    if total > budget:
        raise BudgetExceededError(
            f"enumeration needs {total} words, budget is {budget}", required=total
        )
    forms = {normal_form(w, g) for w in itertools.product(range(1, n + 1), repeat=t)}
    return sorted(forms)
