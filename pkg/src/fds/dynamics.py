"""State spaces of composed systems and their limit-cycle structure.

A map on the 2^n states is a functional digraph; its periodic part is a
disjoint union of directed cycles, so two maps have isomorphic limit-cycle
subdigraphs exactly when their cycle-length multisets agree (each cycle
must map to a cycle of the same length, and lengths can be matched in any
order).  That one-line argument justifies deciding stable isomorphism by
multiset comparison.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import BudgetExceededError, DimensionMismatchError
from .graphs import DepGraph, Permutation, invert_perm
from .system import System, TruthTableMap, local_map

MONOID_DEFAULT_N_CAP = 4
MONOID_DEFAULT_SIZE_CAP = 10**6
DOT_STATE_CAP = 12


def _dimension_of(m: TruthTableMap) -> int:
    size = len(m)
    n = size.bit_length() - 1
    if size != 1 << n:
        raise DimensionMismatchError(f"map length {size} is not a power of two")
    return n


def state_label(state: int, n: int) -> str:
    """Bit string x1 x2 ... xn."""
    return "".join(str((state >> k) & 1) for k in range(n))


@dataclass(frozen=True)
class StateSpace:
    """Functional digraph on all 2^n states: one successor per state."""

    n: int
    successor: tuple[int, ...]

    def __post_init__(self):
        if len(self.successor) != 1 << self.n:
            raise DimensionMismatchError(
                f"successor array length {len(self.successor)} != 2^{self.n}"
            )


@dataclass(frozen=True)
class LimitCycles:
    """Periodic states grouped into cycles; multiset of cycle lengths."""

    cycles: tuple[tuple[int, ...], ...]
    multiset: tuple[int, ...]

    def to_json(self, n: int) -> dict:
        return {
            "multiset": list(self.multiset),
            "cycles": [[state_label(s, n) for s in cyc] for cyc in self.cycles],
        }


def state_space(m: TruthTableMap) -> StateSpace:
    return StateSpace(_dimension_of(m), tuple(m))


def limit_cycles(ss: StateSpace) -> LimitCycles:
    """Strip transients by in-degree peeling, then walk the cycles.

    Each cycle is listed starting at its smallest state; cycles are sorted
    by that starting state.
    """
    size = 1 << ss.n
    indeg = [0] * size
    for s in range(size):
        indeg[ss.successor[s]] += 1
    stack = [s for s in range(size) if indeg[s] == 0]
    alive = [True] * size
    while stack:
        s = stack.pop()
        alive[s] = False
        t = ss.successor[s]
        indeg[t] -= 1
        if indeg[t] == 0:
            stack.append(t)
    cycles = []
    seen = [False] * size
    for s in range(size):
        if alive[s] and not seen[s]:
            cycle = []
            cur = s
            while not seen[cur]:
                seen[cur] = True
                cycle.append(cur)
                cur = ss.successor[cur]
            start = cycle.index(min(cycle))
            cycles.append(tuple(cycle[start:] + cycle[:start]))
    cycles.sort()
    return LimitCycles(tuple(cycles), tuple(sorted(len(c) for c in cycles)))


def cycle_multiset(m: TruthTableMap) -> tuple[int, ...]:
    return limit_cycles(state_space(m)).multiset


def stably_isomorphic(f_map: TruthTableMap, g_map: TruthTableMap) -> bool:
    """Limit-cycle subdigraphs isomorphic: cycle-length multisets equal."""
    return cycle_multiset(f_map) == cycle_multiset(g_map)


def permute_state(state: int, p: Permutation) -> int:
    """Coordinate p(i) of the result is coordinate i of the input."""
    out = 0
    for i, image in enumerate(p, start=1):
        out |= ((state >> (i - 1)) & 1) << (image - 1)
    return out


def conjugate_by_coord_perm(m: TruthTableMap, p: Permutation) -> TruthTableMap:
    """phi o m o phi^{-1} where phi permutes state coordinates by p."""
    n = _dimension_of(m)
    if len(p) != n:
        raise DimensionMismatchError(f"permutation size {len(p)} != map dimension {n}")
    inv = invert_perm(p)
    return tuple(permute_state(m[permute_state(s, inv)], p) for s in range(1 << n))


def compose_maps(outer: TruthTableMap, inner: TruthTableMap) -> TruthTableMap:
    if len(outer) != len(inner):
        raise DimensionMismatchError("map sizes differ")
    return tuple(outer[inner[s]] for s in range(len(inner)))


def monoid_closure(
    f: System,
    n_cap: int = MONOID_DEFAULT_N_CAP,
    size_cap: int = MONOID_DEFAULT_SIZE_CAP,
) -> frozenset:
    """All maps f^w over nonempty words w: the least set containing the
    generators and closed under post-composition with each generator."""
    if f.n > n_cap:
        raise BudgetExceededError(
            f"monoid closure refuses n={f.n} > cap {n_cap}", required=None
        )
    generators = [local_map(f, i) for i in range(1, f.n + 1)]
    closure = set(generators)
    frontier = list(generators)
    while frontier:
        nxt = []
        for m in frontier:
            for gen in generators:
                composed = compose_maps(gen, m)
                if composed not in closure:
                    closure.add(composed)
                    if len(closure) > size_cap:
                        raise BudgetExceededError(
                            f"monoid closure exceeds cap {size_cap}", required=None
                        )
                    nxt.append(composed)
        frontier = nxt
    return frozenset(closure)


# ---------------------------------------------------------------------------
# DOT export

def dot_export(ss: StateSpace) -> str:
    """Graphviz digraph of the state space; nodes labeled x1x2...xn."""
    if ss.n > DOT_STATE_CAP:
        raise BudgetExceededError(
            f"DOT export refuses n={ss.n} > cap {DOT_STATE_CAP}", required=1 << ss.n
        )
    lines = ["digraph statespace {"]
    for s in range(1 << ss.n):
        lines.append(f'  "{state_label(s, ss.n)}";')
    for s in range(1 << ss.n):
        lines.append(
            f'  "{state_label(s, ss.n)}" -> "{state_label(ss.successor[s], ss.n)}";'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def dep_dot_export(g: DepGraph) -> str:
    """Graphviz (undirected) rendering of a dependency graph."""
    lines = ["graph dependencies {"]
    for v in range(1, g.n + 1):
        lines.append(f'  "{v}";')
    for i, j in g.sorted_edges():
        lines.append(f'  "{i}" -- "{j}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cycles_json_text(m: TruthTableMap) -> str:
    n = _dimension_of(m)
    return json.dumps(limit_cycles(state_space(m)).to_json(n), sort_keys=True)
