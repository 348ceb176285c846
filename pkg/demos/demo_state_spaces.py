"""Walkthrough: state spaces, limit cycles, and stable isomorphism.

A composed system is a map on all 2^n states; iterating it draws a
functional digraph whose periodic part is a union of directed cycles.
Equal dependency graphs do not force equal limit-cycle structure, and a
conjugated map need not be reachable by any schedule.
"""

from fds import (
    System,
    compose_word,
    conjugate_by_coord_perm,
    cycle_multiset,
    dot_export,
    limit_cycles,
    monoid_closure,
    stably_isomorphic,
    state_label,
    state_space,
)

f = System.from_strings("1 + x2*x3", "x1", "1 + x1")
g = System.from_strings("x1 + x2 + x3", "1 + x1 + x2", "x1 + x3")

mf = compose_word(f, (1, 2, 3))
mg = compose_word(g, (1, 2, 3))
print("cycle multiset of f composed:", cycle_multiset(mf))
print("cycle multiset of g composed:", cycle_multiset(mg))
print("stably isomorphic:", stably_isomorphic(mf, mg),
      "(same dependency graph, different limit cycles)")

lc = limit_cycles(state_space(mg))
print("cycles of g composed:",
      [[state_label(s, 3) for s in cycle] for cycle in lc.cycles])

# Conjugating by a coordinate swap preserves the dynamics up to
# relabeling, but the conjugate can escape every possible schedule.
h = System.from_strings("0", "x3", "x2")
m = compose_word(h, (1, 2, 3))
conj = conjugate_by_coord_perm(m, (2, 1, 3))
print("\nconjugate fixes state 101:", conj[0b101] == 0b101)
closure = monoid_closure(h)
print("maps reachable by some word:", len(closure))
print("conjugate reachable:", conj in closure)

print("\nDOT of the composed state space:\n")
print(dot_export(state_space(m)))
