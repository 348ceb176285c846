"""Walkthrough: update schedules, word equivalence, and system counts.

Composing the local rules along different words can produce the same
global map.  Words are identified when adjacent letters that are equal
or mutually dependent commute; counting acyclic orientations of the
occurrence graph bounds how many distinct systems a schedule family can
realize.
"""

from fds import (
    DepGraph,
    System,
    bound_report,
    compose_word,
    count_acyclic_orientations,
    h_graph,
    normal_form,
    phi,
)

f = System.from_strings("x2*x3", "x1*x3", "0")
print("phi(f) edges:", phi(f).sorted_edges(), "(edgeless: all coordinates dependent)")

# Every word of length 3 is its own equivalence class here, yet two of
# them still collapse to the same (zero) map, so the class count is a
# strict upper bound.
rep = bound_report(f, 3)
print("words:", rep.word_count, "classes:", rep.classes, "distinct maps:", rep.distinct)
print("witness pair with equal maps:", rep.witnesses[-1])
w1, w2 = rep.witnesses[-1]
print("maps equal:", compose_word(f, w1) == compose_word(f, w2))

# Occurrence graph of a word with a repeated letter, on a 4-cycle.
c4 = DepGraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
h = h_graph((1, 2, 1, 3), c4)
print("\noccurrence vertices:", h.vertices)
print("edges:", sorted(h.edges))
print("orientation (toward the earlier occurrence):", sorted(h.orientation))

# Restricted to permutation words, the class count is exactly the number
# of acyclic orientations of the dependence graph.
g = System.from_strings("x2 + x3", "1 + x2", "x1")
perm_rep = bound_report(g, 3, perms_only=True)
gbar = phi(g).complement()
print("\npermutation-word classes:", perm_rep.classes,
      "= acyclic orientations of the dependence graph:",
      count_acyclic_orientations(gbar))

# Normal forms are canonical class representatives.
free = DepGraph.empty(3)
print("\nnormal form of (3,1,2) with all swaps allowed:", normal_form((3, 1, 2), free))
