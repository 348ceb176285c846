"""Walkthrough: from polynomial updates to dependency graphs.

A system on binary strings is a tuple of local update rules, one per
coordinate, each a GF(2) polynomial.  This script builds a few small
systems, prints their coefficient matrices, and computes their
dependency graphs two ways: the fast divisibility criterion and the
brute-force commutation definition.
"""

from fds import System, graph_equivalent, linear_system, linearize, phi, phi_oracle

# Three coordinates; f1 rewrites x1 to 1 + x3 + x1*x2, and so on.
f = System.from_strings("1 + x3 + x1*x2", "x2 + x1*x3 + x2*x3", "1 + x1*x2*x3")

print("coefficient matrix (basis 1, x1, x2, x3, x1x2, x1x3, x2x3, x1x2x3):")
for i in range(1, 4):
    print(" ", f.update(i).coefficient_row())

# An edge (i,j) means coordinates i and j are mutually independent:
# neither variable appears in the other's update.
g = System.from_strings("x2 + x3", "1 + x2", "x1")
print("\nphi(g) edges:", phi(g).sorted_edges())
print("commutation oracle agrees:", phi_oracle(g) == phi(g))

# Two systems are graph equivalent when their dependency graphs are
# isomorphic; the witness acts on the linearization matrices.
h = System.from_strings("x2", "x3", "0")
perm = graph_equivalent(g, h)
print("\ngraph equivalent via permutation:", perm)
print("linearization of phi(g):")
for row in linearize(phi(g)):
    print(" ", row)

# The linearization is itself a system, and applying phi to it recovers
# the original graph.
print("\nphi(linear system) == phi(g):", phi(linear_system(phi(g))) == phi(g))
