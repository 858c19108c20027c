"""
Shearer's law on a chordal dependency graph
===========================================

A rooted clique tree orders the vertices. Along that order a marginal
vector p is converted into a coupling vector c, and independent coins with
biases c feed a block factor whose law is the extremal 1-dependent law.
"""

from fractions import Fraction

import numpy as np

from cliquetrees import (
    build_tree_order,
    c_from_p,
    enumerate_clique_trees,
    exact_block_factor_law,
    isp,
    lll_lower_bound,
    p_from_c,
    parse_graph,
    shearer_region_membership,
    verify_shearer_law,
    verify_tree_order,
)
from cliquetrees.clique_lattice import build_clique_graph
from cliquetrees.shearer import sample_block_factor_batch

g = parse_graph("a b\nb c\nb d\nc d\nd e\n")
cg = build_clique_graph(g)
tree = next(enumerate_clique_trees(g))
order = build_tree_order(cg, tree, root=0)
print("linear extension:", [g.name(v) for v in order.linear_extension])
print("left-handed tree order:", bool(verify_tree_order(g, order)))

# Exact arithmetic: pick c, get p, and come back.
c = [Fraction(1, 4), Fraction(1, 3), Fraction(1, 5), Fraction(1, 5), Fraction(1, 2)]
p = p_from_c(order, c).p
print("p =", {g.name(v): str(p[v]) for v in range(g.n)})
print("c recovered:", c_from_p(order, p) == c)

# The block-factor law has the right marginals, independent 1-sets, is
# 1-dependent, and its avoidance probabilities are the signed independent
# set polynomial.
law = exact_block_factor_law(order, c)
report = verify_shearer_law(law, g, p)
for name, check in report.checks.items():
    print(f"{name}: passed={check.passed} deviation={check.max_deviation}")
print("P(no ones) =", isp(g, p, exact=True))

# Where does a marginal vector sit relative to the region? The oracle
# tests the sign of the polynomial on every vertex subset.
# A coupling value of exactly 1 puts p on the boundary.
edge_of_region = p_from_c(order, c[:-1] + [Fraction(1)]).p
for label, q in [("p", p), ("boundary", edge_of_region), ("2p", [2 * x for x in p])]:
    verdict = shearer_region_membership(g, q, order, oracle=True)
    print(f"{label}: {verdict.region.value} (oracle {verdict.oracle_region.value})")

# The coupling vector gives an explicit avoidance bound.
print("bound for {a, c, e}:", lll_lower_bound(order, p, [g.index(x) for x in "ace"]))

# Sampling: one uniform per vertex in linear-extension order, seeded.
draws = sample_block_factor_batch(order, [float(x) for x in c], 200_000, seed=7)
print("empirical marginals:", np.round(draws.mean(axis=0), 3))
print("exact marginals:    ", np.round([float(x) for x in p], 3))
