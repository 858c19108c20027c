"""
Minimal separators and the reduced clique graph
===============================================

Minimal separators are read off the family lattice and checked against a
brute-force search over vertex subsets.
"""

from cliquetrees import (
    build_lattice,
    clique_tree_union,
    minimal_separators_lattice,
    minimal_separators_oracle,
    parse_graph,
    reduced_clique_graph,
)
from cliquetrees.separators import separators_to_json

g = parse_graph("1 2\n1 3\n2 3\n2 4\n3 4\n3 5\n4 5\n")
lattice = build_lattice(g)
cg = lattice.clique_graph

seps = minimal_separators_lattice(lattice)
print("from the lattice:", separators_to_json(g, seps))
print("brute force:     ", separators_to_json(g, minimal_separators_oracle(g)))

# {3} labels the edge K1K3 but separates nothing, so that edge is dropped.
print("reduced clique graph:", sorted(reduced_clique_graph(cg, seps)))

# The union of all clique trees is the reduced clique graph, and each tree
# carries exactly the minimal separators as edge labels.
union, labels = clique_tree_union(lattice)
print("union of clique trees:", sorted(union))
print("labels per tree:", [separators_to_json(g, s) for s in labels])

# A label can be a minimal separator for one pair of vertices and still
# fail to separate the two cliques it joins.
h = parse_graph("h a\nh b\nh c\nh d\nh e\nh f\na d\nb c\nb f\nc e\n")
hl = build_lattice(h)
print("cliques:", [hl.clique_graph.clique_names(k) for k in range(hl.clique_graph.size)])
print("separators:", separators_to_json(h, minimal_separators_lattice(hl)))
print("clique-graph edges:", len(hl.clique_graph.edges))
print("reduced:", len(reduced_clique_graph(hl.clique_graph, minimal_separators_lattice(hl))))
print("union of clique trees:", len(clique_tree_union(hl)[0]))
