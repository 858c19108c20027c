"""
Chordal graphs, cliques and clique families
===========================================

Parse a small graph, certify that it is chordal, and walk through its
cliques, clique graph and the lattice of clique families.
"""

from cliquetrees import build_lattice, is_chordal, parse_graph
from cliquetrees.clique_lattice import lattice_to_dict
from cliquetrees.graph_core import find_two_chord

# A triangle v1 v2 v3 with a pendant edge at v3.
g = parse_graph("v1 v2\nv2 v3\nv1 v3\nv3 v4\n")
verdict = is_chordal(g)
print("chordal:", bool(verdict), "peo:", [g.name(v) for v in verdict.peo])

# A 4-cycle is the smallest non-chordal graph; the witness is the cycle itself.
square = parse_graph("a b\nb c\nc d\nd a\n")
print("4-cycle witness:", [square.name(v) for v in is_chordal(square).witness])

# Adding one diagonal makes it chordal, and every long cycle now has a chord
# joining two vertices at distance two along the cycle.
fan = parse_graph("a b\nb c\nc d\nd a\na c\n")
a, b = find_two_chord(fan, [fan.index(x) for x in "abcd"])
print("2-chord of a-b-c-d:", fan.name(a), fan.name(b))

# Cliques and the clique graph: edges join intersecting cliques and carry
# the intersection as their label.
lattice = build_lattice(g)
cg = lattice.clique_graph
for k in range(cg.size):
    print(f"K{k + 1} =", cg.clique_names(k))
for (i, j), label in cg.labels.items():
    print(f"K{i + 1}K{j + 1} label:", sorted(g.name(v) for v in label))

# Each family is the set of cliques containing some complete set; its
# maximal generator is the intersection of its members.
for f in lattice_to_dict(lattice)["families"]:
    print(f["cliques"], "max generator", f["max_generator"])
