"""
Ribbon graphs on a punctured torus
==================================

Build the family of parallel edges, read off its faces and genus, and
collapse parallel classes.
"""

from bigonslide.cutmodel import build_standard_cut_model
from bigonslide.fatgraph import SlopeClass, delta, genus, parallelism_classes, to_dot, trace_faces

# the bottom copy for t = 5 boundary circles, shift 1
m = build_standard_cut_model(5, 1)
g = m.g_bot
print("edges:", g.edge_ids())
print("faces:", [len(f) for f in trace_faces(g)], "genus", genus(g))

# every edge of the family is in one class until a completion is chosen
print("classes:", parallelism_classes(g))

# slopes are primitive pairs up to sign
print("delta((1,0), (3,2)) =", delta(SlopeClass(1, 0), SlopeClass(3, 2)))

# graphviz text, ready for `dot -Tsvg`
print(to_dot(g, "bottom")[:200], "...")
