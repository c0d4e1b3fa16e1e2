"""
The assembled surface and its graphs
====================================

Glue 3t-2 disks into a twice-punctured torus S, then check the Euler
characteristic, the boundary slope distance and the class sizes of G_S.
"""

from bigonslide.assembly import (
    assembled_pair,
    assembly_report,
    build_surface_S,
    graph_GS,
    reduced_class_sizes,
)
from bigonslide.pairing import check_no_double_parallel, check_parity

a = build_surface_S(6)
for k, v in assembly_report(a).items():
    print(f"{k:>20}: {v}")

# G_S has two vertices and three parallel classes
print("G_S classes:", reduced_class_sizes(graph_GS(a)))

# the pair of intersection graphs obeys both pairing rules
p = assembled_pair(a)
print("parity violations:", check_parity(p))
print("double parallels:", check_no_double_parallel(p))
