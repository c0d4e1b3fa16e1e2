"""
Boundary words and primitivity
==============================

Read the boundary of S against the disks on each side and test the words
with Whitehead reduction, cross-checked by a brute-force Nielsen search.
"""

from bigonslide.assembly import boundary_word, build_surface_S
from bigonslide.freegroup import abelianize, is_primitive, minimize, primitivity_oracle

for t in (4, 5, 8):
    a = build_surface_S(t)
    for side in "BW":
        w = boundary_word(a, side)
        print(f"t={t} {side}: {w}  abelian={abelianize(w)}  primitive={is_primitive(w)}")

# a primitive word shrinks to a single letter, a non-primitive one does not
for w in ["aabab", "bababbb"]:
    print(w, "->", minimize(w), is_primitive(w), primitivity_oracle(w))
