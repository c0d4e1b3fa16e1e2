"""
Two and three punctures, and the t=4 obstruction
================================================

With two or three boundary circles the family closes into an annulus whose
faces are all Scharlemann cycles.  At t=4 a second family cannot be placed.
"""

from bigonslide.smallcases import (
    build_annulus_case,
    corr2_scan,
    corr2_t4_contradiction,
    detect_scharlemann_cycles,
)

for t in (2, 3):
    c = build_annulus_case(t)
    cycles = detect_scharlemann_cycles(c.pair)
    print(f"t={t}: faces {c.face_lengths}, Scharlemann {sorted(map(len, cycles))}, "
          f"delta {c.delta}, {c.seifert}")

# integer solutions of the endpoint count with delta >= 6
print("scan:", corr2_scan(range(4, 1001)))

cert = corr2_t4_contradiction()
print("t=4 placements:", cert["placements"])
print("without the non-parallel hypothesis:", corr2_t4_contradiction(relaxed=True)["placements"])
