"""
Completing the family with one more edge
========================================

For shift 1 there are two ways to add the extra edge; one of them makes the
extra bigon non-slidable, and that one extends by exactly t+2 edges.
"""

from bigonslide.cutmodel import build_standard_cut_model, enumerate_completions, max_extension

for t, alpha in [(4, 1), (7, 1), (7, 3), (7, 6)]:
    comps = enumerate_completions(build_standard_cut_model(t, alpha))
    for c in comps:
        ext = max_extension(c)
        print(f"t={t} alpha={alpha}: slidable={c.slidable} delta={c.delta} "
              f"max_extension={'unbounded' if ext is None else ext}")
