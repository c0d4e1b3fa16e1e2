"""Fixed checks for families on tori with two and three punctures, plus the
endpoint-counting scan and the t=4 placement contradiction behind the bound
on family size when the intersection number is at least 6."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .assembly import SurfaceAssembly, compute_delta_S_T, graph_GS, graph_GTS, trace_boundary
from .cutmodel import (
    BOTTOM,
    TOP,
    CutModel,
    DiskFace,
    build_standard_cut_model,
    eid,
    enumerate_completions,
    extension_placements,
    interval_gaps,
    transfer_along_strings,
    vmod,
)
from .fatgraph import Edge, is_toroidal_cellular, parallelism_classes, trace_faces
from .pairing import GraphPair

SEIFERT = {2: "(+0,1;-1/4,-1/4)", 3: "(+0,1;-1/3,-1/6)"}
FILLED = {2: "(+0,0;1/2,-1/4,-1/4)", 3: "(+0,0;1/2,-1/3,-1/6)"}


@dataclass(frozen=True)
class AnnulusCase:
    t: int
    pair: GraphPair  # (G_{T,A}, G_A)
    assembly: SurfaceAssembly
    realizations: int

    @property
    def face_lengths(self):
        return sorted(len(f) for f in trace_faces(self.pair.g1))

    @property
    def seifert(self):
        return SEIFERT[self.t]

    @property
    def delta(self):
        g = self.pair.g1
        return compute_delta_S_T((g.degree(v) for v in range(1, g.vertex_count + 1)),
                                 len(self.assembly.circuits))

    def to_dict(self):
        flagged = detect_scharlemann_cycles(self.pair)
        return {
            "t": self.t,
            "boundary_components": len(self.assembly.circuits),
            "face_lengths": self.face_lengths,
            "scharlemann_lengths": sorted(len(f) for f in flagged),
            "delta": self.delta,
            "realizations": self.realizations,
            "seifert_string": self.seifert,
            "filled_seifert_string": FILLED[self.t],
            "gta": self.pair.g1.to_dict(),
            "ga": self.pair.g2.to_dict(),
        }


def _ring_graphs(t):
    """Graphs of the family closed up into a ring of bigons.  With two
    punctures the non-slidable completion already closes; with three it needs
    one more edge on the high side."""
    base = build_standard_cut_model(t, 1)
    bad = [c for c in enumerate_completions(base) if not c.slidable]
    if len(bad) != 1:
        raise ValueError(f"expected one non-slidable completion, found {len(bad)}")
    if t == 2:
        return [bad[0].g_bot]
    return extension_placements(bad[0], "high")


def build_annulus_case(t: int, realization: int = 0) -> AnnulusCase:
    if t not in (2, 3):
        raise ValueError("annulus cases exist for t = 2, 3 only")
    graphs = _ring_graphs(t)
    g = graphs[realization]
    m = len(g.edges)
    faces = tuple(
        DiskFace(f"F'{i}", ((BOTTOM, eid(i), 0), (TOP, eid(i % m + 1), 1))) for i in range(1, m + 1)
    )
    model = CutModel(t, 1, g, g, faces)
    a = SurfaceAssembly(t, None, model, {})
    a = SurfaceAssembly(t, None, model, {}, trace_boundary(a))
    pair = GraphPair.identity(graph_GTS(a), graph_GS(a))
    return AnnulusCase(t, pair, a, len(graphs))


def detect_scharlemann_cycles(p: GraphPair, which: int = 1) -> list:
    """Faces of ``p.g1`` (or ``p.g2``) whose darts all run from one endpoint
    label to the same different one."""
    g = p.graph(which)
    out = []
    for f in trace_faces(g):
        pairs = set()
        for x, s in f:
            lab = g.edge(x).labels
            if lab is None:
                raise ValueError(f"edge {x} has no endpoint labels")
            pairs.add((lab[s], lab[1 - s]))
        if len(pairs) == 1 and len({*next(iter(pairs))}) == 2:
            out.append(f)
    return out


# -- endpoint counting ----------------------------------------------------------------


def corr2_scan(t_range, n_max: int = 4, delta_min: int = 6) -> list:
    """All ``(n, t, delta)`` with ``delta >= delta_min``, ``1 <= n <= n_max``
    and ``6t <= delta*t <= n(t+2)``.

    >>> corr2_scan(range(4, 50))
    [(4, 4, 6)]
    """
    out = []
    for t in t_range:
        for n in range(1, n_max + 1):
            for d in range(max(delta_min, 6), n * (t + 2) // t + 1):
                if 6 * t <= d * t <= n * (t + 2):
                    out.append((n, t, d))
    return sorted(out)


# -- the t = 4 contradiction -----------------------------------------------------------


def _second_family_edges(g, k, t, allow_parallel):
    """Cellular placements of an edge joining vertices ``k`` and ``k+1``;
    unless ``allow_parallel`` it may not be parallel to anything."""
    a = Edge("a", k, vmod(k + 1, t))
    out = []
    for ta in g.rotation(k):
        for ha in g.rotation(vmod(k + 1, t)):
            cand = g.with_edge(a, ta, ha)
            if not is_toroidal_cellular(cand):
                continue
            if not allow_parallel and any("a" in c and len(c) > 1 for c in parallelism_classes(cand)):
                continue
            out.append((ta, ha))
    return out


def corr2_t4_contradiction(relaxed: bool = False) -> dict:
    """Placements of the edge ``a_{i-1}`` next to ``a_i`` across one bigon of
    a second family, for the family ``e1 .. e6`` at ``t = 4``.

    ``a_i`` joins vertices 3 and 4 and is not parallel to ``e3`` (two parallel
    edges of a six-edge family guarantee one such).  Case ``minus`` puts
    ``a_i`` on the top copy and its neighbour on the bottom copy; case
    ``plus`` is the other way round.  ``relaxed`` drops the non-parallel
    requirement, which is all a family of five edges provides.
    """
    t, k = 4, 3
    base = build_standard_cut_model(t, 1)
    c = next(c for c in enumerate_completions(base) if not c.slidable)
    model = CutModel(t, 1, c.g_bot, c.g_top, base.faces)
    cases = {}
    for case, level, shift in (("minus", TOP, -1), ("plus", BOTTOM, 1)):
        rows = []
        for ta, ha in _second_family_edges(c.g_bot, k, t, relaxed):
            a = Edge("a", k, vmod(k + 1, t))
            bot, top = c.g_bot.with_edge(a, ta, ha), c.g_top.with_edge(a, ta, ha)
            src, host = (top, bot) if level == TOP else (bot, top)
            ivs = [transfer_along_strings(model, src, ("a", s), level) for s in (0, 1)]
            nb = Edge("b", vmod(k + shift, t), vmod(k + 1 + shift, t))
            found = [
                (x, y) for x in interval_gaps(host, ivs[0]) for y in interval_gaps(host, ivs[1])
                if is_toroidal_cellular(host.with_edge(nb, x, y))
            ]
            rows.append({
                "a_i": {"tail_after": _end(ta), "head_after": _end(ha)},
                "intervals": [_iv(iv) for iv in ivs],
                "placements": [{"tail_after": _end(x), "head_after": _end(y)} for x, y in found],
            })
        cases[case] = rows
    total = sum(len(r["placements"]) for rows in cases.values() for r in rows)
    return {"t": t, "relaxed": relaxed, "cases": cases, "placements": total, "empty": total == 0}


def _end(x):
    return f"{x[0]}{'+' if x[1] == 0 else '-'}"


def _iv(iv):
    return {"vertex": iv.vertex, "left": _end(iv.left), "right": _end(iv.right)}


def report_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
