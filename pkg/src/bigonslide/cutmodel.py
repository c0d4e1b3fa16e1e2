"""The cut manifold T x I with the bigon disk system, and its completions.

Conventions.  Edge ``e{j}`` joins vertex ``j`` (tail) to vertex ``j + alpha``
(head), indices mod ``t`` in ``1..t``.  The bottom copy ``T1`` carries
``e1 .. e{t+1}``, the top copy ``T2`` carries ``e2 .. e{t+2}``; the gluing
map preserves every label.  Bigon ``F'_i`` has bottom side ``e{i}`` and top
side ``e{i+1}``; its corners run along string ``i`` (from bottom vertex ``i``
to top vertex ``i+1``) and string ``i + alpha``.

The standard model is realised by straight arcs in a flat torus: the cycle
``e1 .. et`` is a horizontal line through the vertices and ``e{t+1}`` crosses
it once.  The bigons are vertical in the product, so the top graph is the
bottom graph with every label shifted up by one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .fatgraph import (
    Edge,
    EmbeddedGraph,
    IntervalSpec,
    POSITIVE,
    cycle_delta,
    cycle_slope,
    face_of_dart,
    is_toroidal_cellular,
    parallelism_classes,
    same_ribbon_structure,
    trace_faces,
    _cyclic_equal,
)
from .pairing import GcdViolation

BOTTOM, TOP = 1, 2


def eid(j):
    return f"e{j}"


def edge_index(name):
    """Numeric index of an edge id such as ``e7`` or ``e7''``."""
    return int(name[1:].rstrip("'"))


def shift_id(name, by):
    """``e7''`` shifted by 2 is ``e9''``."""
    j = edge_index(name)
    return f"e{j + by}" + name[len(str(j)) + 1:]


def vmod(k, t):
    return (k - 1) % t + 1


def _edge(j, t, alpha):
    return Edge(eid(j), vmod(j, t), vmod(j + alpha, t), POSITIVE)


@dataclass(frozen=True)
class DiskFace:
    """A disk in the cut manifold.  ``sides`` is the cyclic sequence of
    ``(level, edge_id, start_side)``: the boundary runs along the edge on
    copy ``level`` starting from its end ``start_side`` and then turns along
    a string to the next side."""

    name: str
    sides: tuple

    @property
    def kind(self):
        return {2: "bigon", 6: "hexagon"}.get(len(self.sides), "other")

    def corners(self, t):
        """Yield ``(string, bottom_end, top_end)`` for every corner."""
        out = []
        n = len(self.sides)
        for k in range(n):
            lv, e, s = self.sides[k]
            nlv, ne, ns = self.sides[(k + 1) % n]
            arrive = (lv, (e, 1 - s))
            leave = (nlv, (ne, ns))
            if lv == nlv:
                raise ValueError(f"face {self.name}: consecutive sides on the same copy")
            bottom, top = (arrive, leave) if lv == BOTTOM else (leave, arrive)
            out.append((bottom[1], top[1]))
        return out


@dataclass(frozen=True)
class CutModel:
    t: int
    alpha: int
    g_bot: EmbeddedGraph
    g_top: EmbeddedGraph
    faces: tuple
    notes: dict = field(default_factory=dict, compare=False)

    @property
    def strings(self):
        return [f"I'{k},{vmod(k + 1, self.t)}" for k in range(1, self.t + 1)]

    def corner_table(self):
        """All corners as ``(face, string, bottom_end, top_end)``.

        Raises ``ValueError`` when a corner would join bottom vertex ``k`` to a
        top vertex other than ``k + 1``.
        """
        rows = []
        for f in self.faces:
            for bottom, top in f.corners(self.t):
                kb = self.g_bot.edge(bottom[0]).vertex(bottom[1])
                kt = self.g_top.edge(top[0]).vertex(top[1])
                if vmod(kb + 1, self.t) != kt:
                    raise ValueError(f"face {f.name}: corner {bottom}->{top} leaves the strings")
                rows.append((f.name, kb, bottom, top))
        return rows

    def to_dict(self):
        return {
            "t": self.t,
            "alpha": self.alpha,
            "g_bot": self.g_bot.to_dict(),
            "g_top": self.g_top.to_dict(),
            "strings": self.strings,
            "faces": [
                {"name": f.name, "kind": f.kind,
                 "sides": [{"copy": f"T{lv}", "edge": e, "from": "tail" if s == 0 else "head"}
                           for lv, e, s in f.sides]}
                for f in self.faces
            ],
            "corners": [
                {"face": name, "string": self.strings[k - 1],
                 "bottom": f"{b[0]}{'+' if b[1] == 0 else '-'}",
                 "top": f"{tp[0]}{'+' if tp[1] == 0 else '-'}"}
                for name, k, b, tp in self.corner_table()
            ],
        }


def _standard_base_graph(t, alpha):
    """Bottom graph ``e1 .. e{t+1}``: vertex at position ``k`` on the
    horizontal cycle carries label ``1 + k*alpha``; ``e{t+1}`` leaves vertex 1
    upwards and reaches vertex ``1 + alpha`` from below."""
    label = [vmod(1 + k * alpha, t) for k in range(t)]
    edges = tuple(_edge(j, t, alpha) for j in range(1, t + 2))
    rots = [None] * t
    for k in range(t):
        east = (eid(label[k]), 0)
        west = (eid(label[k - 1]), 1)
        if k == 0:
            rot = (east, (eid(t + 1), 0), west)
        elif k == 1:
            rot = (east, west, (eid(t + 1), 1))
        else:
            rot = (east, west)
        # listed clockwise in the flat picture: that is the positive vertex orientation
        rots[label[k] - 1] = rot[::-1]
    return EmbeddedGraph(t, edges, tuple(rots))


def shift_labels(g: EmbeddedGraph, t, by=1) -> EmbeddedGraph:
    """Relabel ``e{j} -> e{j+by}`` and vertex ``k -> k+by``."""
    emap = {e.id: shift_id(e.id, by) for e in g.edges}
    vmap = {k: vmod(k + by, t) for k in range(1, t + 1)}
    return g.relabeled(emap, vmap)


def build_standard_cut_model(t: int, alpha: int) -> CutModel:
    """Cut manifold with bigons ``F'_1 .. F'_{t+1}``; ``e2`` is still
    missing from the top copy."""
    if t < 2:
        raise ValueError("t must be at least 2")
    alpha = alpha % t
    if gcd(t, alpha) != 1:
        raise GcdViolation(f"gcd({t}, {alpha}) != 1")
    g_bot = _standard_base_graph(t, alpha)
    g_top = shift_labels(g_bot, t)
    faces = tuple(
        DiskFace(f"F'{i}", ((BOTTOM, eid(i), 0), (TOP, eid(i + 1), 1))) for i in range(1, t + 2)
    )
    return CutModel(t, alpha, g_bot, g_top, faces)


def reverse_orientation(m: CutModel) -> CutModel:
    """The same configuration with every edge of the family reversed.

    Reversal swaps tails and heads; relabeling vertex ``k`` as ``k - alpha``
    returns the model to standard form with shift ``t - alpha``.
    """
    t, a = m.t, m.alpha

    def rev(g):
        edges = tuple(Edge(e.id, vmod(e.head - a, t), vmod(e.tail - a, t), e.sign, e.labels) for e in g.edges)
        rots = [None] * t
        for v, r in enumerate(g.rotations, 1):
            rots[vmod(v - a, t) - 1] = tuple((x, 1 - s) for x, s in r)
        return EmbeddedGraph(t, edges, tuple(rots))

    faces = tuple(DiskFace(f.name, tuple((lv, e, 1 - s) for lv, e, s in reversed(f.sides))) for f in m.faces)
    return CutModel(t, (t - a) % t, rev(m.g_bot), rev(m.g_top), faces, dict(m.notes))


# -- constraint transfer -----------------------------------------------------------


def _bounding_interval(g, end, keep):
    """Interval around ``end`` bounded by the nearest ends satisfying ``keep``."""
    v, _ = g.position(end)
    left = g.predecessor(end)
    while not keep(left):
        if left == end:
            return IntervalSpec(v, None, None)
        left = g.predecessor(left)
    right = g.successor(end)
    while not keep(right):
        right = g.successor(right)
    return IntervalSpec(v, left, right)


def transfer_constraints(m: CutModel, edge_id: str, source: int = BOTTOM) -> list:
    """Intervals on the other copy that must contain the endpoints of the
    image of ``edge_id`` under the gluing map (or its inverse).

    Each endpoint is bounded by the nearest ends of edges present on both
    copies; the gluing map fixes labels, so the bounds carry over verbatim.
    """
    src, dst = (m.g_bot, m.g_top) if source == BOTTOM else (m.g_top, m.g_bot)
    shared = lambda end: end[0] != edge_id and dst.has_edge(end[0])
    return [_bounding_interval(src, (edge_id, s), shared) for s in (0, 1)]


def string_partner(m: CutModel, end, level):
    """End on the other copy joined to ``end`` by a corner of the vertical
    bigon system (``e{j}`` on T1 with ``e{j+1}`` on T2)."""
    return (shift_id(end[0], 1 if level == BOTTOM else -1), end[1])


def transfer_along_strings(m: CutModel, g_src, end, level) -> IntervalSpec:
    """Interval on the other copy forced for the corner partner of ``end``.

    Corners on a string are disjoint, so the partner sits between the
    partners of the nearest ends of ``end`` that already carry bigon corners.
    """
    lo, hi = (1, m.t + 1) if level == BOTTOM else (2, m.t + 2)

    def matched(x):
        return x[0] != end[0] and lo <= edge_index(x[0]) <= hi and "'" not in x[0]

    iv = _bounding_interval(g_src, end, matched)
    shift = 1 if level == BOTTOM else -1
    v = vmod(iv.vertex + shift, m.t)
    if iv.left is None:
        return IntervalSpec(v, None, None)
    return IntervalSpec(v, string_partner(m, iv.left, level), string_partner(m, iv.right, level))


def interval_gaps(g: EmbeddedGraph, iv: IntervalSpec) -> list:
    """Insertion points (``after`` ends) inside the open interval ``iv``."""
    rot = g.rotation(iv.vertex)
    if not rot:
        return [None]
    if iv.left is None:
        return list(rot)
    out = [iv.left]
    x = g.successor(iv.left)
    while x != iv.right:
        out.append(x)
        x = g.successor(x)
    return out


def _parallel_to_any(g, edge_id):
    for c in parallelism_classes(g):
        if edge_id in c and len(c) > 1:
            return True
    return False


def _placements(g, edge, intervals):
    """Cellular, non-parallel insertions of ``edge`` inside ``intervals``
    (tail interval first), in lexicographic slot order."""
    out = []
    for ta in interval_gaps(g, intervals[0]):
        for ha in interval_gaps(g, intervals[1]):
            cand = g.with_edge(edge, ta, ha)
            if not is_toroidal_cellular(cand):
                continue
            if _parallel_to_any(cand, edge.id):
                continue
            out.append(((g.position(ta)[1] if ta else -1, g.position(ha)[1] if ha else -1), cand))
    out.sort(key=lambda x: x[0])
    return out


# -- completions -------------------------------------------------------------------


@dataclass(frozen=True)
class Completion:
    base: CutModel
    g_top: EmbeddedGraph  # T2 with e1 placed
    g_bot: EmbeddedGraph  # T1 with e{t+2} placed
    top_slots: tuple
    bot_slots: tuple
    delta: int

    @property
    def slidable(self):
        return self.delta == 0

    @property
    def t(self):
        return self.base.t

    @property
    def graph(self):
        """The graph of the family in T (identified with T1)."""
        return self.g_bot

    def to_dict(self):
        t = self.t
        g = self.g_bot
        return {
            "t": t,
            "alpha": self.base.alpha,
            "slidable": self.slidable,
            "delta": self.delta,
            "e1_top_slots": list(self.top_slots),
            "e_last_bottom_slots": list(self.bot_slots),
            "slopes": {
                f"e1+e{t+1}": list(_pq(cycle_slope(g, [eid(1), eid(t + 1)]))),
                f"e2+e{t+2}": list(_pq(cycle_slope(g, [eid(2), eid(t + 2)]))),
            },
            "g_top": self.g_top.to_dict(),
            "g_bot": self.g_bot.to_dict(),
        }


def _pq(s):
    return (s.p, s.q)


def enumerate_completions(m: CutModel) -> list:
    """All placements of ``e1`` on T2, each with its forced ``e{t+2}`` on T1.

    A placement must respect the transferred intervals, keep T2 a cellular
    torus graph without new parallel pairs, and make the two copies carry the
    same labeled ribbon structure.  An empty list is a legitimate outcome.
    """
    t, a = m.t, m.alpha
    first = _edge(1, t, a)
    last = _edge(t + 2, t, a)
    out = []
    top_ivs = transfer_constraints(m, first.id, BOTTOM)
    for slots, top in _placements(m.g_top, first, top_ivs):
        if not same_ribbon_structure(top.without_edges([last.id]), m.g_bot):
            continue
        probe = CutModel(t, a, m.g_bot, top, m.faces)
        bot_ivs = transfer_constraints(probe, last.id, TOP)
        for bslots, bot in _placements(m.g_bot, last, bot_ivs):
            if not same_ribbon_structure(bot, top):
                continue
            d = cycle_delta(bot, [eid(1), eid(t + 1)], [eid(2), eid(t + 2)])
            out.append(Completion(m, top, bot, slots, bslots, d))
    return out


def is_slidable(c: Completion) -> bool:
    return c.slidable


UNBOUNDED = None


def extension_placements(c: Completion, side: str) -> list:
    """Valid positions of a further edge of the family next to ``e1``
    (``side="low"``, a new ``e0`` on T1) or next to ``e{t+2}``
    (``side="high"``, a new ``e{t+3}`` on T2)."""
    t, a, m = c.t, c.base.alpha, c.base
    model = CutModel(t, a, c.g_bot, c.g_top, m.faces)
    if side == "low":
        src, level, new = c.g_top, TOP, _edge(0, t, a)
        end_edge, host = eid(1), c.g_bot
    elif side == "high":
        src, level, new = c.g_bot, BOTTOM, _edge(t + 3, t, a)
        end_edge, host = eid(t + 2), c.g_top
    else:
        raise ValueError(side)
    ivs = [transfer_along_strings(model, src, (end_edge, s), level) for s in (0, 1)]
    out = []
    for ta in interval_gaps(host, ivs[0]):
        for ha in interval_gaps(host, ivs[1]):
            cand = host.with_edge(new, ta, ha)
            if is_toroidal_cellular(cand):
                out.append(cand)
    return out


def max_extension(c: Completion):
    """``t + 2`` when the family cannot be extended past either end;
    ``UNBOUNDED`` for slidable completions (the bound does not apply there)
    or when an extension is possible."""
    if c.slidable:
        return UNBOUNDED
    if extension_placements(c, "low") or extension_placements(c, "high"):
        return UNBOUNDED
    return c.t + 2


# -- disk system ---------------------------------------------------------------------


def string_violations(m: CutModel, strict=True) -> list:
    """Strings along which the corners cross.

    On string ``k`` the corners form a map from the ends at bottom vertex
    ``k`` to the ends at top vertex ``k+1``; disjointness means the map
    preserves the cyclic orders.  With ``strict`` every end must carry
    exactly one corner.
    """
    by_string = {}
    for _, k, b, tp in m.corner_table():
        by_string.setdefault(k, []).append((b, tp))
    bad = []
    for k in range(1, m.t + 1):
        pairs = by_string.get(k, [])
        fwd = dict(pairs)
        if len(fwd) != len(pairs) or len(set(fwd.values())) != len(pairs):
            bad.append(k)
            continue
        bot = [x for x in m.g_bot.rotation(k) if x in fwd]
        top = [x for x in m.g_top.rotation(vmod(k + 1, m.t)) if x in set(fwd.values())]
        if strict and (len(bot) != m.g_bot.degree(k) or len(top) != m.g_top.degree(vmod(k + 1, m.t))):
            bad.append(k)
            continue
        if not _cyclic_equal(tuple(fwd[x] for x in bot), tuple(top)):
            bad.append(k)
    return bad


def check_complete_disk_system(m: CutModel) -> bool:
    """Whether the faces cut the boundary of the handlebody into one planar
    piece.

    The boundary surface is cellulated by the graph faces on both copies and
    by the rectangles into which the corners divide each string annulus.
    Cutting along the disk boundaries keeps the Euler characteristic and
    adds two boundary circles per disk, so a single planar piece needs a
    connected cut surface with ``chi = 2 - 2 * len(faces)``.
    """
    if string_violations(m, strict=False):
        return False
    used = {}
    for f in m.faces:
        for lv, e, _ in f.sides:
            used[(lv, e)] = used.get((lv, e), 0) + 1
    if any(n > 1 for n in used.values()):
        return False
    graphs = {BOTTOM: m.g_bot, TOP: m.g_top}
    fods = {}
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    chi = 0
    for lv, g in graphs.items():
        faces = trace_faces(g)
        fods[lv] = face_of_dart(g, faces)
        chi += len(faces) - len(g.edges)
        for k in range(len(faces)):
            parent[(lv, k)] = (lv, k)
        for e in g.edges:
            if (lv, e.id) not in used:
                union((lv, fods[lv][(e.id, 0)]), (lv, fods[lv][(e.id, 1)]))

    def arc_faces(lv, start, stop):
        g, out, r = graphs[lv], [], start
        while True:
            nxt = g.successor(r)
            out.append((lv, fods[lv][nxt]))
            if nxt == stop:
                return out
            r = nxt

    by_string = {}
    for _, k, b, tp in m.corner_table():
        by_string.setdefault(k, {})[b] = tp
    for k, fwd in by_string.items():
        bot = [x for x in m.g_bot.rotation(k) if x in fwd]
        for j, b in enumerate(bot):
            nb = bot[(j + 1) % len(bot)]
            rect = ("rect", k, j)
            parent[rect] = rect
            for cell in arc_faces(BOTTOM, b, nb) + arc_faces(TOP, fwd[b], fwd[nb]):
                union(rect, cell)
    pieces = {find(x) for x in parent}
    return len(pieces) == 1 and chi == 2 - 2 * len(m.faces)
