"""The manifold ``M_t`` obtained from the non-slidable completion and the
twice-punctured torus ``S`` assembled from bigons and one hexagon.

Parallel copies are named ``e{i}'`` and ``e{i}''``.  The graph ``G_{T,S}``
lives on both copies of ``T`` with the same labels, so the gluing map needs
no bookkeeping beyond the face list.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .cutmodel import (
    BOTTOM,
    TOP,
    CutModel,
    DiskFace,
    build_standard_cut_model,
    eid,
    enumerate_completions,
    string_violations,
    vmod,
)
from .fatgraph import (
    NEGATIVE,
    POSITIVE,
    Edge,
    EmbeddedGraph,
    face_of_dart,
    parallelism_classes,
    same_ribbon_structure,
    to_dot,
    trace_faces,
    _cyclic_equal,
)
from .freegroup import Word
from .pairing import GraphPair


class AssemblyError(ValueError):
    pass


# -- M_t ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MtModel:
    t: int
    cut: CutModel
    boundary: tuple  # the strings in the order the boundary torus visits them


def _string_cycle(m: CutModel) -> tuple:
    """Follow strings through the gluing: string ``k`` ends on top vertex
    ``k+1``, which is identified with bottom vertex ``k+1``."""
    ends = {}
    for _, kb, _, top in m.corner_table():
        kt = m.g_top.edge(top[0]).vertex(top[1])
        if ends.setdefault(kb, kt) != kt:
            raise AssemblyError(f"string {kb} reaches two top vertices")
    if set(ends) != set(range(1, m.t + 1)):
        raise AssemblyError("some vertex carries no corner")
    circuits = []
    left = set(ends)
    while left:
        k = min(left)
        cyc = []
        while k in left:
            left.remove(k)
            cyc.append(k)
            k = ends[k]
        circuits.append(tuple(cyc))
    return tuple(circuits)


def build_mt(t: int) -> MtModel:
    """``M_t`` from the non-slidable completion with ``alpha = 1``."""
    if t < 4:
        raise ValueError("build_mt needs t >= 4; smaller cases are handled separately")
    base = build_standard_cut_model(t, 1)
    bad = [c for c in enumerate_completions(base) if not c.slidable]
    if len(bad) != 1:
        raise AssemblyError(f"expected one non-slidable completion, found {len(bad)}")
    c = bad[0]
    if not same_ribbon_structure(c.g_bot, c.g_top):
        raise AssemblyError("the gluing does not carry the bottom graph to the top graph")
    cut = CutModel(t, 1, c.g_bot, c.g_top, base.faces, {"delta": c.delta})
    circuits = _string_cycle(cut)
    if len(circuits) != 1:
        raise AssemblyError(f"boundary splits into {len(circuits)} circuits")
    return MtModel(t, cut, circuits[0])


# -- parallel copies ---------------------------------------------------------------


def copy_classes(t):
    """Members of each class that receives copies, keyed by index."""
    out = {}
    for i in range(2, t + 2):
        members = [eid(i), eid(i) + "'"]
        if 3 <= i <= t:
            members.append(eid(i) + "''")
        out[i] = members
    return out


def _expand(rot, stacks):
    out = []
    for x, side in rot:
        stack = stacks.get(int(x[1:]), [x])
        out.extend((y, side) for y in (stack if side == 0 else reversed(stack)))
    return tuple(out)


def _with_stacks(g: EmbeddedGraph, stacks: dict) -> EmbeddedGraph:
    """Replace each ``e{i}`` by the parallel stack ``stacks[i]``, listed in
    the positive order at the tail (and reversed at the head)."""
    edges = []
    for e in g.edges:
        for name in stacks.get(int(e.id[1:]), [e.id]):
            edges.append(Edge(name, e.tail, e.head, e.sign))
    rots = tuple(_expand(r, stacks) for r in g.rotations)
    return EmbeddedGraph(g.vertex_count, tuple(edges), rots)


def surface_faces(t) -> tuple:
    faces = [DiskFace(f"F'{i}", ((BOTTOM, eid(i), 0), (TOP, eid(i + 1), 1))) for i in range(1, t + 2)]
    for i in range(2, t + 1):
        faces.append(DiskFace(f"F'{i}'", ((BOTTOM, f"e{i}'", 0), (TOP, f"e{i + 1}'", 1))))
    for i in range(3, t):
        faces.append(DiskFace(f"F'{i}''", ((BOTTOM, f"e{i}''", 0), (TOP, f"e{i + 1}''", 1))))
    faces.append(DiskFace("F'C", (
        (TOP, eid(1), 0),
        (BOTTOM, f"e{t + 1}'", 0),
        (TOP, "e3''", 0),
        (BOTTOM, eid(t + 2), 1),
        (TOP, "e2'", 1),
        (BOTTOM, f"e{t}''", 1),
    )))
    return tuple(faces)


def _search_stacks(mt: MtModel):
    """All stack orders for which the corners of the enlarged face system
    are disjoint, found by backtracking over the classes in index order.

    Corners do not depend on the stack orders, so each string is checked
    locally as soon as every class meeting its two vertices is placed.
    """
    t, g = mt.t, mt.cut.g_bot
    classes = copy_classes(t)
    full = _with_stacks(g, classes)
    corners = {k: {} for k in range(1, t + 1)}
    for _, k, b, tp in CutModel(t, 1, full, full, surface_faces(t)).corner_table():
        corners[k][b] = tp
    touches = {
        k: {int(x[1:]) for v in (k, vmod(k + 1, t)) for x, _ in g.rotation(v)} & set(classes)
        for k in range(1, t + 1)
    }
    order = sorted(classes)
    found = []

    def string_ok(k, stacks):
        bot = _expand(g.rotation(k), stacks)
        top = _expand(g.rotation(vmod(k + 1, t)), stacks)
        fwd = corners[k]
        if len(bot) != len(fwd) or sorted(fwd.values()) != sorted(top):
            return False
        return _cyclic_equal(tuple(fwd[x] for x in bot), top)

    def rec(idx, stacks):
        if idx == len(order):
            found.append({i: list(v) for i, v in stacks.items()})
            return
        i = order[idx]
        done = set(order[: idx + 1])
        ready = [k for k in touches if i in touches[k] and touches[k] <= done]
        for perm in itertools.permutations(classes[i]):
            stacks[i] = list(perm)
            if all(string_ok(k, stacks) for k in ready):
                rec(idx + 1, stacks)
        stacks.pop(i, None)

    rec(0, {})
    return found


# -- the assembled surface ---------------------------------------------------------


@dataclass(frozen=True)
class SurfaceAssembly:
    t: int
    mt: MtModel | None  # None for the annulus rings of the small cases
    model: CutModel  # G^1 = G^2 = G_{T,S}, faces = the collection F
    stacks: dict
    circuits: tuple = ()
    coloring: dict = field(default_factory=dict)

    @property
    def faces(self):
        return self.model.faces

    @property
    def g_ts(self) -> EmbeddedGraph:
        return self.model.g_bot


def build_surface_S(t: int) -> SurfaceAssembly:
    mt = build_mt(t)
    options = _search_stacks(mt)
    if not options:
        raise AssemblyError("no placement of the parallel copies keeps the corners disjoint")
    stacks = options[0]
    g = _with_stacks(mt.cut.g_bot, stacks)
    model = CutModel(t, 1, g, g, surface_faces(t), {"stack_choices": len(options)})
    if string_violations(model, strict=True):
        raise AssemblyError("corners cross on some string")
    a = SurfaceAssembly(t, mt, model, stacks)
    circuits = trace_boundary(a)
    a = SurfaceAssembly(t, mt, model, stacks, circuits)
    coloring = two_color_faces(a)
    if not isinstance(coloring, dict):
        raise AssemblyError(f"faces of G_TS admit no proper coloring: {coloring}")
    return SurfaceAssembly(t, mt, model, stacks, circuits, coloring)


def trace_boundary(a: SurfaceAssembly) -> tuple:
    """Boundary circuits of ``S`` as cyclic tuples of edge ends.

    Every end of ``G_{T,S}`` is a point of the boundary; it meets one corner
    through its bottom copy and one through its top copy.  The circuit through
    the tail of ``e1`` comes first and is read towards vertex 2.
    """
    nbr = {}
    for _, _, b, tp in a.model.corner_table():
        nbr.setdefault(b, []).append(tp)
        nbr.setdefault(tp, []).append(b)
    ends = [(e.id, s) for e in a.g_ts.edges for s in (0, 1)]
    for x in ends:
        if len(nbr.get(x, [])) != 2:
            raise AssemblyError(f"end {x} meets {len(nbr.get(x, []))} corners")
    seen = set()
    circuits = []
    start_first = (eid(1), 0)
    for start in [start_first] + ends:
        if start in seen:
            continue
        first = nbr[start]
        if start == start_first:
            first = sorted(first, key=lambda y: a.g_ts.edge(y[0]).vertex(y[1]) != 2)
        cyc = [start]
        seen.add(start)
        prev, cur = start, first[0]
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            n0, n1 = nbr[cur]
            prev, cur = cur, (n1 if n0 == prev else n0)
        circuits.append(tuple(cyc))
    return tuple(circuits)


def _circuit_of(a: SurfaceAssembly) -> dict:
    return {x: k for k, c in enumerate(a.circuits, 1) for x in c}


def euler_of_assembly(a: SurfaceAssembly, faces=None) -> int:
    """V - E + F for the graph on the capped surface."""
    faces = a.faces if faces is None else faces
    return len(a.circuits) - len(a.g_ts.edges) + len(faces)


def compute_delta_S_T(degrees, n_boundary: int) -> int:
    """Common vertex degree over the number of boundary components."""
    degrees = list(degrees)
    if not degrees or len(set(degrees)) != 1:
        raise AssemblyError(f"vertex degrees are not uniform: {sorted(set(degrees))}")
    d = degrees[0]
    if d % n_boundary:
        raise AssemblyError(f"degree {d} is not a multiple of {n_boundary}")
    return d // n_boundary


def delta_of_assembly(a: SurfaceAssembly) -> int:
    g = a.g_ts
    return compute_delta_S_T((g.degree(v) for v in range(1, g.vertex_count + 1)), len(a.circuits))


def two_color_dual(faces, adjacent_pairs, first=0):
    """Proper 2-coloring of faces (``0`` black, ``1`` white) with ``first``
    black, or the vertices of an odd cycle."""
    adj = {f: [] for f in faces}
    for x, y in adjacent_pairs:
        adj[x].append(y)
        adj[y].append(x)
    color, parent = {}, {}
    for root in [first] + list(faces):
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = [root]
        while queue:
            x = queue.pop(0)
            for y in adj[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    return _odd_cycle(parent, x, y)
    return color


def _odd_cycle(parent, x, y):
    def path(z):
        out = []
        while z is not None:
            out.append(z)
            z = parent[z]
        return out

    px, py = path(x), path(y)
    common = next(z for z in px if z in set(py))
    return px[: px.index(common) + 1] + list(reversed(py[: py.index(common)]))


def two_color_faces(a: SurfaceAssembly):
    """Black/white coloring of the faces of ``G_{T,S}`` (face index ->
    ``"B"``/``"W"``), or an odd cycle of face indices.

    Faces sharing an edge get different colors.  Each disk of the collection
    must then see one color on its positive side and the other on its
    negative side, on both copies of ``T``; a mismatch is reported as a
    witness list starting with the disk name.
    """
    g = a.g_ts
    faces = trace_faces(g)
    fod = face_of_dart(g, faces)
    pairs = [(fod[(e.id, 0)], fod[(e.id, 1)]) for e in g.edges]
    x_face = fod[(eid(2), 0)] if len(faces[fod[(eid(2), 0)]]) == 2 else fod[(eid(2), 1)]
    col = two_color_dual(range(len(faces)), pairs, first=x_face)
    if isinstance(col, list):
        return col
    for f in a.faces:
        plus, minus = set(), set()
        for lv, e, s in f.sides:
            right, left = fod[(e, s)], fod[(e, 1 - s)]
            p, q = (left, right) if lv == BOTTOM else (right, left)
            plus.add(col[p])
            minus.add(col[q])
        if len(plus) != 1 or plus == minus:
            return [f.name]
    return {k: "BW"[c] for k, c in col.items()}


# -- G_S --------------------------------------------------------------------------


def _face_orientations(faces) -> dict:
    """Flip flags making the disks induce opposite directions on each shared
    edge, i.e. a coherent orientation of ``S``."""
    uses = {}
    for k, f in enumerate(faces):
        for lv, e, s in f.sides:
            uses.setdefault(e, []).append((k, s))
    flip = {0: 0}
    queue = [0]
    links = {}
    for e, u in uses.items():
        if len(u) != 2:
            raise AssemblyError(f"edge {e} lies on {len(u)} disks")
        (k1, s1), (k2, s2) = u
        links.setdefault(k1, []).append((k2, s1, s2))
        links.setdefault(k2, []).append((k1, s2, s1))
    while queue:
        k = queue.pop()
        for j, sk, sj in links.get(k, []):
            want = 1 ^ sk ^ flip[k] ^ sj
            if j not in flip:
                flip[j] = want
                queue.append(j)
            elif flip[j] != want:
                raise AssemblyError("the assembled surface is not orientable")
    if len(flip) != len(faces):
        raise AssemblyError("the disks do not form a connected surface")
    return flip


def _oriented_sides(f: DiskFace, flipped: int):
    if not flipped:
        return list(f.sides)
    return [(lv, e, 1 - s) for lv, e, s in reversed(f.sides)]


def graph_GS(a: SurfaceAssembly) -> EmbeddedGraph:
    """The graph ``S ∩ T`` on the capped surface: one vertex per boundary
    circuit, one edge per edge of ``G_{T,S}``.  Endpoint labels record the
    vertices of ``T``; every edge is negative."""
    circ = _circuit_of(a)
    flips = _face_orientations(a.faces)
    succ = {}
    for k, f in enumerate(a.faces):
        sides = _oriented_sides(f, flips[k])
        for j, (lv, e, s) in enumerate(sides):
            _, ne, ns = sides[(j + 1) % len(sides)]
            succ[(e, 1 - s)] = (ne, ns)
    rots = []
    for c in range(1, len(a.circuits) + 1):
        start = a.circuits[c - 1][0]
        cyc, x = [start], succ[start]
        while x != start:
            cyc.append(x)
            x = succ[x]
        if set(cyc) != set(a.circuits[c - 1]):
            raise AssemblyError("disk corners do not run around the boundary circuits")
        rots.append(tuple(cyc))
    g = a.g_ts
    edges = tuple(
        Edge(e.id, circ[(e.id, 0)], circ[(e.id, 1)], NEGATIVE, (e.tail, e.head)) for e in g.edges
    )
    return EmbeddedGraph(len(rots), edges, tuple(rots))


def graph_GTS(a: SurfaceAssembly) -> EmbeddedGraph:
    """``G_{T,S}`` with positive signs and boundary-circuit endpoint labels."""
    circ = _circuit_of(a)
    edges = tuple(Edge(e.id, e.tail, e.head, POSITIVE, (circ[(e.id, 0)], circ[(e.id, 1)]))
                  for e in a.g_ts.edges)
    return EmbeddedGraph(a.g_ts.vertex_count, edges, a.g_ts.rotations)


def assembled_pair(a: SurfaceAssembly) -> GraphPair:
    """``(G_S, G_{T,S})`` sharing their edges."""
    return GraphPair.identity(graph_GS(a), graph_GTS(a))


def reduced_class_sizes(g: EmbeddedGraph) -> list:
    return sorted((len(c) for c in parallelism_classes(g)), reverse=True)


# -- boundary words ----------------------------------------------------------------


def designated_disks(a: SurfaceAssembly, side: str) -> dict:
    """Letter -> face index of ``G_{T,S}`` for the disk system on one side.

    Black side: ``x`` is the bigon containing ``e2`` and ``y`` the ``t``-gon
    containing ``e{t+2}``.  White side: ``X`` is the white bigon cornered at
    vertices 3 and 4 and ``Y`` the white ``(t+4)``-gon containing
    ``e{t+2}``.
    """
    g, t = a.g_ts, a.t
    faces = trace_faces(g)
    fod = face_of_dart(g, faces)
    col = a.coloring

    def containing(edge, size, colour):
        hits = {fod[(edge, s)] for s in (0, 1)}
        hits = [f for f in hits if len(faces[f]) == size and col[f] == colour]
        if len(hits) != 1:
            raise AssemblyError(f"no unique {colour} {size}-gon on {edge}")
        return hits[0]

    if side == "B":
        return {"a": containing(eid(2), 2, "B"), "b": containing(eid(t + 2), t, "B")}
    if side == "W":
        bigons = [
            k for k, f in enumerate(faces)
            if len(f) == 2 and col[k] == "W" and {g.edge(d[0]).vertex(d[1]) for d in f} == {3, 4}
        ]
        if len(bigons) != 1:
            raise AssemblyError("no unique white bigon at vertices 3 and 4")
        return {"a": bigons[0], "b": containing(eid(t + 2), t + 4, "W")}
    raise ValueError(side)


def boundary_word(a: SurfaceAssembly, side: str) -> Word:
    """Word read along the first boundary circuit: at each of its points,
    the adjacent face of the given color contributes a letter when it is one
    of the designated disks.  ``a``/``b`` stand for ``x``/``y`` (black side)
    or ``X``/``Y`` (white side)."""
    g = a.g_ts
    fod = face_of_dart(g)
    disks = {f: letter for letter, f in designated_disks(a, side).items()}
    letters = []
    for end in a.circuits[0]:
        for f in (fod[end], fod[g.successor(end)]):
            if a.coloring[f] == side and f in disks:
                letters.append(disks[f])
    return Word("".join(letters))


def same_cyclic_word(u, v) -> bool:
    return len(u) == len(v) and (not u or v in u + u)


# -- reports ----------------------------------------------------------------------


def assembly_report(a: SurfaceAssembly) -> dict:
    gs = graph_GS(a)
    faces = trace_faces(a.g_ts)
    return {
        "t": a.t,
        "faces": len(a.faces),
        "bigons": sum(f.kind == "bigon" for f in a.faces),
        "hexagons": sum(f.kind == "hexagon" for f in a.faces),
        "boundary_circuits": len(a.circuits),
        "euler": euler_of_assembly(a),
        "delta": delta_of_assembly(a),
        "gs_class_sizes": reduced_class_sizes(gs),
        "gts_face_sizes": sorted(len(f) for f in faces),
        "word_B": str(boundary_word(a, "B")),
        "word_W": str(boundary_word(a, "W")),
        "mt_boundary_circuits": 1,
        "stack_choices": a.model.notes.get("stack_choices"),
    }


def assembly_to_dict(a: SurfaceAssembly) -> dict:
    g = a.g_ts
    faces = trace_faces(g)
    return {
        "report": assembly_report(a),
        "stacks": {str(k): v for k, v in sorted(a.stacks.items())},
        "model": a.model.to_dict(),
        "circuits": [[f"{x}{'+' if s == 0 else '-'}" for x, s in c] for c in a.circuits],
        "gts_faces": [
            {"darts": [f"{x}{'+' if s == 0 else '-'}" for x, s in f], "color": a.coloring[k]}
            for k, f in enumerate(faces)
        ],
        "graph_GS": graph_GS(a).to_dict(),
    }


def assembly_json(a: SurfaceAssembly) -> str:
    return json.dumps(assembly_to_dict(a), indent=2, sort_keys=True) + "\n"


def assembly_dot(a: SurfaceAssembly) -> dict:
    return {"G_S": to_dot(graph_GS(a), "G_S"), "G_TS": to_dot(graph_GTS(a), "G_TS")}
