"""Graphs embedded in a (capped) punctured torus, encoded by rotation systems.

An edge has a *tail* end (side 0) and a *head* end (side 1).  An end is the
pair ``(edge_id, side)``.  Each vertex carries the cyclic list of ends incident
to it, in the positive order induced by the surface orientation.

A *dart* ``(edge_id, side)`` is the edge traversed starting from the end
``side``.  Faces are traced by following a dart to its far end and leaving
through the rotation successor of that end; the traced face lies to the right
of each of its darts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from math import gcd
from typing import Iterable, Sequence

POSITIVE = "positive"
NEGATIVE = "negative"

End = tuple  # (edge_id, side)


class StructureError(ValueError):
    """Malformed rotation system or edge data."""


class UnsupportedGraph(ValueError):
    """The graph is valid but outside what an operation supports."""


class NullHomologous(ValueError):
    """A cycle bounds in the capped torus, so it has no slope."""


@dataclass(frozen=True)
class Edge:
    id: str
    tail: int
    head: int
    sign: str | None = None
    # labels of the two endpoints on the *other* surface, tail first
    labels: tuple | None = None

    def vertex(self, side):
        return self.tail if side == 0 else self.head


@dataclass(frozen=True)
class SlopeClass:
    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        d = gcd(abs(p), abs(q))
        if d == 0:
            raise NullHomologous("(0, 0) is not a slope")
        p, q = p // d, q // d
        if p < 0 or (p == 0 and q < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)


def delta(a: SlopeClass, b: SlopeClass) -> int:
    """Minimal intersection number of two slopes on a torus."""
    return abs(a.p * b.q - a.q * b.p)


@dataclass(frozen=True)
class IntervalSpec:
    """The open interval of ``vertex`` running from ``left`` to ``right`` in
    the positive direction (``(e, e')`` in the usual notation)."""

    vertex: int
    left: End
    right: End


@dataclass(frozen=True)
class EmbeddedGraph:
    vertex_count: int
    edges: tuple
    rotations: tuple  # rotations[v-1] is the cyclic tuple of ends at vertex v
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        edges = tuple(self.edges)
        rotations = tuple(tuple(tuple(x) for x in r) for r in self.rotations)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "rotations", rotations)
        if self.vertex_count < 1:
            raise StructureError("need at least one vertex")
        if len(rotations) != self.vertex_count:
            raise StructureError("one rotation per vertex required")
        by_id = {}
        for e in edges:
            if e.id in by_id:
                raise StructureError(f"duplicate edge id {e.id!r}")
            for v in (e.tail, e.head):
                if not 1 <= v <= self.vertex_count:
                    raise StructureError(f"edge {e.id!r} has bad vertex {v}")
            by_id[e.id] = e
        position = {}
        for v, rot in enumerate(rotations, 1):
            for i, end in enumerate(rot):
                eid, side = end
                if eid not in by_id or side not in (0, 1):
                    raise StructureError(f"unknown end {end!r} at vertex {v}")
                if end in position:
                    raise StructureError(f"end {end!r} appears twice")
                if by_id[eid].vertex(side) != v:
                    raise StructureError(f"end {end!r} placed at wrong vertex {v}")
                position[end] = (v, i)
        if len(position) != 2 * len(edges):
            missing = {(e.id, s) for e in edges for s in (0, 1)} - set(position)
            raise StructureError(f"ends missing from rotations: {sorted(missing)}")
        order = {e.id: k for k, e in enumerate(edges)}
        object.__setattr__(self, "_index", {"edge": by_id, "pos": position, "order": order})

    # -- basic access -------------------------------------------------------

    def edge(self, eid) -> Edge:
        return self._index["edge"][eid]

    def edge_ids(self):
        return [e.id for e in self.edges]

    def has_edge(self, eid):
        return eid in self._index["edge"]

    def order(self, eid):
        return self._index["order"][eid]

    def rotation(self, v):
        return self.rotations[v - 1]

    def degree(self, v):
        return len(self.rotations[v - 1])

    def position(self, end):
        return self._index["pos"][tuple(end)]

    def successor(self, end):
        v, i = self.position(end)
        rot = self.rotations[v - 1]
        return rot[(i + 1) % len(rot)]

    def predecessor(self, end):
        v, i = self.position(end)
        rot = self.rotations[v - 1]
        return rot[i - 1]

    # -- modification (returns new graphs) -----------------------------------

    def without_edges(self, eids: Iterable[str]) -> "EmbeddedGraph":
        drop = set(eids)
        return EmbeddedGraph(
            self.vertex_count,
            tuple(e for e in self.edges if e.id not in drop),
            tuple(tuple(x for x in r if x[0] not in drop) for r in self.rotations),
        )

    def with_edge(self, edge: Edge, tail_after: End | None, head_after: End | None):
        """Insert ``edge`` with its tail end placed right after ``tail_after``
        in the rotation of its tail vertex (likewise for the head).  ``None``
        is only allowed at a vertex with empty rotation."""
        rots = [list(r) for r in self.rotations]
        for side, after in ((0, tail_after), (1, head_after)):
            v = edge.vertex(side)
            rot = rots[v - 1]
            if after is None:
                if rot:
                    raise StructureError("insertion point required at nonempty vertex")
                rot.append((edge.id, side))
            else:
                rot.insert(rot.index(tuple(after)) + 1, (edge.id, side))
        return EmbeddedGraph(self.vertex_count, self.edges + (edge,), tuple(map(tuple, rots)))

    def relabeled(self, edge_map=None, vertex_map=None, vertex_count=None):
        edge_map = edge_map or {}
        vertex_map = vertex_map or {}
        em = lambda eid: edge_map.get(eid, eid)
        vm = lambda v: vertex_map.get(v, v)
        n = vertex_count or self.vertex_count
        edges = tuple(replace(e, id=em(e.id), tail=vm(e.tail), head=vm(e.head)) for e in self.edges)
        rots = [None] * n
        for v, r in enumerate(self.rotations, 1):
            rots[vm(v) - 1] = tuple((em(eid), s) for eid, s in r)
        return EmbeddedGraph(n, edges, tuple(rots))

    def with_signs(self, sign):
        return replace(self, edges=tuple(replace(e, sign=sign) for e in self.edges), _index=None)

    # -- serialization -------------------------------------------------------

    def to_dict(self):
        return {
            "vertex_count": self.vertex_count,
            "edges": [
                {
                    "id": e.id,
                    "tail": e.tail,
                    "head": e.head,
                    "tail_slot": self.position((e.id, 0))[1],
                    "head_slot": self.position((e.id, 1))[1],
                    "sign": e.sign,
                    "labels": list(e.labels) if e.labels is not None else None,
                }
                for e in self.edges
            ],
            "rotations": [[f"{eid}{'+' if s == 0 else '-'}" for eid, s in r] for r in self.rotations],
        }

    @classmethod
    def from_dict(cls, data):
        edges = tuple(
            Edge(d["id"], d["tail"], d["head"], d.get("sign"),
                 tuple(d["labels"]) if d.get("labels") is not None else None)
            for d in data["edges"]
        )
        rots = tuple(tuple((x[:-1], 0 if x[-1] == "+" else 1) for x in r) for r in data["rotations"])
        return cls(data["vertex_count"], edges, rots)

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)


# -- faces and genus ---------------------------------------------------------


def trace_faces(g: EmbeddedGraph) -> list:
    """Partition the darts of ``g`` into face circuits.

    >>> g = EmbeddedGraph(1, (Edge("a", 1, 1), Edge("b", 1, 1)),
    ...                   ((("a", 0), ("b", 0), ("a", 1), ("b", 1)),))
    >>> len(trace_faces(g))
    1
    """
    seen = set()
    faces = []
    for e in g.edges:
        for s in (0, 1):
            start = (e.id, s)
            if start in seen:
                continue
            face = []
            dart = start
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                arrive = (dart[0], 1 - dart[1])
                dart = g.successor(arrive)
            if dart != start:
                raise StructureError("face tracing did not close up")
            faces.append(tuple(face))
    return faces


def face_of_dart(g: EmbeddedGraph, faces=None) -> dict:
    faces = trace_faces(g) if faces is None else faces
    return {d: k for k, f in enumerate(faces) for d in f}


def euler_characteristic(g: EmbeddedGraph) -> int:
    return g.vertex_count - len(g.edges) + len(trace_faces(g))


def genus(g: EmbeddedGraph) -> int:
    chi = euler_characteristic(g)
    if chi > 2 or (2 - chi) % 2:
        raise StructureError(f"Euler characteristic {chi} is not that of a closed orientable surface")
    return (2 - chi) // 2


def is_connected(g: EmbeddedGraph) -> bool:
    parent = list(range(g.vertex_count + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        parent[find(e.tail)] = find(e.head)
    return len({find(v) for v in range(1, g.vertex_count + 1)}) == 1


def is_toroidal_cellular(g: EmbeddedGraph) -> bool:
    """Connected and of genus one; faces traced from a connected rotation
    system are then automatically disks."""
    return is_connected(g) and genus(g) == 1


def corner_face(g: EmbeddedGraph, end, faces=None) -> int:
    """Face containing the corner that follows ``end`` in the positive
    direction at its vertex (the gap between ``end`` and its successor)."""
    fod = face_of_dart(g, faces)
    nxt = g.successor(end)
    return fod[nxt]


# -- parallelism ---------------------------------------------------------------


def parallelism_classes(g: EmbeddedGraph) -> list:
    """Maximal families of mutually parallel edges, as lists of edge ids.

    Two edges are parallel when they cobound a bigon face.  Classes are listed
    by their lowest edge (in edge order) and each class is ordered so that
    consecutive members cobound a bigon whenever possible.
    """
    if not is_connected(g):
        raise UnsupportedGraph("parallelism needs a connected graph")
    parent = {e.id: e.id for e in g.edges}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    adj = {e.id: set() for e in g.edges}
    for f in trace_faces(g):
        if len(f) == 2 and f[0][0] != f[1][0]:
            a, b = f[0][0], f[1][0]
            parent[find(a)] = find(b)
            adj[a].add(b)
            adj[b].add(a)
    groups = {}
    for e in g.edges:
        groups.setdefault(find(e.id), []).append(e.id)
    classes = []
    for members in groups.values():
        classes.append(_chain_order(members, adj, g))
    classes.sort(key=lambda c: min(g.order(x) for x in c))
    return classes


def _chain_order(members, adj, g):
    if len(members) == 1:
        return list(members)
    ends = [m for m in members if len(adj[m]) == 1]
    start = min(ends or members, key=g.order)
    out, prev = [start], None
    while len(out) < len(members):
        nxt = sorted((x for x in adj[out[-1]] if x != prev and x not in out), key=g.order)
        if not nxt:
            break
        prev = out[-1]
        out.append(nxt[0])
    if len(out) < len(members):
        out += sorted((m for m in members if m not in out), key=g.order)
    return out


@dataclass(frozen=True)
class ReducedEdge:
    representative: str
    size: int
    members: tuple


def reduced_graph(g: EmbeddedGraph) -> list:
    return [ReducedEdge(c[0], len(c), tuple(c)) for c in parallelism_classes(g)]


# -- homology and slopes ------------------------------------------------------


def cycle_darts(g: EmbeddedGraph, edge_ids: Sequence[str]) -> list:
    """Orient a set of edges forming one simple closed cycle into darts."""
    eids = list(edge_ids)
    if not eids:
        raise StructureError("empty cycle")
    inc = {}
    for eid in eids:
        e = g.edge(eid)
        inc.setdefault(e.tail, []).append(eid)
        inc.setdefault(e.head, []).append(eid)
    if any(len(x) != 2 for x in inc.values()) and not (len(eids) == 1):
        raise StructureError("edges do not form a simple cycle")
    darts = []
    used = set()
    cur = eids[0]
    v = g.edge(cur).tail
    while True:
        e = g.edge(cur)
        side = 0 if e.tail == v else 1
        darts.append((cur, side))
        used.add(cur)
        v = e.vertex(1 - side)
        nxt = [x for x in inc[v] if x not in used]
        if not nxt:
            break
        cur = nxt[0]
    if len(used) != len(eids) or v != g.edge(eids[0]).tail:
        raise StructureError("edges do not form a single closed cycle")
    return darts


def intersection_number(g: EmbeddedGraph, c: Sequence, d: Sequence) -> int:
    """Algebraic intersection of two closed walks given as darts.

    ``d`` is pushed off itself to its left; every end met while sweeping
    around a vertex of ``d`` on that side contributes +1 if ``c`` leaves the
    vertex through it and -1 if ``c`` arrives through it.
    """
    use = {}
    for eid, s in c:
        use[(eid, s)] = use.get((eid, s), 0) + 1  # leaves through end (eid, s)
        use[(eid, 1 - s)] = use.get((eid, 1 - s), 0) - 1  # arrives through the other
    total = 0
    n = len(d)
    for k in range(n):
        din, dout = d[k - 1], d[k]
        arrive = (din[0], 1 - din[1])
        leave = dout
        v, i = g.position(leave)
        _, j = g.position(arrive)
        rot = g.rotation(v)
        m = len(rot)
        x = (i + 1) % m
        while x != j:
            total += use.get(rot[x], 0)
            x = (x + 1) % m
    return total


def _homology_basis(g: EmbeddedGraph):
    """Tree-cotree decomposition; returns two dart cycles spanning H1."""
    if not is_toroidal_cellular(g):
        raise UnsupportedGraph("slopes need a cellular torus graph")
    edges = sorted(g.edges, key=lambda e: g.order(e.id))
    # spanning tree by BFS from vertex 1, lowest edge order first
    tree = {}
    seen = {1}
    queue = [1]
    while queue:
        v = queue.pop(0)
        for e in edges:
            if e.id in tree:
                continue
            for a, b in ((e.tail, e.head), (e.head, e.tail)):
                if a == v and b not in seen:
                    seen.add(b)
                    tree[e.id] = (a, b)
                    queue.append(b)
                    break
    faces = trace_faces(g)
    fod = face_of_dart(g, faces)
    dual_parent = list(range(len(faces)))

    def find(x):
        while dual_parent[x] != x:
            dual_parent[x] = dual_parent[dual_parent[x]]
            x = dual_parent[x]
        return x

    leftover = []
    for e in edges:
        if e.id in tree:
            continue
        a, b = find(fod[(e.id, 0)]), find(fod[(e.id, 1)])
        if a != b:
            dual_parent[a] = b
        else:
            leftover.append(e.id)
    if len(leftover) != 2:
        raise StructureError(f"expected 2 generators, found {len(leftover)}")
    return [_fundamental_cycle(g, tree, eid) for eid in leftover]


def _fundamental_cycle(g, tree, eid):
    parent = {1: None}
    children = {}
    for tid, (a, b) in tree.items():
        children.setdefault(a, []).append((tid, b))
    stack = [1]
    while stack:
        v = stack.pop()
        for tid, b in children.get(v, []):
            parent[b] = (tid, v)
            stack.append(b)

    def root_path(v):  # darts from root down to v
        out = []
        while parent[v] is not None:
            tid, a = parent[v]
            e = g.edge(tid)
            out.append((tid, 0 if e.tail == a else 1))
            v = a
        return out[::-1]

    e = g.edge(eid)
    down_tail = root_path(e.tail)
    down_head = root_path(e.head)
    up_head = [(x, 1 - s) for x, s in reversed(down_head)]
    return down_tail + [(eid, 0)] + up_head


def cycle_slope(g: EmbeddedGraph, edge_ids: Sequence[str]) -> SlopeClass:
    """Slope in the capped torus of the cycle formed by ``edge_ids``.

    Coordinates refer to a basis fixed by a deterministic tree-cotree choice;
    only distances between slopes of the same graph are meaningful.
    """
    c = cycle_darts(g, edge_ids)
    x, y = _homology_basis(g)
    s = intersection_number(g, x, y)
    if abs(s) != 1:
        raise StructureError(f"basis cycles meet {s} times; expected +-1")
    p = s * intersection_number(g, c, y)
    q = -s * intersection_number(g, c, x)
    if p == 0 and q == 0:
        raise NullHomologous(f"cycle {list(edge_ids)} bounds a disk in the capped torus")
    return SlopeClass(p, q)


def cycle_delta(g: EmbeddedGraph, a: Sequence[str], b: Sequence[str]) -> int:
    return delta(cycle_slope(g, a), cycle_slope(g, b))


# -- isomorphism and DOT --------------------------------------------------------


def same_ribbon_structure(g: EmbeddedGraph, h: EmbeddedGraph) -> bool:
    """True when ``g`` and ``h`` have the same labeled ribbon structure, i.e.
    the identity on vertex and edge labels is induced by an orientation
    preserving homeomorphism of the capped surfaces."""
    if g.vertex_count != h.vertex_count or set(g.edge_ids()) != set(h.edge_ids()):
        return False
    for e in g.edges:
        f = h.edge(e.id)
        if (e.tail, e.head) != (f.tail, f.head):
            return False
    return all(_cyclic_equal(a, b) for a, b in zip(g.rotations, h.rotations))


def _cyclic_equal(a, b):
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        k = b.index(a[0])
    except ValueError:
        return False
    return all(a[i] == b[(i + k) % len(b)] for i in range(len(a)))


_PALETTE = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4", "gold3", "gray40"]


def to_dot(g: EmbeddedGraph, name="G") -> str:
    """DOT text; edges of a parallelism class share a color."""
    try:
        classes = parallelism_classes(g)
    except UnsupportedGraph:
        classes = [[e.id] for e in g.edges]
    color = {eid: _PALETTE[k % len(_PALETTE)] for k, c in enumerate(classes) for eid in c}
    lines = [f'graph "{name}" {{']
    for v in range(1, g.vertex_count + 1):
        lines.append(f'  v{v} [label="v{v}"];')
    for e in g.edges:
        style = ', style=dashed' if e.sign == POSITIVE else ''
        lines.append(f'  v{e.tail} -- v{e.head} [label="{e.id}", color={color[e.id]}{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
