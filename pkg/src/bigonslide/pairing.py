"""Rules for two intersection graphs that share one edge set.

Edge signs are recorded data; nothing here derives them from geometry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

from .fatgraph import NEGATIVE, POSITIVE, EmbeddedGraph, parallelism_classes

POSITIVE_FLAG = "positive"
INCONCLUSIVE = "inconclusive"


class MalformedFamily(ValueError):
    pass


class GcdViolation(ValueError):
    """The shift and the modulus share a factor."""


@dataclass(frozen=True)
class Violation:
    rule: str
    edges: tuple
    witness: dict = field(default_factory=dict)

    def to_dict(self):
        return {"rule": self.rule, "edges": list(self.edges), "witness": self.witness}


def diagnostics_json(violations) -> str:
    return json.dumps([v.to_dict() for v in violations], indent=2, sort_keys=True)


@dataclass(frozen=True)
class GraphPair:
    g1: EmbeddedGraph
    g2: EmbeddedGraph
    # edge id in g1 -> edge id in g2
    edge_bijection: dict

    def __post_init__(self):
        fwd = self.edge_bijection
        if set(fwd) != set(self.g1.edge_ids()):
            raise ValueError("bijection must cover every edge of g1")
        if sorted(fwd.values()) != sorted(self.g2.edge_ids()):
            raise ValueError("bijection must cover every edge of g2 exactly once")

    @classmethod
    def identity(cls, g1, g2):
        return cls(g1, g2, {e: e for e in g1.edge_ids()})

    @property
    def n1(self):
        return self.g1.vertex_count

    @property
    def n2(self):
        return self.g2.vertex_count

    def graph(self, which):
        return self.g1 if which == 1 else self.g2


def check_parity(p: GraphPair) -> list:
    """Every shared edge is positive on one side and negative on the other.
    Returns the violations; an empty list means the rule holds."""
    out = []
    for e1, e2 in sorted(p.edge_bijection.items()):
        s1, s2 = p.g1.edge(e1).sign, p.g2.edge(e2).sign
        if s1 is None or s2 is None:
            raise ValueError(f"edge {e1} has no sign on one side")
        if {s1, s2} != {POSITIVE, NEGATIVE}:
            out.append(Violation("parity", (e1,), {"g1": s1, "g2": s2}))
    return out


def check_no_double_parallel(p: GraphPair) -> list:
    """No two edges are parallel in both graphs."""
    cls2 = {}
    for k, members in enumerate(parallelism_classes(p.g2)):
        for e in members:
            cls2[e] = k
    out = []
    for members in parallelism_classes(p.g1):
        seen = {}
        for e in members:
            k = cls2[p.edge_bijection[e]]
            if k in seen:
                out.append(Violation("no-double-parallel", (seen[k], e), {"g2_class": k}))
            else:
                seen[k] = e
    return out


@dataclass(frozen=True)
class EdgeFamily:
    """Consecutive mutually parallel negative edges of graph ``host``.

    ``labels[i]`` holds the endpoint labels (tail, head) of ``edges[i]`` on the
    other surface, counted from 1 modulo ``t``.
    """

    edges: tuple
    labels: tuple
    t: int
    host: int = 1
    reversed: bool = False

    def __post_init__(self):
        if len(self.edges) < 2:
            raise MalformedFamily("a family has at least two edges")
        if len(self.labels) != len(self.edges):
            raise MalformedFamily("one label pair per edge")
        if self.t < 1:
            raise MalformedFamily("modulus must be positive")

    def reverse(self):
        return EdgeFamily(self.edges, self.labels, self.t, self.host, not self.reversed)

    def extended(self, edge, labels):
        return EdgeFamily(self.edges + (edge,), self.labels + (tuple(labels),),
                          self.t, self.host, self.reversed)


def induced_permutation(family: EdgeFamily) -> int:
    """The shift ``alpha`` with ``x -> x + alpha`` along every edge.

    >>> induced_permutation(EdgeFamily(("e1", "e2"), ((1, 2), (2, 3)), 5))
    1
    """
    t = family.t
    shifts = set()
    for x, y in family.labels:
        if family.reversed:
            x, y = y, x
        shifts.add((y - x) % t)
    if len(shifts) != 1:
        raise MalformedFamily(f"inconsistent shifts {sorted(shifts)}")
    alpha = shifts.pop()
    if t == 1:
        return 1
    if alpha == 0 or gcd(t, alpha) != 1:
        raise GcdViolation(f"gcd({t}, {alpha}) != 1")
    return alpha


def positivity_witness(p: GraphPair, family: EdgeFamily) -> str:
    """``positive`` when the family has more edges than the other surface has
    boundary components; otherwise ``inconclusive``."""
    host = p.graph(family.host)
    for e in family.edges:
        if host.edge(e).sign != NEGATIVE:
            raise MalformedFamily(f"{e} is not negative in graph {family.host}")
    n_other = p.n2 if family.host == 1 else p.n1
    return POSITIVE_FLAG if len(family.edges) >= n_other + 1 else INCONCLUSIVE
