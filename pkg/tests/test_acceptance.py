"""Acceptance criteria, one test each.  Every test prints a single
``criterion N: PASS|FAIL`` line with its wall time, also when run as a
script (``python tests/test_acceptance.py``)."""

import io
import sys
from contextlib import redirect_stdout
import tempfile
import time
from dataclasses import replace
from math import gcd
from pathlib import Path

import pytest

from bigonslide.assembly import (
    _string_cycle,
    assembled_pair,
    build_surface_S,
    delta_of_assembly,
    euler_of_assembly,
    graph_GS,
    reduced_class_sizes,
)
from bigonslide.cli import main
from bigonslide.cutmodel import build_standard_cut_model, enumerate_completions, max_extension
from bigonslide.fatgraph import NEGATIVE, POSITIVE
from bigonslide.freegroup import is_primitive, primitivity_oracle, reduced_words
from bigonslide.pairing import GraphPair, check_no_double_parallel, check_parity
from bigonslide.smallcases import (
    build_annulus_case,
    corr2_scan,
    corr2_t4_contradiction,
    detect_scharlemann_cycles,
)


def criterion_1():
    for t in range(4, 33):
        for a in range(1, t):
            if gcd(a, t) != 1:
                continue
            cs = enumerate_completions(build_standard_cut_model(t, a))
            if a in (1, t - 1):
                ok = len(cs) == 2 and sum(not c.slidable for c in cs) == 1
            else:
                ok = len(cs) == 1 and cs[0].slidable
            if not ok:
                return False, f"t={t} alpha={a}: {len(cs)} completions"
    return True, ""


def criterion_2():
    for t in range(4, 33):
        c = next(c for c in enumerate_completions(build_standard_cut_model(t, 1)) if not c.slidable)
        if max_extension(c) != t + 2:
            return False, f"t={t}: max_extension {max_extension(c)}"
    cert = corr2_t4_contradiction()
    return cert["empty"], f"{cert['placements']} placements at t=4"


def criterion_3():
    for t in range(4, 65):
        a = build_surface_S(t)
        g = a.g_ts
        got = (
            len(a.faces), sum(f.kind == "hexagon" for f in a.faces), len(a.circuits),
            euler_of_assembly(a), len(g.edges), delta_of_assembly(a),
            reduced_class_sizes(graph_GS(a)), bool(a.coloring), len(_string_cycle(a.mt.cut)),
        )
        want = (3 * t - 2, 1, 2, 0, 3 * t, 3, [t + 2, t, t - 2], True, 1)
        if got != want:
            return False, f"t={t}: {got}"
    return True, ""


def _flip_one(p):
    e = p.g1.edges[0]
    flipped = replace(e, sign=NEGATIVE if e.sign == POSITIVE else POSITIVE)
    g1 = replace(p.g1, edges=(flipped,) + p.g1.edges[1:], _index=None)
    return GraphPair(g1, p.g2, p.edge_bijection)


def criterion_4():
    pairs = [assembled_pair(build_surface_S(t)) for t in range(4, 65)]
    pairs += [build_annulus_case(t).pair for t in (2, 3)]
    for p in pairs:
        if check_parity(p) or check_no_double_parallel(p):
            return False, "a valid pair violates a rule"
    if not check_parity(_flip_one(pairs[0])):
        return False, "flipped sign not detected"
    return True, ""


def criterion_5():
    for t in range(4, 65):
        if is_primitive("baba" + "b" * (t - 2)) or is_primitive("b" * (t + 3) + "aba"):
            return False, f"t={t}: boundary word reported primitive"
    n = 0
    for w in reduced_words(8):
        if is_primitive(w) != primitivity_oracle(w):
            return False, f"disagreement on {w}"
        n += 1
    return True, f"{n} words"


def criterion_6():
    c2, c3 = build_annulus_case(2), build_annulus_case(3)
    ok2 = c2.face_lengths == [4, 4] and len(detect_scharlemann_cycles(c2.pair)) == 2 and c2.delta == 2
    ok3 = c3.face_lengths == [3, 3, 6] and c3.delta == 2
    scan = corr2_scan(range(4, 1001)) == [(4, 4, 6)] and corr2_scan(range(4, 1001), delta_min=7) == []
    return ok2 and ok3 and scan, f"t=2 {ok2}, t=3 {ok3}, scan {scan}"


def criterion_7():
    with tempfile.TemporaryDirectory() as d:
        a, b = Path(d, "a"), Path(d, "b")
        for out in (a, b):
            with redirect_stdout(io.StringIO()):
                code = main(["verify", "--t-range", "4..33", "--out-dir", str(out)])
            if code != 0:
                return False, "verify failed"
        names = sorted(p.name for p in a.iterdir())
        same = names == sorted(p.name for p in b.iterdir()) and all(
            (a / n).read_bytes() == (b / n).read_bytes() for n in names)
    return same, f"{len(names)} files"


LIMITS = {1: 10, 2: 5, 3: 10, 4: 2, 5: 60, 6: 1, 7: None}
CRITERIA = {k: globals()[f"criterion_{k}"] for k in LIMITS}


def evaluate(k):
    t0 = time.perf_counter()
    ok, note = CRITERIA[k]()
    dt = time.perf_counter() - t0
    limit = LIMITS[k]
    in_time = limit is None or dt < limit
    budget = f" (limit {limit}s)" if limit else ""
    line = f"criterion {k}: {'PASS' if ok and in_time else 'FAIL'} {dt:.2f}s{budget} {note}".rstrip()
    return ok, in_time, line


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    ok, in_time, line = evaluate(k)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line
    assert in_time, line


if __name__ == "__main__":
    results = [evaluate(k) for k in sorted(CRITERIA)]
    for _, _, line in results:
        print(line)
    sys.exit(0 if all(ok and t for ok, t, _ in results) else 1)
