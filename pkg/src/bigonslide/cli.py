"""Command-line driver.  Exit codes: 0 all checks pass, 1 a check failed,
2 usage or configuration error."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import assembly as asm
from .cutmodel import build_standard_cut_model, enumerate_completions, max_extension
from .fatgraph import to_dot
from .freegroup import abelianize, is_primitive
from .pairing import GcdViolation, check_no_double_parallel, check_parity
from .smallcases import (
    build_annulus_case,
    corr2_scan,
    corr2_t4_contradiction,
    detect_scharlemann_cycles,
)

CLAIMS = {
    "hyperbolic": "M_t is hyperbolic (cited, not verified)",
    "filling_dT": "M_t(dT) is a torus bundle (cited, not verified)",
}


class UsageError(Exception):
    pass


def check(name, expected, actual):
    return {"name": name, "expected": expected, "actual": actual, "pass": expected == actual}


def report(subject, checks, artifacts=(), extra=None):
    out = {"subject": subject, "checks": checks, "pass": all(c["pass"] for c in checks),
           "artifacts": list(artifacts)}
    if extra:
        out.update(extra)
    return out


def dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def parse_range(text):
    """``A..B`` is the half-open range ``A <= t < B``."""
    try:
        a, b = text.split("..")
        a, b = int(a), int(b)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected A..B")
    if b <= a:
        raise UsageError(f"empty range {text!r}")
    return range(a, b)


def out_dir(args) -> Path:
    d = Path(args.out_dir or os.environ.get("OUTPUT_DIR") or "out")
    d.mkdir(parents=True, exist_ok=True)
    return d


def write(d: Path, name: str, text: str) -> str:
    (d / name).write_text(text)
    return name


# -- verify -------------------------------------------------------------------------


def verify_t(t: int) -> dict:
    a = asm.build_surface_S(t)
    rep = asm.assembly_report(a)
    pair = asm.assembled_pair(a)
    word_b = asm.boundary_word(a, "B")
    word_w = asm.boundary_word(a, "W")
    want_b = "baba" + "b" * (t - 2)
    want_w = "b" * (t + 3) + "aba"
    words = {
        "B": {"word": str(word_b), "matches": asm.same_cyclic_word(word_b, want_b),
              "abelian": list(abelianize(word_b)), "primitive": is_primitive(word_b)},
        "W": {"word": str(word_w), "matches": asm.same_cyclic_word(word_w, want_w),
              "abelian": list(abelianize(word_w)), "primitive": is_primitive(word_w)},
    }
    checks = [
        check("faces", {"total": 3 * t - 2, "hexagons": 1},
              {"total": rep["faces"], "hexagons": rep["hexagons"]}),
        check("boundary_circuits", 2, rep["boundary_circuits"]),
        check("euler", 0, rep["euler"]),
        check("delta", 3, rep["delta"]),
        check("gs_class_sizes", [t + 2, t, t - 2], rep["gs_class_sizes"]),
        check("coloring_proper", True, bool(a.coloring)),
        check("mt_boundary_single_circuit", 1, len(_mt_circuits(a))),
        check("pairing_rules", {"parity": [], "no_double_parallel": []},
              {"parity": [v.to_dict() for v in check_parity(pair)],
               "no_double_parallel": [v.to_dict() for v in check_no_double_parallel(pair)]}),
        check("boundary_words",
              {"B": {"matches": True, "abelian": [2, t], "primitive": False},
               "W": {"matches": True, "abelian": [2, t + 4], "primitive": False}},
              {k: {x: v[x] for x in ("matches", "abelian", "primitive")} for k, v in words.items()}),
    ]
    return report(f"t={t}", checks, extra={"words": words, "claims": CLAIMS})


def _mt_circuits(a):
    return asm._string_cycle(a.mt.cut)


def _timed(t):
    t0 = time.perf_counter()
    r = verify_t(t)
    r["timing_s"] = round(time.perf_counter() - t0, 4)
    return r


def cmd_verify(args):
    ts = _t_values(args, minimum=4, hint="use `smallcase` for t = 2, 3")
    fn = _timed if args.timing else verify_t
    if args.jobs > 1 and len(ts) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            reports = list(ex.map(fn, ts))
    else:
        reports = [fn(t) for t in ts]
    d = out_dir(args)
    for r, t in zip(reports, ts):
        r["artifacts"] = [f"verify_t{t}.json"]
        write(d, f"verify_t{t}.json", dump(r))
        ok = sum(c["pass"] for c in r["checks"])
        print(f"t={t}: {'PASS' if r['pass'] else 'FAIL'} {ok}/{len(r['checks'])}")
    write(d, f"verify_{ts[0]}..{ts[-1] + 1}.json", dump(reports))
    return 0 if all(r["pass"] for r in reports) else 1


def _t_values(args, minimum, hint=""):
    if args.t is not None and args.t_range:
        raise UsageError("give --t or --t-range, not both")
    if args.t is not None:
        ts = [args.t]
    elif args.t_range:
        ts = list(parse_range(args.t_range))
    else:
        raise UsageError("--t or --t-range is required")
    if min(ts) < minimum:
        raise UsageError(f"t must be at least {minimum}; {hint}".rstrip("; "))
    return ts


# -- enumerate ----------------------------------------------------------------------


def cmd_enumerate(args):
    if args.t is None:
        raise UsageError("--t is required")
    try:
        m = build_standard_cut_model(args.t, args.alpha)
    except GcdViolation as exc:
        raise UsageError(str(exc))
    comps = enumerate_completions(m)
    d = out_dir(args)
    stem = f"completions_t{args.t}_a{args.alpha}"
    rows = []
    for k, c in enumerate(comps):
        row = c.to_dict()
        row["max_extension"] = max_extension(c)
        rows.append(row)
        ext = "unbounded" if row["max_extension"] is None else row["max_extension"]
        print(f"completion {k}: slidable={c.slidable} delta={c.delta} max_extension={ext}")
    if args.format == "dot":
        arts = [write(d, f"{stem}_{k}.dot", to_dot(c.graph, f"completion_{k}")) for k, c in enumerate(comps)]
    else:
        arts = [write(d, f"{stem}.json", dump(rows))]
    print(f"{len(comps)} completion(s); wrote {', '.join(arts) or 'nothing'}")
    return 0


# -- emit ---------------------------------------------------------------------------


def cmd_emit(args):
    t = args.t
    if t is None:
        raise UsageError("--t is required")
    if t < 4:
        raise UsageError("emit needs t >= 4")
    d = out_dir(args)
    if args.subject == "mt":
        mt = asm.build_mt(t)
        if args.format == "dot":
            name = write(d, f"mt_t{t}.dot", to_dot(mt.cut.g_bot, f"T_t{t}"))
        else:
            data = mt.cut.to_dict()
            data["boundary_circuit"] = list(mt.boundary)
            name = write(d, f"mt_t{t}.json", dump(data))
    else:
        a = asm.build_surface_S(t)
        g = {"gts": asm.graph_GTS, "gs": asm.graph_GS}.get(args.subject)
        if g is None:
            name = write(d, f"assembly_t{t}.{args.format}",
                         asm.assembly_json(a) if args.format == "json" else asm.assembly_dot(a)["G_S"])
        elif args.format == "dot":
            name = write(d, f"{args.subject}_t{t}.dot", to_dot(g(a), f"{args.subject}_t{t}"))
        else:
            graph = g(a)
            data = graph.to_dict()
            data["class_sizes"] = asm.reduced_class_sizes(graph)
            name = write(d, f"{args.subject}_t{t}.json", dump(data))
    print(f"wrote {d / name}")
    return 0


# -- smallcase / scan ---------------------------------------------------------------


def cmd_smallcase(args):
    d = out_dir(args)
    if args.t == 4:
        cert = corr2_t4_contradiction(relaxed=args.relaxed)
        if args.relaxed:
            checks = [check("nonempty", True, cert["placements"] > 0)]
        else:
            checks = [check("placements", 0, cert["placements"])]
        r = report("t=4 contradiction" + (" (relaxed)" if args.relaxed else ""), checks,
                   extra={"certificate": cert})
        name = "smallcase_t4" + ("_relaxed" if args.relaxed else "") + ".json"
    elif args.t in (2, 3):
        case = build_annulus_case(args.t)
        info = case.to_dict()
        flagged = sorted(len(f) for f in detect_scharlemann_cycles(case.pair))
        lengths = [4, 4] if args.t == 2 else [3, 3, 6]
        checks = [
            check("boundary_components", 2, info["boundary_components"]),
            check("face_lengths", lengths, info["face_lengths"]),
            check("scharlemann_lengths", lengths, flagged),
            check("delta", 2, info["delta"]),
            check("parity", [], [v.to_dict() for v in check_parity(case.pair)]),
            check("no_double_parallel", [], [v.to_dict() for v in check_no_double_parallel(case.pair)]),
        ]
        r = report(f"t={args.t} annulus", checks, extra={"case": info})
        name = f"smallcase_t{args.t}.json"
    else:
        raise UsageError("smallcase takes --t 2, 3 (annulus) or 4 (contradiction)")
    r["artifacts"] = [name]
    write(d, name, dump(r))
    ok = sum(c["pass"] for c in r["checks"])
    print(f"{r['subject']}: {'PASS' if r['pass'] else 'FAIL'} {ok}/{len(r['checks'])}")
    return 0 if r["pass"] else 1


def cmd_scan(args):
    ts = parse_range(args.t_range) if args.t_range else range(args.t_min, args.t_max + 1)
    sols = corr2_scan(ts, n_max=args.n_max, delta_min=args.delta_min)
    d = out_dir(args)
    data = {"t_first": ts[0], "t_last": ts[-1], "n_max": args.n_max, "delta_min": args.delta_min,
            "solutions": [list(s) for s in sols]}
    write(d, "scan.json", dump(data))
    for n, t, delta in sols:
        print(f"n={n} t={t} delta={delta}")
    print(f"{len(sols)} solution(s)")
    return 0


# -- entry point --------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out-dir", help="output directory (default $OUTPUT_DIR or ./out)")
    p = argparse.ArgumentParser(prog="bigonslide", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify", parents=[common], help="check the assembled surface for each t")
    v.add_argument("--t", type=int)
    v.add_argument("--t-range", help="A..B, half open")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--timing", action="store_true", help="record wall time (reports stop being byte-stable)")
    v.set_defaults(fn=cmd_verify)

    e = sub.add_parser("enumerate", parents=[common], help="list the completions for t, alpha")
    e.add_argument("--t", type=int)
    e.add_argument("--alpha", type=int, default=1)
    e.add_argument("--format", choices=["json", "dot"], default="json")
    e.set_defaults(fn=cmd_enumerate)

    m = sub.add_parser("emit", parents=[common], help="write a graph or model")
    m.add_argument("subject", choices=["gts", "gs", "mt", "assembly"])
    m.add_argument("--t", type=int)
    m.add_argument("--format", choices=["json", "dot"], default="json")
    m.set_defaults(fn=cmd_emit)

    s = sub.add_parser("smallcase", parents=[common], help="annulus cases and the t=4 contradiction")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--relaxed", action="store_true", help="t=4 only: drop the non-parallel hypothesis")
    s.set_defaults(fn=cmd_smallcase)

    c = sub.add_parser("scan", parents=[common], help="solve the endpoint-count inequalities")
    c.add_argument("--t-min", type=int, default=4)
    c.add_argument("--t-max", type=int, default=1000)
    c.add_argument("--t-range", help="A..B, half open; overrides --t-min/--t-max")
    c.add_argument("--n-max", type=int, default=4)
    c.add_argument("--delta-min", type=int, default=6)
    c.set_defaults(fn=cmd_scan)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.cmd}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
