import pytest
from hypothesis import given, settings, strategies as st

from bigonslide.assembly import (
    AssemblyError,
    assembled_pair,
    assembly_dot,
    assembly_json,
    boundary_word,
    build_mt,
    compute_delta_S_T,
    delta_of_assembly,
    designated_disks,
    euler_of_assembly,
    graph_GS,
    graph_GTS,
    reduced_class_sizes,
    same_cyclic_word,
    two_color_dual,
)
from bigonslide.cutmodel import check_complete_disk_system, string_violations
from bigonslide.fatgraph import face_of_dart, genus, trace_faces
from bigonslide.freegroup import abelianize, is_primitive
from bigonslide.pairing import check_no_double_parallel, check_parity

T_SMALL = [4, 5, 6, 9, 13]


def test_mt_needs_t4():
    with pytest.raises(ValueError):
        build_mt(3)


@pytest.mark.parametrize("t", T_SMALL)
def test_mt_is_complete(t):
    mt = build_mt(t)
    assert check_complete_disk_system(mt.cut)
    assert len(mt.cut.faces) == t + 1


@pytest.mark.parametrize("t", T_SMALL)
def test_face_counts(surface, t):
    a = surface(t)
    assert len(a.faces) == 3 * t - 2
    assert [f.kind for f in a.faces].count("hexagon") == 1
    assert a.model.notes["stack_choices"] == 1


@pytest.mark.parametrize("t", T_SMALL)
def test_corners_disjoint(surface, t):
    assert string_violations(surface(t).model, strict=True) == []


@pytest.mark.parametrize("t", T_SMALL)
def test_boundary_and_euler(surface, t):
    a = surface(t)
    assert len(a.circuits) == 2
    assert euler_of_assembly(a) == 0
    assert delta_of_assembly(a) == 3
    ends = [x for c in a.circuits for x in c]
    assert len(ends) == len(set(ends)) == 2 * len(a.g_ts.edges)


@pytest.mark.parametrize("t", T_SMALL)
def test_graphs(surface, t):
    a = surface(t)
    gs, gts = graph_GS(a), graph_GTS(a)
    assert gs.vertex_count == 2 and genus(gs) == 1
    assert reduced_class_sizes(gs) == [t + 2, t, t - 2]
    assert len(gs.edges) == len(gts.edges) == 3 * t
    assert all(gts.degree(v) == 6 for v in range(1, t + 1))
    p = assembled_pair(a)
    assert check_parity(p) == [] and check_no_double_parallel(p) == []


@pytest.mark.parametrize("t", T_SMALL)
def test_coloring(surface, t):
    a = surface(t)
    g = a.g_ts
    faces = trace_faces(g)
    assert set(a.coloring) == set(range(len(faces)))
    fod = face_of_dart(g, faces)
    for e in g.edges:
        assert a.coloring[fod[(e.id, 0)]] != a.coloring[fod[(e.id, 1)]]
    assert a.coloring[designated_disks(a, "B")["a"]] == "B"


@pytest.mark.parametrize("t", T_SMALL)
def test_boundary_words(surface, t):
    a = surface(t)
    wb, ww = boundary_word(a, "B"), boundary_word(a, "W")
    assert same_cyclic_word(wb, "baba" + "b" * (t - 2))
    assert same_cyclic_word(ww, "b" * (t + 3) + "aba")
    assert abelianize(wb) == (2, t) and abelianize(ww) == (2, t + 4)
    assert not is_primitive(wb) and not is_primitive(ww)


def test_delta_rejects_uneven_degrees():
    assert compute_delta_S_T([6, 6, 6], 2) == 3
    with pytest.raises(AssemblyError):
        compute_delta_S_T([6, 4], 2)
    with pytest.raises(AssemblyError):
        compute_delta_S_T([5, 5], 2)


def test_odd_cycle_witness():
    res = two_color_dual([0, 1, 2], [(0, 1), (1, 2), (2, 0)])
    assert isinstance(res, list) and sorted(set(res)) == [0, 1, 2]
    assert two_color_dual([0, 1, 2, 3], [(0, 1), (1, 2), (2, 3), (3, 0)]) == {0: 0, 1: 1, 2: 0, 3: 1}


def test_removing_a_face_breaks_euler(surface):
    a = surface(5)
    assert euler_of_assembly(a, a.faces[1:]) == -1


def test_outputs_deterministic(surface):
    a = surface(6)
    assert assembly_json(a) == assembly_json(a)
    dots = assembly_dot(a)
    assert dots["G_S"].count("--") == 18 and dots["G_TS"].count("--") == 18


def test_same_cyclic_word():
    assert same_cyclic_word("abb", "bab") and not same_cyclic_word("abb", "aab")
    assert same_cyclic_word("", "")


@settings(max_examples=8, deadline=None)
@given(st.integers(4, 24))
def test_invariants_any_t(surface, t):
    a = surface(t)
    assert len(a.circuits) == 2 and euler_of_assembly(a) == 0 and delta_of_assembly(a) == 3
