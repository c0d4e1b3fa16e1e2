import pytest
from hypothesis import given, settings, strategies as st

from bigonslide.fatgraph import genus
from bigonslide.pairing import check_no_double_parallel, check_parity
from bigonslide.smallcases import (
    build_annulus_case,
    corr2_scan,
    corr2_t4_contradiction,
    detect_scharlemann_cycles,
)


def test_two_punctures():
    c = build_annulus_case(2)
    assert c.face_lengths == [4, 4]
    assert len(detect_scharlemann_cycles(c.pair)) == 2
    assert c.delta == 2
    assert len(c.assembly.circuits) == 2
    assert genus(c.pair.g1) == 1 and genus(c.pair.g2) == 0


def test_three_punctures():
    c = build_annulus_case(3)
    assert c.face_lengths == [3, 3, 6]
    assert sorted(len(f) for f in detect_scharlemann_cycles(c.pair)) == [3, 3, 6]
    assert c.delta == 2 and c.realizations == 1


@pytest.mark.parametrize("t", [2, 3])
def test_pairing_rules(t):
    p = build_annulus_case(t).pair
    assert check_parity(p) == [] and check_no_double_parallel(p) == []


def test_seifert_strings():
    d = build_annulus_case(3).to_dict()
    assert d["seifert_string"] == "(+0,1;-1/3,-1/6)"
    assert d["filled_seifert_string"].startswith("(+0,0;1/2")


def test_annulus_rejects_other_t():
    with pytest.raises(ValueError):
        build_annulus_case(4)


def test_scan_unique_solution():
    assert corr2_scan(range(4, 1001)) == [(4, 4, 6)]
    assert corr2_scan(range(4, 1001), delta_min=7) == []


def test_scan_stable_past_ten():
    assert corr2_scan(range(4, 11)) == corr2_scan(range(4, 5000))


def test_scan_includes_three_when_asked():
    assert corr2_scan(range(3, 1001)) == [(4, 3, 6), (4, 4, 6)]


@settings(max_examples=100)
@given(st.integers(1, 2000), st.integers(1, 6), st.integers(6, 12))
def test_scan_solutions_satisfy_bound(t, n, d):
    sols = corr2_scan([t], n_max=n, delta_min=d)
    for n_, t_, d_ in sols:
        assert 6 * t_ <= d_ * t_ <= n_ * (t_ + 2) and d_ >= d
    if t > 4:
        assert all(s[0] >= 5 for s in sols)


def test_t4_contradiction():
    cert = corr2_t4_contradiction()
    assert cert["empty"] and cert["placements"] == 0
    assert set(cert["cases"]) == {"minus", "plus"}
    assert all(cert["cases"][k] for k in ("minus", "plus"))


def test_t4_relaxed_has_placements():
    cert = corr2_t4_contradiction(relaxed=True)
    assert not cert["empty"] and cert["placements"] > 0
