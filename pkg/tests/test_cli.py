import json
import subprocess
import sys

import pytest

from bigonslide.cli import main


def run(tmp_path, *argv):
    return main([*argv, "--out-dir", str(tmp_path)])


def test_verify_single(tmp_path, capsys):
    assert run(tmp_path, "verify", "--t", "5") == 0
    r = json.loads((tmp_path / "verify_t5.json").read_text())
    assert r["pass"] and len(r["checks"]) == 9
    assert "t=5: PASS 9/9" in capsys.readouterr().out


def test_verify_rejects_small_t(tmp_path, capsys):
    assert run(tmp_path, "verify", "--t", "3") == 2
    assert "smallcase" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["verify"],
    ["verify", "--t", "5", "--t-range", "4..6"],
    ["verify", "--t-range", "6..4"],
    ["enumerate", "--t", "4", "--alpha", "2"],
    ["emit", "gs", "--t", "3"],
    ["smallcase", "--t", "7"],
])
def test_usage_errors(tmp_path, argv):
    assert run(tmp_path, *argv) == 2


def test_verify_range_byte_stable(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(["verify", "--t-range", "4..9", "--out-dir", str(a)]) == 0
    assert main(["verify", "--t-range", "4..9", "--out-dir", str(b), "--jobs", "2"]) == 0
    names = sorted(p.name for p in a.iterdir())
    assert names == sorted(p.name for p in b.iterdir())
    assert "verify_4..9.json" in names
    for n in names:
        assert (a / n).read_bytes() == (b / n).read_bytes()


def test_timing_opt_in(tmp_path):
    assert run(tmp_path, "verify", "--t", "4", "--timing") == 0
    assert "timing_s" in json.loads((tmp_path / "verify_t4.json").read_text())


def test_enumerate(tmp_path, capsys):
    assert run(tmp_path, "enumerate", "--t", "6") == 0
    rows = json.loads((tmp_path / "completions_t6_a1.json").read_text())
    assert sorted(r["max_extension"] or 0 for r in rows) == [0, 8]
    assert "2 completion(s)" in capsys.readouterr().out


def test_enumerate_dot(tmp_path):
    assert run(tmp_path, "enumerate", "--t", "5", "--alpha", "2", "--format", "dot") == 0
    text = (tmp_path / "completions_t5_a2_0.dot").read_text()
    assert text.startswith("graph") and text.count("--") == 7


@pytest.mark.parametrize("subject,edges", [("gs", 15), ("gts", 15), ("mt", 7)])
def test_emit_dot(tmp_path, subject, edges):
    assert run(tmp_path, "emit", subject, "--t", "5", "--format", "dot") == 0
    text = next(tmp_path.glob("*.dot")).read_text()
    assert text.count("--") == edges


def test_emit_json(tmp_path):
    assert run(tmp_path, "emit", "gs", "--t", "7") == 0
    assert json.loads((tmp_path / "gs_t7.json").read_text())["class_sizes"] == [9, 7, 5]
    assert run(tmp_path, "emit", "assembly", "--t", "4") == 0
    rep = json.loads((tmp_path / "assembly_t4.json").read_text())["report"]
    assert rep["faces"] == 10


@pytest.mark.parametrize("argv,code", [
    (["--t", "2"], 0), (["--t", "3"], 0), (["--t", "4"], 0), (["--t", "4", "--relaxed"], 0),
])
def test_smallcase(tmp_path, argv, code):
    assert run(tmp_path, "smallcase", *argv) == code


def test_scan(tmp_path, capsys):
    assert run(tmp_path, "scan") == 0
    data = json.loads((tmp_path / "scan.json").read_text())
    assert data["solutions"] == [[4, 4, 6]]
    assert run(tmp_path, "scan", "--delta-min", "7") == 0
    assert "0 solution(s)" in capsys.readouterr().out


def test_output_dir_env(tmp_path, monkeypatch):
    monkeypatch.setenv("OUTPUT_DIR", str(tmp_path))
    assert main(["scan", "--t-max", "10"]) == 0
    assert (tmp_path / "scan.json").exists()


def test_module_entry(tmp_path):
    r = subprocess.run([sys.executable, "-m", "bigonslide", "scan", "--t-max", "20", "--out-dir", str(tmp_path)],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "n=4 t=4 delta=6" in r.stdout
