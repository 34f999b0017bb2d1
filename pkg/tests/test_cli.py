import json

import pytest

from exactpoly import fixtures as fx
from exactpoly.cli import main
from exactpoly.formats import format_h, format_map, format_v, parse_blocks
from exactpoly.polyhedron import polyhedra_equal
from exactpoly.representations import HPolyhedron, ge, le
from exactpoly.tsp_model import build_ap_hrep


@pytest.fixture
def files(tmp_path):
    paths = {
        "q": tmp_path / "q.txt",
        "p": tmp_path / "p.txt",
        "p_h": tmp_path / "p_h.txt",
        "pi": tmp_path / "pi.txt",
        "square": tmp_path / "square.txt",
        "empty": tmp_path / "empty.txt",
        "ap4": tmp_path / "ap4.txt",
        "bad": tmp_path / "bad.txt",
    }
    paths["q"].write_text(format_h(fx.Q_H))
    paths["p"].write_text(format_v(fx.P_V))
    paths["p_h"].write_text(format_h(fx.P_H_DISPLAY))
    paths["pi"].write_text(format_map(fx.PI))
    square = HPolyhedron(2, (ge((1, 0), 0), le((1, 0), 1), ge((0, 1), 0), le((0, 1), 1)))
    paths["square"].write_text(format_h(square))
    paths["empty"].write_text("begin h\ndim 1\n<= 1 | 0\n>= 1 | 1\nend\n")
    paths["ap4"].write_text(format_h(build_ap_hrep(4)))
    paths["bad"].write_text("begin h\ndim 2\n<= 1 | 0\nend\n")
    return {k: str(v) for k, v in paths.items()}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- verify-paper -------------------------------------------------------------------

def test_verify_paper_default(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "11/11 checks hold" in out


def test_verify_paper_only_ref1a(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "REF1a", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert [c["check_id"] for c in doc["checks"]] == ["REF1a"]
    assert doc["checks"][0]["details"]["witness"] == "(45/2, -50, 100)"


def test_verify_paper_n_max(capsys):
    code, out, _ = run(capsys, "verify-paper", "--n-max", "4", "--format", "json")
    doc = json.loads(out)
    ids = [c["check_id"] for c in doc["checks"]]
    assert "THM1-n4" in ids and "THM1-n5" not in ids
    n4 = next(c for c in doc["checks"] if c["check_id"] == "THM1-n4")
    assert n4["details"]["vertices"] == 6


def test_verify_paper_json_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify-paper", "--format", "json", "--seed", "7", "--out", str(a)]) == 0
    assert main(["verify-paper", "--format", "json", "--seed", "7", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_paper_unknown_id(capsys):
    code, _, err = run(capsys, "verify-paper", "--only", "NOPE")
    assert code == 2 and "NOPE" in err


def test_verify_paper_failure_sets_exit_code(capsys, monkeypatch):
    from exactpoly import report
    monkeypatch.setattr(report, "check_ref2", lambda: (False, {"forced": True}))
    code, out, _ = run(capsys, "verify-paper", "--only", "REF2")
    assert code == 1
    assert out.startswith("FAIL")


def test_verify_paper_timeout_is_failure(capsys, monkeypatch):
    import time
    from exactpoly import report

    def slow():
        time.sleep(5)
        return True, {}
    monkeypatch.setattr(report, "check_degen", slow)
    code, out, _ = run(capsys, "verify-paper", "--only", "DEGEN", "--timeout", "0.2", "--format", "json")
    assert code == 1
    assert "timed out" in json.loads(out)["checks"][0]["details"]["error"]


# -- project / vertices ----------------------------------------------------------------

def test_project_q(capsys, files):
    code, out, _ = run(capsys, "project", files["q"], "--keep", "0,1,2")
    assert code == 0
    assert out == "begin h\ndim 3\nend\n"


def test_project_square(capsys, files):
    code, out, _ = run(capsys, "project", files["square"], "--keep", "0", "--minimal")
    (seg,) = parse_blocks(out)
    assert polyhedra_equal(seg, HPolyhedron(1, (ge((1,), 0), le((1,), 1))))


def test_project_v_file(capsys, files):
    code, out, _ = run(capsys, "project", files["p"], "--keep", "0")
    assert out == "begin v\ndim 1\nvertex 8\nvertex 12\nend\n"


def test_project_bad_file(capsys, files):
    code, _, err = run(capsys, "project", files["bad"], "--keep", "0")
    assert code == 2
    assert f"{files['bad']}:3:" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "vertices", str(tmp_path / "nothing.txt"))
    assert code == 2 and "error" in err


def test_vertices_ap4(capsys, files):
    code, out, _ = run(capsys, "vertices", files["ap4"])
    (v,) = parse_blocks(out)
    assert len(v.vertices) == 6


def test_vertices_square(capsys, files):
    _, out, _ = run(capsys, "vertices", files["square"])
    (v,) = parse_blocks(out)
    assert len(v.vertices) == 4


def test_vertices_empty(capsys, files):
    code, out, _ = run(capsys, "vertices", files["empty"])
    assert code == 0 and "empty" in out


def test_output_file_round_trips(files, tmp_path):
    out = tmp_path / "v.txt"
    assert main(["vertices", files["p_h"], "--out", str(out)]) == 0
    (v,) = parse_blocks(out.read_text())
    assert polyhedra_equal(v, fx.P_V)


# -- ef-check ------------------------------------------------------------------------------

def test_ef_check_counterexample(capsys, files):
    code, out, _ = run(capsys, "ef-check", files["q"], files["p"], "--x-coords", "0,1,2",
                       "--map", files["pi"], "--format", "json")
    verdicts = {v["definition"]: v["holds"] for v in json.loads(out)["verdicts"]}
    assert code == 0
    assert verdicts == {"standard": False, "fiorini_exists": False, "fiorini_map": True}


def test_ef_check_identity(capsys, tmp_path, files):
    ident = tmp_path / "id.txt"
    ident.write_text("begin map\ndims 2 2\nrow 1 0\nrow 0 1\nend\n")
    _, out, _ = run(capsys, "ef-check", files["square"], files["square"], "--x-coords", "0,1",
                    "--map", str(ident))
    assert out.count("holds") == 3


def test_ef_check_map_required(capsys, files):
    code, _, err = run(capsys, "ef-check", files["q"], files["p"], "--x-coords", "0,1,2",
                       "--definition", "map")
    assert code == 2 and "--map" in err


# -- tsp -------------------------------------------------------------------------------

def test_tsp_tours(capsys):
    code, out, _ = run(capsys, "tsp", "4", "tours")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6 and lines[0] == "0 1 2 3 0"


def test_tsp_bijection(capsys):
    code, out, _ = run(capsys, "tsp", "5", "bijection")
    assert code == 0
    assert "vertices 24" in out and "bijection true" in out and out.rstrip().endswith("holds")


def test_tsp_ap(capsys):
    _, out, _ = run(capsys, "tsp", "3", "ap")
    (h,) = parse_blocks(out)
    assert h.rows == build_ap_hrep(3).rows


@pytest.mark.parametrize("argv", [["tsp", "1", "tours"], ["tsp", "9", "tours"]])
def test_tsp_bad_n(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["project"])
    assert info.value.code == 2
