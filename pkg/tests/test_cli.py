import json

import pytest

from minkcx import cli, io
from minkcx.complex import from_facets, void_complex
from minkcx.generate import c4, path3, two_k2
from minkcx.minkowski import minkowski_complex
from minkcx.polytope import PolytopeFamily, make_box, make_polytope, segment
from minkcx.realize import realize_boxes


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(io.dumps(doc) if not isinstance(doc, str) else doc)
    return str(p)


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_complex_doc_round_trip():
    for cx in (path3(), c4(), void_complex(3), from_facets(2, [[]])):
        assert io.complex_from_doc(io.loads(io.dumps(io.complex_to_doc(cx)))) == cx


def test_family_doc_round_trip():
    fam = PolytopeFamily(2, [make_box([1, 3]), make_polytope(2, [(0, 0), (1, 2), ("1/2", 0)])], (3, "3/2"))
    doc = io.family_to_doc(fam)
    assert "summands" in doc["polytopes"][0] and "vertices" in doc["polytopes"][1]
    assert doc["mu"] == [3, "3/2"]
    assert io.family_from_doc(io.loads(io.dumps(doc))) == fam


@pytest.mark.parametrize(
    "doc, fragment",
    [
        ({"n": 3, "facets": [[0, 1]]}, "$.facets[0][0]: vertex 0 out of range 1..3"),
        ({"n": 3}, "missing field 'facets'"),
        ({"n": 2, "facets": [[1.5]]}, "$.facets[0][0]: expected an integer vertex"),
        ({"n": 2, "facets": [[1]], "void": True}, "void complex cannot list facets"),
    ],
)
def test_complex_parse_errors(tmp_path, capsys, doc, fragment):
    code, _, err = run(["info", write(tmp_path, "c.json", doc)], capsys)
    assert code == 2 and fragment in err


def test_float_coordinates_rejected(tmp_path, capsys):
    doc = {"dim": 1, "polytopes": [{"vertices": [[0], [0.5]]}], "mu": [1]}
    code, _, err = run(["minkcx", write(tmp_path, "f.json", doc)], capsys)
    assert code == 2 and "$.polytopes[0].vertices[1][0]" in err


def test_malformed_json_location(tmp_path, capsys):
    code, _, err = run(["info", write(tmp_path, "bad.json", '{"n": 2,\n "facets": [}')], capsys)
    assert code == 2 and "bad.json:2:" in err


def test_origin_required(tmp_path, capsys):
    doc = {"dim": 1, "polytopes": [{"vertices": [[1], [2]]}], "mu": [1]}
    code, _, err = run(["minkcx", write(tmp_path, "f.json", doc)], capsys)
    assert code == 2 and "origin" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == 2


def test_info(tmp_path, capsys):
    code, out, _ = run(["info", write(tmp_path, "c.json", io.complex_to_doc(path3()))], capsys)
    res = json.loads(out)["result"]
    assert code == 0
    assert res["minimal_nonfaces"] == [[1, 3]] and res["threshold"] is True
    assert res["reduced_euler"] == 0
    code, out, _ = run(["info", write(tmp_path, "v.json", io.complex_to_doc(void_complex(2)))], capsys)
    assert code == 0 and json.loads(out)["result"]["reduced_euler"] == 0


def test_minkcx_and_thm1(tmp_path, capsys):
    fam = PolytopeFamily(1, [segment(1), segment(1)], (1,))
    path = write(tmp_path, "f.json", io.family_to_doc(fam))
    code, out, _ = run(["minkcx", path], capsys)
    res = json.loads(out)["result"]
    assert code == 0 and res["complex"] == {"n": 2, "facets": [[]]}
    assert res["faces"] == 1 and res["nonfaces"] == 3
    code, out, _ = run(["verify-thm1", path], capsys)
    res = json.loads(out)["result"]
    assert code == 0 and res["status"] == "PASS" and res["lhs"] == res["rhs"]


def test_threshold_exit_codes(tmp_path, capsys):
    code, out, _ = run(["threshold", write(tmp_path, "p.json", io.complex_to_doc(path3()))], capsys)
    assert code == 0 and json.loads(out)["result"]["weights"] == ["1/2", 0, "1/2"]
    code, out, _ = run(["threshold", write(tmp_path, "k.json", io.complex_to_doc(two_k2()))], capsys)
    res = json.loads(out)["result"]
    assert code == 1 and res["threshold"] is False and res["witness"]["shape"] == "2K2"
    code, _, err = run(["threshold", write(tmp_path, "v.json", io.complex_to_doc(void_complex(1)))], capsys)
    assert code == 2


def test_ctd_deterministic(tmp_path, capsys):
    path = write(tmp_path, "c.json", io.complex_to_doc(c4()))
    code, first, _ = run(["ctd", path, "--seed", "3", "--budget", "8"], capsys)
    _, second, _ = run(["ctd", path, "--seed", "3", "--budget", "8"], capsys)
    assert code == 0 and first == second
    res = json.loads(first)["result"]
    assert res["lower"] == 2 and res["upper"] >= 2
    fam = io.family_from_doc(res["realization"])
    assert fam.dim == res["upper"] and minkowski_complex(fam) == c4()


def test_ctd_writes_realization(tmp_path, capsys):
    out_path = tmp_path / "r.json"
    code, out, _ = run(["ctd", write(tmp_path, "c.json", io.complex_to_doc(path3())), "--out", str(out_path)], capsys)
    assert code == 0 and json.loads(out)["result"]["upper"] == 1
    fam = io.family_from_doc(io.read_doc(out_path))
    assert minkowski_complex(fam) == path3()


@pytest.mark.parametrize("mode", ["boxes", "discrete"])
def test_realize_output_verifies(tmp_path, capsys, mode):
    out_path = tmp_path / "r.json"
    code, _, _ = run(
        ["realize", write(tmp_path, "c.json", io.complex_to_doc(c4())), "--mode", mode, "--out", str(out_path)],
        capsys,
    )
    assert code == 0
    doc = io.read_doc(out_path)
    if mode == "boxes":
        assert minkowski_complex(io.family_from_doc(doc)) == c4()
    else:
        from minkcx.realize import minkowski_complex_discrete

        assert minkowski_complex_discrete(io.discrete_from_doc(doc)) == c4()


def test_realize_refuses_unverified_output(tmp_path, capsys, monkeypatch):
    wrong = realize_boxes(path3())
    monkeypatch.setattr(cli, "realize_boxes", lambda cx: wrong)
    out_path = tmp_path / "r.json"
    code, out, err = run(
        ["realize", write(tmp_path, "c.json", io.complex_to_doc(c4())), "--out", str(out_path)], capsys
    )
    assert code == 4 and "verification" in err
    assert not out_path.exists() and out == ""


def test_reduce(tmp_path, capsys):
    fam = PolytopeFamily(2, [make_polytope(2, [(0, 0), (1, 0)])], (2, 0))
    cx = minkowski_complex(fam)
    code, out, _ = run(
        ["reduce", write(tmp_path, "f.json", io.family_to_doc(fam)), write(tmp_path, "c.json", io.complex_to_doc(cx))],
        capsys,
    )
    res = json.loads(out)["result"]
    assert code == 0 and res["start_dim"] == 2 and res["final_dim"] == 1
    code, _, _ = run(
        ["reduce", write(tmp_path, "f.json", io.family_to_doc(fam)), write(tmp_path, "d.json", io.complex_to_doc(c4()))],
        capsys,
    )
    assert code == 2


def test_budget_exit_code(tmp_path, capsys, monkeypatch):
    fam = PolytopeFamily(2, [make_box([30, 30]), make_box([30, 30])], (1, 1))
    path = write(tmp_path, "f.json", io.family_to_doc(fam))
    monkeypatch.setenv("MINKCX_BUDGET", "100")
    code, _, err = run(["verify-thm1", path], capsys)
    assert code == 3 and "budget" in err


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "minkcx", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "ctd" in proc.stdout
