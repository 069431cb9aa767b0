import json

import pytest

from app import Config, main
from SCLdpc.ABBase import ABBase
from SCLdpc.AlistSerializer import AlistSerializer
from SCLdpc.ExitCodes import ExitCodes
from SCLdpc.RunManifest import RunManifest, digest

@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path

def _json(path):
    with open(path) as f:
        return json.load(f)

def test_construct_writes_code_spec_and_manifest(workdir):
    code = main(["construct", "--p", "17", "--L", "10", "--method", "cutting-vector", "--xi", "3,7,11",
                 "--out", "cv"])
    assert code == ExitCodes.Success
    with open(workdir / "cv.alist") as f:
        matrix = AlistSerializer.read(f)
    assert (matrix.getRows(), matrix.getCols()) == (51 * 11, 2890)
    manifest = _json(workdir / "cv.manifest.json")
    assert manifest["command"] == "construct"
    assert {entry["path"]: entry["sha256"] for entry in manifest["outputs"]} == \
        {"cv.alist": digest("cv.alist"), "cv.spec": digest("cv.spec")}

def test_construct_usage_errors(workdir, capsys):
    assert main(["construct", "--p", "5", "--L", "3", "--method", "cutting-vector", "--out", "x"]) == ExitCodes.Usage
    (workdir / "grid.bm").write_text("0 1 0 1 0\n1 0 1 0 1\n0 0 0 1 1\n")
    assert main(["construct", "--p", "5", "--L", "3", "--method", "bm", "--bm", "grid.bm", "--xi", "1,2,3",
                 "--out", "x"]) == ExitCodes.Usage
    assert main(["construct", "--p", "5", "--L", "3", "--method", "random-i", "--out", "x"]) == ExitCodes.Usage
    assert main(["construct", "--L", "3"]) == ExitCodes.Usage
    assert not (workdir / "x.alist").exists()
    assert capsys.readouterr().err

def test_construct_rejects_bad_structure(workdir):
    assert main(["construct", "--p", "6", "--L", "3", "--method", "cutting-vector", "--xi", "1,2,3",
                 "--out", "x"]) == ExitCodes.Validation

def test_count_both_methods_agree(workdir):
    assert main(["construct", "--p", "7", "--L", "4", "--m", "2", "--method", "random-ii", "--seed", "9",
                 "--out", "rnd"]) == ExitCodes.Success
    (workdir / "grid.bm").write_text("0 1 2 0 1 2 0\n1 2 0 0 2 1 1\n2 0 1 2 0 0 1\n")
    assert main(["construct", "--p", "7", "--L", "4", "--method", "bm", "--bm", "grid.bm",
                 "--out", "bm"]) == ExitCodes.Success
    assert main(["count", "--spec", "bm.spec", "--method", "both", "--csv", "bm.csv",
                 "--out", "bmcount"]) == ExitCodes.Success
    doc = _json(workdir / "bmcount.json")
    assert doc["diff"] == [] and doc["notices"] == []
    assert doc["total"] == 4 * doc["mu"][0] + 3 * doc["mu"][1] + 2 * doc["mu"][2]
    assert (workdir / "bm.csv").read_text().splitlines()[0] == "span,mu,multiplicity,cycles"
    assert main(["count", "--spec", "rnd.spec", "--out", "rndcount"]) == ExitCodes.Success
    assert _json(workdir / "rndcount.json")["notices"]

def test_count_alist(workdir):
    (workdir / "h.alist").write_text(AlistSerializer.dumps(ABBase(3, 17).expand()))
    assert main(["count", "--alist", "h.alist", "--method", "brute", "--out", "h"]) == ExitCodes.Success
    assert _json(workdir / "h.json")["total"] == 4624
    manifest = _json(workdir / "h.manifest.json")
    assert manifest["inputs"] == [{"path": "h.alist", "sha256": digest("h.alist")}]
    assert main(["count", "--alist", "h.alist", "--spec", "h.spec"]) == ExitCodes.Usage

def test_window_command(workdir):
    main(["construct", "--p", "5", "--L", "6", "--method", "cutting-vector", "--xi", "1,2,4", "--out", "cv"])
    assert main(["window", "--spec", "cv.spec", "--S", "2", "--memory-mode", "2"]) == ExitCodes.Usage
    assert main(["window", "--spec", "cv.spec", "--S", "7", "--memory-mode", "1"]) == ExitCodes.Validation
    assert main(["window", "--spec", "cv.spec", "--S", "2", "--memory-mode", "1", "--out", "w"]) == ExitCodes.Success
    doc = _json(workdir / "w.json")
    assert [position["groups"] for position in doc["positions"]] == [[g, g + 2] for g in range(5)]
    assert doc["step"] == 1
    assert doc["default_step"]

def test_optimize_cutting_vector(workdir):
    assert main(["optimize", "--p", "5", "--L", "3", "--family", "cutting-vector", "--out", "best"]) == ExitCodes.Success
    doc = _json(workdir / "best.json")
    assert len(doc["xi"]) == 3
    assert main(["count", "--spec", "best.spec", "--out", "again"]) == ExitCodes.Success
    assert _json(workdir / "again.json")["total"] == doc["value"]

def test_optimize_bm_writes_reproducible_outputs(workdir):
    argv = ["optimize", "--p", "5", "--L", "4", "--m", "2", "--beam", "4", "--restarts", "2", "--target", "window:4"]
    assert main(argv + ["--out", "a"]) == ExitCodes.Success
    assert main(argv + ["--out", "b"]) == ExitCodes.Success
    for suffix in (".bm", ".spec", ".config"):
        assert digest("a" + suffix) == digest("b" + suffix)
    assert "beam=4\n" in (workdir / "a.config").read_text()
    assert "restarts=2\n" in (workdir / "a.config").read_text()
    assert _json(workdir / "a.manifest.json")["params"]["beam"] == 4
    assert main(["optimize", "--p", "5", "--L", "4", "--m", "2", "--target", "window:x"]) == ExitCodes.Usage

def test_config_file_defaults(workdir):
    (workdir / "search.json").write_text(json.dumps({"beam": 2, "budget": 500}))
    config = Config("search.json")
    assert config.get("beam") == 2
    assert config.get("beam", 16) == 16
    assert config.get("backtrack") == Config.DEFAULTS["backtrack"]
    assert Config("missing.json").empty()
    assert main(["optimize", "--p", "5", "--L", "3", "--m", "1", "--config", "search.json", "--out", "o"]) \
        == ExitCodes.Success
    assert _json(workdir / "o.json")["config"]["budget"] == 500

def test_manifest_notices_changed_files(workdir):
    (workdir / "out.txt").write_text("one\n")
    manifest = RunManifest("count", {"method": "line"}, seed=4)
    manifest.addOutput("out.txt")
    assert manifest.verify() == []
    (workdir / "out.txt").write_text("two\n")
    assert manifest.verify() == ["out.txt"]
    assert manifest.toDict()["seed"] == 4
    manifest.write("m.json")
    assert _json(workdir / "m.json") == manifest.toDict()

def test_construct_lift_degree_only_for_bm(workdir):
    for method in (["cutting-vector", "--xi", "1,2,3"], ["random-i", "--m", "1"], ["random-ii", "--m", "2"]):
        assert main(["construct", "--p", "5", "--L", "3", "--J", "3", "--method"] + method +
                    ["--out", "x"]) == ExitCodes.Usage
    assert not (workdir / "x.alist").exists()
    (workdir / "grid.bm").write_text("0 1 0 1 0\n1 0 1 0 1\n0 0 0 1 1\n")
    assert main(["construct", "--p", "5", "--L", "3", "--J", "2", "--method", "bm", "--bm", "grid.bm",
                 "--lambda", "cyclic:1", "--out", "lifted"]) == ExitCodes.Success
    with open(workdir / "lifted.alist") as f:
        assert AlistSerializer.read(f).getCols() == 25 * 3 * 2
