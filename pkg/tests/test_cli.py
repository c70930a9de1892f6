import io
import json
import subprocess
import sys

import pytest

from hypfan.cli import run


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def octa_json():
    code, out, _ = call(["generate", "octahedral"])
    assert code == 0
    return out


def test_generate_json(octa_json):
    data = json.loads(octa_json)
    assert data["dimension"] == 2 and data["name"] == "octahedral"
    assert len(data["vertices"]) == 6 and data["fan"]


def test_generate_is_byte_identical():
    assert call(["generate", "genus", "--g", "2"]) == call(["generate", "genus", "--g", "2"])
    assert call(["generate", "s3"])[1] == call(["generate", "s3"])[1]


def test_validate(octa_json):
    code, out, _ = call(["validate"], octa_json)
    rep = json.loads(out)
    assert code == 0 and rep["ok"] and isinstance(rep["verdicts"], list)
    code, out, _ = call(["validate", "--format", "text"], octa_json)
    assert code == 0 and out.startswith("validate: ok")


def test_validate_3d():
    _, s3, _ = call(["generate", "rp3"])
    code, out, _ = call(["validate"], s3)
    assert code == 0 and json.loads(out)["cells"] == [12, 36, 40, 16]


def test_validate_bad_fan(octa_json, tmp_path):
    fan = tmp_path / "fan.json"
    fan.write_text(json.dumps({"dimension": 2, "vectors": {"1": [1, 0], "2": [0, 1],
                                                          "3": [1, 1]}}))
    code, out, _ = call(["validate", "--fan", str(fan)], octa_json)
    assert code == 1 and not json.loads(out)["ok"]


def test_check_s2(octa_json):
    code, out, _ = call(["check-s2"], octa_json)
    assert code == 0 and "verdicts" in json.loads(out)


def test_check_s2_dot_coloring(octa_json):
    code, out, _ = call(["check-s2", "--format", "dot"], octa_json)
    assert code == 0
    assert out.count("fillcolor=black") == 4 and out.count("fillcolor=white") == 4


def test_check_s2_failure():
    from hypfan.serialize import complex_to_dict, dumps
    from helpers import great_circles
    data = dumps(complex_to_dict(great_circles([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])))
    code, out, _ = call(["check-s2"], data)
    assert code == 1 and not json.loads(out)["ok"]


def test_flow(octa_json):
    code, out, _ = call(["flow", "--w", "2,1"], octa_json)
    rep = json.loads(out)
    assert code == 0 and rep["counts"] == [2, 2, 2]
    code, out, _ = call(["flow", "--w", "2,1", "--format", "dot"], octa_json)
    assert out.startswith("digraph") and out.count(" -> ") == 12


def test_flow_rational_and_survey(octa_json):
    code, out, _ = call(["flow", "--w", "3/2,1", "--samples", "5", "--seed", "1"], octa_json)
    assert code == 0 and json.loads(out)["survey"]["samples"] == 5


def test_flow_3d():
    _, s3, _ = call(["generate", "s3"])
    code, out, _ = call(["flow", "--w", "3,1,1"], s3)
    assert code == 0 and json.loads(out)["counts"] == [4, 8, 8, 4]


@pytest.mark.parametrize("argv", [["flow", "--w", "1,0"], ["flow"], ["flow", "--w", "1,2,3"],
                                  ["flow", "--w", "a,b"], ["frobnicate"]])
def test_usage_errors(octa_json, argv):
    assert call(argv, octa_json)[0] == 2


def test_bad_json():
    code, _, err = call(["validate"], "{nope")
    assert code == 2 and "JSON" in err


def test_move_and_remove(octa_json):
    code, out, _ = call(["move", "--op", "insert", "--x", "0"], octa_json)
    data = json.loads(out)
    assert code == 0 and len(data["vertices"]) == 14
    code, back, _ = call(["move", "--op", "remove", "--x", "0", "--inner", "4",
                          "--outer", "5"], out)
    assert code == 0
    assert json.loads(back)["vertices"] == json.loads(octa_json)["vertices"]


def test_move_errors(octa_json):
    assert call(["move", "--op", "insert", "--x", "99"], octa_json)[0] == 1
    assert call(["move", "--op", "insert", "--w-prime", "1,0"], octa_json)[0] == 1
    assert call(["move", "--op", "remove"], octa_json)[0] == 2


def test_augment(octa_json):
    code, out, _ = call(["move", "--op", "augment", "--k", "2"], octa_json)
    assert code == 0 and len(json.loads(out)["vertices"]) == 22


def test_search(octa_json):
    code, out, _ = call(["search"], octa_json)
    assert code == 0 and json.loads(out)["dimension"] == 2
    code, out, _ = call(["search", "--format", "text"], octa_json)
    assert "Realizable" in out


def test_search_budget():
    _, g, _ = call(["generate", "genus", "--g", "5"])
    code, out, _ = call(["search", "--budget", "3", "--format", "text"], g)
    assert code == 1 and "BudgetExhausted" in out


def test_replay(tmp_path):
    script = tmp_path / "s.json"
    script.write_text(json.dumps([{"op": "generate", "args": {"family": "octahedral"}},
                                  {"op": "augment", "args": {"k": 1}}]))
    a = call(["replay", str(script)])
    assert a[0] == 0 and a == call(["replay", str(script)])
    assert len(json.loads(a[1])["vertices"]) == 14


def test_export(octa_json):
    code, out, _ = call(["export"], octa_json)
    assert out.startswith("graph") and out.count(" -- ") == 12 and " -> " not in out
    code, out, _ = call(["export", "--w", "2,1", "--coloring"], octa_json)
    assert out.startswith("digraph") and out.count("fillcolor=black") == 4


def test_entry_point(octa_json):
    proc = subprocess.run([sys.executable, "-m", "hypfan.cli", "flow", "--w", "1,0"],
                          input=octa_json, capture_output=True, text=True)
    assert proc.returncode == 2 and "NonGenericDirection" in proc.stderr


def test_generate_nonorientable():
    code, out, _ = call(["generate", "nonorientable", "--g", "2"])
    data = json.loads(out)
    assert code == 0 and data["surface"] == {"orientable": False, "genus_or_crosscaps": 3}
    code, rep, _ = call(["flow", "--w", "7,3"], out)
    assert code == 0 and json.loads(rep)["ok"]
