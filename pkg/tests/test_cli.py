import io
import json
import shutil
import subprocess

import pytest

from walkdom.cli import run
from walkdom.formats import decode_graph6


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_check_house_l2_m3():
    code, out, _ = call("check", "--class", "l2/m3", "--graph6", "Dhs")
    assert code == 1
    assert "undominated=x3" in out


def test_check_json_member():
    code, out, _ = call("check", "--class", "m3/IP", "--graph6", "DhC", "--json")
    assert code == 0
    assert json.loads(out) == {"class_pair": "m3/IP", "graph6": "DhC", "member": True, "certificate": None}


def test_check_json_certificate():
    code, out, _ = call("check", "--class", "m3/l2", "--graph6", "Dhc", "--json")
    assert code == 1
    cert = json.loads(out)["certificate"]
    assert cert["undominated"] == "x1" and cert["dominatee"] == ["x0", "x1", "x2"]


def test_check_edges_file(tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text("# five-cycle\n5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n")
    code, out, _ = call("check", "--class", "m3/l2", "--edges", str(path))
    assert code == 1 and out.startswith("not a member of m3/l2")


def test_enumerate_sets_and_walks():
    code, out, _ = call("enumerate", "--graph6", "Dhc", "--pair", "x0,x2", "--walk-class", "m3")
    assert (code, out) == (0, "x0,x4,x3,x2\n")
    code, out, _ = call("enumerate", "--graph6", "Dhc", "--pair", "0,2", "--walk-class", "TW",
                        "--sets", "--json")
    assert json.loads(out) == [[1], [3, 4]]


def test_dominates():
    code, out, _ = call("dominates", "--graph6", "Dhs", "--pair", "x0,x2",
                        "--walk", "x0,x1,x2", "--walk2", "x0,x4,x3,x2")
    assert (code, out) == (1, "false undominated=x3\n")
    code, out, _ = call("dominates", "--graph6", "Dhs", "--pair", "x0,x2",
                        "--walk", "x0,x4,x3,x2", "--walk2", "x0,x1,x2", "--json")
    assert code == 0 and json.loads(out) == {"dominates": True, "undominated": None}


def test_verify_t6():
    code, out, err = call("verify", "--theorem", "T6", "--max-n", "6")
    assert code == 0
    assert out == "T6: 143 graphs, 0 disagreements [PASS]\n"
    assert err.startswith("T6: ")


def test_verify_reports_disagreement(tmp_path):
    path = tmp_path / "g.g6"
    path.write_text(">>graph6<<FEhXw\n")
    code, out, _ = call("verify", "--theorem", "T5", "--corpus", str(path))
    assert code == 1
    assert out.splitlines() == ["T5: 1 graphs, 1 disagreements [FAIL]",
                                "  FEhXw\tm3/IP\tfree, not member"]


def test_mine(tmp_path):
    js, dot = tmp_path / "c.json", tmp_path / "c.dot"
    code, out, _ = call("mine", "--class", "m3/l2", "--max-n", "6", "--json", str(js), "--dot", str(dot))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# m3/l2: connected graphs, n <= 6"
    assert "not known whether this class is hereditary" in lines[1]
    assert lines[2:] == ["DqK\tCONTAINS_KNOWN(hole)", "EqGW\tCONTAINS_KNOWN(hole)"]
    assert len(json.loads(js.read_text())["candidates"]) == 2
    assert dot.read_text().count("graph candidate_") == 2


def test_mine_open_class_reports_sandwich():
    code, out, _ = call("mine", "--class", "m3/WTW", "--max-n", "6", "--jobs", "2")
    assert code == 0
    assert "ECOw\tNEW" in out.splitlines()
    assert out.splitlines()[-1] == "# sandwich consistency: ok"


def test_catalog():
    code, out, _ = call("catalog", "--name", "F", "--emit", "graph6")
    assert code == 0
    g = decode_graph6(out.strip())
    assert (g.n, g.m) == (7, 9)
    code, out, _ = call("catalog")
    assert len(out.splitlines()) == 12
    code, out, _ = call("catalog", "--name", "house", "--emit", "dot")
    assert 'label="x4"' in out


def test_deterministic_output():
    assert call("mine", "--class", "m3/IP", "--max-n", "6") == call("mine", "--class", "m3/IP", "--max-n", "6")


@pytest.mark.parametrize("argv", [
    [],
    ["check", "--class", "m3/XX", "--graph6", "Dhs"],
    ["check", "--class", "m3/SP"],
    ["check", "--class", "m3/SP", "--graph6", "!!"],
    ["check", "--class", "m3/SP", "--graph6", "Dhs", "--edges", "x"],
    ["check", "--class", "m3/SP", "--edges", "/nonexistent/file"],
    ["enumerate", "--graph6", "Dhc", "--pair", "x0,x1", "--walk-class", "W"],
    ["enumerate", "--graph6", "Dhc", "--pair", "x0", "--walk-class", "W"],
    ["dominates", "--graph6", "Dhs", "--pair", "x0,x2", "--walk", "x0,x2", "--walk2", "x0,x1,x2"],
    ["verify", "--theorem", "T9", "--max-n", "4"],
    ["verify", "--max-n", "9"],
    ["mine", "--class", "m3/TW"],
    ["catalog", "--name", "bull"],
    ["nonsense"],
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert err.startswith("walkdom: error: ") and err.count("\n") == 1
    assert "Traceback" not in err


@pytest.mark.skipif(shutil.which("walkdom") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["walkdom", "check", "--class", "l2/m3", "--graph6", "Dhs"],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and "x3" in proc.stdout
