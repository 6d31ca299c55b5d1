import json
import subprocess
import sys

import pytest

from strange_duality.catalog import from_json
from strange_duality.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dual(capsys):
    assert call(capsys, "dual", "E13") == (0, "Z11\n", "")


def test_dual_json(capsys):
    code, out, _ = call(capsys, "--format", "json", "dual", "E14")
    assert code == 0 and json.loads(out) == {"name": "E14", "duals": ["Q10"]}


def test_show_json_roundtrips(capsys):
    code, out, _ = call(capsys, "show", "J'9", "--format", "json")
    rec = json.loads(out)
    cat = from_json({"singularities": [rec], "self_dual": [], "kondo_extras": []}, strict=False)
    assert cat.lookup("J'9").to_json() == rec


def test_show_text(capsys):
    code, out, _ = call(capsys, "show", "E12")
    assert code == 0 and "2*3*7*42/1*6*14*21" in out


def test_frame_dual(capsys):
    assert call(capsys, "frame-dual", "2*3*30/1*6*15")[1] == "2*5*30/1*10*15\n"


def test_lattice_det(capsys):
    assert call(capsys, "lattice", "det", "--graph", "star:2,3,7+U")[1] == "1\n"
    assert call(capsys, "lattice", "sig", "--graph", "K24")[1] == "(4, 20, 0)\n"
    assert call(capsys, "lattice", "snf", "--graph", "star:2,2,2,3")[1].split()[-2:] == ["2", "2"]
    code, out, _ = call(capsys, "lattice", "coxeter", "--graph", "E8", "--format", "json")
    assert json.loads(out)["order"] == 30


def test_coxeter_root(capsys):
    assert call(capsys, "coxeter-root", "A12^2")[1] == "13^2/1^2\n"


def test_kobayashi(capsys):
    code, out, _ = call(capsys, "kobayashi", "--weights", "3,8,12", "--degree", "24", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["duals"] == ["6,8,9;24"]
    code, out, _ = call(capsys, "kobayashi", "--weights", "3,8,12", "--degree", "24", "--all-squares")
    assert "primitive squares" in out


def test_moonshine(capsys):
    code, out, _ = call(capsys, "moonshine", "--max-n", "13", "--json")
    doc = json.loads(out)
    assert {"N": 13, "shape": "13^2/1^2", "label": "13A"} in doc["shapes"]


def test_verify_suite(capsys):
    code, out, _ = call(capsys, "verify", "arnold")
    assert code == 0 and out.strip().endswith("checks passed (arnold)")
    code, out, _ = call(capsys, "verify", "kobayashi", "--list")
    assert code == 0 and "kobayashi/E14" in out.split()


def test_eta_check(capsys):
    assert call(capsys, "eta-check", "E13")[0] == 0
    code, out, _ = call(capsys, "eta-check", "--shape", "2^2/1", "--tau", "0.3,1.7", "--format", "json")
    assert code == 1 and json.loads(out)["ok"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["dual", "X99"],
        ["frame-dual", "2/3/4"],
        ["lattice", "det", "--graph", "Q7"],
        ["eta-check"],
        ["eta-check", "E12", "--tau", "0,0.001"],
        ["moonshine", "--max-n", "0"],
        ["kobayashi", "--weights", "2,4,6", "--degree", "12"],
        ["verify", "nonsense"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2 and err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "strange_duality", "dual", "E12"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "E12\n"
