import json
import subprocess
import sys

import pytest

from yamabe import __version__
from yamabe.cli import OutputDocument, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


def test_homology(capsys):
    doc = run_json(capsys, "homology", "Z/3 x Z/3", "--coeff", "Z", "--max-degree", "4")
    assert [d["summands"] for d in doc["results"]["degrees"]] == [1, 2, 1, 3, 2]
    assert doc["results"]["degrees"][0]["free_rank"] == 1
    assert doc["version"] == __version__
    doc = run_json(capsys, "homology", "Z", "--max-degree", "1")
    assert [d["group"] for d in doc["results"]["degrees"]] == ["Z", "Z"]


def test_homology_errors(capsys):
    code, out, err = run(capsys, "homology", "Z/5", "--coeff", "Z2")
    assert code == 3 and out == "" and err
    code, out, err = run(capsys, "homology", "Z/3 x")
    assert code == 2 and "position 5" in err


def test_poincare(capsys):
    doc = run_json(capsys, "poincare", "1", "--max-degree", "5")
    assert doc["results"]["closed"] == [1, 1, 0, 1, 0, 1]
    doc = run_json(capsys, "poincare", "3", "--method", "both")
    assert doc["results"]["equal"] is True
    assert run(capsys, "poincare", "0")[0] == 2


def test_split(capsys):
    doc = run_json(capsys, "split", "(Z/3)^3", "--max-degree", "4")
    assert [d["toral"] for d in doc["results"]["degrees"]] == [1, 3, 3, 1, 0]
    doc = run_json(capsys, "split", "Z/9")
    assert [d["toral"] > 0 for d in doc["results"]["degrees"]] == [True, True] + [False] * 7
    assert run(capsys, "split", "Z/2 x Z/3")[0] == 3


def test_generators(capsys):
    doc = run_json(capsys, "generators", "Z/5", "--degree", "7")
    gens = doc["results"]["generators"]
    assert len(gens) == 1 and gens[0]["tree"]["node"] == "lens" and gens[0]["status"] == "PSC"
    doc = run_json(capsys, "generators", "(Z/3)^2", "--degree", "3")
    assert any(g["tree"]["node"] == "toda_bracket" for g in doc["results"]["generators"])
    assert doc["results"]["span_check"]["bijection"]
    doc = run_json(capsys, "generators", "Z/3", "--degree", "2")
    assert doc["results"]["generators"] == []


@pytest.mark.parametrize(
    "argv,status,cite",
    [
        (["(Z/3)^2", "--dim", "5", "--spin", "nonspin-cover", "--orientable", "yes"], "PscGuaranteed", "Thm 5.8"),
        (
            ["(Z/3)^5", "--dim", "5", "--spin", "nonspin-cover", "--orientable", "yes", "--class", "toral"],
            "OpenToral",
            "Problem 5.9",
        ),
        (["Z/7 x Z/7", "--dim", "6", "--spin", "spin", "--orientable", "yes"], "YamabeNonnegGuaranteed", "Thm 4.5"),
    ],
)
def test_classify(capsys, argv, status, cite):
    doc = run_json(capsys, "classify", *argv)
    assert doc["results"]["status"] == status
    assert cite in doc["results"]["citations"]


def test_classify_inconsistent(capsys):
    code, _, err = run(capsys, "classify", "Z/3", "--dim", "6", "--spin", "spin", "--orientable", "no")
    assert code == 2 and "spin" in err


def test_toda_bound(capsys):
    doc = run_json(capsys, "toda-bound", "--n0", "3", "--n1", "3", "--constants", "1,1,1,1", "--delta", "1e-3")
    assert doc["results"]["bound"] < 1e-3 and doc["results"]["certified"]
    doc = run_json(capsys, "toda-bound", "--n0", "3", "--n1", "3", "--constants", "1,1,0,0", "--params", "0.5,0.5,1,0")
    assert doc["results"]["bound"] == 0
    assert run(capsys, "toda-bound", "--n0", "3", "--n1", "3", "--constants", "1,1,1,1", "--delta", "0")[0] == 2
    assert run(capsys, "toda-bound", "--n0", "3", "--n1", "3", "--constants", "1,1", "--delta", "1")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["homology", "Z x Z/4 x Z/2"],
        ["poincare", "2"],
        ["split", "Z/4 x Z/2", "--coeff", "Z2"],
        ["generators", "(Z/3)^2", "--degree", "5"],
        ["classify", "Z/2 x Z/9", "--dim", "6", "--spin", "nonspin-cover", "--orientable", "no"],
        ["toda-bound", "--n0", "2", "--n1", "4", "--constants", "1,2,1,1", "--delta", "0.01"],
    ],
)
def test_json_roundtrip_and_table(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    doc = OutputDocument.from_json(out)
    assert OutputDocument.from_json(doc.to_json()) == doc
    assert doc.to_json() == out.rstrip("\n")
    code, table, _ = run(capsys, *argv)
    assert code == 0 and table.strip()


def test_version(capsys):
    with pytest.raises(SystemExit) as e:
        main(["--version"])
    assert e.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "yamabe.cli", "poincare", "2", "--max-degree", "3", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0
    assert json.loads(r.stdout)["results"]["closed"] == [1, 2, 1, 3]
