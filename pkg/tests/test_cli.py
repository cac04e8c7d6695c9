import json
import subprocess
import sys

import pytest

from powersemigroup.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def call_json(capsys, *argv):
    code, out, err = call(capsys, *argv, "--json")
    assert code == 0, err
    # the emitted report re-serializes byte for byte
    assert json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n" == out
    return json.loads(out)


def test_info_example(capsys):
    code, out, _ = call(capsys, "info", "--gens", "3,5", "--monoid")
    assert code == 0
    assert "gaps 1,2,4,7; F=7; θ=8; α=0" in out
    assert "m = 6" in out


def test_info_json_matches_text(capsys):
    data = call_json(capsys, "info", "--gens", "3,5", "--monoid")
    assert (data["gaps"], data["frobenius"], data["critical"], data["min_element"]) == ([1, 2, 4, 7], 7, 8, 0)
    assert data["generators"] == [3, 5] and data["is_interval"] is False


@pytest.mark.parametrize(
    "argv",
    [["--gaps", "1,2,4,7", "--contains-zero"], ["--semigroup", '{"generators":[3,5],"monoid":true}'],
     ["--semigroup", '{"gaps":[1,2,4,7],"contains_zero":true}']],
)
def test_semigroup_input_forms_agree(capsys, argv):
    assert call_json(capsys, "info", *argv)["semigroup"] == {"gaps": [1, 2, 4, 7], "contains_zero": True}


def test_open_interval_semigroup(capsys):
    data = call_json(capsys, "info", "--interval", "3:")
    assert data["semigroup"] == {"gaps": [1, 2], "contains_zero": False}
    assert data["critical"] == 3 and data["is_interval"]


def test_sigma_example(capsys):
    assert call(capsys, "sigma", "--set", "2,4,5")[:2] == (0, "2,3,5\n")
    assert call_json(capsys, "sigma", "--set", "2,4,5") == {"set": [2, 4, 5], "sigma": [2, 3, 5]}


def test_sumset_and_interval_operand(capsys):
    assert call(capsys, "sumset", "--set", "0,5,8,10", "--set", "0,3")[1] == "0,3,5,8,10,11,13\n"
    assert call(capsys, "sumset", "--set", "1,3", "--interval", "0:2")[1] == "1,2,3,4,5\n"


def test_gap_text_and_json_agree(capsys):
    _, out, _ = call(capsys, "gap", "--set", "0,3,5,6,8,13")
    data = call_json(capsys, "gap", "--set", "0,3,5,6,8,13")
    assert out == f"gap set {','.join(map(str, data['gap_set']))}; gap {data['gap']}\n"
    assert data["gap"] == 5


def test_phi(capsys):
    assert call(capsys, "phi", "--set", "3,5,9")[1] == "0,2,6\n"


def test_search_example_s35(capsys):
    data = call_json(capsys, "search", "--gens", "3,5", "--monoid", "--bound", "13", "--mode", "filtered")
    assert [sv["class"] for sv in data["survivors"]] == ["identity"]
    assert data["matches_expected"] is True and data["mode"] == "filtered"


def test_search_text_and_json_agree(capsys):
    argv = ["search", "--interval", "0:", "--bound", "5", "--reduced"]
    _, out, _ = call(capsys, *argv)
    data = call_json(capsys, *argv, "--summary")
    assert f"survivors: {', '.join(sv['class'] for sv in data['survivors'])}" in out
    assert f"constraints checked: {data['constraints_checked']}" in out
    assert f"{data['size']} members" in out
    assert data["survivors"] == [{"class": "identity"}, {"class": "sigma"}]


def test_search_reduced_non_n_is_labeled_finding(capsys):
    argv = ["search", "--gens", "3,5", "--monoid", "--bound", "9", "--reduced", "--mode", "raw"]
    _, out, _ = call(capsys, *argv)
    assert "bounded finding" in out and "classification" in out
    data = call_json(capsys, *argv)
    assert data["finding"] == "bounded-finding" and "note" in data


def test_search_is_byte_identical_across_runs_and_workers(capsys):
    argv = ["search", "--interval", "1:", "--bound", "6", "--json"]
    first = call(capsys, *argv)[1]
    assert call(capsys, *argv)[1] == first
    assert call(capsys, *argv, "--workers", "2")[1] == first


def test_element_search_and_obstruction(capsys):
    assert call(capsys, "element-search", "--interval", "2:", "--bound", "8")[1] == "survivors: identity\n"
    data = call_json(capsys, "obstruction", "--gens", "2,5", "--monoid")
    assert data["obstruction"]["m"] == 2 and data["obstruction"]["missing"] == 3
    assert call_json(capsys, "obstruction", "--interval", "3:")["obstruction"] is None


def test_verify_passes(capsys):
    code, out, _ = call(capsys, "verify", "--interval", "0:", "--bound", "5")
    assert code == 0 and out.rstrip().endswith("ALL PASS")
    data = call_json(capsys, "verify", "--interval", "0:", "--bound", "5")
    assert data["passed"] and all(data["checks"].values())


def test_verify_fails_on_window_artifact(capsys):
    code, out, _ = call(capsys, "verify", "--interval", "0:", "--bound", "1", "--mode", "raw")
    assert code == 1
    assert "FAIL  survivors match classification" in out


@pytest.mark.parametrize(
    "argv",
    [[], ["frobnicate"], ["sigma", "--set", "3,1"], ["sigma", "--set", "1,x"], ["sigma"],
     ["sigma", "--set", "1", "--set", "2"], ["search", "--gens", "3,5"], ["info"],
     ["info", "--gens", "3,5", "--gaps", "1"], ["info", "--semigroup", "{nope"],
     ["search", "--interval", "0:", "--bound", "3", "--mode", "fast"], ["info", "--interval", "3"]],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 2 and out == ""
    assert "error" in err


@pytest.mark.parametrize(
    "argv, fragment",
    [(["info", "--gens", "2,4"], "gcd"),
     (["info", "--gaps", "1,3,4"], "2 + 2"),
     (["search", "--interval", "0:", "--bound", "30"], "--max-carrier"),
     (["search", "--interval", "0:", "--bound", "8", "--max-carrier", "100"], "--max-carrier"),
     (["search", "--interval", "3:", "--bound", "2"], "bound"),
     (["element-search", "--gens", "3,5", "--bound", "20"], "interval"),
     (["info", "--semigroup", '{"foo": 1}'], "generators")],
)
def test_domain_errors_exit_1(capsys, argv, fragment):
    code, out, err = call(capsys, *argv)
    assert code == 1 and out == ""
    assert err.startswith("error: ") and fragment in err
    assert err.count("\n") == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "powersemigroup", "sigma", "--set", "0,5,8,10"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "0,2,5,10\n"
    proc = subprocess.run([sys.executable, "-m", "powersemigroup"], capture_output=True, text=True, check=False)
    assert proc.returncode == 2
