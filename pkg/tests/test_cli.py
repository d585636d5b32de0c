import json
import subprocess
import sys

import pytest

from youngwalls.cli import RunConfig, main

from conftest import D4, L0, L2


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_mult(capsys):
    code, out, _ = run(capsys, "gen", "--type", "d4_3", "--weight", "L0", "--depth", "6",
                       "--format", "mult")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()[1:]]
    assert sum(int(r[-1]) for r in rows if r[0] == "6") == 2


def test_gen_json_single_node(capsys):
    code, out, _ = run(capsys, "gen", "--type", "g2_1", "--weight", "L2", "--depth", "0",
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["elements"] == [{"id": 0, "label": "()", "weight": [0, 0, 1, 0]}]


def test_gen_rejects_weight(capsys):
    code, _, err = run(capsys, "gen", "--type", "d4_3", "--weight", "L2")
    assert code == 1 and "not a level-1" in err


def test_gen_is_deterministic(tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"g{k}.dot"
        assert main(["gen", "--type", "g2_1", "--weight", "L0", "--depth", "7",
                     "--format", "dot", "-o", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--type", "e8"])
    assert exc.value.code == 2


def test_adjacent(capsys):
    code, out, _ = run(capsys, "adjacent", "--type", "d4_3", "--count")
    assert code == 0 and out.strip() == "64"
    code, out, _ = run(capsys, "adjacent", "--type", "g2_1")
    assert out.splitlines()[0] == "225" and len(out.splitlines()) == 226


def test_energy(capsys):
    code, out, _ = run(capsys, "energy", "--type", "d4_3")
    assert code == 0 and out.splitlines()[1].split() == ["phi", "0", "1", "1", "1", "1", "1", "1", "1"]
    code, out, _ = run(capsys, "energy", "--type", "g2_1", "--emit", "diff")
    assert code == 0 and out == ""


def test_verify_energy_reports_counts(capsys):
    code, out, _ = run(capsys, "verify", "energy")
    assert "64/64" in out and "225/225" in out
    # The verbatim G2 closed-form sets disagree with the table in two entries.
    assert code == 1 and "223/225" in out


@pytest.mark.parametrize("suite", ["walls", "paths", "perfect", "columns", "adjacent"])
def test_verify_suites_pass(capsys, suite):
    code, out, _ = run(capsys, "verify", suite, "--depth", "8")
    assert code == 0, out
    assert "FAIL" not in out


def test_run_config_validation():
    assert RunConfig(D4, L0).depth == 6
    with pytest.raises(ValueError):
        RunConfig(D4, L2)
    with pytest.raises(ValueError):
        RunConfig(D4, L0, depth=-1)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "youngwalls", "adjacent", "--type", "d4_3",
                          "--count"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "64"
