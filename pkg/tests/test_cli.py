import json
import pathlib
import subprocess
import sys

import pytest

from wgideal.cli import CORPUS, RunConfig, capture, main, parse_config, seed_corpus

GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_golden_files(name):
    code, out = capture(CORPUS[name])
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_seed_corpus_writes_everything(tmp_path):
    written = seed_corpus(tmp_path)
    assert sorted(p.name for p in written) == sorted(CORPUS)
    for p in written:
        assert p.read_text() == (GOLDEN / p.name).read_text()


def test_a2_regular_graph_json():
    code, out = capture(["wgraph", "--group", "A2", "--ideal", "full", "--j", "", "--out", "json"])
    data = json.loads(out)
    assert code == 0 and len(data["vertices"]) == 6


def test_cells_example():
    code, out = capture(["cells", "--group", "A2", "--ideal", "dj", "--j", "2"])
    assert code == 0
    assert json.loads(out)["cellWords"] == [["e", "1"], ["2.1"]]


def test_parabolic_report():
    code, out = capture(["parabolic", "--group", "A3", "--j", "2", "--check", "all"])
    data = json.loads(out)
    assert code == 0
    assert {k: data[k] for k in ("deodhar", "descents", "cellUnion")} == dict.fromkeys(
        ("deodhar", "descents", "cellUnion"), "pass")
    assert data["maxCellIdeal"] == ["e", "1", "3"]


def test_verify_exit_codes():
    assert capture(["verify", "--group", "A3", "--checks", "all"])[0] == 0
    code, out = capture(["verify", "--group", "B3", "--ideal", "gens", "--gens", "3.2.1,2.3"])
    assert code == 1
    data = json.loads(out)
    assert data["checks"]["braid"] == "fail" and not data["passed"]


@pytest.mark.parametrize("argv", [
    ["group", "--group", "H3"],
    ["group", "--group", "Z9"],
    ["wgraph", "--group", "A2", "--ideal", "dj", "--j", "5"],
    ["wgraph", "--group", "A2", "--ideal", "gens", "--gens", "1.x"],
    ["wgraph", "--group", "A2", "--ideal", "gens", "--gens", "1", "--j", "1"],
    ["specht", "--partition", "1,2"],
    ["specht", "--n", "4", "--partition", "3,2"],
    ["verify", "--group", "A2", "--checks", "bogus"],
    ["wgraph", "--group", "A2", "--out", "xml"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2


@pytest.mark.parametrize("argv", [
    ["wgraph", "--group", "A3", "--ideal", "dj", "--j", "1,3", "--out", "dot"],
    ["cells", "--group", "B3", "--ideal", "gens", "--gens", "2.1,3", "--out", "text"],
    ["specht", "--n", "5", "--partition", "3,2", "--action"],
    ["parabolic", "--group", "A3", "--j", "2", "--checks", "deodhar,descents"],
    ["verify", "--group", "A3", "--checks", "braid,oracle"],
    ["group", "--group", "I2(7)", "--out", "text"],
])
def test_config_round_trip(argv):
    cfg = parse_config(argv)
    assert parse_config(cfg.to_argv()) == cfg
    assert isinstance(cfg, RunConfig)


def test_verify_is_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "wgideal.cli", "verify", "--group", "A3", "--checks", "all"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert a == b and json.loads(a)["passed"]
