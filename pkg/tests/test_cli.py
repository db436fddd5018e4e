import json
import subprocess
import sys

import pytest
from conftest import GOLDEN, SCRIPTS

from ringlab import cli


def _ringlab(*args):
    return subprocess.run([sys.executable, "-m", "ringlab.cli", *args],
                          capture_output=True, text=True)


@pytest.mark.parametrize("path", sorted(SCRIPTS.glob("*.ring")), ids=lambda p: p.name)
def test_run_matches_golden(path, capsys):
    code = cli.main(["run", str(path), "--no-timing"])
    out = capsys.readouterr().out
    assert out == (GOLDEN / f"{path.stem}.jsonl").read_text()
    assert code == (1 if path.stem == "errors" else 0)


def test_pretty_output(capsys):
    assert cli.main(["run", str(SCRIPTS / "sbezout_product.ring"), "--pretty"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1].startswith("bezout R") and "FALSE" in lines[-1]


def test_parse_error_exit_and_position(tmp_path, capsys):
    bad = tmp_path / "bad.ring"
    bad.write_text("ring A = zmod 4\ncheck bezout Q\n")
    assert cli.main(["run", str(bad)]) == 1
    rec = json.loads(capsys.readouterr().out)
    assert (rec["line"], rec["column"]) == (2, 14)


def test_usage_error_exit_code():
    assert _ringlab("frobnicate").returncode == 64
    assert _ringlab("run").returncode == 64


def test_ideals_subcommand(capsys):
    assert cli.main(["ideals", str(SCRIPTS / "residues.ring"), "--ring", "A"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 6
    assert cli.main(["ideals", str(SCRIPTS / "residues.ring"), "--ring", "Nope"]) == 1


def test_search_probe_findings_do_not_fail(capsys):
    assert cli.main(["search", "C11", "--budget", "60", "--seed", "3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["tried"] == 60 and report["note"]


def test_search_theorem_exit_zero(capsys):
    assert cli.main(["search", "P1", "--budget", "20"]) == 0
    assert json.loads(capsys.readouterr().out)["violations"] == []


def test_search_unknown_property():
    assert cli.main(["search", "P99", "--budget", "1"]) == 64


def test_violation_exit_code(monkeypatch, capsys):
    from ringlab.harness import registry

    def always_fails(rng, profile):
        return registry.Outcome(True, {"ring": "fake"}, ["p"], {"part": "p"})

    monkeypatch.setitem(registry.REGISTRY, "P1",
                        registry.Property("P1", "fake", always_fails, False, False, 1))
    assert cli.main(["search", "P1", "--budget", "2"]) == 2
    capsys.readouterr()
