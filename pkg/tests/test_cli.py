import json
import logging

import pytest
import yaml
from click.testing import CliRunner

from burau_forge import APP_LOGGER_NAME
from burau_forge.core.algebra.serialization import dump_matrix
from burau_forge.core.braids import parse_braid
from burau_forge.core.burau import BurauKind, burau_matrix
from burau_forge.main import cli

QUIET = {"BURAU_FORGE_LOG_LEVEL": "ERROR"}


@pytest.fixture
def run(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli, list(args), env=QUIET)
    yield invoke
    # handlers hold the runner's closed stderr
    for name in (APP_LOGGER_NAME, "burau_forge"):
        logger = logging.getLogger(name)
        logger.handlers.clear()
        logger.setLevel(logging.NOTSET)


def test_burau_matrix(run):
    result = run("burau", "s1", "-n", "3")
    assert result.exit_code == 0, result.output
    assert "unitary: True" in result.output


def test_burau_json(run):
    result = run("--json", "burau", "s1 s2^-1", "-n", "3", "--kind", "u")
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["n"] == 3
    assert data["unitary"] is True


@pytest.mark.parametrize("args", [
    ("burau", "s1", "-n", "3", "--field", "zz"),
    ("burau", "s5", "-n", "3"),
    ("similitude", "verify", "no-such-relation"),
])
def test_bad_input_exits_two(run, args):
    result = run(*args)
    assert result.exit_code == 2
    assert "Error" in result.output


def test_check_matrix_file(run, tmp_path):
    path = tmp_path / "s1.json"
    dump_matrix(burau_matrix(parse_braid("s1", 4), BurauKind.REDUCED), path)
    result = run("--json", "check", str(path))
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["gamma_prime"]["passed"] is True
    assert data["criteria"]["p1"] is True


def test_similitude_verify(run):
    result = run("similitude", "verify", "h0-conjugation", "-r", "1/2")
    assert result.exit_code == 0, result.output
    assert result.output.strip() == "h0-conjugation: True"


def test_similitude_normal_form(run):
    result = run("--json", "similitude", "nf", "h0 g[1/2] g[3]^-1", "--max-len", "4")
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["found"] is True


def test_building_verify(run):
    result = run("building", "verify", "unipotent-words", "-j", "3")
    assert result.exit_code == 0, result.output
    assert "unipotent-words: True" in result.output


def test_building_explore(run, tmp_path):
    dot = tmp_path / "sub.dot"
    result = run("building", "explore", "--gens", "d1", "--radius", "1", "--emit-dot", str(dot))
    assert result.exit_code == 0, result.output
    assert result.output.startswith("3 vertices")
    assert dot.read_text().startswith("graph subcomplex {")


def test_fold_default_words(run):
    result = run("fold")
    assert result.exit_code == 0, result.output
    assert result.output.startswith("rank 9")


def test_fold_file(run, tmp_path):
    words = tmp_path / "gens.txt"
    words.write_text("l1 l1  # square\nl1 l1 l1\n")
    result = run("--json", "fold", "--alphabet", "2", "--gens-file", str(words), "--member", "l1", "--member", "l2")
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["rank"] == 1
    assert data["members"] == {"l1": True, "l2": False}


def test_verify_exports(run, tmp_path):
    target = tmp_path / "card.csv"
    result = run("verify", "unipotent-words", "--export", str(target))
    assert result.exit_code == 0, result.output
    assert "9/9 checks passed" in result.output
    assert target.read_text().startswith("id,description,passed,seconds,message")


def test_verify_nothing_selected(run):
    result = run("verify", "no-such-prefix")
    assert result.exit_code == 0
    assert "no checks selected" in result.output


def test_invalid_config(run, tmp_path):
    bad = tmp_path / "bad.yaml"
    bad.write_text(yaml.safe_dump({"threads": 0}))
    result = run("--config", str(bad), "fold")
    assert result.exit_code == 2
    assert "threads" in result.output


def test_verify_paper_alias(run):
    result = run("verify-paper", "stallings-rank")
    assert result.exit_code == 0, result.output
    assert "1/1 checks passed" in result.output
    assert "verify-paper" in run("--help").output
