from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from gkgraph.cli import main, read_graph_json
from gkgraph.cocliques import build_graph
from gkgraph.groupspec import parse_spec

KEYS = {"group", "t", "theta", "theta_prime", "vertices", "edges", "classes", "unresolved"}


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_graph_dot_suzuki():
    res = run("graph", "2B2:8", "--format", "dot")
    assert res.exit_code == 0
    assert res.output.startswith('graph "2B2:8" {')
    assert res.output.count(";") == 4 and "--" not in res.output


def test_graph_json_m11():
    res = run("graph", "Spor:M11", "--format", "json")
    doc = json.loads(res.output)
    assert set(doc) == KEYS
    assert doc["edges"] == [["2", "3"]]
    assert doc["theta_prime"] == [["2"], ["3"]]


def test_graph_explicit_primes():
    res = run("graph", "B:2:3", "--explicit-primes", "--format", "json")
    doc = json.loads(res.output)
    assert doc["vertices"] == [2, 3, 5]
    assert doc["edges"] == [[2, 3]]


@pytest.mark.parametrize("text", ["E6:2", "A:5:3", "2F4:8", "Spor:J4", "Alt:13", "D:6:5"])
def test_json_round_trip(text):
    res = run("graph", text, "--format", "json")
    back = read_graph_json(res.output)
    ref = build_graph(parse_spec(text))
    assert back.vertices == ref.vertices
    assert back.edges == ref.edges
    assert back.unresolved == ref.unresolved


def test_output_is_deterministic():
    for args in (("graph", "E8:2", "--format", "json"), ("coclique", "2E6:4", "--all")):
        assert run(*args).output == run(*args).output


def test_coclique_commands():
    assert "t = 12" in run("coclique", "E8:5").output
    assert "{3, 5, 13}" in run("coclique", "Tits").output
    out = run("coclique", "Alt:11", "--all").output
    assert "unique maximum coclique {5, 7, 11}" in out


def test_coclique_json_lists_cocliques():
    doc = json.loads(run("coclique", "Alt:10", "--format", "json").output)
    assert doc["cocliques"] == [["2", "7"], ["5", "7"]]


def test_exit_codes():
    assert run("graph", "B:2:2").exit_code == 2
    assert run("graph", "Foo:3").exit_code == 2
    assert run("oracle", "A:3:5").exit_code == 2
    assert run("verify", "--table", "1").exit_code == 1


def test_budget_exit_code(monkeypatch):
    monkeypatch.setenv("GK_FACTOR_BUDGET", "1")
    res = run("graph", "E8:59", "--explicit-primes")
    assert res.exit_code == 3


@pytest.mark.parametrize("text", ["B:4:3", "D:5:2", "2F4:8"])
def test_oracle_agrees(text):
    res = run("oracle", text)
    assert res.exit_code == 0 and res.output.strip().endswith("agree")


def test_verify_table4_small():
    res = run("verify", "--table", "4", "--q-max", "9", "--quiet")
    assert res.exit_code == 0
    assert "pass" in res.output.splitlines()[-1]


def test_verify_jobs_gives_same_report():
    one = run("verify", "--table", "2", "--n-max", "4", "--q-max", "8")
    two = run("verify", "--table", "2", "--n-max", "4", "--q-max", "8", "--jobs", "2")
    assert one.exit_code == two.exit_code == 0
    assert one.output == two.output
