import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from webcalc import cli
from webcalc.core import make_web
from webcalc.io import ParseError, emit_bipartite, emit_web, parse_bipartite, parse_web, random_bipartite, random_web, to_dot
from webcalc.menger import MengerStructure

FIX = Path(__file__).parent / "fixtures"


def fx(name):
    return str(FIX / name)


# ------------------------------------------------------------------ io


def test_round_trip(diamond):
    text = emit_web(diamond)
    assert parse_web(text) == diamond
    assert emit_web(parse_web(text)) == text


def test_bipartite_round_trip():
    d = random_bipartite(3, 4, 0.5, 1)
    assert parse_bipartite(emit_bipartite(d)) == d


def test_syntax_error_has_line_context():
    text = '{\n  "vertices": ["a"],\n  "edges": [,\n}'
    with pytest.raises(ParseError, match=r"line 3.*edges"):
        parse_web(text)


def test_truncated_document():
    with pytest.raises(ParseError, match="line"):
        parse_web('{"vertices": ["a"]')


def test_unknown_field_reports_its_line():
    text = '{\n"vertices": [],\n"edges": [],\n"A": [],\n"B": [],\n"colour": 1\n}'
    with pytest.raises(ParseError, match=r"line 6: unknown field 'colour'"):
        parse_web(text)


def test_unknown_vertex():
    with pytest.raises(ParseError, match="q"):
        parse_web('{"vertices": ["a"], "edges": [["a", "q"]], "A": ["a"], "B": []}')


def test_bad_field_type():
    with pytest.raises(ParseError, match="edges"):
        parse_web('{"vertices": ["a"], "edges": [["a"]], "A": [], "B": []}')


def test_strict_parse_rejects_repair():
    text = '{"vertices": ["a", "b"], "edges": [["b", "a"]], "A": ["a"], "B": ["b"]}'
    assert parse_web(text).edges == frozenset()
    with pytest.raises(ParseError):
        parse_web(text, strict=True)


def test_random_web_deterministic():
    assert random_web(9, 0.3, 42) == random_web(9, 0.3, 42)
    assert emit_web(random_web(8, 0.3, 7), seed=7) == (FIX / "random_n8_p0.3_s7.json").read_text()


def test_random_web_rejects_bad_probability():
    with pytest.raises(ValueError):
        random_web(3, 1.5, 0)


def test_dot_marks_paths(chain):
    text = to_dot(chain, paths=[("a", "x", "b")], marked=["x"])
    assert text.startswith("digraph") and "x" in text


# ------------------------------------------------------------------ cli


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args, **kw):
    return runner.invoke(cli.main, list(args), catch_exceptions=False, **kw)


def test_menger_command(runner):
    r = invoke(runner, "menger", fx("chain.json"))
    assert r.exit_code == 0
    doc = json.loads(r.output)
    assert doc["nu"] == 1 and doc["separator"] == ["a"] and doc["verified"]


def test_wave_command(runner):
    doc = json.loads(invoke(runner, "wave", fx("chain.json")).output)
    assert doc["paths"] == [["a", "x", "b"]] and doc["rf"] == ["a", "b", "x"]
    blk = json.loads(invoke(runner, "wave", "--blocking", fx("diamond.json")).output)
    assert blk["kind"] == "blocking"


def test_link_command(runner):
    ok = json.loads(invoke(runner, "link", fx("chain.json")).output)
    assert ok["linkable"] and ok["linkage"] == [["a", "x", "b"]]
    bad = json.loads(invoke(runner, "link", fx("hindered.json")).output)
    assert not bad["linkable"] and len(bad["unlinked"]) == 1


def test_konig_command(runner):
    doc = json.loads(invoke(runner, "konig", fx("single_edge_bipartite.json")).output)
    assert doc["size"] == 1 and len(doc["cover"]) == 1
    doc = json.loads(invoke(runner, "konig", fx("deficient_bipartite.json")).output)
    assert doc["hall"]["saturates_M"] is False
    assert set(doc["hall"]["deficient"]) == {"m1", "m2"}


def test_check_command_passes_on_fixtures(runner):
    r = invoke(runner, "check", fx("chain.json"), fx("diamond.json"), fx("hindered.json"))
    assert r.exit_code == 0
    assert all(w["ok"] for w in json.loads(r.output)["webs"])


def test_check_parallel_matches_serial(runner):
    files = [fx("chain.json"), fx("diamond.json")]
    serial = invoke(runner, "check", *files).output
    assert invoke(runner, "check", "-j", "2", *files).output == serial


def test_gen_is_byte_identical(runner):
    a = invoke(runner, "gen", "-n", "8", "-p", "0.3", "--seed", "7").output
    assert a == invoke(runner, "gen", "-n", "8", "-p", "0.3", "--seed", "7").output
    assert a == (FIX / "random_n8_p0.3_s7.json").read_text()


def test_parse_error_exits_2(runner, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": [}')
    r = runner.invoke(cli.main, ["menger", str(bad)])
    assert r.exit_code == 2 and "line 1" in r.output


def test_missing_file_exits_2(runner, tmp_path):
    assert runner.invoke(cli.main, ["menger", str(tmp_path / "none.json")]).exit_code == 2


def test_oracle_bound_exceeded_exits_2(runner, monkeypatch):
    monkeypatch.setenv("WEBCALC_ORACLE_BOUND", "2")
    r = runner.invoke(cli.main, ["check", fx("chain.json")])
    assert r.exit_code == 2 and "oracle bound" in r.output


def test_corrupted_certificate_exits_1(runner, monkeypatch):
    def broken(w):
        p = ("a", "x", "b")
        from webcalc.core import Warp

        return MengerStructure(Warp.of(p), frozenset({"b"}), {p: "a"})

    monkeypatch.setattr(cli, "menger_structure", broken)
    r = runner.invoke(cli.main, ["menger", fx("chain.json")])
    assert r.exit_code == 1 and "certificate check failed" in r.output


def test_failing_lemma_exits_1(runner, monkeypatch):
    from webcalc.lemmas import CheckResult, LemmaReport

    def failing(path, seed, max_cases):
        return LemmaReport(make_web("a", [], "a", "a"), [CheckResult("stub", False, 1, "forced")])

    monkeypatch.setattr(cli, "_check_one", failing)
    assert runner.invoke(cli.main, ["check", fx("chain.json")]).exit_code == 1


def test_dot_to_file(runner, tmp_path):
    out = tmp_path / "g.dot"
    assert invoke(runner, "menger", fx("diamond.json"), "--dot", str(out)).exit_code == 0
    assert out.read_text().startswith("digraph")


def test_outputs_are_byte_identical(runner):
    for cmd in ("menger", "wave", "link"):
        assert invoke(runner, cmd, fx("diamond.json")).output == invoke(runner, cmd, fx("diamond.json")).output
