import io
import json

import pytest

from syncro.cli import main
from syncro.report import TIMINGS

from conftest import DATA


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_analyze_fig3_with_oracle(capsys):
    code, r = run_json(capsys, "analyze", str(DATA / "fig3.json"), "--oracle")
    assert code == 0
    assert r["sc"] == {"value": 12, "kind": "exact", "maximum": 12, "maximal": True}
    assert r["verdict"]["label"] == "proved-via-oracle"
    assert all(not t["satisfied"] for t in r["criteria"])
    assert r["power_set"]["reachable_subsets"] == 15


def test_analyze_fig3_without_oracle_is_unknown(capsys):
    code, r = run_json(capsys, "analyze", str(DATA / "fig3.json"))
    assert code == 2
    assert r["verdict"]["max_sc"] == "unknown"


def test_analyze_kn7(capsys):
    code, r = run_json(capsys, "analyze", str(DATA / "kn7.json"))
    assert code == 0
    assert r["sc"]["value"] == 121
    assert r["verdict"]["label"] == "proved"
    assert r["complete_reachability"]["certificate"] == "don"
    assert r["complete_reachability"]["witness"]["d"] == 4
    t1 = next(t for t in r["criteria"] if t["criterion"] == "theorem1")
    assert (t1["witness"]["q"], t1["witness"]["d"]) == (0, 2)


def test_analyze_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO((DATA / "kn7.json").read_text()))
    code, r = run_json(capsys, "analyze", "-")
    assert code == 0 and r["sc"]["value"] == 121


@pytest.mark.parametrize("name", ["malformed_delta.json", "truncated.json", "missing.json"])
def test_analyze_bad_input(capsys, name):
    code, out, err = run(capsys, "analyze", str(DATA / name))
    assert code == 1 and out == ""
    assert "error" in err


def test_analyze_is_deterministic(capsys):
    _, a = run_json(capsys, "analyze", str(DATA / "fig3.json"), "--oracle")
    _, b = run_json(capsys, "analyze", str(DATA / "fig3.json"), "--oracle")
    a.pop(TIMINGS), b.pop(TIMINGS)
    assert a == b


def test_family_cerny(capsys):
    code, r = run_json(capsys, "family", "cerny", "--n", "6")
    assert code == 0
    assert r["sc"]["value"] == 58
    assert r["shortest_reset"]["length"] == 25


def test_family_k9(capsys):
    code, r = run_json(capsys, "family", "K", "--n", "9")
    assert code == 0 and r["sc"]["value"] == 503


def test_family_constraint_error(capsys):
    code, _, err = run(capsys, "family", "F", "--n", "6")
    assert code == 1 and "odd" in err


def test_family_writes_document(capsys, tmp_path):
    out = tmp_path / "c4.json"
    code, _ = run_json(capsys, "family", "cerny", "--n", "4", "--output", str(out))
    assert code == 0
    assert json.loads(out.read_text())["delta"] == [[0, 1], [1, 2], [2, 3], [0, 0]]


def test_family_text_format(capsys):
    code, out, _ = run(capsys, "family", "K", "--n", "7", "--format", "text")
    assert code == 0
    assert "sc(Syn): 121 of maximum 121 (exact)" in out
    assert "verdict: proved" in out


def test_cap_flag_and_env(capsys, monkeypatch):
    code, r = run_json(capsys, "family", "cerny", "--n", "6", "--cap", "5")
    assert code == 0
    assert r["sc"]["kind"] == "proved" and r["sc"]["value"] == 58
    assert r["complete_reachability"]["certificate"] == "don"
    monkeypatch.setenv("SYNCRO_CAP", "5")
    code, r = run_json(capsys, "family", "L", "--n", "6")
    assert code == 2
    assert r["sc"] == {"value": None, "kind": "bound-only", "upper_bound": 58}


def test_rank_words(capsys):
    code, r = run_json(capsys, "rank-words", str(DATA / "fig3.json"), "--rank", "3", "--max-len", "10")
    assert code == 0
    rows = {row["compact"]: row["image"] for row in r["rows"]}
    assert rows["a"] == [1, 2, 1, 3]
    assert rows["ba"] == [2, 1, 3, 1]
    assert r["count"] == 48


def test_rank_words_full_and_singleton(capsys):
    _, r = run_json(capsys, "rank-words", str(DATA / "fig3.json"), "--rank", "4")
    assert r["rows"][0]["word"] == "ε"
    assert r["count"] == 4
    _, r = run_json(capsys, "rank-words", str(DATA / "fig3.json"), "--rank", "1")
    assert min(row["length"] for row in r["rows"]) == 5


def test_rank_words_text(capsys):
    code, out, _ = run(capsys, "rank-words", str(DATA / "fig3.json"), "--rank", "3", "--format", "text")
    assert code == 0
    assert out.splitlines()[0].split() == ["a", "[1,2,1,3]"]


def test_rank_words_bad_rank(capsys):
    code, _, _ = run(capsys, "rank-words", str(DATA / "fig3.json"), "--rank", "9")
    assert code == 1


def test_export_dot(capsys, tmp_path):
    code, out, _ = run(capsys, "export-dot", str(DATA / "fig3.json"), "--target", "power")
    assert code == 0 and out.count("doublecircle") == 4
    code, out, _ = run(capsys, "export-dot", str(DATA / "fig3.json"))
    assert code == 0 and out.count("label=") == 8


def test_export_dot_cap(capsys):
    code, _, err = run(capsys, "export-dot", str(DATA / "kn7.json"), "--target", "power", "--cap", "5")
    assert code == 1 and "cap" in err


def test_crosscheck_empty(capsys):
    code, r = run_json(capsys, "crosscheck", "--samples", "0")
    assert code == 0 and r["ok"]
    assert all(s["checked"] == 0 for s in r["suites"].values())


def test_crosscheck_nmax_cap(capsys):
    code, _, err = run(capsys, "crosscheck", "--nmax", "20")
    assert code == 1 and "12" in err


def test_usage_error_exits_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze"])
    assert exc.value.code == 1


def test_family_footnote_text(capsys):
    code, out, _ = run(capsys, "family", "gc_footnote", "--format", "text")
    assert code == 0
    assert "circular: word ba" in out
    assert "verdict: refuted" in out
