import json

import pytest

from cactusgrowth.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_act_demo_fig_cat(capsys):
    code, out, _ = run(capsys, "act", "--word", "s(1,6)", "--demo", "fig-cat-C")
    assert code == 0
    payload = json.loads(out)
    assert payload["corners"] == [[0, 0], [1, 0], [2, 0], [2, 1], [2, 2], [3, 2], [3, 3]]  # 125/346


def test_act_empty_word_echoes(capsys):
    code, out, _ = run(capsys, "act", "--word", "", "--demo", "fig-cat-A")
    assert code == 0
    payload = json.loads(out)
    assert payload["corners"][-1] == [3, 3]
    assert payload["corners"][1] == [1, 0]


def test_act_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "act", "--word", "s(1,", "--demo", "fig-cat-A")
    assert code == 2
    assert "parse error" in err


def test_act_domain_error_exit_3(capsys, tmp_path):
    bad = tmp_path / "word.json"
    bad.write_text(json.dumps({"context": {"family": "GL", "rank": 2}, "steps": None,
                               "corners": [[0, 0], [1, 0], [1, 1], [0, 1]]}))
    code, _, err = run(capsys, "act", "--word", "s(1,2)", "--input", str(bad))
    assert code == 3
    assert "domain error" in err


def test_act_requires_one_source(capsys):
    code, _, err = run(capsys, "act", "--word", "s(1,2)")
    assert code == 2


def test_evacuate_and_promote_json(capsys, tmp_path):
    word = {"context": {"family": "Sp", "rank": 2}, "steps": ["vector"] * 6,
            "corners": [[0, 0], [1, 0], [1, 1], [1, 0], [1, 1], [1, 0], [0, 0]]}
    f = tmp_path / "w.json"
    f.write_text(json.dumps(word))
    code, out, _ = run(capsys, "evacuate", "--input", str(f))
    assert code == 0
    assert json.loads(out)["corners"] == word["corners"]  # this word is evacuation-fixed
    code, out, _ = run(capsys, "promote", "--input", str(f))
    assert code == 0
    assert json.loads(out)["corners"] == [[0, 0], [1, 0], [1, 1], [2, 1], [2, 0], [1, 0], [0, 0]]


def test_tau_subcommand(capsys, tmp_path):
    word = {"context": {"family": "GL", "rank": 2},
            "corners": [[0, 0], [1, 0], [2, 0], [2, 1]]}
    f = tmp_path / "w.json"
    f.write_text(json.dumps(word))
    code, out, _ = run(capsys, "tau", "--i", "2", "--input", str(f))
    assert code == 0
    assert json.loads(out)["corners"] == [[0, 0], [1, 0], [1, 1], [2, 1]]
    code, _, err = run(capsys, "tau", "--i", "3", "--input", str(f))
    assert code == 2  # index out of range is a usage-level ValueError


def test_cylinder_and_validate(capsys, tmp_path):
    word = {"context": {"family": "GL", "rank": 2},
            "corners": [[0, 0], [1, 0], [2, 0], [2, 1], [2, 2]]}
    f = tmp_path / "w.json"
    f.write_text(json.dumps(word))
    code, out, _ = run(capsys, "cylinder", "--depth", "3", "--input", str(f))
    assert code == 0
    win = json.loads(out)
    assert len(win["rows"]) == 3
    g = tmp_path / "win.json"
    g.write_text(json.dumps(win))
    code, out, _ = run(capsys, "validate", "--input", str(g))
    assert code == 0 and "valid" in out
    win["rows"][1][2] = [2, 0]
    g.write_text(json.dumps(win))
    code, out, _ = run(capsys, "validate", "--input", str(g))
    assert code == 1 and "invalid" in out


def test_ascii_format(capsys):
    code, out, _ = run(capsys, "--format", "ascii", "act", "--word", "", "--demo", "ex-sp")
    assert code == 0
    assert out.strip() == "[]  [1]  [11]  [1]  [11]  [1]  []"


def test_crystal_dump_and_decompose(capsys):
    code, out, _ = run(capsys, "crystal", "dump", "--family", "Sp", "--rank", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["elements"] == ["1", "2", "-2", "-1"]
    code, out, _ = run(capsys, "crystal", "decompose", "--family", "SL2", "--rank", "1",
                       "--kind", "sl2", "--r", "6")
    assert code == 0
    payload = json.loads(out)
    table = {tuple(c["weight"]): (c["count"], c["size"]) for c in payload["components"]}
    assert table[(0,)] == (5, 1)  # Catalan(3) trivial components


def test_oracle_subcommands(capsys):
    code, out, _ = run(capsys, "oracle", "evacuate", "--tableau", "134/256")
    assert code == 0 and json.loads(out) == [[1, 2, 5], [3, 4, 6]]
    code, out, _ = run(capsys, "oracle", "promote", "--tableau", "12/34")
    assert code == 0 and json.loads(out) == [[1, 3], [2, 4]]
    code, out, _ = run(capsys, "oracle", "bk", "--tableau", "1112/23/4", "--i", "2")
    assert code == 0 and json.loads(out) == [[1, 1, 1, 3], [2, 3], [4]]
    code, out, _ = run(capsys, "oracle", "dk", "--tableau", "123/456", "--i", "2")
    assert code == 0 and json.loads(out) == [[1, 2, 4], [3, 5, 6]]


def test_hecke_check_and_matrix(capsys):
    code, out, _ = run(capsys, "hecke", "check", "--shape", "2,1")
    assert code == 0 and "ok" in out
    code, out, _ = run(capsys, "hecke", "matrix", "--shape", "2,1", "--op", "tau", "--i", "2")
    assert code == 0
    assert "basis: 12/3 13/2" in out


def test_verify_tiny(capsys):
    code, out, _ = run(capsys, "verify", "cactus", "--tiny")
    assert code == 0
    summary = json.loads(out.strip().splitlines()[-1])
    assert summary["suites"] == 1 and summary["failures"] == 0


def test_verify_all_tiny_smoke(capsys):
    import time

    t0 = time.time()
    code, out, _ = run(capsys, "verify", "all", "--tiny")
    assert code == 0
    summary = json.loads(out.strip().splitlines()[-1])
    assert summary["failures"] == 0
    assert time.time() - t0 < 30.0


def test_demo_all(capsys):
    code, out, _ = run(capsys, "demo", "all")
    assert code == 0
    assert "FAIL" not in out


def test_demo_exit_1_on_mismatch(capsys, monkeypatch):
    import cactusgrowth.cli as cli

    real = cli._load_fixture

    def corrupted(name):
        fix = real(name)
        if name == "gl_window.json":
            fix = json.loads(json.dumps(fix))
            fix["rows"][1][2] = [2, 0]  # not the promotion of row 0
        return fix

    monkeypatch.setattr(cli, "_load_fixture", corrupted)
    code = main(["demo", "gl-window"])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL" in out


def test_determinism(capsys):
    code1, out1, _ = run(capsys, "act", "--word", "s(2,5)", "--demo", "fig-cat-C")
    code2, out2, _ = run(capsys, "act", "--word", "s(2,5)", "--demo", "fig-cat-C")
    assert (code1, out1) == (code2, out2)
