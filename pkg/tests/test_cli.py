import io
import json
import shutil

import pytest

from regtensor.cli import main
from regtensor.cli.corpus import bundled_dir, case_names
from regtensor.cli.dsl import DslSyntaxError, DuplicateNameError, UnknownNameError, parse_session
from regtensor.cli.runner import run_session

REG7 = (bundled_dir() / "reg7.session").read_text()


def test_reg7_session_shape():
    s = parse_session(REG7)
    assert len(s.field_bindings) == 3 and len(s.queries) == 2


def test_empty_session(tmp_path, capsys):
    assert parse_session("").statements == []
    f = tmp_path / "empty.session"
    f.write_text("")
    assert main(["run", str(f)]) == 0


def test_unknown_name_diagnostic():
    text = "base k = QQ\nfield K = k adjoin sqrt 2\nquery regular tensor(K, M)\n"
    with pytest.raises(UnknownNameError) as info:
        parse_session(text)
    assert (info.value.line, info.value.column) == (3, 25)


def test_syntax_error_position():
    with pytest.raises(DslSyntaxError) as info:
        parse_session("base k = QQ\nfield K = k adjoin qsrt 2\n")
    assert (info.value.line, info.value.column) == (2, 20)
    with pytest.raises(DuplicateNameError):
        parse_session("base k = QQ\nbase k = QQ\n")
    with pytest.raises(DslSyntaxError):
        parse_session("base k = Fp(4)\n")


@pytest.mark.parametrize("name", case_names())
def test_round_trip(name):
    s = parse_session((bundled_dir() / f"{name}.session").read_text())
    again = parse_session(s.to_text())
    assert again == s and again.to_text() == s.to_text()


def test_run_records():
    rep = run_session(parse_session(REG7))
    assert rep.exit_code == 0
    rec = rep.records[1]
    assert rec["verdict"] == "not_regular"
    deg = [w for w in rec["witnesses"] if w["kind"] == "degree"][0]
    assert (deg["S'"], deg["deg_k"], deg["deg_L"]) == (["x^2", "y^2"], 4, 2)
    assert rec["schema_version"] == 1


def test_reg1_2_dim_and_reg2_1_1_verdict():
    r = run_session(parse_session((bundled_dir() / "reg1_2.session").read_text()))
    assert r.records[1]["dim"] == 2
    r = run_session(parse_session((bundled_dir() / "reg2_1_1.session").read_text()))
    assert r.records[0]["verdict"] == "regular"


def test_semantic_errors_exit_two(tmp_path, capsys):
    f = tmp_path / "bad.session"
    f.write_text("base k = QQ\nfield K = k adjoin root a of X^2 - 4\n")
    assert main(["run", str(f)]) == 2
    err = capsys.readouterr().err
    assert "bad.session:2:13: semantic error" in err and "reducible" in err


def test_query_error_keeps_going(tmp_path, capsys):
    f = tmp_path / "q.session"
    f.write_text("base k = QQ\nfield T = k adjoin transcendental t\n"
                 "query decompose tensor(T, T)\nquery dim tensor(T, T)\n")
    assert main(["run", str(f), "--format", "json"]) == 2
    out = json.loads(capsys.readouterr().out)
    assert "error" in out["records"][0] and out["records"][1]["dim"] == 1


def test_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(REG7))
    assert main(["run", "-", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["records"][0]["details"]["equals_base"] is True


def test_corpus_filter(capsys):
    assert main(["corpus", "--filter", "reg7"]) == 0
    assert "1/1 passed" in capsys.readouterr().out


def test_tampered_golden(tmp_path, capsys):
    for p in bundled_dir().glob("*.json"):
        shutil.copy(p, tmp_path / p.name)
    g = tmp_path / "reg7.json"
    g.write_text(g.read_text().replace('"deg_L": 2', '"deg_L": 3'))
    assert main(["corpus", "--filter", "reg7", "--golden-dir", str(tmp_path)]) == 1
    assert "witnesses differs" in capsys.readouterr().out


def test_missing_golden(tmp_path, capsys):
    assert main(["corpus", "--filter", "reg2_3", "--golden-dir", str(tmp_path)]) == 1


def test_write_golden(tmp_path, capsys):
    assert main(["corpus", "--filter", "self_tensor", "--write-golden", str(tmp_path)]) == 0
    assert (tmp_path / "self_tensor.json").read_text() == (bundled_dir() / "self_tensor.json").read_text()


def test_fmt(capsys):
    assert main(["fmt", str(bundled_dir() / "reg7.session")]) == 0
    assert capsys.readouterr().out.startswith("base k = Fp(2) subfield of ambient(x, y, z)")
