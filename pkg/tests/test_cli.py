"""Command line contract: exit codes, pinned examples, cache determinism."""

import json

import pytest

from so5cg import cache
from so5cg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_trivial_embedding(capsys):
    code, out, _ = run(capsys, "eval", "--source", "0,0", "--target", "1,1",
                       "--source-so4", "0,0", "--entry", "+1,+1",
                       "--part", "1,1")
    assert code == 0
    assert out.splitlines() == ["1", "1.0"]


def test_eval_absent_channel_exits_3(capsys):
    code, _, err = run(capsys, "eval", "--source", "1,1",
                       "--target", "3/2,3/2", "--source-so4", "1,1",
                       "--entry", "+1/2,+1/2", "--part", "1/2,1/2")
    assert code == 3
    assert "absent" in err


def test_eval_malformed_label_exits_2(capsys):
    code, _, err = run(capsys, "eval", "--source", "0,-1", "--target", "1,1",
                       "--source-so4", "0,0", "--entry", "+1,+1",
                       "--part", "1,1")
    assert code == 2
    assert "malformed" in err


def test_eval_full_coefficient(capsys):
    code, out, _ = run(capsys, "eval", "--source", "1/2,0",
                       "--target", "1,1/2", "--source-so4", "1/2,0",
                       "--entry", "+1/2,+1/2", "--part", "1/2,1/2",
                       "--m", "1/2,0", "--part-m", "1/2,1/2")
    assert code == 0
    assert out.splitlines()[0] == "1/7*sqrt(7)"


def test_eval_copy2_channel(capsys):
    code, out, _ = run(capsys, "eval", "--source", "3/2,1/2",
                       "--channel", "0,0#2", "--source-so4", "1,1",
                       "--entry", "0,0", "--part", "0,0")
    assert code == 0
    assert "sqrt" in out


def test_table_trivial_source(capsys):
    code, out, _ = run(capsys, "table", "--source", "0,0",
                       "--channel", "+1,+1", "--no-cache")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 15  # header + 14 rows
    values = [line.split(",")[-1] for line in lines[1:]]
    assert all(v in ("0", "1", "-1") for v in values)


def test_decompose_1_1(capsys):
    code, out, _ = run(capsys, "decompose", "1,1", "--format", "json",
                       "--no-cache")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "so5cg/1"
    assert len(doc["entries"]) == 6
    assert doc["total_dim"] == 196


def test_branch_1_1(capsys):
    code, out, _ = run(capsys, "branch", "1,1", "--no-cache")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "tj1,tj2,so3_dim"
    assert len(lines) == 4


def test_verify_report_and_exit(capsys):
    code, out, _ = run(capsys, "verify", "symmetry", "--max-twice-j", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "verify_report"
    assert doc["pass"] is True
    assert all(c["pass"] for c in doc["checks"])


def test_cache_roundtrip_and_byte_identity(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SO5CG_CACHE", str(tmp_path))
    args = ("table", "--source", "1/2,0", "--channel", "+1/2,+1/2",
            "--format", "json")
    code1, cold, _ = run(capsys, *args)
    assert code1 == 0
    assert len(list(tmp_path.glob("*.json"))) == 1
    code2, warm, _ = run(capsys, *args)
    assert code2 == 0
    assert warm == cold
    code3, uncached, _ = run(capsys, *args, "--no-cache")
    assert code3 == 0
    assert uncached == cold


def test_cache_entry_schema(tmp_path, monkeypatch):
    monkeypatch.setenv("SO5CG_CACHE", str(tmp_path))
    key = cache.cache_key("table", "1,0", "+1,0")
    cache.store(key, {"rows": [1, 2, 3]})
    raw = json.loads(next(tmp_path.glob("*.json")).read_text())
    assert raw["schema"] == "so5cg/1"
    assert raw["kind"] == "cache_entry"
    assert raw["key"] == key
    assert "created_at" in raw
    assert cache.load(key) == {"rows": [1, 2, 3]}


def test_cache_disabled_without_env(monkeypatch):
    monkeypatch.delenv("SO5CG_CACHE", raising=False)
    key = cache.cache_key("table", "1,0", "+1,0")
    cache.store(key, {"x": 1})
    assert cache.load(key) is None


def test_cache_key_depends_on_engine_and_request():
    k1 = cache.cache_key("table", "1,0", "+1,0")
    k2 = cache.cache_key("table", "1,0", "+1,+1")
    k3 = cache.cache_key("decompose", "1,0")
    assert len({k1, k2, k3}) == 3
    assert k1 == cache.cache_key("table", "1,0", "+1,0")


def test_out_file_and_io_error(capsys, tmp_path):
    out_file = tmp_path / "t.csv"
    code, _, _ = run(capsys, "decompose", "1,1", "--no-cache",
                     "--out", str(out_file))
    assert code == 0
    assert out_file.read_text().startswith("target_tj1")
    code, _, err = run(capsys, "decompose", "1,1", "--no-cache",
                       "--out", str(tmp_path / "missing" / "t.csv"))
    assert code == 4
    assert "i/o" in err


def test_bad_channel_strings(capsys):
    code, _, _ = run(capsys, "table", "--source", "1,0", "--channel", "+2,0",
                     "--no-cache")
    assert code == 2
    code, _, _ = run(capsys, "table", "--source", "1,0",
                     "--channel", "+1,0#2", "--no-cache")
    assert code == 2
    code, _, _ = run(capsys, "eval", "--source", "1,0", "--source-so4", "1,0",
                     "--entry", "0,0", "--part", "0,0")
    assert code == 2  # neither --target nor --channel


def test_half_integer_syntax_round_trip(capsys):
    code, out, _ = run(capsys, "branch", "3/2,1/2", "--no-cache",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["label"] == "3/2,1/2"
    assert len(doc["blocks"]) == 6
