"""CLI surface: subcommands, exit codes, JSON reports, stdin, BOM."""

from __future__ import annotations

import io
import json
import sys
from pathlib import Path

import pytest

from unipy import __version__
from unipy.cli import main

from support import CONFLATED_YAML, WALKTHROUGH_EN, WALKTHROUGH_UR


@pytest.fixture
def ur_program(tmp_path: Path) -> Path:
    p = tmp_path / "walkthrough.py"
    p.write_text(WALKTHROUGH_UR, encoding="utf-8")
    return p


@pytest.fixture
def en_program(tmp_path: Path) -> Path:
    p = tmp_path / "walkthrough_en.py"
    p.write_text(WALKTHROUGH_EN, encoding="utf-8")
    return p


@pytest.fixture
def conflated_file(tmp_path: Path) -> Path:
    p = tmp_path / "conflated.yaml"
    p.write_text(CONFLATED_YAML, encoding="utf-8")
    return p


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestUsage:
    def test_no_arguments_is_a_usage_error(self, capsys):
        code, _, err = run_cli(capsys)
        assert code == 2

    def test_unknown_subcommand_is_a_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "frobnicate")
        assert code == 2

    def test_version_flag(self, capsys):
        code, out, _ = run_cli(capsys, "--version")
        assert code == 0
        assert __version__ in out

    def test_help_exits_zero(self, capsys):
        code, out, _ = run_cli(capsys, "--help")
        assert code == 0
        assert "unipy" in out


class TestRun:
    def test_walkthrough(self, capsys, ur_program):
        code, out, _ = run_cli(
            capsys, "run", "-l", "ur", "--interpreter", sys.executable,
            str(ur_program),
        )
        assert code == 0
        assert out == "yeh do hai\n"

    def test_language_inferred_from_double_extension(self, capsys, tmp_path):
        p = tmp_path / "hello.ur.py"
        p.write_text("لکھو(۲)\n", encoding="utf-8")
        code, out, _ = run_cli(
            capsys, "run", "--interpreter", sys.executable, str(p)
        )
        assert code == 0
        assert out == "2\n"

    def test_child_exit_code_is_forwarded(self, capsys, tmp_path):
        p = tmp_path / "exit3.py"
        p.write_text("import sys\nsys.exit(3)\n", encoding="utf-8")
        code, _, _ = run_cli(
            capsys, "run", "-l", "ur", "--interpreter", sys.executable, str(p)
        )
        assert code == 3

    def test_program_argv_after_file(self, capsys, tmp_path):
        p = tmp_path / "args.py"
        p.write_text("import sys\nلکھو(sys.argv[1])\n", encoding="utf-8")
        code, out, _ = run_cli(
            capsys, "run", "-l", "ur", "--interpreter", sys.executable,
            str(p), "pehla",
        )
        assert code == 0
        assert out == "pehla\n"

    def test_json_report(self, capsys, ur_program):
        code, out, _ = run_cli(
            capsys, "run", "--json", "-l", "ur",
            "--interpreter", sys.executable, str(ur_program),
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["stdout"] == "yeh do hai\n"
        assert payload["exit_code"] == 0
        assert "if x == 2:" in payload["translated_source"]

    def test_missing_language_is_a_usage_error(self, capsys, tmp_path):
        p = tmp_path / "plain.py"
        p.write_text("print(1)\n", encoding="utf-8")
        code, _, err = run_cli(
            capsys, "run", "--interpreter", sys.executable, str(p)
        )
        assert code == 2
        assert "--language" in err

    def test_unknown_pack_is_a_pack_error(self, capsys, ur_program):
        code, _, err = run_cli(capsys, "run", "-l", "xx", str(ur_program))
        assert code == 1
        assert "xx" in err


class TestTranslate:
    def test_forward_to_stdout(self, capsys, ur_program):
        code, out, _ = run_cli(capsys, "translate", "-l", "ur",
                               str(ur_program))
        assert code == 0
        assert out == WALKTHROUGH_EN

    def test_reverse_flag(self, capsys, en_program):
        code, out, _ = run_cli(
            capsys, "translate", "--reverse", "-l", "ur", str(en_program)
        )
        assert code == 0
        assert out == WALKTHROUGH_UR

    def test_output_file(self, capsys, ur_program, tmp_path):
        target = tmp_path / "out.py"
        code, out, _ = run_cli(
            capsys, "translate", "-l", "ur", "-o", str(target),
            str(ur_program),
        )
        assert code == 0
        assert out == ""
        assert target.read_text(encoding="utf-8") == WALKTHROUGH_EN

    def test_stdin_dash(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO("لکھو(۵)\n"))
        code, out, _ = run_cli(capsys, "translate", "-l", "ur", "-")
        assert code == 0
        assert out == "print(5)\n"

    def test_stdin_needs_explicit_language(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO("x = 1\n"))
        code, _, _ = run_cli(capsys, "translate", "-")
        assert code == 2

    def test_bom_is_preserved_in_output_file(self, capsys, tmp_path):
        src = tmp_path / "bom.py"
        src.write_text("﻿لکھو(1)\n", encoding="utf-8")
        target = tmp_path / "out.py"
        code, _, _ = run_cli(
            capsys, "translate", "-l", "ur", "-o", str(target), str(src)
        )
        assert code == 0
        raw = target.read_text(encoding="utf-8")
        assert raw == "﻿print(1)\n"

    def test_warnings_go_to_stderr(self, capsys, tmp_path):
        src = tmp_path / "warny.py"
        src.write_text('"اگر"\n', encoding="utf-8")
        code, out, err = run_cli(capsys, "translate", "-l", "ur", str(src))
        assert code == 0
        assert out == '"اگر"\n'
        assert err.startswith("unipy: ")

    def test_json_payload(self, capsys, ur_program):
        code, out, _ = run_cli(
            capsys, "translate", "--json", "-l", "ur", str(ur_program)
        )
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["output"] == WALKTHROUGH_EN
        assert any(s["category"] == "keyword" for s in payload["substitutions"])

    def test_pack_file_path_as_language(self, capsys, conflated_file,
                                        tmp_path):
        src = tmp_path / "p.py"
        src.write_text("لکھو(1)\n", encoding="utf-8")
        code, out, _ = run_cli(
            capsys, "translate", "-l", str(conflated_file), str(src)
        )
        assert code == 0
        assert out == "print(1)\n"


class TestPivot:
    def test_ur_to_hi(self, capsys, ur_program):
        code, out, _ = run_cli(
            capsys, "pivot", "-l", "ur", "-t", "hi", str(ur_program)
        )
        assert code == 0
        assert "अगर" in out
        assert "लिखो" in out
        assert "२" in out

    def test_missing_target_is_usage_error(self, capsys, ur_program):
        code, _, _ = run_cli(capsys, "pivot", "-l", "ur", str(ur_program))
        assert code == 2


class TestValidate:
    def test_bundled_pack_is_ok(self, capsys):
        code, out, _ = run_cli(capsys, "validate", "ur")
        assert code == 0
        assert "ok" in out

    def test_conflated_pack_reports_but_passes(self, capsys, conflated_file):
        code, out, _ = run_cli(capsys, "validate", str(conflated_file))
        assert code == 0
        assert "ہے" in out

    def test_broken_pack_fails(self, capsys, tmp_path):
        bad = tmp_path / "bad.yaml"
        bad.write_text("name: NoCode\nkeywords:\n  a: if\n", encoding="utf-8")
        code, _, err = run_cli(capsys, "validate", str(bad))
        assert code == 1

    def test_json_report(self, capsys, conflated_file):
        code, out, _ = run_cli(capsys, "validate", "--json",
                               str(conflated_file))
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["ok"] is True
        assert payload["conflations"]


class TestRoundtripCommand:
    def test_pass(self, capsys, en_program):
        code, out, _ = run_cli(
            capsys, "roundtrip", "-l", "ur",
            "--interpreter", sys.executable, str(en_program),
        )
        assert code == 0
        assert out.startswith("PASS")

    def test_expected_failure_exits_zero(self, capsys, conflated_file,
                                         tmp_path):
        p = tmp_path / "eq.py"
        p.write_text("print(1 == 1)\n", encoding="utf-8")
        code, out, _ = run_cli(
            capsys, "roundtrip", "-l", str(conflated_file),
            "--interpreter", sys.executable, str(p),
        )
        assert code == 0
        assert "FAIL" in out
        assert "expected" in out

    def test_unexplained_failure_exits_one(self, capsys, tmp_path):
        p = tmp_path / "chancy.py"
        p.write_text("import random\nprint(random.random())\n",
                     encoding="utf-8")
        code, out, _ = run_cli(
            capsys, "roundtrip", "-l", "ur",
            "--interpreter", sys.executable, str(p),
        )
        assert code == 1
        assert "FAIL" in out

    def test_json_report(self, capsys, en_program):
        code, out, _ = run_cli(
            capsys, "roundtrip", "--json", "-l", "ur",
            "--interpreter", sys.executable, str(en_program),
        )
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["status"] == "PASS"
        assert payload["expected"] is False


class TestCorpusCommand:
    def test_summary_and_exit(self, capsys, tiny_corpus):
        code, out, _ = run_cli(
            capsys, "corpus", "-l", "ur",
            "--interpreter", sys.executable, str(tiny_corpus),
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert sum(1 for l in lines if l.startswith("PASS")) == 3
        assert "3/3" in lines[-1]

    def test_json_report(self, capsys, tiny_corpus):
        code, out, _ = run_cli(
            capsys, "corpus", "--json", "-l", "ur",
            "--interpreter", sys.executable, str(tiny_corpus),
        )
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["total"] == 3
        assert payload["passed"] == 3

    def test_empty_directory_is_an_error(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "corpus", "-l", "ur", str(tmp_path))
        assert code == 1
        assert "empty corpus" in err


class TestBenchCommand:
    def test_text_report(self, capsys, tmp_path):
        p = tmp_path / "quick.py"
        p.write_text("print(sum(range(500)))\n", encoding="utf-8")
        code, out, _ = run_cli(
            capsys, "bench", "-l", "ur", "--interpreter", sys.executable,
            "--runs", "3", "--warmups", "0", str(p),
        )
        assert code == 0
        assert "direct" in out
        assert "transpiled" in out

    def test_json_report(self, capsys, tmp_path):
        p = tmp_path / "quick.py"
        p.write_text("print(1)\n", encoding="utf-8")
        code, out, _ = run_cli(
            capsys, "bench", "--json", "-l", "ur",
            "--interpreter", sys.executable,
            "--runs", "3", "--warmups", "0", str(p),
        )
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["runs"] == 3
        assert payload["direct_mean_ms"] > 0


class TestPacksCommand:
    def test_lists_bundled_codes(self, capsys):
        code, out, _ = run_cli(capsys, "packs")
        assert code == 0
        for expected in ("ur", "hi", "zh"):
            assert expected in out

    def test_json_report(self, capsys):
        code, out, _ = run_cli(capsys, "packs", "--json")
        payload = json.loads(out)
        assert payload["schema"] == 1
        codes = [p["code"] for p in payload["packs"]]
        assert "ur" in codes
