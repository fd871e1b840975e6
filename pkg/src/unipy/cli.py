"""Command-line entry point.

Subcommands mirror the library: translate/pivot produce text, run executes a
localized program, validate/roundtrip/corpus/bench wrap the evaluation
harness, and packs lists what is installed. Exit codes: 2 for usage errors,
1 for pack or translation failures, and for ``run`` the child interpreter's
exit code, forwarded untouched.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from unipy import __version__
from unipy.harness import (
    FAIL,
    PASS,
    HarnessError,
    bench,
    corpus_run,
    hazard_tokens,
    roundtrip_check,
)
from unipy.packs import (
    PackError,
    available_packs,
    find_pack,
    load_pack,
    validate_pack,
)
from unipy.runner import RunnerError, run
from unipy.translator import Direction, pivot, translate

_BOM = "﻿"


class UsageError(Exception):
    pass


def _read_source(path_str: str) -> tuple[str, bool]:
    """Read a program (or stdin for "-"). Returns (text, had_bom)."""
    if path_str == "-":
        text = sys.stdin.read()
    else:
        text = Path(path_str).read_text(encoding="utf-8")
    if text.startswith(_BOM):
        return text[len(_BOM) :], True
    return text, False


def _infer_language(language: str | None, path_str: str) -> str:
    if language:
        return language
    # hello.ur.py names its own pack via the double extension
    name = Path(path_str).name
    parts = name.split(".")
    if len(parts) >= 3 and parts[-1] == "py":
        code = parts[-2]
        if code in available_packs():
            return code
    raise UsageError(
        f"no --language given and none inferable from {name!r}; "
        "use --language or a <name>.<code>.py file name"
    )


def _emit(text: str, output: str | None, had_bom: bool) -> None:
    if output:
        Path(output).write_text(
            (_BOM if had_bom else "") + text, encoding="utf-8"
        )
    else:
        sys.stdout.write(text)


def _print_json(payload: dict) -> None:
    payload = {"schema": 1, **payload}
    print(json.dumps(payload, ensure_ascii=False, indent=2))


def _warn(messages) -> None:
    for message in messages:
        text = message if message.startswith("unipy:") else f"unipy: {message}"
        print(text, file=sys.stderr)


def _translation_payload(result) -> dict:
    return {
        "output": result.output,
        "substitutions": [dataclasses.asdict(s) for s in result.substitutions],
        "warnings": list(result.warnings),
    }


def _cmd_run(args: argparse.Namespace) -> int:
    language = _infer_language(args.language, args.file)
    pack = find_pack(language)
    source, _ = _read_source(args.file)
    report = run(
        source,
        pack,
        interpreter=args.interpreter,
        argv=tuple(args.args),
        source_name=Path(args.file).name if args.file != "-" else "program.py",
        keep_artifacts=args.keep_artifacts,
    )
    _warn(report.diagnostics)
    if report.artifact_path is not None:
        print(f"unipy: translated source kept at {report.artifact_path}", file=sys.stderr)
    if args.json:
        _print_json(
            {
                "stdout": report.stdout,
                "stderr": report.stderr,
                "exit_code": report.exit_code,
                "translated_source": report.translated_source,
                "timings": {
                    "translate_ms": report.timings[0],
                    "execute_ms": report.timings[1],
                },
            }
        )
    else:
        sys.stdout.buffer.write(report.stdout.encode("utf-8", "surrogateescape"))
        sys.stdout.buffer.flush()
        sys.stderr.buffer.write(report.stderr.encode("utf-8", "surrogateescape"))
        sys.stderr.buffer.flush()
    return report.exit_code


def _cmd_translate(args: argparse.Namespace) -> int:
    language = _infer_language(args.language, args.file)
    pack = find_pack(language)
    source, had_bom = _read_source(args.file)
    direction = Direction.REVERSE if args.reverse else Direction.FORWARD
    result = translate(
        source, pack, direction, translate_identifiers=args.translate_identifiers
    )
    _warn(result.warnings)
    if args.json:
        _print_json(_translation_payload(result))
        if args.output:
            _emit(result.output, args.output, had_bom)
    else:
        _emit(result.output, args.output, had_bom)
    return 0


def _cmd_pivot(args: argparse.Namespace) -> int:
    from_pack = find_pack(_infer_language(args.language, args.file))
    to_pack = find_pack(args.to_language)
    source, had_bom = _read_source(args.file)
    result = pivot(source, from_pack, to_pack)
    _warn(result.warnings)
    if args.json:
        _print_json(_translation_payload(result))
        if args.output:
            _emit(result.output, args.output, had_bom)
    else:
        _emit(result.output, args.output, had_bom)
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    try:
        pack = find_pack(args.language)
    except PackError as exc:
        if args.json:
            _print_json({"errors": [str(exc)], "ok": False})
        else:
            print(f"unipy: error: {exc}", file=sys.stderr)
        return 1
    report = validate_pack(pack)
    if args.json:
        _print_json(
            {
                "code": pack.code,
                "name": pack.name,
                "direction": pack.direction,
                "keywords": len(pack.keywords),
                "digits": len(pack.digits),
                "punctuation": len(pack.punctuation),
                "ok": report.ok,
                "errors": list(report.errors),
                "ambiguities": [[e, list(ls)] for e, ls in report.ambiguities],
                "conflations": [[l, list(es)] for l, es in report.conflations],
                "warnings": list(report.warnings),
            }
        )
    else:
        print(f"pack {pack.code} ({pack.name}, {pack.direction})")
        print(
            f"  keywords: {len(pack.keywords)}  digits: {len(pack.digits)}  "
            f"punctuation: {len(pack.punctuation)}"
        )
        for english, locals_ in report.ambiguities:
            print(f"  ambiguity: {english!r} <- {', '.join(locals_)}")
        for local, senses in report.conflations:
            print(f"  conflation: {local!r} -> {', '.join(senses)}")
        for warning in report.warnings:
            print(f"  warning: {warning}")
        print("  ok" if report.ok else "  INVALID")
    return 0 if report.ok else 1


def _cmd_roundtrip(args: argparse.Namespace) -> int:
    language = _infer_language(args.language, args.file)
    pack = find_pack(language)
    result = roundtrip_check(
        args.file, pack, interpreter=args.interpreter, timeout=args.timeout
    )
    expected = False
    if result.status == FAIL:
        source = Path(args.file).read_text(encoding="utf-8-sig")
        expected = bool(hazard_tokens(source, pack))
    if args.json:
        _print_json({**dataclasses.asdict(result), "expected": expected})
    else:
        if result.status == PASS:
            print(f"PASS {result.program}")
        else:
            suffix = " (expected: pack ambiguity)" if expected else ""
            print(f"FAIL {result.program} [{result.failure_stage}]{suffix}")
            if result.diff_excerpt:
                print(result.diff_excerpt)
    return 0 if result.status == PASS or expected else 1


def _cmd_corpus(args: argparse.Namespace) -> int:
    pack = find_pack(args.language)
    report = corpus_run(
        args.dir,
        pack,
        interpreter=args.interpreter,
        jobs=args.jobs,
        timeout=args.timeout,
    )
    if args.json:
        _print_json(
            {
                "total": report.total,
                "passed": report.passed,
                "failed": report.failed,
                "expected_failures": list(report.expected_failures),
                "results": [dataclasses.asdict(r) for r in report.results],
            }
        )
    else:
        for result in report.results:
            if result.status == PASS:
                print(f"PASS {result.program}")
            else:
                print(f"FAIL {result.program} [{result.failure_stage}]")
        rate = 100.0 * report.passed / report.total
        print(
            f"{report.passed}/{report.total} passed ({rate:.1f}%), "
            f"{len(report.expected_failures)} expected failure(s)"
        )
    unexpected = [
        r for r in report.results
        if r.status == FAIL and r.program not in report.expected_failures
    ]
    return 0 if not unexpected else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    language = _infer_language(args.language, args.file)
    pack = find_pack(language)
    result = bench(
        args.file,
        pack,
        interpreter=args.interpreter,
        runs=args.runs,
        warmups=args.warmups,
    )
    if args.json:
        _print_json(dataclasses.asdict(result))
    else:
        print(f"bench {result.program} (runs={result.runs}, warmups={result.warmups})")
        print(
            f"  direct:     {result.direct_mean_ms:9.2f} ms "
            f"± {result.direct_stddev_ms:.2f}"
        )
        print(
            f"  transpiled: {result.transpiled_mean_ms:9.2f} ms "
            f"± {result.transpiled_stddev_ms:.2f}"
        )
        print(f"  translate:  {result.translate_mean_ms:9.2f} ms")
    return 0


def _cmd_packs(args: argparse.Namespace) -> int:
    rows = []
    for code, path in sorted(available_packs().items()):
        try:
            pack = load_pack(path)
            rows.append(
                {
                    "code": code,
                    "name": pack.name,
                    "direction": pack.direction,
                    "keywords": len(pack.keywords),
                    "path": str(path),
                }
            )
        except PackError as exc:
            rows.append({"code": code, "error": str(exc), "path": str(path)})
    if args.json:
        _print_json({"packs": rows})
    else:
        for row in rows:
            if "error" in row:
                print(f"{row['code']:4} INVALID: {row['error']}")
            else:
                print(
                    f"{row['code']:4} {row['name']:24} {row['direction']}  "
                    f"{row['keywords']:3} keywords  {row['path']}"
                )
    return 0


def _add_common(parser: argparse.ArgumentParser, interpreter: bool = False) -> None:
    parser.add_argument(
        "-l",
        "--language",
        help="pack code (ur, hi, zh) or a pack file path",
    )
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    if interpreter:
        parser.add_argument(
            "--interpreter", help="Python executable to run programs with"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unipy",
        description="Translate localized Python dialects to standard Python and back.",
    )
    parser.add_argument("--version", action="version", version=f"unipy {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("run", help="translate a localized program and execute it")
    _add_common(p, interpreter=True)
    p.add_argument("--keep-artifacts", action="store_true",
                   help="keep the translated temp file")
    p.add_argument("file", help="program path (flags must come before it)")
    p.add_argument("args", nargs=argparse.REMAINDER,
                   help="arguments passed to the program")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("translate", help="translate a program to English (or back)")
    _add_common(p)
    p.add_argument("--reverse", action="store_true",
                   help="translate English to the pack's language")
    p.add_argument("--translate-identifiers", action="store_true",
                   help="also transliterate non-ASCII identifiers to ASCII")
    p.add_argument("-o", "--output", help="write here instead of stdout")
    p.add_argument("file", help="program path, or - for stdin")
    p.set_defaults(func=_cmd_translate)

    p = sub.add_parser("pivot", help="translate between two dialects via English")
    _add_common(p)
    p.add_argument("-t", "--to", dest="to_language", required=True,
                   help="target pack code or file path")
    p.add_argument("-o", "--output", help="write here instead of stdout")
    p.add_argument("file", help="program path, or - for stdin")
    p.set_defaults(func=_cmd_pivot)

    p = sub.add_parser("validate", help="load a pack and report its defects")
    p.add_argument("language", help="pack code or pack file path")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("roundtrip",
                       help="reverse-translate an English program, run both, compare")
    _add_common(p, interpreter=True)
    p.add_argument("--timeout", type=float, help="per-run timeout in seconds")
    p.add_argument("file", help="English program path")
    p.set_defaults(func=_cmd_roundtrip)

    p = sub.add_parser("corpus", help="round-trip every program in a directory")
    _add_common(p, interpreter=True)
    p.add_argument("--jobs", type=int, help="parallel checks (default: cpu-bound)")
    p.add_argument("--timeout", type=float, help="per-run timeout in seconds")
    p.add_argument("dir", help="directory of .py programs")
    p.set_defaults(func=_cmd_corpus)

    p = sub.add_parser("bench", help="time direct vs transpiled execution")
    _add_common(p, interpreter=True)
    p.add_argument("--runs", type=int, default=10, help="measured runs (default 10)")
    p.add_argument("--warmups", type=int, default=3,
                   help="discarded warmup runs (default 3)")
    p.add_argument("file", help="program path")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("packs", help="list installed language packs")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.set_defaults(func=_cmd_packs)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"unipy: error: {exc}", file=sys.stderr)
        return 2
    except (PackError, RunnerError, HarnessError) as exc:
        print(f"unipy: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"unipy: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
