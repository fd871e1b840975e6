"""Round-trip conversion testing and timing benchmarks.

The round-trip check takes an English program, generates its localized form
(reverse translation), runs both through the interpreter, and passes only
when the outputs and exit codes agree and the localized form translates back
to the original text. A corpus run applies the check to a directory of
programs; a bench times direct execution against the translate-then-execute
pipeline.
"""

from __future__ import annotations

import os
import statistics
import subprocess
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from unipy.lexer import TokenKind, is_opaque, tokenize
from unipy.packs import LanguagePack, PackError, invert_pack
from unipy.runner import RunnerError, resolve_interpreter
from unipy.runner import run as run_program
from unipy.translator import Direction, translate

PASS = "PASS"
FAIL = "FAIL"

REVERSE_TRANSLATION = "reverse_translation"
FORWARD_TRANSLATION = "forward_translation"
OUTPUT_MISMATCH = "output_mismatch"
EXIT_MISMATCH = "exit_mismatch"

_EXCERPT_LINES = 5


class HarnessError(Exception):
    pass


@dataclass(frozen=True)
class RoundTripResult:
    program: str
    status: str  # PASS | FAIL
    failure_stage: str | None = None
    diff_excerpt: str | None = None


@dataclass(frozen=True)
class CorpusReport:
    total: int
    passed: int
    failed: int
    results: tuple[RoundTripResult, ...]
    expected_failures: tuple[str, ...]


@dataclass(frozen=True)
class BenchResult:
    program: str
    direct_mean_ms: float
    direct_stddev_ms: float
    transpiled_mean_ms: float
    transpiled_stddev_ms: float
    translate_mean_ms: float
    runs: int
    warmups: int


def _first_divergence(ours: str, theirs: str, a_label: str, b_label: str) -> str:
    a_lines = ours.splitlines()
    b_lines = theirs.splitlines()
    index = 0
    for index, (a, b) in enumerate(zip(a_lines, b_lines)):
        if a != b:
            break
    else:
        index = min(len(a_lines), len(b_lines))
    parts = [f"first divergence at line {index + 1}"]
    for label, lines in ((a_label, a_lines), (b_label, b_lines)):
        window = lines[index : index + _EXCERPT_LINES]
        if window:
            parts.extend(f"{label}: {line}" for line in window)
        else:
            parts.append(f"{label}: <end of output>")
    return "\n".join(parts)


def _stdin_fixture(program: Path) -> bytes:
    fixture = program.with_suffix(".stdin")
    if fixture.is_file():
        return fixture.read_bytes()
    return b""


def _decode(data: bytes) -> str:
    return data.decode("utf-8", errors="surrogateescape")


def roundtrip_check(
    program: str | Path,
    pack: LanguagePack,
    interpreter: str | None = None,
    timeout: float | None = None,
) -> RoundTripResult:
    """Reverse-translate an English program, run both forms, compare outputs."""
    program = Path(program)
    source = program.read_text(encoding="utf-8-sig")
    name = str(program)

    try:
        reverse = translate(source, pack, Direction.REVERSE)
    except PackError as exc:
        return RoundTripResult(name, FAIL, REVERSE_TRANSLATION, str(exc))

    forward = translate(reverse.output, pack, Direction.FORWARD)
    if forward.output != source:
        return RoundTripResult(
            name,
            FAIL,
            FORWARD_TRANSLATION,
            _first_divergence(source, forward.output, "original", "round-tripped"),
        )

    stdin_data = _stdin_fixture(program)
    try:
        python = resolve_interpreter(interpreter)
        local = run_program(
            reverse.output,
            pack,
            interpreter=python,
            stdin_data=stdin_data,
            source_name=f"{program.stem}.{pack.code}.py",
            timeout=timeout,
        )
        direct = subprocess.run(
            [python, str(program)],
            input=stdin_data,
            capture_output=True,
            timeout=timeout,
        )
    except (RunnerError, subprocess.TimeoutExpired, OSError) as exc:
        return RoundTripResult(name, FAIL, EXIT_MISMATCH, f"run failed: {exc}")

    direct_stdout = _decode(direct.stdout)
    if local.stdout != direct_stdout:
        return RoundTripResult(
            name,
            FAIL,
            OUTPUT_MISMATCH,
            _first_divergence(direct_stdout, local.stdout, "direct", "transpiled"),
        )
    if local.exit_code != direct.returncode:
        return RoundTripResult(
            name,
            FAIL,
            EXIT_MISMATCH,
            f"direct exit {direct.returncode}, transpiled exit {local.exit_code}",
        )
    return RoundTripResult(name, PASS)


def hazard_tokens(source: str, pack: LanguagePack) -> set[str]:
    """English-source tokens that cannot survive reverse-then-forward."""
    reverse = invert_pack(pack)
    hazards = set()
    for token in tokenize(source):
        if is_opaque(token) or token.kind not in (TokenKind.WORD, TokenKind.PUNCT):
            continue
        text = token.text
        localized = reverse.keywords.get(text, text)
        back = pack.keywords.get(localized, localized)
        if back != text:
            hazards.add(text)
    return hazards


def corpus_run(
    corpus_dir: str | Path,
    pack: LanguagePack,
    interpreter: str | None = None,
    jobs: int | None = None,
    timeout: float | None = None,
) -> CorpusReport:
    """Round-trip every *.py program under ``corpus_dir`` (lexicographic order)."""
    corpus_dir = Path(corpus_dir)
    programs = sorted(
        p for p in corpus_dir.glob("*.py") if not p.name.endswith(".translated.py")
    )
    if not programs:
        raise HarnessError(f"empty corpus: no .py programs in {corpus_dir}")

    python = resolve_interpreter(interpreter)
    workers = jobs or min(8, os.cpu_count() or 1)

    def check(program: Path) -> RoundTripResult:
        return roundtrip_check(program, pack, interpreter=python, timeout=timeout)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = tuple(pool.map(check, programs))

    expected = []
    for program, result in zip(programs, results):
        if result.status == FAIL:
            source = program.read_text(encoding="utf-8-sig")
            if hazard_tokens(source, pack):
                expected.append(result.program)

    passed = sum(1 for r in results if r.status == PASS)
    return CorpusReport(
        total=len(results),
        passed=passed,
        failed=len(results) - passed,
        results=results,
        expected_failures=tuple(expected),
    )


def bench(
    program: str | Path,
    pack: LanguagePack,
    interpreter: str | None = None,
    runs: int = 10,
    warmups: int = 3,
) -> BenchResult:
    """Time direct execution vs the translate-then-execute pipeline."""
    if runs < 3:
        raise HarnessError("bench needs runs >= 3")
    if warmups < 0:
        raise HarnessError("warmups must be >= 0")
    program = Path(program)
    source = program.read_text(encoding="utf-8-sig")
    stdin_data = _stdin_fixture(program)
    python = resolve_interpreter(interpreter)

    def run_direct() -> float:
        t0 = time.perf_counter()
        proc = subprocess.run(
            [python, str(program)], input=stdin_data, capture_output=True
        )
        elapsed = (time.perf_counter() - t0) * 1000.0
        if proc.returncode != 0:
            raise HarnessError(
                f"{program} exited {proc.returncode}: {_decode(proc.stderr).strip()}"
            )
        return elapsed

    # Pre-flight: never measure a crashing program.
    run_direct()

    # Paired iterations: one direct and one transpiled execution per round,
    # so slow background drift hits both series alike instead of skewing the
    # direct/transpiled difference.
    direct_times = []
    transpiled_times = []
    translate_times = []
    for i in range(warmups + runs):
        direct_elapsed = run_direct()

        t0 = time.perf_counter()
        report = run_program(
            source,
            pack,
            interpreter=python,
            stdin_data=stdin_data,
            source_name=program.name,
        )
        transpiled_elapsed = (time.perf_counter() - t0) * 1000.0
        if report.exit_code != 0:
            raise HarnessError(f"transpiled {program} exited {report.exit_code}")
        if i >= warmups:
            direct_times.append(direct_elapsed)
            transpiled_times.append(transpiled_elapsed)
            translate_times.append(report.timings[0])

    return BenchResult(
        program=str(program),
        direct_mean_ms=statistics.mean(direct_times),
        direct_stddev_ms=statistics.stdev(direct_times),
        transpiled_mean_ms=statistics.mean(transpiled_times),
        transpiled_stddev_ms=statistics.stdev(transpiled_times),
        translate_mean_ms=statistics.mean(translate_times),
        runs=runs,
        warmups=warmups,
    )
