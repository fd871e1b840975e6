"""Execute localized programs through the host Python interpreter.

The pipeline is: translate forward, write the English result to a temp file,
spawn the interpreter on it, and report the child's streams and exit code.
stdout passes through untouched; stderr gets Python keywords mapped back to
the source language so error messages read in the dialect the program was
written in. The child's exit code is never remapped.
"""

from __future__ import annotations

import os
import re
import shutil
import subprocess
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path

from unipy.packs import LanguagePack, invert_pack
from unipy.translator import Direction, translate


class RunnerError(Exception):
    """Interpreter resolution or spawn failure (distinct from a nonzero exit)."""


@dataclass(frozen=True)
class RunReport:
    stdout: str
    stderr: str
    exit_code: int
    translated_source: str
    timings: tuple[float, float]  # (translate_ms, execute_ms)
    diagnostics: tuple[str, ...] = ()
    artifact_path: Path | None = None  # set when keep_artifacts was requested


def resolve_interpreter(explicit: str | None = None) -> str:
    """Pick the Python to run: explicit flag, UNIPY_PYTHON, python3, python."""
    candidates = []
    if explicit:
        candidates.append(explicit)
    env = os.environ.get("UNIPY_PYTHON")
    if env:
        candidates.append(env)
    for candidate in candidates:
        found = shutil.which(candidate)
        if found:
            return found
        if Path(candidate).is_file() and os.access(candidate, os.X_OK):
            return candidate
        raise RunnerError(f"interpreter not found: {candidate}")
    for fallback in ("python3", "python"):
        found = shutil.which(fallback)
        if found:
            return found
    raise RunnerError(
        "no Python interpreter found; pass one explicitly or set UNIPY_PYTHON"
    )


def back_translate_output(text: str, pack: LanguagePack) -> str:
    """Replace standalone English keywords in ``text`` with local ones."""
    reverse = invert_pack(pack)
    if not reverse.keywords:
        return text
    ordered = sorted(reverse.keywords, key=len, reverse=True)
    body = "|".join(re.escape(key) for key in ordered)
    pattern = re.compile(rf"(?<!\w)(?:{body})(?!\w)")
    return pattern.sub(lambda m: reverse.keywords[m.group(0)], text)


def _decode(data: bytes) -> str:
    # surrogateescape keeps arbitrary child output reversible byte-for-byte
    return data.decode("utf-8", errors="surrogateescape")


def run(
    source: str,
    pack: LanguagePack,
    interpreter: str | None = None,
    argv: tuple[str, ...] = (),
    stdin_data: bytes | None = None,
    source_name: str = "program.py",
    keep_artifacts: bool = False,
    timeout: float | None = None,
    cwd: str | Path | None = None,
) -> RunReport:
    """Translate ``source`` forward and execute it.

    A nonzero child exit is a normal result, reported as-is; RunnerError is
    reserved for failures to resolve or spawn the interpreter.
    """
    python = resolve_interpreter(interpreter)

    t0 = time.perf_counter()
    result = translate(source, pack, Direction.FORWARD)
    translate_ms = (time.perf_counter() - t0) * 1000.0
    diagnostics = tuple(f"unipy: {w}" for w in result.warnings)

    name = Path(source_name).name
    stem = name[: -len(".py")] if name.endswith(".py") else name
    workdir = Path(tempfile.mkdtemp(prefix="unipy-"))
    script = workdir / f"{stem}.translated.py"
    try:
        script.write_text(result.output, encoding="utf-8")
        t1 = time.perf_counter()
        try:
            # stdin_data None inherits the parent's stdin (interactive use);
            # pass b"" to give the child an immediate EOF instead.
            proc = subprocess.run(
                [python, str(script), *argv],
                input=stdin_data,
                capture_output=True,
                timeout=timeout,
                cwd=cwd,
            )
        except subprocess.TimeoutExpired as exc:
            raise RunnerError(
                f"program did not finish within {timeout:g}s"
            ) from exc
        except OSError as exc:
            raise RunnerError(f"failed to spawn {python}: {exc}") from exc
        execute_ms = (time.perf_counter() - t1) * 1000.0
    finally:
        if not keep_artifacts:
            shutil.rmtree(workdir, ignore_errors=True)

    return RunReport(
        stdout=_decode(proc.stdout),
        stderr=back_translate_output(_decode(proc.stderr), pack),
        exit_code=proc.returncode,
        translated_source=result.output,
        timings=(translate_ms, execute_ms),
        diagnostics=diagnostics,
        artifact_path=script if keep_artifacts else None,
    )
