"""Everything the kernel needs from unipy, fetched through its CLI.

The kernel never imports unipy: translation, pack discovery, and the
keyword lists used for completion and error back-translation all come from
child `unipy` invocations, so pack semantics have exactly one home.
"""

from __future__ import annotations

import json
import keyword
import os
import re
import shutil
import subprocess


class CliError(Exception):
    """The unipy CLI is missing or a call to it failed."""


INSTALL_HINT = "install the unipy package (pip install unipy) or set UNIPY_BIN"

# print/input are builtins, not keywords, but packs map them like keywords
ENGLISH_WORDS = tuple(sorted(set(keyword.kwlist) | {"print", "input"}))


def find_cli() -> str:
    """Locate the unipy executable: $UNIPY_BIN first, then PATH."""
    named = os.environ.get("UNIPY_BIN")
    if named:
        found = shutil.which(named)
        if found:
            return found
        if os.path.isfile(named) and os.access(named, os.X_OK):
            return named
        raise CliError(
            f"UNIPY_BIN points to {named!r}, which is not executable; "
            + INSTALL_HINT
        )
    found = shutil.which("unipy")
    if found:
        return found
    raise CliError("the unipy CLI is not on PATH; " + INSTALL_HINT)


def _run(argv: list[str], stdin_text: str | None = None) -> str:
    try:
        proc = subprocess.run(
            argv,
            input=stdin_text.encode("utf-8") if stdin_text is not None else None,
            capture_output=True,
        )
    except OSError as exc:
        raise CliError(f"failed to invoke {argv[0]}: {exc}") from exc
    if proc.returncode != 0:
        stderr = proc.stderr.decode("utf-8", "replace").strip()
        raise CliError(stderr or f"{argv[0]} exited {proc.returncode}")
    return proc.stdout.decode("utf-8")


def translate(code: str, language: str, cli: str | None = None) -> str:
    """Localized source -> standard Python, via `unipy translate`."""
    cli = cli or find_cli()
    return _run([cli, "translate", "-l", language, "-"], stdin_text=code)


def reverse_translate(code: str, language: str, cli: str | None = None) -> str:
    cli = cli or find_cli()
    return _run(
        [cli, "translate", "--reverse", "-l", language, "-"], stdin_text=code
    )


def list_packs(cli: str | None = None) -> list[dict]:
    """Installed packs as reported by `unipy packs --json`."""
    cli = cli or find_cli()
    payload = json.loads(_run([cli, "packs", "--json"]))
    return [row for row in payload["packs"] if "error" not in row]


def keyword_pairs(language: str, cli: str | None = None) -> dict[str, str]:
    """English keyword -> local keyword, for this pack.

    Derived by reverse-translating each English word on its own line;
    translation preserves line structure, so the lines zip back up.
    """
    localized = reverse_translate("\n".join(ENGLISH_WORDS), language, cli)
    pairs = {}
    for english, local in zip(ENGLISH_WORDS, localized.splitlines()):
        if local != english:
            pairs[english] = local
    return pairs


def local_keywords(language: str, cli: str | None = None) -> tuple[str, ...]:
    """The pack's local keywords, for completion."""
    return tuple(sorted(keyword_pairs(language, cli).values()))


def back_translate(text: str, pairs: dict[str, str]) -> str:
    """Map whole English keywords in ``text`` back to their local forms.

    Used on error payloads so a SyntaxError about translated code talks
    about the code the user actually typed. Word boundaries keep names
    like "myelif" intact; digits and paths are never touched.
    """
    if not pairs:
        return text
    pattern = re.compile(
        r"(?<!\w)(?:"
        + "|".join(re.escape(k) for k in sorted(pairs, key=len, reverse=True))
        + r")(?!\w)"
    )
    return pattern.sub(lambda m: pairs[m.group(0)], text)
