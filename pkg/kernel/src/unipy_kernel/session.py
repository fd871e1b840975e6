"""A localized interactive Python session.

KernelSession is the kernel's engine: each cell is translated to standard
Python through the unipy CLI, then handed to an embedded IPython
InteractiveShell, whose namespace carries state from cell to cell. The
Jupyter adapter in kernel.py drives the same bridge functions over the wire
protocol; this class is the in-process form, used headless and in tests.
"""

from __future__ import annotations

import contextlib
import io
from dataclasses import dataclass, field

from unipy_kernel import cli_bridge
from unipy_kernel.cli_bridge import CliError


@dataclass(frozen=True)
class ExecutionReply:
    status: str  # "ok" | "error"
    stdout: str = ""
    error_name: str = ""
    error_text: str = ""
    translated: str = ""


@dataclass(frozen=True)
class CompletionReply:
    matches: tuple[str, ...]
    cursor_start: int
    cursor_end: int
    status: str = "ok"


def word_prefix(code: str, cursor_pos: int) -> str:
    """The identifier-ish run of characters ending at the cursor."""
    start = cursor_pos
    while start > 0 and (code[start - 1].isalnum() or code[start - 1] == "_"):
        start -= 1
    return code[start:cursor_pos]


class KernelSession:
    """One language, one shell, one conversation."""

    def __init__(self, language: str, cli: str | None = None):
        self.language = language
        self._cli = cli
        self._shell = None
        self._pairs: dict[str, str] | None = None

    # lazy pieces: a missing CLI must surface as an error reply from
    # execute_cell, never as a constructor crash

    @property
    def cli(self) -> str:
        if self._cli is None:
            self._cli = cli_bridge.find_cli()
        return self._cli

    @property
    def shell(self):
        if self._shell is None:
            from IPython.core.interactiveshell import InteractiveShell

            self._shell = InteractiveShell()
        return self._shell

    @property
    def keyword_pairs(self) -> dict[str, str]:
        if self._pairs is None:
            self._pairs = cli_bridge.keyword_pairs(self.language, self.cli)
        return self._pairs

    @property
    def local_keywords(self) -> tuple[str, ...]:
        return tuple(sorted(self.keyword_pairs.values()))

    def execute_cell(self, code: str) -> ExecutionReply:
        if not code.strip():
            return ExecutionReply(status="ok")
        try:
            translated = cli_bridge.translate(code, self.language, self.cli)
        except CliError as exc:
            return ExecutionReply(
                status="error",
                error_name="TranslationError",
                error_text=str(exc),
            )
        buffer = io.StringIO()
        with contextlib.redirect_stdout(buffer):
            result = self.shell.run_cell(translated, store_history=True)
        if result.success:
            return ExecutionReply(
                status="ok", stdout=buffer.getvalue(), translated=translated
            )
        error = result.error_in_exec or result.error_before_exec
        try:
            pairs = self.keyword_pairs
        except CliError:
            pairs = {}
        return ExecutionReply(
            status="error",
            stdout=buffer.getvalue(),
            error_name=type(error).__name__,
            error_text=cli_bridge.back_translate(str(error), pairs),
            translated=translated,
        )

    def complete(self, code: str, cursor_pos: int | None = None) -> CompletionReply:
        if cursor_pos is None:
            cursor_pos = len(code)
        prefix = word_prefix(code, cursor_pos)

        matches: list[str] = []
        if prefix:
            try:
                matches.extend(
                    k for k in self.local_keywords if k.startswith(prefix)
                )
            except CliError:
                pass  # degrade to delegate-only completion

        # delegate against the translated head of the cell; on translation
        # failure fall back to the raw text
        head = code[:cursor_pos]
        try:
            translated_head = cli_bridge.translate(head, self.language, self.cli)
        except CliError:
            translated_head = head
        for text in self._delegate_matches(translated_head, prefix):
            if text not in matches:
                matches.append(text)

        return CompletionReply(
            matches=tuple(matches),
            cursor_start=cursor_pos - len(prefix),
            cursor_end=cursor_pos,
        )

    def _delegate_matches(self, text: str, prefix: str) -> list[str]:
        from IPython.core.completer import provisionalcompleter

        try:
            with provisionalcompleter():
                completions = list(
                    self.shell.Completer.completions(text, len(text))
                )
        except Exception:
            return []
        # keep only completions replacing exactly our prefix span, so the
        # single cursor range in the reply is right for every match
        span = len(prefix)
        return [
            c.text
            for c in completions
            if c.end - c.start == span and c.end == len(text)
        ]
