"""Jupyter kernel adapter: do_execute/do_complete over the unipy bridge.

Requires ipykernel (the `jupyter` extra). The language is fixed per kernel
instance by $UNIPY_LANGUAGE, which the installed kernelspecs set.
"""

from __future__ import annotations

import os

from unipy_kernel import cli_bridge
from unipy_kernel.cli_bridge import CliError
from unipy_kernel.session import word_prefix

try:
    from ipykernel.ipkernel import IPythonKernel
except ImportError:  # pragma: no cover - exercised only without the extra
    IPythonKernel = None

if IPythonKernel is not None:

    class UniPyKernel(IPythonKernel):
        implementation = "unipy"
        implementation_version = "0.1.0"
        banner = "Python, in your language. Cells are translated via unipy."

        def __init__(self, **kwargs):
            super().__init__(**kwargs)
            self.unipy_language = os.environ.get("UNIPY_LANGUAGE", "ur")
            self._cli: str | None = None
            self._pairs: dict[str, str] | None = None

        def _bridge_cli(self) -> str:
            if self._cli is None:
                self._cli = cli_bridge.find_cli()
            return self._cli

        def _keyword_pairs(self) -> dict[str, str]:
            if self._pairs is None:
                try:
                    self._pairs = cli_bridge.keyword_pairs(
                        self.unipy_language, self._bridge_cli()
                    )
                except CliError:
                    self._pairs = {}
            return self._pairs

        async def do_execute(self, code, silent, store_history=True,
                             user_expressions=None, allow_stdin=False,
                             **kwargs):
            try:
                translated = cli_bridge.translate(
                    code, self.unipy_language, self._bridge_cli()
                )
            except CliError as exc:
                message = cli_bridge.back_translate(
                    str(exc), self._keyword_pairs()
                )
                if not silent:
                    self.send_response(
                        self.iopub_socket,
                        "error",
                        {
                            "ename": "TranslationError",
                            "evalue": message,
                            "traceback": [message],
                        },
                    )
                return {
                    "status": "error",
                    "execution_count": self.execution_count,
                    "ename": "TranslationError",
                    "evalue": message,
                    "traceback": [message],
                }
            return await super().do_execute(
                translated,
                silent,
                store_history=store_history,
                user_expressions=user_expressions,
                allow_stdin=allow_stdin,
                **kwargs,
            )

        def do_complete(self, code, cursor_pos):
            prefix = word_prefix(code, cursor_pos)
            local = []
            if prefix:
                try:
                    local = [
                        k
                        for k in cli_bridge.local_keywords(
                            self.unipy_language, self._bridge_cli()
                        )
                        if k.startswith(prefix)
                    ]
                except CliError:
                    local = []
            try:
                head = cli_bridge.translate(
                    code[:cursor_pos], self.unipy_language, self._bridge_cli()
                )
            except CliError:
                head = code[:cursor_pos]
            reply = super().do_complete(head, len(head))
            matches = local + [
                m for m in reply.get("matches", []) if m not in local
            ]
            return {
                **reply,
                "matches": matches,
                "cursor_start": cursor_pos - len(prefix),
                "cursor_end": cursor_pos,
            }

else:
    UniPyKernel = None
