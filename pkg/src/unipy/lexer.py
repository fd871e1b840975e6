"""Lossless tokenizer for Python-dialect source.

Concatenating the texts of ``tokenize(s)`` reproduces ``s`` exactly, for any
Unicode input. Strings and comments are opaque: each is one token, and
nothing inside them is ever rewritten by later stages. Tokenization never
fails; an unterminated string extends to end of input and is reported as a
warning, and characters that fit no class come back as ``Other``.

The character scan itself lives in a compiled extension when one was built
(``unipy._scanner_c``), with ``unipy._scanner`` as the pure-Python fallback.
Both produce identical spans; ``COMPILED`` tells you which one is active.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from unipy import _scanner as _pure

try:
    from unipy import _scanner_c as _impl  # type: ignore[attr-defined]

    COMPILED = True
except ImportError:
    _impl = _pure
    COMPILED = False


class TokenKind(Enum):
    WORD = "Word"
    NUMBER = "Number"
    STRING = "StringLit"
    COMMENT = "Comment"
    PUNCT = "Punct"
    WHITESPACE = "Whitespace"
    NEWLINE = "Newline"
    OTHER = "Other"


_KIND_BY_INT = (
    TokenKind.WORD,
    TokenKind.NUMBER,
    TokenKind.STRING,
    TokenKind.COMMENT,
    TokenKind.PUNCT,
    TokenKind.WHITESPACE,
    TokenKind.NEWLINE,
    TokenKind.OTHER,
)

_OPAQUE = frozenset((TokenKind.STRING, TokenKind.COMMENT))


@dataclass(frozen=True)
class Token:
    """One source span. ``text`` is the exact substring, quotes and all."""

    kind: TokenKind
    text: str
    line: int
    col: int


@dataclass(frozen=True)
class LexWarning:
    code: str
    line: int
    col: int


def tokenize_with_warnings(source: str) -> tuple[list[Token], list[LexWarning]]:
    """Tokenize ``source``, also returning lexer diagnostics.

    The only warning currently produced is ``unterminated-string``, located
    at the token that ran to end of input.
    """
    spans, raw_warnings = _impl.scan(source)
    tokens = [
        Token(_KIND_BY_INT[kind], source[start:end], line, col)
        for kind, start, end, line, col in spans
    ]
    warnings = [LexWarning(code, line, col) for code, line, col in raw_warnings]
    return tokens, warnings


def tokenize(source: str) -> list[Token]:
    """Split ``source`` into tokens whose concatenation equals ``source``."""
    return tokenize_with_warnings(source)[0]


def is_opaque(token: Token) -> bool:
    """True for tokens the translator must never rewrite."""
    return token.kind in _OPAQUE


def scan_backends() -> dict[str, object]:
    """Expose both scan implementations, keyed by name (for tests/benchmarks)."""
    backends: dict[str, object] = {"pure": _pure.scan}
    if COMPILED:
        backends["compiled"] = _impl.scan
    return backends
