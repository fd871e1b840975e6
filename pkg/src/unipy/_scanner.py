"""Pure-Python scanner kernel.

Splits source text into lossless spans: concatenating the spans in order
reproduces the input exactly. unipy._scanner_c is the compiled twin of this
module; both must classify identically (see tests/test_lexer.py).

Span layout: (kind, start, end, line, col) with 1-based line/col of the
first character. Warnings are (code, line, col) tuples.
"""

import unicodedata

WORD = 0
NUMBER = 1
STRING = 2
COMMENT = 3
PUNCT = 4
WHITESPACE = 5
NEWLINE = 6
OTHER = 7

KIND_NAMES = (
    "Word",
    "Number",
    "StringLit",
    "Comment",
    "Punct",
    "Whitespace",
    "Newline",
    "Other",
)

_PREFIX_CHARS = "rbfuRBFU"
_HEX_DIGITS = "0123456789abcdefABCDEF_"
_OCT_DIGITS = "01234567_"
_BIN_DIGITS = "01_"

# Maximal-munch ASCII operator forms; longer forms tried first.
_OPS3 = frozenset(("**=", "//=", ">>=", "<<=", "..."))
_OPS2 = frozenset(
    ("**", "//", ">>", "<<", "==", "!=", ">=", "<=", "->", ":=",
     "+=", "-=", "*=", "/=", "%=", "@=", "&=", "|=", "^=")
)


def _is_word_char(ch):
    if ch == "_":
        return True
    if ch.isalpha() or ch.isdecimal():
        return True
    return unicodedata.category(ch)[0] == "M"


def _is_punct_char(ch):
    o = ord(ch)
    if o < 128:
        return not (ch.isalnum() or ch == "_" or ch.isspace())
    return unicodedata.category(ch)[0] in "PS"


def _scan_string(source, q):
    """Scan a string body starting at the opening quote index q.

    Returns (end, terminated). Backslash escapes only guard the closing
    quote; a string whose terminator is never found runs to end of input.
    """
    n = len(source)
    quote = source[q]
    if q + 2 < n and source[q + 1] == quote and source[q + 2] == quote:
        j = q + 3
        while j < n:
            c = source[j]
            if c == "\\":
                j += 2
                continue
            if (
                c == quote
                and j + 2 < n
                and source[j + 1] == quote
                and source[j + 2] == quote
            ):
                return j + 3, True
            j += 1
        return n, False
    j = q + 1
    while j < n:
        c = source[j]
        if c == "\\":
            j += 2
            continue
        if c == quote:
            return j + 1, True
        j += 1
    return n, False


def _scan_number(source, i):
    n = len(source)
    if (
        source[i] == "0"
        and i + 1 < n
        and source[i + 1] in "xXoObB"
        and i + 2 < n
    ):
        c = source[i + 1]
        if c in "xX":
            digits = _HEX_DIGITS
        elif c in "oO":
            digits = _OCT_DIGITS
        else:
            digits = _BIN_DIGITS
        if source[i + 2] in digits:
            j = i + 3
            while j < n and source[j] in digits:
                j += 1
            return j
    j = i
    while j < n:
        c = source[j]
        if c.isdecimal() or c == "_":
            j += 1
            continue
        if c == "." and j + 1 < n and source[j + 1].isdecimal():
            j += 1
            continue
        if c in "eE":
            if j + 1 < n and source[j + 1].isdecimal():
                j += 1
                continue
            if (
                j + 2 < n
                and source[j + 1] in "+-"
                and source[j + 2].isdecimal()
            ):
                j += 2
                continue
            break
        break
    return j


def scan(source):
    spans = []
    warnings = []
    n = len(source)
    i = 0
    line = 1
    col = 1
    while i < n:
        start = i
        sline = line
        scol = col
        ch = source[i]

        if ch == "\r":
            i += 2 if i + 1 < n and source[i + 1] == "\n" else 1
            spans.append((NEWLINE, start, i, sline, scol))
            line += 1
            col = 1
            continue
        if ch == "\n":
            i += 1
            spans.append((NEWLINE, start, i, sline, scol))
            line += 1
            col = 1
            continue

        # String literal, with optional 1-2 char prefix run.
        qpos = -1
        if ch == "'" or ch == '"':
            qpos = i
        elif ch in _PREFIX_CHARS:
            if i + 1 < n and (source[i + 1] == "'" or source[i + 1] == '"'):
                qpos = i + 1
            elif (
                i + 2 < n
                and source[i + 1] in _PREFIX_CHARS
                and (source[i + 2] == "'" or source[i + 2] == '"')
            ):
                qpos = i + 2
        if qpos >= 0:
            end, terminated = _scan_string(source, qpos)
            if not terminated:
                warnings.append(("unterminated-string", sline, scol))
            spans.append((STRING, start, end, sline, scol))
            # Strings are the only spans that may cross line breaks.
            k = start
            while k < end:
                c = source[k]
                if c == "\r":
                    line += 1
                    col = 1
                    if k + 1 < end and source[k + 1] == "\n":
                        k += 1
                elif c == "\n":
                    line += 1
                    col = 1
                else:
                    col += 1
                k += 1
            i = end
            continue

        if ch == "#":
            j = i + 1
            while j < n and source[j] != "\n" and source[j] != "\r":
                j += 1
            spans.append((COMMENT, start, j, sline, scol))
            col += j - start
            i = j
            continue

        if _is_word_char(ch) and not ch.isdecimal():
            j = i + 1
            while j < n and _is_word_char(source[j]):
                j += 1
            spans.append((WORD, start, j, sline, scol))
            col += j - start
            i = j
            continue

        if ch.isdecimal():
            j = _scan_number(source, i)
            spans.append((NUMBER, start, j, sline, scol))
            col += j - start
            i = j
            continue

        if ch.isspace():
            j = i + 1
            while (
                j < n
                and source[j].isspace()
                and source[j] != "\n"
                and source[j] != "\r"
            ):
                j += 1
            spans.append((WHITESPACE, start, j, sline, scol))
            col += j - start
            i = j
            continue

        if source[i:i + 3] in _OPS3:
            spans.append((PUNCT, start, i + 3, sline, scol))
            col += 3
            i += 3
            continue
        if source[i:i + 2] in _OPS2:
            spans.append((PUNCT, start, i + 2, sline, scol))
            col += 2
            i += 2
            continue

        kind = PUNCT if _is_punct_char(ch) else OTHER
        spans.append((kind, start, i + 1, sline, scol))
        col += 1
        i += 1
    return spans, warnings
