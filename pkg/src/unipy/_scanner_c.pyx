# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled scanner kernel, the hot-loop twin of unipy._scanner.

Keep the control flow in lockstep with _scanner.py; the equivalence test
in tests/test_lexer.py fuzzes both implementations against each other.
"""

from cpython.unicode cimport (
    Py_UNICODE_ISALPHA,
    Py_UNICODE_ISDECIMAL,
    Py_UNICODE_ISSPACE,
)

import unicodedata

WORD = 0
NUMBER = 1
STRING = 2
COMMENT = 3
PUNCT = 4
WHITESPACE = 5
NEWLINE = 6
OTHER = 7

cdef frozenset _OPS3 = frozenset(("**=", "//=", ">>=", "<<=", "..."))
cdef frozenset _OPS2 = frozenset(
    ("**", "//", ">>", "<<", "==", "!=", ">=", "<=", "->", ":=",
     "+=", "-=", "*=", "/=", "%=", "@=", "&=", "|=", "^=")
)

cdef object _category = unicodedata.category


cdef inline bint _is_prefix_char(Py_UCS4 ch):
    return ch in u"rbfuRBFU"


cdef inline bint _is_quote(Py_UCS4 ch):
    return ch == u"'" or ch == u'"'


cdef inline bint _is_word_char(Py_UCS4 ch):
    if ch == u"_":
        return True
    if Py_UNICODE_ISALPHA(ch) or Py_UNICODE_ISDECIMAL(ch):
        return True
    # Py_UCS4 coerces to a 1-char str when passed to a Python call.
    return (<str>_category(ch))[0] == "M"


cdef inline bint _is_punct_char(Py_UCS4 ch):
    cdef str cat
    if ch < 128:
        if Py_UNICODE_ISALPHA(ch) or Py_UNICODE_ISDECIMAL(ch):
            return False
        if ch == u"_" or Py_UNICODE_ISSPACE(ch):
            return False
        return True
    cat = <str>_category(ch)
    return cat[0] == "P" or cat[0] == "S"


cdef Py_ssize_t _scan_string(str source, Py_ssize_t q, bint *terminated):
    cdef Py_ssize_t n = len(source)
    cdef Py_UCS4 quote = source[q]
    cdef Py_UCS4 c
    cdef Py_ssize_t j
    terminated[0] = True
    if q + 2 < n and source[q + 1] == quote and source[q + 2] == quote:
        j = q + 3
        while j < n:
            c = source[j]
            if c == u"\\":
                j += 2
                continue
            if (
                c == quote
                and j + 2 < n
                and source[j + 1] == quote
                and source[j + 2] == quote
            ):
                return j + 3
            j += 1
        terminated[0] = False
        return n
    j = q + 1
    while j < n:
        c = source[j]
        if c == u"\\":
            j += 2
            continue
        if c == quote:
            return j + 1
        j += 1
    terminated[0] = False
    return n


cdef Py_ssize_t _scan_number(str source, Py_ssize_t i):
    cdef Py_ssize_t n = len(source)
    cdef Py_UCS4 c, base
    cdef str digits
    cdef Py_ssize_t j
    if (
        source[i] == u"0"
        and i + 1 < n
        and source[i + 1] in u"xXoObB"
        and i + 2 < n
    ):
        base = source[i + 1]
        if base == u"x" or base == u"X":
            digits = "0123456789abcdefABCDEF_"
        elif base == u"o" or base == u"O":
            digits = "01234567_"
        else:
            digits = "01_"
        if source[i + 2] in digits:
            j = i + 3
            while j < n and source[j] in digits:
                j += 1
            return j
    j = i
    while j < n:
        c = source[j]
        if Py_UNICODE_ISDECIMAL(c) or c == u"_":
            j += 1
            continue
        if c == u"." and j + 1 < n and Py_UNICODE_ISDECIMAL(source[j + 1]):
            j += 1
            continue
        if c == u"e" or c == u"E":
            if j + 1 < n and Py_UNICODE_ISDECIMAL(source[j + 1]):
                j += 1
                continue
            if (
                j + 2 < n
                and (source[j + 1] == u"+" or source[j + 1] == u"-")
                and Py_UNICODE_ISDECIMAL(source[j + 2])
            ):
                j += 2
                continue
            break
        break
    return j


def scan(str source):
    cdef list spans = []
    cdef list warnings = []
    cdef Py_ssize_t n = len(source)
    cdef Py_ssize_t i = 0, start, j, qpos, end, k
    cdef Py_ssize_t line = 1, col = 1, sline, scol
    cdef Py_UCS4 ch, c
    cdef bint terminated
    cdef int kind
    while i < n:
        start = i
        sline = line
        scol = col
        ch = source[i]

        if ch == u"\r":
            i += 2 if i + 1 < n and source[i + 1] == u"\n" else 1
            spans.append((NEWLINE, start, i, sline, scol))
            line += 1
            col = 1
            continue
        if ch == u"\n":
            i += 1
            spans.append((NEWLINE, start, i, sline, scol))
            line += 1
            col = 1
            continue

        qpos = -1
        if _is_quote(ch):
            qpos = i
        elif _is_prefix_char(ch):
            if i + 1 < n and _is_quote(source[i + 1]):
                qpos = i + 1
            elif (
                i + 2 < n
                and _is_prefix_char(source[i + 1])
                and _is_quote(source[i + 2])
            ):
                qpos = i + 2
        if qpos >= 0:
            end = _scan_string(source, qpos, &terminated)
            if not terminated:
                warnings.append(("unterminated-string", sline, scol))
            spans.append((STRING, start, end, sline, scol))
            k = start
            while k < end:
                c = source[k]
                if c == u"\r":
                    line += 1
                    col = 1
                    if k + 1 < end and source[k + 1] == u"\n":
                        k += 1
                elif c == u"\n":
                    line += 1
                    col = 1
                else:
                    col += 1
                k += 1
            i = end
            continue

        if ch == u"#":
            j = i + 1
            while j < n and source[j] != u"\n" and source[j] != u"\r":
                j += 1
            spans.append((COMMENT, start, j, sline, scol))
            col += j - start
            i = j
            continue

        if _is_word_char(ch) and not Py_UNICODE_ISDECIMAL(ch):
            j = i + 1
            while j < n and _is_word_char(source[j]):
                j += 1
            spans.append((WORD, start, j, sline, scol))
            col += j - start
            i = j
            continue

        if Py_UNICODE_ISDECIMAL(ch):
            j = _scan_number(source, i)
            spans.append((NUMBER, start, j, sline, scol))
            col += j - start
            i = j
            continue

        if Py_UNICODE_ISSPACE(ch):
            j = i + 1
            while (
                j < n
                and Py_UNICODE_ISSPACE(source[j])
                and source[j] != u"\n"
                and source[j] != u"\r"
            ):
                j += 1
            spans.append((WHITESPACE, start, j, sline, scol))
            col += j - start
            i = j
            continue

        if i + 3 <= n and source[i:i + 3] in _OPS3:
            spans.append((PUNCT, start, i + 3, sline, scol))
            col += 3
            i += 3
            continue
        if i + 2 <= n and source[i:i + 2] in _OPS2:
            spans.append((PUNCT, start, i + 2, sline, scol))
            col += 2
            i += 2
            continue

        kind = PUNCT if _is_punct_char(ch) else OTHER
        spans.append((kind, start, i + 1, sline, scol))
        col += 1
        i += 1
    return spans, warnings
