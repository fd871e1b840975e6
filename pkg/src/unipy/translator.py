"""Token-level translation between a localized Python dialect and English.

Forward translation maps local keywords, digits, and punctuation to their
English/ASCII forms; reverse translation applies the inverted pack. Only the
matched tokens change: strings and comments are copied verbatim, as is
anything the pack does not cover, so the output always has the same line
structure as the input.

Keywords are matched by greedy longest match over consecutive tokens
separated by exactly one space, which is what lets a two-word key like
"جب تک" stand for ``while``. Matching is exact: no case folding, no Unicode
normalization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from unipy.lexer import Token, TokenKind, is_opaque, tokenize_with_warnings
from unipy.packs import LanguagePack, PackError, invert_pack, validate_pack
from unipy.romanize import transliterate_identifier

KEYWORD = "keyword"
DIGIT = "digit"
PUNCTUATION = "punctuation"
IDENTIFIER = "identifier"


class Direction(Enum):
    FORWARD = "forward"  # local -> English
    REVERSE = "reverse"  # English -> local


@dataclass(frozen=True)
class Substitution:
    line: int
    col: int
    original: str
    replacement: str
    category: str  # keyword | digit | punctuation | identifier


@dataclass(frozen=True)
class TranslationResult:
    output: str
    substitutions: tuple[Substitution, ...]
    warnings: tuple[str, ...]


# Token kinds a keyword key may match. Number is excluded (digits have their
# own mapping); opaque kinds never participate.
_MATCHABLE = frozenset((TokenKind.WORD, TokenKind.PUNCT, TokenKind.OTHER))


class _KeywordMatcher:
    """Greedy longest-match lookup over single-space-separated token runs."""

    def __init__(self, mapping: dict[str, str]):
        self._by_first: dict[str, list[tuple[tuple[str, ...], str]]] = {}
        for key, replacement in mapping.items():
            atoms = tuple(key.split(" "))
            self._by_first.setdefault(atoms[0], []).append((atoms, replacement))
        for entries in self._by_first.values():
            entries.sort(key=lambda entry: len(entry[0]), reverse=True)

    def match(self, tokens: list[Token], i: int) -> tuple[int, str] | None:
        """Try to match a key starting at tokens[i].

        Returns (token count consumed, replacement) for the longest key that
        fits, or None. Multi-atom keys require each following atom to sit
        behind exactly one space.
        """
        entries = self._by_first.get(tokens[i].text)
        if not entries:
            return None
        for atoms, replacement in entries:
            j = i
            matched = True
            for atom in atoms[1:]:
                if (
                    j + 2 < len(tokens)
                    and tokens[j + 1].kind is TokenKind.WHITESPACE
                    and tokens[j + 1].text == " "
                    and tokens[j + 2].kind in _MATCHABLE
                    and tokens[j + 2].text == atom
                ):
                    j += 2
                else:
                    matched = False
                    break
            if matched:
                return j - i + 1, replacement
        return None


def _opaque_key_pattern(keys: dict[str, str]) -> re.Pattern[str] | None:
    if not keys:
        return None
    ordered = sorted(keys, key=len, reverse=True)
    body = "|".join(re.escape(key) for key in ordered)
    return re.compile(rf"(?<!\w)(?:{body})(?!\w)")


def _map_chars(text: str, table: dict[str, str]) -> str:
    return "".join(table.get(ch, ch) for ch in text)


def _is_mixed_number(text: str, table: dict[str, str]) -> bool:
    # Some digits covered by the table, some decimal digits outside it.
    covered = uncovered = False
    for ch in text:
        if ch in table:
            covered = True
        elif ch.isdecimal():
            uncovered = True
    return covered and uncovered


def translate(
    source: str,
    pack: LanguagePack,
    direction: Direction,
    translate_identifiers: bool = False,
) -> TranslationResult:
    """Translate ``source`` through ``pack`` in the given direction."""
    report = validate_pack(pack)
    if report.errors:
        raise PackError(f"invalid pack {pack.code!r}: {report.errors[0]}")
    if direction is Direction.FORWARD:
        keyword_map = pack.keywords
        digit_map = pack.digits
        punct_map = pack.punctuation
    else:
        reverse = invert_pack(pack)
        keyword_map = reverse.keywords
        digit_map = reverse.digits
        punct_map = reverse.punctuation

    tokens, lex_warnings = tokenize_with_warnings(source)
    warnings = [
        f"unterminated string at {w.line}:{w.col} runs to end of input"
        for w in lex_warnings
    ]

    matcher = _KeywordMatcher(keyword_map)
    opaque_pattern = _opaque_key_pattern(keyword_map)
    opaque_keys_seen: set[str] = set()

    renames: dict[str, str] = {}
    used_names: set[str] = set()
    if translate_identifiers:
        used_names.update(keyword_map.values())
        used_names.update(
            t.text for t in tokens if t.kind is TokenKind.WORD and t.text.isascii()
        )

    out: list[str] = []
    substitutions: list[Substitution] = []
    i = 0
    while i < len(tokens):
        token = tokens[i]

        if is_opaque(token):
            if opaque_pattern is not None:
                for hit in opaque_pattern.findall(token.text):
                    if hit not in opaque_keys_seen:
                        opaque_keys_seen.add(hit)
                        warnings.append(
                            f"pack key {hit!r} inside a string or comment at "
                            f"{token.line}:{token.col} left untouched"
                        )
            out.append(token.text)
            i += 1
            continue

        if token.kind in _MATCHABLE:
            hit = matcher.match(tokens, i)
            if hit is not None:
                consumed, replacement = hit
                original = "".join(t.text for t in tokens[i : i + consumed])
                out.append(replacement)
                substitutions.append(
                    Substitution(token.line, token.col, original, replacement, KEYWORD)
                )
                i += consumed
                continue

        if token.kind is TokenKind.NUMBER:
            new_text = _map_chars(token.text, digit_map)
            if _is_mixed_number(token.text, digit_map):
                warnings.append(
                    f"mixed-script number {token.text!r} at {token.line}:{token.col}"
                )
            if new_text != token.text:
                substitutions.append(
                    Substitution(token.line, token.col, token.text, new_text, DIGIT)
                )
            out.append(new_text)
            i += 1
            continue

        if token.kind is TokenKind.WORD:
            new_text = _map_chars(token.text, digit_map)
            if new_text != token.text:
                substitutions.append(
                    Substitution(token.line, token.col, token.text, new_text, DIGIT)
                )
            if translate_identifiers and not new_text.isascii():
                if new_text in renames:
                    final = renames[new_text]
                else:
                    base = transliterate_identifier(new_text)
                    final = base
                    suffix = 2
                    while final in used_names:
                        final = f"{base}_{suffix}"
                        suffix += 1
                    if final != base:
                        warnings.append(
                            f"identifier {new_text!r} transliterates to {base!r}, "
                            f"already taken; renamed to {final!r}"
                        )
                    renames[new_text] = final
                    used_names.add(final)
                substitutions.append(
                    Substitution(token.line, token.col, new_text, final, IDENTIFIER)
                )
                new_text = final
            out.append(new_text)
            i += 1
            continue

        if token.kind is TokenKind.PUNCT and punct_map:
            new_text = _map_chars(token.text, punct_map)
            if new_text != token.text:
                substitutions.append(
                    Substitution(
                        token.line, token.col, token.text, new_text, PUNCTUATION
                    )
                )
            out.append(new_text)
            i += 1
            continue

        out.append(token.text)
        i += 1

    return TranslationResult(
        output="".join(out),
        substitutions=tuple(substitutions),
        warnings=tuple(warnings),
    )


def pivot(
    source: str, from_pack: LanguagePack, to_pack: LanguagePack
) -> TranslationResult:
    """Translate between two dialects with English as the intermediate."""
    to_english = translate(source, from_pack, Direction.FORWARD)
    to_target = translate(to_english.output, to_pack, Direction.REVERSE)
    return TranslationResult(
        output=to_target.output,
        substitutions=to_english.substitutions + to_target.substitutions,
        warnings=to_english.warnings + to_target.warnings,
    )
