"""Deterministic romanization of non-ASCII identifiers.

The goal is a stable, readable ASCII name, not a linguistically faithful
transcription: every covered character has exactly one Latin rendering, and
anything uncovered falls back to its code point. Collision handling (two
identifiers romanizing to the same name) lives in the translator, which sees
the whole file.
"""

from __future__ import annotations

import unicodedata

# Arabic-script letters as used by Urdu, plus common base Arabic forms.
_ARABIC = {
    "ا": "a", "آ": "a", "أ": "a", "إ": "i", "ء": "", "ؤ": "o", "ئ": "y",
    "ب": "b", "پ": "p", "ت": "t", "ٹ": "t", "ث": "s",
    "ج": "j", "چ": "ch", "ح": "h", "خ": "kh",
    "د": "d", "ڈ": "d", "ذ": "z", "ر": "r", "ڑ": "r", "ز": "z", "ژ": "zh",
    "س": "s", "ش": "sh", "ص": "s", "ض": "z", "ط": "t", "ظ": "z",
    "ع": "a", "غ": "gh", "ف": "f", "ق": "q",
    "ک": "k", "ك": "k", "گ": "g", "ل": "l", "م": "m",
    "ن": "n", "ں": "n", "و": "o", "ہ": "h", "ھ": "h", "ة": "h",
    "ی": "y", "ي": "y", "ى": "a", "ے": "e",
}

# Devanagari consonants, independent vowels, and vowel signs.
_DEVANAGARI = {
    "क": "k", "ख": "kh", "ग": "g", "घ": "gh", "ङ": "ng",
    "च": "ch", "छ": "chh", "ज": "j", "झ": "jh", "ञ": "ny",
    "ट": "t", "ठ": "th", "ड": "d", "ढ": "dh", "ण": "n",
    "त": "t", "थ": "th", "द": "d", "ध": "dh", "न": "n",
    "प": "p", "फ": "ph", "ब": "b", "भ": "bh", "म": "m",
    "य": "y", "र": "r", "ल": "l", "व": "v",
    "श": "sh", "ष": "sh", "स": "s", "ह": "h",
    "अ": "a", "आ": "aa", "इ": "i", "ई": "ee", "उ": "u", "ऊ": "oo",
    "ऋ": "ri", "ए": "e", "ऐ": "ai", "ओ": "o", "औ": "au",
    "ा": "aa", "ि": "i", "ी": "ee", "ु": "u", "ू": "oo",
    "ृ": "ri", "े": "e", "ै": "ai", "ो": "o", "ौ": "au",
    "ं": "n", "ः": "h",
}

ROMAN_TABLE: dict[str, str] = {**_ARABIC, **_DEVANAGARI}


def transliterate_identifier(word: str) -> str:
    """Map an identifier to ASCII letters/digits/underscores, deterministically.

    ASCII characters pass through; covered letters use ROMAN_TABLE; unmapped
    combining marks are dropped (they modify a letter already rendered);
    anything else becomes u<code point>. The result never starts with a digit
    and is never empty.
    """
    parts = []
    for ch in word:
        if ch.isascii():
            parts.append(ch)
        elif ch in ROMAN_TABLE:
            parts.append(ROMAN_TABLE[ch])
        elif unicodedata.category(ch).startswith("M"):
            continue
        else:
            parts.append(f"u{ord(ch):04x}")
    name = "".join(parts)
    if not name:
        return "_"
    if name[0].isdigit():
        return "_" + name
    return name
