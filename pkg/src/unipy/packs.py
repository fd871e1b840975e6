"""Language packs: per-language dictionaries driving translation.

A pack file is a small YAML document (UTF-8) mapping local keywords, digits,
and punctuation to their standard Python equivalents:

    code: ur
    name: Urdu
    direction: rtl
    keywords:
      "اگر": "if"
      "جب تک": "while"
    digits:      # optional; a built-in table is used when omitted and known
      "۰": "0"
    punctuation: # optional
      "۔": "."

Packs are loaded with order preserved, validated, and inverted to obtain the
English-to-local mapping used for reverse translation. Packs may bind the
same local key more than once (e.g. one word standing for both ``is`` and
``==``); the first binding defines forward translation, every binding feeds
the reverse direction, and the overlap is reported as a conflation. That is
exactly the shape that makes some round trips lossy, so it is kept loadable
rather than rejected.
"""

from __future__ import annotations

import keyword
import os
from dataclasses import dataclass
from pathlib import Path

import yaml

BUILTIN_DIGITS: dict[str, dict[str, str]] = {
    # Eastern Arabic-Indic digits, U+06F0..U+06F9.
    "ur": {chr(0x06F0 + i): str(i) for i in range(10)},
    # Devanagari digits, U+0966..U+096F.
    "hi": {chr(0x0966 + i): str(i) for i in range(10)},
}

_KNOWN_TOP_KEYS = ("code", "name", "direction", "keywords", "digits", "punctuation")

_PYTHON_KEYWORDS = frozenset(keyword.kwlist) | frozenset(keyword.softkwlist)


class PackError(Exception):
    """Raised for unreadable, unparsable, or fatally invalid pack files."""


@dataclass(frozen=True)
class LanguagePack:
    """One language's immutable mapping bundle. Treat all fields as read-only."""

    code: str
    name: str
    direction: str  # "ltr" or "rtl"
    keywords: dict[str, str]  # local -> English, first binding per key
    digits: dict[str, str]  # local digit char -> "0".."9"
    punctuation: dict[str, str]  # local char -> ASCII char
    # Every (local, english) pair in file order, including repeated keys.
    bindings: tuple[tuple[str, str], ...] = ()
    # Unknown top-level YAML keys, surfaced as validation warnings.
    extra_keys: tuple[str, ...] = ()


@dataclass(frozen=True)
class PackValidationReport:
    errors: tuple[str, ...] = ()
    # english value bound by two or more distinct local keys
    ambiguities: tuple[tuple[str, tuple[str, ...]], ...] = ()
    # one local key bound to two or more english values
    conflations: tuple[tuple[str, tuple[str, ...]], ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors


@dataclass(frozen=True)
class ReversePack:
    source_pack_code: str
    keywords: dict[str, str]  # English -> local
    digits: dict[str, str]  # "0".."9" -> local digit
    punctuation: dict[str, str]  # ASCII char -> local char
    dropped: tuple[tuple[str, tuple[str, ...]], ...] = ()


def _scalar(node: yaml.Node, what: str, origin: str) -> str:
    if not isinstance(node, yaml.ScalarNode):
        raise PackError(
            f"{origin}:{node.start_mark.line + 1}: {what} must be a scalar"
        )
    return str(node.value)


def _mapping_items(node: yaml.Node, what: str, origin: str) -> list[tuple[str, str, int]]:
    """Flatten a YAML mapping node to (key, value, line) triples in file order.

    Duplicate keys are preserved; deciding what they mean is the caller's job.
    """
    if isinstance(node, yaml.ScalarNode) and node.value in ("", None):
        return []
    if not isinstance(node, yaml.MappingNode):
        raise PackError(
            f"{origin}:{node.start_mark.line + 1}: {what} must be a mapping"
        )
    items = []
    for key_node, value_node in node.value:
        key = _scalar(key_node, f"{what} key", origin)
        value = _scalar(value_node, f"{what} value", origin)
        items.append((key, value, key_node.start_mark.line + 1))
    return items


def loads_pack(text: str, origin: str = "<string>") -> LanguagePack:
    """Parse pack YAML from a string. ``origin`` names the source in errors."""
    try:
        root = yaml.compose(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"{origin}:{mark.line + 1}" if mark else origin
        raise PackError(f"{where}: malformed pack file: {exc}") from exc
    if root is None:
        raise PackError(f"{origin}: empty pack file")
    if not isinstance(root, yaml.MappingNode):
        raise PackError(f"{origin}: pack file must be a YAML mapping")

    fields: dict[str, yaml.Node] = {}
    extra_keys = []
    for key_node, value_node in root.value:
        key = _scalar(key_node, "top-level key", origin)
        if key in fields:
            raise PackError(
                f"{origin}:{key_node.start_mark.line + 1}: duplicate top-level key {key!r}"
            )
        if key in _KNOWN_TOP_KEYS:
            fields[key] = value_node
        else:
            extra_keys.append(key)

    if "code" not in fields:
        raise PackError(f"{origin}: missing required key 'code'")
    if "keywords" not in fields:
        raise PackError(f"{origin}: missing required key 'keywords'")

    code = _scalar(fields["code"], "code", origin)
    name = _scalar(fields["name"], "name", origin) if "name" in fields else code
    direction = (
        _scalar(fields["direction"], "direction", origin)
        if "direction" in fields
        else "ltr"
    )

    bindings: list[tuple[str, str]] = []
    keywords: dict[str, str] = {}
    for key, value, _line in _mapping_items(fields["keywords"], "keywords", origin):
        bindings.append((key, value))
        keywords.setdefault(key, value)

    if "digits" in fields:
        digit_items = _mapping_items(fields["digits"], "digits", origin)
        digits = {}
        for key, value, line in digit_items:
            if key in digits:
                raise PackError(f"{origin}:{line}: duplicate digit key {key!r}")
            digits[key] = value
    else:
        digits = dict(BUILTIN_DIGITS.get(code, {}))

    punctuation = {}
    if "punctuation" in fields:
        for key, value, line in _mapping_items(
            fields["punctuation"], "punctuation", origin
        ):
            if key in punctuation:
                raise PackError(f"{origin}:{line}: duplicate punctuation key {key!r}")
            punctuation[key] = value

    pack = LanguagePack(
        code=code,
        name=name,
        direction=direction,
        keywords=keywords,
        digits=digits,
        punctuation=punctuation,
        bindings=tuple(bindings),
        extra_keys=tuple(extra_keys),
    )
    report = validate_pack(pack)
    if report.errors:
        raise PackError(f"{origin}: {report.errors[0]}")
    return pack


def load_pack(path: str | Path) -> LanguagePack:
    """Load and validate a pack file. Raises PackError on any fatal defect."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except FileNotFoundError:
        raise PackError(f"pack file not found: {path}") from None
    except OSError as exc:
        raise PackError(f"cannot read pack file {path}: {exc}") from exc
    return loads_pack(text, origin=str(path))


def _check_key_shape(key: str, what: str, errors: list[str]) -> None:
    if not key:
        errors.append(f"empty {what}")
        return
    if key != key.strip():
        errors.append(f"{what} {key!r} has leading or trailing whitespace")
        return
    for sep in ("  ", "\t", "\n", "\r"):
        if sep in key:
            errors.append(
                f"{what} {key!r} must separate words with single spaces"
            )
            return


def validate_pack(pack: LanguagePack) -> PackValidationReport:
    """Inspect a pack; defects come back in the report, never as exceptions."""
    errors: list[str] = []
    warnings: list[str] = []

    if not pack.code or not (pack.code.isascii() and pack.code.islower()):
        errors.append(f"code {pack.code!r} must be lowercase ASCII")
    if pack.direction not in ("ltr", "rtl"):
        errors.append(f"direction {pack.direction!r} must be 'ltr' or 'rtl'")

    for local, english in pack.bindings:
        _check_key_shape(local, "keyword key", errors)
        _check_key_shape(english, f"value for keyword {local!r}", errors)

    if pack.digits:
        if len(pack.digits) != 10 or sorted(pack.digits.values()) != [
            str(i) for i in range(10)
        ]:
            errors.append(
                "digit table must map exactly ten characters onto '0'..'9'"
            )
        for local in pack.digits:
            if len(local) != 1:
                errors.append(f"digit key {local!r} must be a single character")

    seen_punct_values = {}
    for local, ascii_char in pack.punctuation.items():
        if len(local) != 1:
            errors.append(f"punctuation key {local!r} must be a single character")
        if len(ascii_char) != 1 or not ascii_char.isascii():
            errors.append(
                f"punctuation value {ascii_char!r} for {local!r} must be a single ASCII character"
            )
        elif ascii_char in seen_punct_values:
            errors.append(
                f"punctuation value {ascii_char!r} appears under both "
                f"{seen_punct_values[ascii_char]!r} and {local!r}"
            )
        else:
            seen_punct_values[ascii_char] = local

    # Two or more distinct local keys sharing one english value: the reverse
    # direction must pick one, so the rest will be dropped by invert_pack.
    by_value: dict[str, list[str]] = {}
    for local, english in pack.keywords.items():
        by_value.setdefault(english, []).append(local)
    ambiguities = tuple(
        (english, tuple(locals_))
        for english, locals_ in by_value.items()
        if len(locals_) > 1
    )

    # One local key bound to two or more english values: forward translation
    # keeps the first sense, so round trips through the others are lossy.
    by_key: dict[str, list[str]] = {}
    for local, english in pack.bindings:
        senses = by_key.setdefault(local, [])
        if english not in senses:
            senses.append(english)
    conflations = tuple(
        (local, tuple(senses)) for local, senses in by_key.items() if len(senses) > 1
    )
    for local, senses in conflations:
        warnings.append(
            f"keyword {local!r} is bound to multiple english tokens "
            f"({', '.join(senses)}); forward translation uses {senses[0]!r}, "
            "so programs using the others will not round-trip"
        )

    english_values = {english for _, english in pack.bindings}
    for local in pack.keywords:
        if local in _PYTHON_KEYWORDS:
            warnings.append(
                f"keyword key {local!r} is itself a Python keyword; translating "
                "twice will not be idempotent"
            )
        elif local in english_values:
            warnings.append(
                f"keyword key {local!r} also appears as an english value; "
                "translating twice will not be idempotent"
            )

    for key in pack.extra_keys:
        warnings.append(f"unknown top-level key {key!r} ignored")

    return PackValidationReport(
        errors=tuple(errors),
        ambiguities=ambiguities,
        conflations=conflations,
        warnings=tuple(warnings),
    )


def invert_pack(pack: LanguagePack) -> ReversePack:
    """Flip a pack for English-to-local translation.

    When several local keys share an english value, the first in file order
    wins and the losers are recorded in ``dropped``. A conflated key (one
    local word with several english senses) contributes an entry for every
    sense, all pointing back at the same local word.
    """
    report = validate_pack(pack)
    if report.errors:
        raise PackError(f"invalid pack {pack.code!r}: {report.errors[0]}")
    keywords: dict[str, str] = {}
    losers: dict[str, list[str]] = {}
    for local, english in pack.bindings:
        if english not in keywords:
            keywords[english] = local
        elif keywords[english] != local:
            losing = losers.setdefault(english, [])
            if local not in losing:
                losing.append(local)
    dropped = tuple((english, tuple(locals_)) for english, locals_ in losers.items())
    return ReversePack(
        source_pack_code=pack.code,
        keywords=keywords,
        digits={v: k for k, v in pack.digits.items()},
        punctuation={v: k for k, v in pack.punctuation.items()},
        dropped=dropped,
    )


def _bundled_dir() -> Path:
    return Path(__file__).resolve().parent / "data"


def available_packs() -> dict[str, Path]:
    """Map pack code -> file path for every discoverable pack.

    Bundled packs are listed first; files in the UNIPY_PACKS directory
    override bundled packs with the same code.
    """
    found: dict[str, Path] = {}
    for path in sorted(_bundled_dir().glob("*.yaml")):
        found[path.stem] = path
    env_dir = os.environ.get("UNIPY_PACKS")
    if env_dir:
        for pattern in ("*.yaml", "*.yml"):
            for path in sorted(Path(env_dir).glob(pattern)):
                found[path.stem] = path
    return found


def find_pack(code_or_path: str) -> LanguagePack:
    """Resolve a pack by explicit file path, UNIPY_PACKS directory, or bundle."""
    candidate = Path(code_or_path)
    if (
        candidate.suffix in (".yaml", ".yml")
        or os.sep in code_or_path
        or candidate.is_file()
    ):
        return load_pack(candidate)
    packs = available_packs()
    if code_or_path in packs:
        return load_pack(packs[code_or_path])
    known = ", ".join(sorted(packs)) or "none"
    raise PackError(f"unknown language pack {code_or_path!r} (available: {known})")
