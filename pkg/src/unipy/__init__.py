"""unipy: run Python written in your own language.

A dictionary-driven, token-level transpiler: language packs map local
keywords, digits, and punctuation onto standard Python, and the translation
works in both directions, so programs can be written, executed, converted,
and round-trip tested across languages.
"""

from unipy.harness import (
    BenchResult,
    CorpusReport,
    HarnessError,
    RoundTripResult,
    bench,
    corpus_run,
    hazard_tokens,
    roundtrip_check,
)
from unipy.lexer import (
    COMPILED,
    LexWarning,
    Token,
    TokenKind,
    is_opaque,
    tokenize,
    tokenize_with_warnings,
)
from unipy.packs import (
    BUILTIN_DIGITS,
    LanguagePack,
    PackError,
    PackValidationReport,
    ReversePack,
    available_packs,
    find_pack,
    invert_pack,
    load_pack,
    loads_pack,
    validate_pack,
)
from unipy.romanize import transliterate_identifier
from unipy.runner import (
    RunnerError,
    RunReport,
    back_translate_output,
    resolve_interpreter,
    run,
)
from unipy.translator import (
    Direction,
    Substitution,
    TranslationResult,
    pivot,
    translate,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_DIGITS",
    "BenchResult",
    "COMPILED",
    "CorpusReport",
    "Direction",
    "HarnessError",
    "LanguagePack",
    "LexWarning",
    "PackError",
    "PackValidationReport",
    "ReversePack",
    "RoundTripResult",
    "RunReport",
    "RunnerError",
    "Substitution",
    "Token",
    "TokenKind",
    "TranslationResult",
    "available_packs",
    "back_translate_output",
    "bench",
    "corpus_run",
    "find_pack",
    "hazard_tokens",
    "invert_pack",
    "is_opaque",
    "load_pack",
    "loads_pack",
    "pivot",
    "resolve_interpreter",
    "roundtrip_check",
    "run",
    "tokenize",
    "tokenize_with_warnings",
    "translate",
    "transliterate_identifier",
    "validate_pack",
    "__version__",
]
