"""Shared fixtures: bundled packs, a deliberately conflated pack, tiny corpora."""

from __future__ import annotations

from pathlib import Path

import pytest

from unipy.packs import LanguagePack, find_pack, loads_pack

from support import CONFLATED_YAML


@pytest.fixture(scope="session")
def ur_pack() -> LanguagePack:
    return find_pack("ur")


@pytest.fixture(scope="session")
def hi_pack() -> LanguagePack:
    return find_pack("hi")


@pytest.fixture(scope="session")
def zh_pack() -> LanguagePack:
    return find_pack("zh")


@pytest.fixture(scope="session")
def conflated_pack() -> LanguagePack:
    return loads_pack(CONFLATED_YAML, origin="conflated.yaml")


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    here = Path(__file__).resolve().parent.parent / "corpus"
    if not here.is_dir():
        pytest.skip("bundled corpus directory not present")
    return here


@pytest.fixture
def tiny_corpus(tmp_path: Path) -> Path:
    """Three deterministic programs, lexicographically orderable."""
    d = tmp_path / "tiny"
    d.mkdir()
    (d / "a_count.py").write_text(
        "for i in range(3):\n    print(i)\n", encoding="utf-8"
    )
    (d / "b_sum.py").write_text(
        "total = 0\nfor i in range(10):\n    total += i\nprint(total)\n",
        encoding="utf-8",
    )
    (d / "c_text.py").write_text(
        'words = ["aik", "do", "teen"]\nprint(" ".join(words))\n',
        encoding="utf-8",
    )
    return d


@pytest.fixture
def ambiguous_program(tmp_path: Path) -> Path:
    """Uses both `is` and `==`; cannot round-trip under the conflated pack."""
    p = tmp_path / "identity_vs_equality.py"
    p.write_text(
        "x = 5\n"
        "print(x == 5)\n"
        "print(x is None)\n",
        encoding="utf-8",
    )
    return p
