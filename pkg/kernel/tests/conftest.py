"""Kernel test fixtures. Everything rides on the installed unipy CLI."""

from __future__ import annotations

import shutil

import pytest

from unipy_kernel.session import KernelSession


def pytest_configure(config):
    # Registered here as well as in pyproject.toml so the marker is known
    # even when pytest's rootdir is not the kernel directory.
    config.addinivalue_line(
        "markers", "works_without_cli: test runs even when the unipy CLI is absent"
    )


def pytest_collection_modifyitems(config, items):
    if shutil.which("unipy"):
        return
    skip = pytest.mark.skip(reason="the unipy CLI is not installed")
    for item in items:
        if "works_without_cli" not in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def ur_session() -> KernelSession:
    return KernelSession("ur")


@pytest.fixture
def hi_session() -> KernelSession:
    return KernelSession("hi")
