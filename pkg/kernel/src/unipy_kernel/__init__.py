"""Jupyter kernel for localized Python dialects, powered by the unipy CLI."""

from unipy_kernel.cli_bridge import CliError
from unipy_kernel.session import CompletionReply, ExecutionReply, KernelSession

__version__ = "0.1.0"

__all__ = [
    "CliError",
    "CompletionReply",
    "ExecutionReply",
    "KernelSession",
    "__version__",
]
