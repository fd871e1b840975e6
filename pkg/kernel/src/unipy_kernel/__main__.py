"""Launch the Jupyter kernel (requires the `jupyter` extra)."""

from __future__ import annotations

import sys


def main() -> None:
    try:
        from ipykernel.kernelapp import IPKernelApp
    except ImportError:
        sys.exit(
            "unipy_kernel: ipykernel is not installed; "
            "pip install 'unipy-kernel[jupyter]'"
        )
    from unipy_kernel.kernel import UniPyKernel

    IPKernelApp.launch_instance(kernel_class=UniPyKernel)


if __name__ == "__main__":
    main()
