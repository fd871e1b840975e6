"""Write one Jupyter kernelspec per installed unipy language pack."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from unipy_kernel import cli_bridge


def default_kernels_dir() -> Path:
    return Path(sys.prefix) / "share" / "jupyter" / "kernels"


def kernelspec(code: str, name: str) -> dict:
    return {
        "argv": [
            sys.executable,
            "-m",
            "unipy_kernel",
            "-f",
            "{connection_file}",
        ],
        "display_name": f"UniPy ({name})",
        "language": "python",
        "env": {"UNIPY_LANGUAGE": code},
    }


def install_kernelspecs(
    target: Path | None = None, codes: list[str] | None = None
) -> list[Path]:
    target = target or default_kernels_dir()
    written = []
    for pack in cli_bridge.list_packs():
        if codes and pack["code"] not in codes:
            continue
        spec_dir = target / f"unipy-{pack['code']}"
        spec_dir.mkdir(parents=True, exist_ok=True)
        spec_path = spec_dir / "kernel.json"
        spec_path.write_text(
            json.dumps(
                kernelspec(pack["code"], pack["name"]),
                ensure_ascii=False,
                indent=2,
            )
            + "\n",
            encoding="utf-8",
        )
        written.append(spec_path)
    return written


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        description="install unipy Jupyter kernelspecs (one per language pack)"
    )
    parser.add_argument(
        "--target",
        type=Path,
        default=None,
        help=f"kernels directory (default: {default_kernels_dir()})",
    )
    parser.add_argument(
        "--language",
        action="append",
        dest="codes",
        help="limit to this pack code (repeatable)",
    )
    args = parser.parse_args(argv)
    try:
        written = install_kernelspecs(args.target, args.codes)
    except cli_bridge.CliError as exc:
        print(f"unipy-kernel-install: {exc}", file=sys.stderr)
        return 1
    if not written:
        print("unipy-kernel-install: no matching packs", file=sys.stderr)
        return 1
    for path in written:
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
