"""Compare the pure-Python scanner against the compiled extension.

Usage:
    python benchmarks/bench_scanner.py [--repeat 5] [--corpus corpus]

Feeds every corpus program (plus a synthetic mixed-script blob) through both
backends and reports per-backend throughput, then re-checks that the two
agree span for span on every input.
"""

from __future__ import annotations

import argparse
import statistics
import time
from pathlib import Path

from unipy.lexer import COMPILED, scan_backends


def synthetic_blob() -> str:
    lines = []
    for i in range(400):
        lines.append(f"اگر x{i} == ۲{i % 10}:")
        lines.append(f"    لکھو('قدر {i}')  # تبصرہ نمبر {i}")
        lines.append(f"total_{i} = 0x{i:x} + {i}.5e-2")
        lines.append('s = """multi\nline {}"""'.format(i))
    return "\n".join(lines) + "\n"


def load_sources(corpus: Path) -> list[str]:
    sources = [p.read_text(encoding="utf-8") for p in sorted(corpus.glob("*.py"))]
    sources.append(synthetic_blob())
    return sources


def time_backend(scan, sources: list[str], repeat: int) -> list[float]:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        for source in sources:
            scan(source)
        times.append((time.perf_counter() - t0) * 1000.0)
    return times


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--corpus", type=Path,
                        default=Path(__file__).resolve().parent.parent / "corpus")
    args = parser.parse_args()

    backends = scan_backends()
    if not COMPILED:
        print("compiled extension not built; timing the pure scanner only")

    sources = load_sources(args.corpus)
    total_chars = sum(len(s) for s in sources)
    print(f"{len(sources)} sources, {total_chars:,} characters, "
          f"repeat={args.repeat}")

    results = {}
    for name, scan in backends.items():
        times = time_backend(scan, sources, args.repeat)
        best = min(times)
        results[name] = best
        mean = statistics.mean(times)
        rate = total_chars / best / 1000.0  # chars per us -> M chars/s
        print(f"{name:>9}: best {best:7.1f} ms  mean {mean:7.1f} ms  "
              f"{rate:6.1f} Mchar/s")

    if "compiled" in results:
        mismatch = 0
        for source in sources:
            if backends["pure"](source) != backends["compiled"](source):
                mismatch += 1
        speedup = results["pure"] / results["compiled"]
        print(f"  speedup: {speedup:.1f}x  (agreement: "
              f"{'OK' if mismatch == 0 else f'{mismatch} MISMATCHES'})")
        return 1 if mismatch else 0
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
