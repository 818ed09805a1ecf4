"""Time the full lex/parse/evaluate pipeline on a program file."""

import argparse
import io
import statistics
import time
from pathlib import Path

from defs.cli import RunConfig, run

DEFAULT = Path(__file__).resolve().parent.parent / "tests" / "golden" / "sample.defs"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("path", nargs="?", default=str(DEFAULT))
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--ext", action="store_true")
    args = ap.parse_args()

    times = []
    for _ in range(args.repeat):
        out, err = io.StringIO(), io.StringIO()
        start = time.perf_counter()
        code = run(RunConfig(input=args.path, ext=args.ext), out, err)
        times.append(time.perf_counter() - start)
    if code:
        print(err.getvalue(), end="")
    ms = [t * 1000 for t in times]
    print(f"{args.path}: exit {code}")
    print(f"first {ms[0]:.3f} ms  median {statistics.median(ms):.3f} ms  max {max(ms):.3f} ms")


if __name__ == "__main__":
    main()
