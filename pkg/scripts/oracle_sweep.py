"""Compare the parser against the brute-force grouping oracle.

    python3 scripts/oracle_sweep.py --max-tokens 6
"""

import argparse
import time

from defs import brute
from defs.parser import parse_expression


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-tokens", type=int, default=7)
    ap.add_argument("--show", type=int, default=10, help="mismatches to print")
    args = ap.parse_args()

    start = time.perf_counter()
    table = brute.expected_groupings(args.max_tokens)
    ambiguous = sum(len(v) > 1 for v in table.values())
    visited, mismatches = brute.sweep(parse_expression, args.max_tokens, table)
    elapsed = time.perf_counter() - start

    print(f"derivable strings : {len(table)}")
    print(f"ambiguous strings : {ambiguous}")
    print(f"strings decided   : {visited}")
    print(f"mismatches        : {len(mismatches)}")
    print(f"elapsed           : {elapsed:.1f}s")
    for m in mismatches[: args.show]:
        print("  ", m)
    raise SystemExit(1 if mismatches or ambiguous else 0)


if __name__ == "__main__":
    main()
