"""Splitting lemma scan at a chosen size, reporting cases and wall time per level."""

import argparse
import time

from hfarith.verify import run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bits", type=int, default=12, help="scan sets with code below 2**bits")
    ap.add_argument("--levels", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--max-term", type=int, default=5)
    args = ap.parse_args()

    for n in args.levels:
        t0 = time.perf_counter()
        r = run_suite("splitting", {"code_max": 1 << args.bits, "levels": [n], "max_term": args.max_term})
        status = "ok" if r.passed else f"{len(r.failures)} counterexamples"
        print(f"n={n}  cases={r.cases}  {time.perf_counter() - t0:.2f}s  {status}")


if __name__ == "__main__":
    main()
