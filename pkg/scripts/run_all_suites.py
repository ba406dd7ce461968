"""Run every verification suite at its default budget and print a summary table."""

import argparse
import json

from hfarith.verify import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true", help="print full JSON reports instead of the table")
    ap.add_argument("suites", nargs="*", default=list(SUITES))
    args = ap.parse_args()

    bad = 0
    print(f"{'suite':<22}{'cases':>10}{'fail':>6}{'secs':>8}")
    for name in args.suites:
        r = run_suite(name, seed=args.seed)
        bad += not r.passed
        if args.json:
            print("\n".join(r.json_lines()))
        else:
            print(f"{name:<22}{r.cases:>10}{len(r.failures):>6}{r.wall_time:>8.2f}")
            for f in r.failures[:3]:
                print("   ", json.dumps(f))
    raise SystemExit(3 if bad else 0)


if __name__ == "__main__":
    main()
