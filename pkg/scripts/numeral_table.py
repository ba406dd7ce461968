"""First terms of a positional system with their digits and coded values."""

import argparse

from hfarith.numerals import coded_value
from hfarith.systems import get_system


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("system", help="e.g. base:vn:3 or len:z:2")
    ap.add_argument("-n", type=int, default=20)
    args = ap.parse_args()

    sys_ = get_system(args.system)
    print(f"{'i':>4}{'|base|':>8}{'len':>5}  digits")
    for i, t in enumerate(sys_.terms(args.n)):
        value = coded_value(t)
        flag = "" if value == i else "  <- mismatch"
        print(f"{i:>4}{t.base.size:>8}{len(t.digits):>5}  {list(t.digits)}{flag}")


if __name__ == "__main__":
    main()
