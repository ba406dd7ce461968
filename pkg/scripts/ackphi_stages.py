"""Stage table for ACK_phi: start index, term count and running total per stage."""

import argparse

from hfarith.systems import PHIS, ack_phi, closure_witness_gamma


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("phi", choices=sorted(PHIS))
    ap.add_argument("K", type=int)
    ap.add_argument("--stages", type=int, default=4)
    args = ap.parse_args()

    _, plan = ack_phi(args.phi, args.K)
    print(f"phi={args.phi} K={args.K} N={plan.N}")
    print("  ".join(("n", "start", "count", "h_n", "gamma(h_n)")))
    for n in range(args.stages + 1):
        st = plan.stage(n)
        # starts past 2_4 are far too long to print in decimal
        start = "l_0" if st.start_level is None else (
            f"l_{st.start_index}" if st.start_level <= 4 else f"l_(2_{st.start_level})")
        gamma = closure_witness_gamma(plan, st.h).size
        print("  ".join(str(x) for x in (n, start, st.count, st.h, gamma)))


if __name__ == "__main__":
    main()
