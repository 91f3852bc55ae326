"""Print #NC_2(n) next to the weighted Motzkin sum, the Dyck sum and the closed form."""

import argparse
import time

from ncmotzkin.contfrac import SFraction, s_expand
from ncmotzkin.exactnum import D_WEIGHTS, FIB2, weight_d
from ncmotzkin.partitions import count_nc
from ncmotzkin.paths import Flavor, weighted_sum
from ncmotzkin.series import gf_nc2


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=12)
    args = ap.parse_args()

    gf = gf_nc2(args.max_n)
    sf = s_expand(SFraction(weight_d), args.max_n)
    print(f"{'n':>3} {'NC_2(n)':>10} {'Mot(b,l)':>10} {'Dyck(d)':>10} {'S(x;d)':>10} {'gf':>10}  secs")
    for n in range(args.max_n + 1):
        t0 = time.perf_counter()
        nc = count_nc(2, n, max_n=args.max_n)
        dt = time.perf_counter() - t0
        row = [nc, weighted_sum(Flavor.MOTZKIN, n, FIB2), weighted_sum(Flavor.DYCK, n, D_WEIGHTS), sf[n], gf[n]]
        flag = "" if len(set(row)) == 1 else "  MISMATCH"
        print(f"{n:>3} " + " ".join(f"{str(v):>10}" for v in row) + f"  {dt:.2f}{flag}")


if __name__ == "__main__":
    main()
