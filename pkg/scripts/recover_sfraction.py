"""Recover S-fraction coefficients from the closed-form series and compare with Fibonacci ratios."""

import argparse

from ncmotzkin.contfrac import qd_extract
from ncmotzkin.exactnum import fib, format_rational, weight_d
from ncmotzkin.series import gf_nc2


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=30)
    args = ap.parse_args()

    recovered = qd_extract(gf_nc2(args.count + 1), args.count)
    for m, c in enumerate(recovered):
        if m == 0:
            ratio = "1"
        elif m % 2:
            k = m + 1  # m = 2n-1 -> F_{2n-1}/F_{2n-3}
            ratio = f"F{k - 1}/F{k - 3} = {fib(k - 1)}/{fib(k - 3)}"
        else:
            ratio = f"F{m - 3}/F{m - 1} = {fib(m - 3)}/{fib(m - 1)}"
        ok = "ok" if c == weight_d(m) else "DIFFERS"
        print(f"c_{m:<3} {format_rational(c):>24}   {ratio:<32} {ok}")


if __name__ == "__main__":
    main()
