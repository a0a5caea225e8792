#!/usr/bin/env python3
"""Print the sign-cancelling pairing over a range of valuations.

For each j the table lists every code of valuation j or j-1, its partner,
and the relation; the footer line checks that the signed-sum difference
equals the pentagonal coefficient at j. Fixed points appear exactly at
pentagonal j.
"""

import argparse

from partlab import enumerate_Bj, euler_e, involution, polarity, valuation


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=2)
    ap.add_argument("--hi", type=int, default=12)
    args = ap.parse_args(argv)

    for j in range(args.lo, args.hi + 1):
        here, prev = enumerate_Bj(j), enumerate_Bj(j - 1)
        print(f"j = {j}  |B_{j}| = {len(here)}  |B_{j - 1}| = {len(prev)}")
        for code in here + prev:
            image = involution(j, code)
            sign = "+" if polarity(code) > 0 else "-"
            tag = "fixed" if image == code else ""
            print(f"  {code.bits:>14} ({sign}, v={valuation(code)}) -> "
                  f"{image.bits:>14} {tag}")
        diff = sum(polarity(c) for c in here) - sum(polarity(c) for c in prev)
        mark = "ok" if diff == euler_e(j) else "MISMATCH"
        print(f"  signed-sum difference {diff}, pentagonal coefficient "
              f"{euler_e(j)}  [{mark}]")
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
