#!/usr/bin/env python3
"""Compare the counting engines on work and wall time.

Emits CSV with one row per engine per checkpoint: cumulative recurrence-table
reads and elapsed seconds after filling the table up to that n. The terms
column is the interesting one — wall time flatters engines with cheap Python
per step, while table reads measure the recurrences themselves.
"""

import argparse
import csv
import sys
import time

from partlab import EngineKind, make_engine


def checkpoints(n_max: int, count: int) -> list[int]:
    marks = sorted({n_max * i // count for i in range(1, count + 1)})
    return [m for m in marks if m > 0]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=400, help="largest n to count")
    ap.add_argument("--checkpoints", type=int, default=8)
    ap.add_argument(
        "--engine",
        action="append",
        choices=[str(k) for k in EngineKind],
        help="repeatable; default all engines",
    )
    ap.add_argument("--out", type=argparse.FileType("w"), default=sys.stdout)
    args = ap.parse_args(argv)

    kinds = [EngineKind(e) for e in args.engine] if args.engine else list(EngineKind)
    writer = csv.writer(args.out)
    writer.writerow(["engine", "n", "digits", "terms", "seconds"])
    for kind in kinds:
        engine = make_engine(kind)
        start = time.perf_counter()
        done = 0
        for mark in checkpoints(args.max, args.checkpoints):
            for n in range(done, mark + 1):
                value = engine.p(n)
            done = mark + 1
            writer.writerow(
                [
                    str(kind),
                    mark,
                    len(str(value)),
                    engine.recurrent_terms,
                    f"{time.perf_counter() - start:.4f}",
                ]
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
