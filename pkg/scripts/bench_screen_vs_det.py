#!/usr/bin/env python3
"""Benchmark: divisor-condition screen versus full exact determinants.

Generates seeded random rational rows for a range of sizes and times three
exact routes per size: the screen alone, fraction-free elimination, and the
cyclotomic-resultant determinant.  The point of the screen is visible here:
it certifies most random rows at a cost that grows far slower than either
determinant.
"""

from __future__ import annotations

import argparse
import random
import time
from fractions import Fraction

from circa import det_bareiss, det_resultant, first_row, screen
from circa.conditions import ScreenOutcome

ENTRY_POOL = [Fraction(k) for k in range(-3, 4)] + [Fraction(1, 2), Fraction(-2, 3)]


def bench(label, fn, rows):
    start = time.perf_counter()
    results = [fn(row) for row in rows]
    elapsed = time.perf_counter() - start
    return elapsed, results


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 24, 32, 48, 64])
    parser.add_argument("--rows-per-size", type=int, default=50)
    parser.add_argument("--seed", type=int, default=20240901)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    print(
        f"{'n':>4} {'rows':>5} {'screen[s]':>10} {'bareiss[s]':>11} "
        f"{'resultant[s]':>13} {'certified':>10}"
    )
    for n in args.sizes:
        rows = [
            first_row([rng.choice(ENTRY_POOL) for _ in range(n)])
            for _ in range(args.rows_per_size)
        ]
        t_screen, screens = bench("screen", screen, rows)
        t_bar, dets_b = bench("bareiss", det_bareiss, rows)
        t_res, dets_r = bench("resultant", det_resultant, rows)
        if dets_b != dets_r:
            raise SystemExit(f"determinant routes disagree at n={n}")
        certified = sum(
            1 for sv in screens if sv.outcome is ScreenOutcome.CERTIFIED_NONSINGULAR
        )
        for sv, det in zip(screens, dets_b):
            if sv.outcome is ScreenOutcome.CERTIFIED_NONSINGULAR and det == 0:
                raise SystemExit(f"screen soundness violated at n={n}")
        print(
            f"{n:>4} {len(rows):>5} {t_screen:>10.3f} {t_bar:>11.3f} "
            f"{t_res:>13.3f} {certified:>9}/{len(rows)}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
