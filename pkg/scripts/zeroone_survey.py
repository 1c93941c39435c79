#!/usr/bin/env python3
"""Survey zero/one circulants: singular classes per (n, ones) cell.

Sweeps all prime-power sizes n <= nmax and every ones count 0 <= m <= n,
deciding each rotation class exactly, and prints one row per cell with the
ones-count band verdict next to the measured singular count.  Cells inside
the band are guaranteed clean; the survey shows how conservative the band
is outside it.
"""

from __future__ import annotations

import argparse
import os

from circa import is_prime_power, ones_count_criterion, zeroone_scan


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nmax", type=int, default=16, help="largest size to survey (<= 20)")
    parser.add_argument("--threads", type=int, default=int(os.environ.get("CIRCA_THREADS", "1")))
    args = parser.parse_args()

    print(f"{'n':>4} {'ones':>5} {'band':>5} {'classes':>8} {'singular':>9} {'nonsingular':>12}")
    for n in range(2, args.nmax + 1):
        if is_prime_power(n) is None:
            continue
        for m in range(0, n + 1):
            report = zeroone_scan(n, m, threads=args.threads)
            band = "yes" if ones_count_criterion(n, m) else "no"
            print(
                f"{n:>4} {m:>5} {band:>5} {report.classes_tested:>8} "
                f"{len(report.singular_classes):>9} {report.nonsingular_classes:>12}"
            )
            if not report.cross_check_ok:
                raise SystemExit(f"band violated at n={n}, m={m}: {report.singular_classes}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
