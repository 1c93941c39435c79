#!/usr/bin/env python3
"""Residue scan over primes q with 4q + 1 prime.

For each such q <= qmax, reports p = 4q + 1, the residue r = 2^q mod p, its
class mod 4, and whether the pair qualifies for the quarter-prime
nonsingularity criterion (r mod 4 in {0, 1}).  Ends with the count split.
"""

from __future__ import annotations

import argparse

from circa import four_q_plus_one_scan


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--qmax", type=int, default=200, help="scan primes q <= qmax")
    args = parser.parse_args()

    records = four_q_plus_one_scan(args.qmax)
    print(f"{'q':>6} {'p':>7} {'r = 2^q mod p':>14} {'r mod 4':>8} {'qualifies':>10}")
    for rec in records:
        print(
            f"{rec.q:>6} {rec.p:>7} {rec.residue:>14} {rec.residue_mod_4:>8} "
            f"{'yes' if rec.qualifies else 'no':>10}"
        )
    split = {c: sum(1 for r in records if r.residue_mod_4 == c) for c in (0, 1, 2, 3)}
    qualifying = split[0] + split[1]
    print()
    print(f"pairs: {len(records)}  qualifying (r mod 4 in {{0,1}}): {qualifying}")
    print(f"split by r mod 4: 0 -> {split[0]}, 1 -> {split[1]}, 2 -> {split[2]}, 3 -> {split[3]}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
