"""Shared fixtures: the seeded random-row corpus used across suites."""

from __future__ import annotations

import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from circa import FirstRow, first_row

CORPUS_SEED = 987654321
CORPUS_SIZE = 5000
CORPUS_MIN_N = 2
CORPUS_MAX_N = 24

# Entry pool mixing small integers (so singular rows actually occur) with a
# few non-integers (so denominator clearing is exercised).
_ENTRY_POOL = [Fraction(k) for k in range(-3, 4)] + [
    Fraction(1, 2),
    Fraction(-1, 2),
    Fraction(2, 3),
    Fraction(-2, 3),
]


def build_corpus(size: int = CORPUS_SIZE, seed: int = CORPUS_SEED) -> list[FirstRow]:
    rng = random.Random(seed)
    rows = []
    for _ in range(size):
        n = rng.randint(CORPUS_MIN_N, CORPUS_MAX_N)
        rows.append(first_row([rng.choice(_ENTRY_POOL) for _ in range(n)]))
    return rows


@pytest.fixture(scope="session")
def row_corpus() -> list[FirstRow]:
    return build_corpus()
