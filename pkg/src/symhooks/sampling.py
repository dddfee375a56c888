"""Seeded random objects for the verification sweeps.

Default symbol shape: d in {2, 3, 4}, at most 6 beads per row, every bead
below 12. Failures reproduce from (seed, trial index).
"""

from __future__ import annotations

import random
from fractions import Fraction

from .beta_sets import BetaSet
from .hook_functions import DataTuple
from .symbols import DSymbol

DEFAULT_SEED = 20110125


def random_beta_set(rng: random.Random, max_element: int = 30, max_size: int | None = None) -> BetaSet:
    size = rng.randint(0, max_element + 1 if max_size is None else min(max_size, max_element + 1))
    return BetaSet(rng.sample(range(max_element + 1), size))


def random_symbol(rng: random.Random, ds=(2, 3, 4), max_row: int = 6, bound: int = 12) -> DSymbol:
    d = rng.choice(ds)
    return DSymbol(rng.sample(range(bound), rng.randint(0, max_row)) for _ in range(d))


def random_rational(rng: random.Random, span: int = 6, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_data_tuple(rng: random.Random, d: int) -> DataTuple:
    k = Fraction(rng.randint(0, 6), rng.randint(1, 3))
    return DataTuple([random_rational(rng) for _ in range(d)], k)
