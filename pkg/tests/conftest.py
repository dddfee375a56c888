from __future__ import annotations

from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from symhooks.beta_sets import BetaSet
from symhooks.hook_functions import DataTuple
from symhooks.partitions import Partition
from symhooks.symbols import DSymbol

GOLDEN = Path(__file__).parent / "golden"

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def partitions(draw, max_n: int = 16):
    n = draw(st.integers(0, max_n))
    parts = []
    left = n
    while left:
        p = draw(st.integers(1, min(left, parts[-1] if parts else left)))
        parts.append(p)
        left -= p
    return Partition(tuple(parts))


def beta_sets(max_element: int = 25, max_size: int = 10):
    return st.frozensets(st.integers(0, max_element), max_size=max_size).map(BetaSet)


@st.composite
def symbols(draw, ds=(1, 2, 3, 4), max_element: int = 9, max_row: int = 5):
    d = draw(st.sampled_from(ds))
    rows = [draw(st.frozensets(st.integers(0, max_element), max_size=max_row)) for _ in range(d)]
    return DSymbol(rows)


rationals = st.fractions(min_value=-6, max_value=6, max_denominator=3)


@st.composite
def data_tuples(draw, d: int):
    c = [draw(rationals) for _ in range(d)]
    k = draw(st.fractions(min_value=0, max_value=5, max_denominator=3))
    return DataTuple(c, k)


@st.composite
def symbol_and_tuple(draw):
    S = draw(symbols())
    return S, draw(data_tuples(S.d))


