import pytest
from hypothesis import given, strategies as st

from symhooks import beta_sets as bs
from symhooks import symbols as sy
from symhooks.beta_sets import BetaSet, InvalidHookError
from symhooks.hook_functions import length_multiset, minimal_tuple
from symhooks.partitions import Partition
from symhooks.symbols import DSymbol, SymbolHook

from conftest import beta_sets, symbols

S15 = DSymbol([[2, 0], [], [3, 2, 0]])
S51 = DSymbol([[9, 7, 4, 2], [3, 1, 0]])


def test_s_d_examples():
    assert sy.s_d(BetaSet([11, 8, 6, 2, 0]), 3) == S15
    assert sy.s_d(BetaSet(), 4) == DSymbol([[]] * 4)
    assert sy.s_d(BetaSet([18, 14, 8, 7, 4, 3, 1]), 2) == S51
    assert str(S15) == "({2,0}|{}|{3,2,0})"


def test_partition_of_symbol_examples():
    assert sy.partition_of_symbol(S51) == Partition((12, 9, 4, 4, 2, 2, 1))
    assert sy.partition_of_symbol(DSymbol([[], [], []])) == Partition(())
    assert sy.partition_of_symbol(S15) == Partition((7, 5, 4, 1))


@given(beta_sets(max_element=30), st.integers(1, 6))
def test_s_d_round_trip(X, d):
    S = sy.s_d(X, d)
    assert S.d == d
    assert sy.s_d_inverse(S) == X


def test_hook_enumeration_examples():
    assert len(sy.hooks(S15)) == 17
    assert sy.hooks(DSymbol([[0], []])) == []
    assert sy.hooks(DSymbol([[], [0]])) == [SymbolHook(0, 0, 1, 0)]
    table = [9, 8, 7, 6, 5, 4, 4, 3, 3, 2, 1, 1, 7, 6, 5, 4, 3, 2, 2, 1, 1,
             4, 3, 2, 1, 3, 2, 1, 0, 2, 1, 1, 0, 0]
    assert length_multiset(minimal_tuple(2), S51).sorted() == sorted(table)
    assert sum(1 for z in sy.hooks(S51) if z.is_short) == 3


@given(symbols())
def test_hooks_are_hooks(S):
    hs = sy.hooks(S)
    assert len(set(hs)) == len(hs)
    assert all(sy.is_hook(S, z) for z in hs)
    # every hook count equals |p(S)|
    assert len(hs) == sy.partition_of_symbol(S).n


@given(symbols(), st.integers(0, 4), st.integers(0, 3))
def test_hook_filters(S, ell, e):
    e %= S.d
    expected = [z for z in sy.hooks(S) if z.length == ell and (z.i - z.j) % S.d == e]
    assert sorted(sy.hooks(S, ell=ell, e=e)) == sorted(expected)
    assert all(not z.is_short for z in sy.hooks(S, long_only=True))


def test_class_count_examples():
    S = DSymbol([[3, 1], [2, 0]])
    assert sy.class_count(S, 0, 1, 0) == 0
    assert sy.class_count(S, 0, 0, 0) == 0
    # X^{+l} holds 0..l-1, so a huge l leaves nothing to count
    assert sy.class_count(S, 0, 0, 10) == 0
    assert sy.class_count(DSymbol([[3, 1], []]), 0, 1, 1) == 2


@given(symbols())
def test_class_count_matches_enumeration(S):
    counts = sy.hook_count(S)
    top = max((max(X) for X in S if len(X)), default=0) + 2
    total = 0
    for i in range(S.d):
        for j in range(S.d):
            for ell in range(top):
                c = sy.class_count(S, i, j, ell)
                assert c == counts.get((i, j, ell), 0)
                total += c
    assert total == len(sy.hooks(S))


def test_remove_hook():
    S = sy.remove_hook(DSymbol([[], [0]]), SymbolHook(0, 0, 1, 0))
    assert S == DSymbol([[0], []])
    with pytest.raises(InvalidHookError):
        sy.remove_hook(S15, SymbolHook(2, 2, 0, 1))


def test_removal_of_three_hooks_reaches_core():
    S = S51
    while True:
        hs = sy.hooks(S, ell=3, e=0)
        if not hs:
            break
        S = sy.remove_hook(S, hs[len(hs) // 2])
    assert S == DSymbol([[4, 2, 1, 0], [3, 1, 0]])


@given(beta_sets(max_element=30), st.integers(1, 5), st.data())
def test_removal_commutes_with_s_d(X, d, data):
    hs = bs.hooks(X)
    if not hs:
        return
    z = data.draw(st.sampled_from(hs))
    w = sy.beta_hook_to_symbol_hook(z, d)
    assert sy.symbol_hook_to_beta_hook(w, d) == z
    assert sy.remove_hook(sy.s_d(X, d), w) == sy.s_d(bs.remove_hook(X, z), d)


def test_t_d_examples():
    assert sy.t_d([Partition((1,)), Partition(()), Partition((1, 1))]) == DSymbol([[2, 0], [1, 0], [2, 1]])
    assert sy.t_d([Partition(())] * 3) == DSymbol([[], [], []])
    six = [Partition((3,)), Partition(()), Partition((1, 1)), Partition(()), Partition(()), Partition(())]
    assert sy.t_d(six) == DSymbol([[4, 0], [1, 0], [2, 1], [1, 0], [1, 0], [1, 0]])


def test_quotient_core_examples():
    assert sy.balanced_quotient(S15) == DSymbol([[2, 0], [1, 0], [2, 1]])
    assert sy.core(S15) == DSymbol([[1, 0], [], [2, 1, 0]])
    assert sy.core_partition(S15) == Partition((4, 2, 1, 1))
    assert sy.reconstruct(sy.balanced_quotient(S15), sy.core(S15)) == S15
    C = DSymbol([[1, 0], [0], []])
    assert sy.reconstruct(DSymbol([[], [], []]), C) == C


@given(symbols())
def test_quotient_core_properties(S):
    Q, C = sy.balanced_quotient(S), sy.core(S)
    assert sy.is_balanced(Q) or all(len(X) == 0 for X in Q)
    assert sy.row_partitions(Q) == sy.row_partitions(S)
    assert C.sizes() == S.sizes()
    assert len(sy.hooks(S)) == len(sy.hooks(Q)) + len(sy.hooks(C))
    assert sy.reconstruct(Q, C) == S


@given(symbols())
def test_balanced_quotient_is_fixed(S):
    Q = sy.balanced_quotient(S)
    assert sy.balanced_quotient(Q) == Q
    if sy.is_balanced(S):
        assert len(set(sy.core(S).sizes())) == 1


@given(symbols())
def test_short_hook_symmetry_for_balanced(S):
    Q = sy.balanced_quotient(S)
    for i in range(Q.d):
        for j in range(i):
            assert len(sy.short_hooks(Q, i, j)) == len(sy.reversed_short_hooks(Q, j, i))


def test_short_hooks_equal_rows():
    S = DSymbol([[3, 1], [3, 1]])
    assert sy.short_hooks(S, 1, 0) == []
    with pytest.raises(ValueError):
        sy.short_hooks(S, 0, 1)


@given(symbols())
def test_partition_correspondence(S):
    corr = sy.hook_correspondence_to_partition(S)
    lam = sy.partition_of_symbol(S)
    assert sorted(corr.values()) == sorted(lam.nodes())
    assert sorted(corr) == sorted(sy.hooks(S))


def test_shift_symbol_preserves_partitions():
    T = sy.shift_symbol(S15, 2)
    assert sy.row_partitions(T) == sy.row_partitions(S15)
