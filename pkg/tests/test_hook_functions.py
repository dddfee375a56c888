from fractions import Fraction
from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from symhooks import beta_sets as bs
from symhooks import hook_functions as hf
from symhooks import symbols as sy
from symhooks.beta_sets import BetaSet
from symhooks.hook_functions import DataTuple, DimensionError, LengthMultiset
from symhooks.partitions import Partition, character_degree, hook_lengths_direct
from symhooks.symbols import DSymbol, SymbolHook

from conftest import beta_sets, data_tuples, partitions, symbol_and_tuple, symbols

X15 = BetaSet([11, 8, 6, 2, 0])
S15 = DSymbol([[2, 0], [], [3, 2, 0]])
LAM = Partition((7, 5, 4, 1))


def test_data_tuples():
    assert str(hf.minimal_tuple(2)) == "(0,0;1)"
    assert str(hf.partition_tuple(3)) == "(0,1,2;3)"
    assert hf.partition_tuple(1) == hf.minimal_tuple(1)
    assert DataTuple(["1/2", 0], 1).c[0] == Fraction(1, 2)
    with pytest.raises(ValueError):
        DataTuple([0], -1)


def test_shifted_tuple():
    assert str(hf.shifted_tuple(hf.partition_tuple(3), S15)) == "(6,1,11;3)"
    delta = DataTuple([1, "2/3"], 2)
    assert hf.shifted_tuple(delta, DSymbol([[], []])) == delta
    assert hf.partition_shifted_tuple(S15.sizes(), 3) == hf.shifted_tuple(hf.partition_tuple(3), S15)
    with pytest.raises(DimensionError):
        hf.shifted_tuple(hf.minimal_tuple(2), S15)


def test_delta_length_examples():
    z = SymbolHook(5, 2, 1, 0)
    assert hf.delta_length(hf.minimal_tuple(2), z) == 3
    # the partition tuple returns the usual hook length of the beta-set hook
    assert hf.delta_length(hf.partition_tuple(2), z) == (5 * 2 + 1) - (2 * 2 + 0)
    # the -5 entry of the quotient table: hook (0,1,0,4) of the 6-symbol quotient
    delta = DataTuple([3, 6, 7, 4, 5, 2], 3)
    assert hf.delta_length(delta, SymbolHook(0, 1, 0, 4)) == -5


@given(beta_sets(max_element=30), st.integers(1, 5))
def test_partition_tuple_gives_usual_hook_lengths(X, d):
    expected = LengthMultiset(hook_lengths_direct(bs.partition_of(X)))
    assert hf.length_multiset(hf.partition_tuple(d), sy.s_d(X, d)) == expected


def test_multiset_operations():
    A = LengthMultiset([1, 2, 2, Fraction(-7, 2)])
    B = LengthMultiset([2, 3])
    assert (A + B).count(2) == 3
    assert A - B == LengthMultiset([1, 2, Fraction(-7, 2)])
    assert LengthMultiset([2]) <= A and not B <= A
    assert A.symmetric_difference(B) == (LengthMultiset([1, 2, Fraction(-7, 2)]), LengthMultiset([3]))
    assert hf.abs_multiset(A).sorted() == [1, 2, 2, Fraction(7, 2)]
    assert hf.positive_part(LengthMultiset([0, 0, 3, -1])) == LengthMultiset([3, -1])
    assert A.to_strings() == ["-7/2", "1", "2", "2"]
    assert A.product() == -14


def test_orient():
    sizes = (2, 0, 3)
    assert hf.orient(sizes, 0, 1) == (0, 1, 2)
    assert hf.orient(sizes, 0, 2) == (2, 0, 1)
    assert hf.orient((1, 1), 0, 1) == (1, 0, 0)
    assert hf.orient((1, 1), 1, 0) == (1, 0, 0)


def test_example_signs():
    # the two negative entries of the adjusted quotient table
    table = hf.modified_quotient_diagram(LAM, X15, 3)
    assert [v for row in table for v in row if v < 0] == [-7, -5]
    S = DSymbol([[9, 7, 4, 2], [3, 1, 0]])
    from symhooks.ell_structures import ell_quotient, ell_tuple
    Q = ell_quotient(S, 3)
    grid = hf.symbol_length_diagram(ell_tuple(S, 3), Q)
    negatives = sorted(v for row in grid for v in row if v < 0)
    assert negatives == sorted([-1, -2, -1, -5, -2, -3])


@given(symbols())
def test_bijection_is_class_respecting_and_total(S):
    pairing = hf.universal_bijection(S)
    assert sorted(pairing.mapping) == sorted(sy.hooks(S))
    targets = [t for t in pairing.mapping.values()]
    assert len(set(targets)) == len(targets)
    q_hooks = {t.hook for t in targets if t.side == "Q"}
    c_hooks = {t.hook for t in targets if t.side == "C"}
    assert q_hooks == set(sy.hooks(pairing.Q))
    assert c_hooks == set(sy.hooks(pairing.C))


@given(symbols())
def test_balanced_symbols_map_into_quotient(S):
    Q = sy.balanced_quotient(S)
    pairing = hf.universal_bijection(Q)
    assert all(t.side == "Q" for t in pairing.mapping.values())
    assert len(sy.hooks(sy.core(Q))) == 0


def test_cardinalities_example():
    pairing = hf.universal_bijection(S15)
    sides = [t.side for t in pairing.mapping.values()]
    assert (len(sides), sides.count("Q"), sides.count("C")) == (17, 9, 8)


@given(symbol_and_tuple())
def test_pointwise_decomposition(pair):
    S, delta = pair
    report = hf.verify_pointwise_decomposition(S, delta)
    assert report.ok, report.violation
    assert report.checked == len(sy.hooks(S))


@given(symbol_and_tuple())
def test_multiset_decomposition(pair):
    S, delta = pair
    report = hf.verify_multiset_decomposition(S, delta)
    assert report.ok
    assert report.core_lengths <= report.symbol_lengths


def test_decompositions_on_example():
    assert hf.verify_pointwise_decomposition(S15, hf.partition_tuple(3)).ok
    assert hf.verify_multiset_decomposition(S15, hf.partition_tuple(3)).ok
    empty = DSymbol([[], [], []])
    rep = hf.verify_multiset_decomposition(empty, hf.minimal_tuple(3))
    assert rep.ok and len(rep.symbol_lengths) == len(rep.combined) == 0


def test_pointwise_check_detects_tampering():
    pairing = hf.universal_bijection(S15)
    delta = hf.partition_tuple(3)
    items = sorted(pairing.mapping.items())
    (z1, t1) = items[0]
    # swap with a partner of a different length
    z2, t2 = next((z, t) for z, t in items if hf.delta_length(delta, z) != hf.delta_length(delta, z1))
    pairing.mapping[z1], pairing.mapping[z2] = t2, t1
    report = hf.verify_pointwise_decomposition(S15, hf.partition_tuple(3), pairing)
    assert not report.ok
    z, side, w, lhs, rhs = report.violation
    assert lhs != rhs
    del pairing.mapping[z1]
    pairing.mapping[z2] = t2
    report = hf.verify_pointwise_decomposition(S15, hf.partition_tuple(3), pairing)
    assert not report.ok


def test_unsigned_quotient_lengths_fail():
    # without the sign rule the identity breaks, so the check is not vacuous
    delta = hf.partition_tuple(3)
    unsigned = hf.length_multiset(hf.shifted_tuple(delta, S15), sy.balanced_quotient(S15))
    core = hf.length_multiset(delta, sy.core(S15))
    assert unsigned + core != hf.length_multiset(delta, S15)


def test_partition_hook_split_example():
    core_part, rest = hf.partition_hook_split(LAM, X15, 3)
    assert core_part == LengthMultiset([7, 4, 2, 1, 4, 1, 2, 1])
    assert rest == LengthMultiset([1, 3, 3, 5, 5, 6, 7, 8, 10])
    assert core_part + rest == LengthMultiset(hook_lengths_direct(LAM))
    with pytest.raises(ValueError):
        hf.partition_hook_split(LAM, BetaSet([5, 3, 0]), 3)


def test_partition_hook_split_for_a_core():
    lam = Partition((4, 2, 1, 1))
    X = bs.beta_set_for(lam, 4)
    core_part, rest = hf.partition_hook_split(lam, X, 3)
    assert len(rest) == 0
    assert core_part == LengthMultiset(hook_lengths_direct(lam))


@given(partitions(max_n=14), st.integers(2, 5), st.integers(0, 3))
def test_partition_hook_split_property(lam, d, extra):
    X = bs.beta_set_for(lam, len(lam) + extra)
    core_part, rest = hf.partition_hook_split(lam, X, d)
    assert core_part + rest == LengthMultiset(hook_lengths_direct(lam))


def test_modified_quotient_example():
    assert hf.modified_quotient_diagram(LAM, X15, 3) == [[6, 8, 10], [1, 3], [3, 5], [-7, -5]]
    lam = Partition((4, 2, 1, 1))
    assert hf.modified_quotient_diagram(lam, bs.beta_set_for(lam, 4), 3) == []


@given(partitions(max_n=14), st.integers(2, 5))
def test_modified_quotient_matches_symbol_route(lam, d):
    # residues read off the diagram need d | |X|
    X = bs.beta_set_for(lam, -(-len(lam) // d) * d)
    S = sy.s_d(X, d)
    delta = hf.partition_shifted_tuple(S.sizes(), d)
    via_symbols = hf.length_multiset(delta, sy.balanced_quotient(S))
    assert hf.modified_quotient_lengths(lam, X, d) == via_symbols


def test_symbol_length_diagram_shape():
    grid = hf.symbol_length_diagram(hf.partition_tuple(3), S15)
    assert grid == [[10, 8, 7, 6, 4, 2, 1], [7, 5, 4, 3, 1], [5, 3, 2, 1], [1]]


def test_relative_degree_example():
    fac = hf.relative_degree_factorization(LAM, X15, 3)
    assert fac.index_ratio == factorial(17) // factorial(8)
    assert fac.quotient_product == prod([1, 3, 3, 5, 5, 6, 7, 8, 10])
    assert fac.quotient_product * prod([7, 4, 2, 1, 4, 1, 2, 1]) == 338688000
    assert fac.degree() == character_degree(LAM)
    lam = Partition((4, 2, 1, 1))
    fac = hf.relative_degree_factorization(lam, bs.beta_set_for(lam, 4), 3)
    assert (fac.index_ratio, fac.quotient_product) == (1, 1)


@given(partitions(max_n=12), st.integers(2, 4))
def test_relative_degree_property(lam, d):
    X = bs.beta_set_for(lam, len(lam))
    assert hf.relative_degree_factorization(lam, X, d).degree() == character_degree(lam)


@given(symbols(), st.data())
def test_length_multiset_dimension_check(S, data):
    bad = data.draw(data_tuples(S.d + 1))
    with pytest.raises(DimensionError):
        hf.verify_multiset_decomposition(S, bad)
