"""Generalized hook length functions on d-symbols.

A data tuple delta = (c_0, ..., c_{d-1}; k) assigns to a hook (a, b, i, j)
the length k(a - b) + c_i - c_j. All arithmetic is exact (Fraction).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Iterator, NamedTuple

from .beta_sets import BetaSet, core_partition, partition_of, runners
from .partitions import Partition, character_degree, hook_lengths_direct
from .symbols import (DSymbol, SymbolHook, balanced_quotient, core, hook_classes,
                      hook_correspondence_to_partition, hooks, s_d)


class DimensionError(ValueError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class DataTuple:
    c: tuple[Fraction, ...]
    k: Fraction

    def __init__(self, c: Iterable, k):
        c = tuple(_frac(x) for x in c)
        k = _frac(k)
        if k < 0:
            raise ValueError("k must be nonnegative")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "k", k)

    @property
    def d(self) -> int:
        return len(self.c)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.c)) + ";" + str(self.k) + ")"


def minimal_tuple(d: int) -> DataTuple:
    return DataTuple([0] * d, 1)


def partition_tuple(d: int) -> DataTuple:
    return DataTuple(range(d), d)


def shifted_tuple(delta: DataTuple, S: DSymbol) -> DataTuple:
    """delta_S: add k * |X_i| to each c_i."""
    _check_dim(delta, S.d)
    return DataTuple([c + x * delta.k for c, x in zip(delta.c, S.sizes())], delta.k)


def _check_dim(delta: DataTuple, d: int):
    if delta.d != d:
        raise DimensionError(f"data tuple of dimension {delta.d} used with d = {d}")


def delta_length(delta: DataTuple, z: SymbolHook) -> Fraction:
    a, b, i, j = z
    if not (0 <= i < delta.d and 0 <= j < delta.d):
        raise DimensionError(f"hook {z} has a row index outside [{delta.d}]")
    return delta.k * (a - b) + delta.c[i] - delta.c[j]


class LengthMultiset:
    """Finite multiset of exact rationals; equality ignores order."""

    __slots__ = ("_counts",)

    def __init__(self, values: Iterable = ()):
        self._counts = Counter(_frac(v) for v in values)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.sorted())

    def sorted(self) -> list[Fraction]:
        return sorted(self._counts.elements())

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, LengthMultiset):
            return +self._counts == +other._counts
        return NotImplemented

    def __add__(self, other: LengthMultiset) -> LengthMultiset:
        out = LengthMultiset()
        out._counts = self._counts + other._counts
        return out

    def __le__(self, other: LengthMultiset) -> bool:
        return all(other._counts[v] >= n for v, n in self._counts.items())

    def __contains__(self, value) -> bool:
        return self._counts[_frac(value)] > 0

    def count(self, value) -> int:
        return self._counts[_frac(value)]

    def __sub__(self, other: LengthMultiset) -> LengthMultiset:
        out = LengthMultiset()
        out._counts = self._counts - other._counts
        return out

    def symmetric_difference(self, other: LengthMultiset) -> tuple[LengthMultiset, LengthMultiset]:
        return self - other, other - self

    def product(self) -> Fraction:
        return prod(self._counts.elements(), start=Fraction(1))

    def __repr__(self) -> str:
        return "LengthMultiset([" + ", ".join(map(str, self.sorted())) + "])"

    def to_strings(self) -> list[str]:
        return [str(v) for v in self.sorted()]


def length_multiset(delta: DataTuple, source: DSymbol | Iterable[SymbolHook]) -> LengthMultiset:
    if isinstance(source, DSymbol):
        _check_dim(delta, source.d)
        source = hooks(source)
    return LengthMultiset(delta_length(delta, z) for z in source)


def abs_multiset(M: LengthMultiset) -> LengthMultiset:
    return LengthMultiset(abs(v) for v in M.sorted())


def positive_part(M: LengthMultiset) -> LengthMultiset:
    """Drop zeros only; negative entries are kept."""
    return LengthMultiset(v for v in M.sorted() if v != 0)


# -- orientation and the sign rule ------------------------------------------

def orient(sizes: tuple[int, ...], i: int, j: int) -> tuple[int, int, int]:
    """Order the pair {i, j} as (p, q) with x_p - x_q = delta >= 0.

    Ties go to the larger index first, which leaves H_qp^0 empty.
    """
    dp = sizes[i] - sizes[j]
    if dp > 0 or (dp == 0 and i > j):
        return i, j, dp
    return j, i, -dp


def signed_length(delta_S: DataTuple, sizes: tuple[int, ...], z: SymbolHook) -> Fraction:
    """Length of a quotient hook under delta_S with the orientation-dependent sign.

    ``sizes`` are the row sizes x_i of the original symbol. With (p, q) the
    oriented pair, the sign is + on H_pq, on H_qp^{>D}, and on H_qp^D when
    p < q; it is - everywhere else.
    """
    h = delta_length(delta_S, z)
    if z.i == z.j:
        return h
    p, q, gap = orient(sizes, z.i, z.j)
    if (z.i, z.j) == (p, q):
        return h
    if z.length > gap or (z.length == gap and p < q):
        return h
    return -h


def signed_multiset(delta_S: DataTuple, sizes: tuple[int, ...], Q: DSymbol) -> LengthMultiset:
    return LengthMultiset(signed_length(delta_S, sizes, z) for z in hooks(Q))


# -- universal bijection ----------------------------------------------------

class Target(NamedTuple):
    side: str  # "Q" or "C"
    hook: SymbolHook


@dataclass
class HookPairing:
    """Class-respecting bijection from H(S) onto H(Q(S)) plus H(C(S))."""

    S: DSymbol
    Q: DSymbol
    C: DSymbol
    mapping: dict[SymbolHook, Target] = field(default_factory=dict)

    def __getitem__(self, z: SymbolHook) -> Target:
        return self.mapping[z]

    def __len__(self) -> int:
        return len(self.mapping)

    def items(self):
        return self.mapping.items()


def _class_plan(sizes, keys) -> dict:
    """Route each source class (i, j, l) of S to its target class list."""
    plan: dict[tuple, list[tuple[str, tuple[int, int, int]]]] = {}
    zero_groups: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
    for key in keys:
        i, j, ell = key
        if i == j:
            plan[key] = [("Q", key)]
            continue
        p, q, gap = orient(sizes, i, j)
        forward = (i, j) == (p, q)
        if gap == 0:
            plan[key] = [("Q", key)]
        elif ell == 0:
            zero_groups.setdefault((p, q), []).append(key)
        elif not forward:
            plan[key] = [("Q", (q, p, ell + gap))]
        elif ell > gap:
            plan[key] = [("Q", (p, q, ell - gap))]
        elif ell == gap:
            plan[key] = [("Q", (p, q, 0) if p > q else (q, p, 0))]
        else:
            plan[key] = [("Q", (q, p, gap - ell)), ("C", (p, q, ell))]
    for (p, q), group in zero_groups.items():
        gap = sizes[p] - sizes[q]
        plan[tuple(group)] = [("Q", (q, p, gap)), ("C", (p, q, 0))]
    return plan


def universal_bijection(S: DSymbol) -> HookPairing:
    """Pair every hook of S with a hook of Q(S) or of C(S).

    Within a matched class, sources and targets are both taken in decreasing
    (a, b) order and paired positionally; where a class splits between Q and
    C, the quotient targets are filled first.
    """
    Q, C = balanced_quotient(S), core(S)
    sizes = S.sizes()
    source = hook_classes(S)
    targets = {"Q": hook_classes(Q), "C": hook_classes(C)}
    pairing = HookPairing(S, Q, C)
    used = {"Q": set(), "C": set()}
    for src_key, routes in _class_plan(sizes, source).items():
        keys = src_key if isinstance(src_key[0], tuple) else (src_key,)
        src = sorted((z for k in keys for z in source[k]), reverse=True)
        dst = []
        for side, key in routes:
            dst.extend(Target(side, z) for z in sorted(targets[side].get(key, ()), reverse=True))
            used[side].add(key)
        if len(src) != len(dst):
            raise AssertionError(f"class size mismatch for {keys} -> {routes} in {S}")
        pairing.mapping.update(zip(src, dst))
    for side in "QC":
        leftover = set(targets[side]) - used[side]
        if leftover:
            raise AssertionError(f"{side} classes {sorted(leftover)} not reached in {S}")
    return pairing


# -- decomposition checks ---------------------------------------------------

@dataclass
class PointwiseReport:
    ok: bool
    checked: int
    violation: tuple | None = None


def verify_pointwise_decomposition(S: DSymbol, delta: DataTuple,
                                   pairing: HookPairing | None = None) -> PointwiseReport:
    """Check h(z) against the length of its partner under the universal bijection.

    Quotient partners are measured with the signed delta_S length, core
    partners with delta itself.
    """
    _check_dim(delta, S.d)
    pairing = pairing or universal_bijection(S)
    delta_S = shifted_tuple(delta, S)
    sizes = S.sizes()
    checked = 0
    for z, (side, w) in sorted(pairing.items()):
        lhs = delta_length(delta, z)
        rhs = signed_length(delta_S, sizes, w) if side == "Q" else delta_length(delta, w)
        checked += 1
        if lhs != rhs:
            return PointwiseReport(False, checked, (z, side, w, lhs, rhs))
    total = len(hooks(S))
    if checked != total:
        # pairing is not total: report the counts in place of lengths
        return PointwiseReport(False, checked, (None, "count", None, checked, total))
    return PointwiseReport(True, checked)


@dataclass
class MultisetReport:
    ok: bool
    symbol_lengths: LengthMultiset
    quotient_lengths: LengthMultiset
    core_lengths: LengthMultiset

    @property
    def combined(self) -> LengthMultiset:
        return self.quotient_lengths + self.core_lengths


def verify_multiset_decomposition(S: DSymbol, delta: DataTuple) -> MultisetReport:
    """H^delta(S) == signed H^{delta_S}(Q) + H^delta(C), each side built separately."""
    _check_dim(delta, S.d)
    H_S = length_multiset(delta, S)
    H_Q = signed_multiset(shifted_tuple(delta, S), S.sizes(), balanced_quotient(S))
    H_C = length_multiset(delta, core(S))
    ok = H_S == H_Q + H_C and H_C <= H_S
    return MultisetReport(ok, H_S, H_Q, H_C)


def partition_shifted_tuple(sizes: Iterable[int], d: int) -> DataTuple:
    """(x_0 d, 1 + x_1 d, ..., (d-1) + x_{d-1} d; d)."""
    return DataTuple([i + x * d for i, x in enumerate(sizes)], d)


def partition_hook_split(lam: Partition, X: BetaSet, d: int) -> tuple[LengthMultiset, LengthMultiset]:
    """Split H(lam) into the hook lengths of the d-core and |H^delta(Q)|."""
    if partition_of(X) != lam:
        raise ValueError(f"{X} is not a beta-set for {lam}")
    S = s_d(X, d)
    delta = partition_shifted_tuple(S.sizes(), d)
    core_part = LengthMultiset(hook_lengths_direct(core_partition(X, d)))
    quotient_part = abs_multiset(length_multiset(delta, balanced_quotient(S)))
    return core_part, quotient_part


def modified_quotient_diagram(lam: Partition, X: BetaSet, d: int) -> list[list[int]]:
    """Hook lengths of q_d(X) adjusted by (x_hand - x_{foot-1}) * d, in diagram layout."""
    from .beta_sets import quotient_partition
    from .partitions import hook_diagram, residue_diagram

    if partition_of(X) != lam:
        raise ValueError(f"{X} is not a beta-set for {lam}")
    sizes = [len(r) for r in runners(X, d)]
    mu = quotient_partition(X, d)
    res = residue_diagram(mu, d)
    conj = mu.conjugate()
    out = []
    for k, row in enumerate(hook_diagram(mu), start=1):
        hand = res[k - 1][-1]
        line = []
        for l, h in enumerate(row, start=1):
            foot = res[conj[l - 1] - 1][l - 1]
            line.append(h + (sizes[hand] - sizes[(foot - 1) % d]) * d)
        out.append(line)
    return out


def modified_quotient_lengths(lam: Partition, X: BetaSet, d: int) -> LengthMultiset:
    return LengthMultiset(v for row in modified_quotient_diagram(lam, X, d) for v in row)


def symbol_length_diagram(delta: DataTuple, S: DSymbol) -> list[list[Fraction]]:
    """delta-lengths of the hooks of S placed in the Young diagram of p(S)."""
    from .symbols import partition_of_symbol

    lam = partition_of_symbol(S)
    grid: list[list[Fraction | None]] = [[None] * part for part in lam]
    for z, (k, l) in hook_correspondence_to_partition(S).items():
        grid[k - 1][l - 1] = delta_length(delta, z)
    return grid


class DegreeFactorization(NamedTuple):
    index_ratio: int        # n! / r!
    quotient_product: int   # |prod H^delta(Q)|
    core_degree: int        # chi_{core}(1)

    def degree(self) -> int:
        q, r = divmod(self.index_ratio * self.core_degree, self.quotient_product)
        if r:
            raise ArithmeticError("relative hook formula did not divide exactly")
        return q


def relative_degree_factorization(lam: Partition, X: BetaSet, d: int) -> DegreeFactorization:
    if partition_of(X) != lam:
        raise ValueError(f"{X} is not a beta-set for {lam}")
    S = s_d(X, d)
    delta = partition_shifted_tuple(S.sizes(), d)
    kappa = core_partition(X, d)
    quotient = length_multiset(delta, balanced_quotient(S)).product()
    if quotient.denominator != 1:
        raise ArithmeticError("quotient hook product is not an integer")
    return DegreeFactorization(factorial(lam.n) // factorial(kappa.n),
                               abs(quotient.numerator), character_degree(kappa))
