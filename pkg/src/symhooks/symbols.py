"""d-symbols: ordered d-tuples of beta-sets.

Symbols are always concrete tuples. No cyclic-permutation or +1 shift
normalization is applied anywhere, since generalized hook lengths are not
invariant under cyclic permutation of the rows.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .beta_sets import (BetaHook, BetaSet, InvalidHookError, InvalidSizeError,
                        beta_set_for, from_runners, partition_of, runners, shift)
from .partitions import Node, Partition


@dataclass(frozen=True)
class DSymbol:
    rows: tuple[BetaSet, ...]

    def __init__(self, rows: Iterable[BetaSet | Iterable[int]]):
        rows = tuple(r if isinstance(r, BetaSet) else BetaSet(r) for r in rows)
        if not rows:
            raise ValueError("a symbol needs at least one row")
        object.__setattr__(self, "rows", rows)

    @property
    def d(self) -> int:
        return len(self.rows)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def __getitem__(self, i) -> BetaSet:
        return self.rows[i]

    def __iter__(self) -> Iterator[BetaSet]:
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __repr__(self) -> str:
        return f"DSymbol({str(self)})"

    def __str__(self) -> str:
        return "(" + "|".join(str(r) for r in self.rows) + ")"


class SymbolHook(NamedTuple):
    """Hook (a, b, i, j): a in X_i, b not in X_j, a >= b, and i > j when a == b."""

    a: int
    b: int
    i: int
    j: int

    @property
    def length(self) -> int:
        return self.a - self.b

    @property
    def is_short(self) -> bool:
        return self.a == self.b

    def kind(self, d: int) -> tuple[int, int]:
        """The (l, e) class with l = a - b and e = (i - j) mod d."""
        return self.a - self.b, (self.i - self.j) % d

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.i},{self.j})"


def s_d(X: BetaSet, d: int) -> DSymbol:
    return DSymbol(runners(X, d))


def s_d_inverse(S: DSymbol) -> BetaSet:
    return from_runners(S.rows)


def partition_of_symbol(S: DSymbol) -> Partition:
    return partition_of(s_d_inverse(S))


def shift_symbol(S: DSymbol, s: int) -> DSymbol:
    return DSymbol(shift(X, s) for X in S)


def is_hook(S: DSymbol, z: SymbolHook) -> bool:
    a, b, i, j = z
    d = S.d
    return (0 <= i < d and 0 <= j < d and a >= b >= 0
            and a in S[i] and b not in S[j] and (a > b or i > j))


def hooks(S: DSymbol, ell: int | None = None, e: int | None = None,
          i: int | None = None, j: int | None = None,
          long_only: bool = False) -> list[SymbolHook]:
    """Every hook of S, optionally restricted to a class.

    ``ell`` and ``e`` filter by the (l, e) classification, ``i`` and ``j`` by
    the rows involved. Sorted by row pair, then decreasing (a, b).
    """
    d = S.d
    rows_i = range(d) if i is None else (i,)
    rows_j = range(d) if j is None else (j,)
    out = []
    for ii in rows_i:
        for jj in rows_j:
            if e is not None and (ii - jj) % d != e:
                continue
            Xj = S[jj]
            for a in S[ii]:
                if ell is not None:
                    bs = (a - ell,) if a - ell >= 0 else ()
                else:
                    bs = range(a, -1, -1)
                for b in bs:
                    if b in Xj or (a == b and (long_only or ii <= jj)):
                        continue
                    out.append(SymbolHook(a, b, ii, jj))
    return out


def class_count(S: DSymbol, i: int, j: int, ell: int) -> int:
    """|H_ij^l(S)| = |X_i| - |X_i cap X_j^{+l}|, and 0 when l = 0 and i <= j."""
    if ell == 0 and i <= j:
        return 0
    Xi = S[i]
    shifted = shift(S[j], ell)
    return len(Xi) - sum(1 for a in Xi if a in shifted)


def hook_classes(S: DSymbol) -> dict[tuple[int, int, int], list[SymbolHook]]:
    """Hooks grouped by (i, j, l)."""
    classes: dict[tuple[int, int, int], list[SymbolHook]] = {}
    for z in hooks(S):
        classes.setdefault((z.i, z.j, z.length), []).append(z)
    return classes


def remove_hook(S: DSymbol, z: SymbolHook) -> DSymbol:
    if not is_hook(S, z):
        raise InvalidHookError(f"{z} is not a hook of {S}")
    a, b, i, j = z
    rows = [list(X) for X in S]
    rows[i].remove(a)
    rows[j].append(b)
    return DSymbol(rows)


def t_d(partitions: Iterable[Partition]) -> DSymbol:
    """Balanced symbol whose rows all have r beads, r the longest partition length."""
    partitions = tuple(partitions)
    r = max((len(p) for p in partitions), default=0)
    return DSymbol(beta_set_for(p, r) for p in partitions)


def is_balanced(S: DSymbol) -> bool:
    return len(set(S.sizes())) == 1 and any(0 not in X for X in S)


def row_partitions(S: DSymbol) -> tuple[Partition, ...]:
    return tuple(partition_of(X) for X in S)


def balanced_quotient(S: DSymbol) -> DSymbol:
    return t_d(row_partitions(S))


def core(S: DSymbol) -> DSymbol:
    return DSymbol(range(x) for x in S.sizes())


def quotient_partition(S: DSymbol) -> Partition:
    return partition_of_symbol(balanced_quotient(S))


def core_partition(S: DSymbol) -> Partition:
    return partition_of_symbol(core(S))


def reconstruct(Q: DSymbol, C: DSymbol) -> DSymbol:
    """Recover S from its balanced quotient and its core."""
    if Q.d != C.d:
        raise ValueError("quotient and core have different dimensions")
    rows = []
    for Y, Z in zip(Q, C):
        if set(Z) != set(range(len(Z))):
            raise ValueError(f"{C} is not a core symbol")
        lam = partition_of(Y)
        if len(Z) < len(lam):
            raise InvalidSizeError(f"row of size {len(Z)} cannot carry {lam}")
        rows.append(beta_set_for(lam, len(Z)))
    return DSymbol(rows)


def short_hooks(S: DSymbol, i: int, j: int) -> list[SymbolHook]:
    if not i > j:
        raise ValueError("short hooks go from a higher row to a lower one")
    return [SymbolHook(a, a, i, j) for a in S[i] if a not in S[j]]


def reversed_short_hooks(S: DSymbol, i: int, j: int) -> list[SymbolHook]:
    """Pairs (a, a, i, j) with a in X_i, a not in X_j, and i < j."""
    if not i < j:
        raise ValueError("reversed short hooks go from a lower row to a higher one")
    return [SymbolHook(a, a, i, j) for a in S[i] if a not in S[j]]


def beta_hook_to_symbol_hook(z: BetaHook, d: int) -> SymbolHook:
    (a1, i), (b1, j) = divmod(z.a, d), divmod(z.b, d)
    return SymbolHook(a1, b1, i, j)


def symbol_hook_to_beta_hook(z: SymbolHook, d: int) -> BetaHook:
    return BetaHook(z.a * d + z.i, z.b * d + z.j)


def hook_correspondence_to_partition(S: DSymbol) -> dict[SymbolHook, Node]:
    """Bijection from H(S) to the boxes of p(S), through the beta-set of S."""
    from .beta_sets import hook_correspondence_to_partition as beta_map

    d = S.d
    return {beta_hook_to_symbol_hook(z, d): node
            for z, node in beta_map(s_d_inverse(S)).items()}


def hook_count(S: DSymbol) -> Counter:
    """Counter of hooks by (i, j, l), for cross-checking class_count."""
    return Counter((z.i, z.j, z.length) for z in hooks(S))
