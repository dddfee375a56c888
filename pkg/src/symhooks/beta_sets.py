"""Beta-sets (bead positions on an abacus) and their hooks, cores and quotients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .partitions import Node, Partition


class InvalidHookError(ValueError):
    pass


class InvalidSizeError(ValueError):
    pass


@dataclass(frozen=True)
class BetaSet:
    """Finite set of distinct nonnegative integers, stored in decreasing order."""

    elements: tuple[int, ...] = ()

    def __init__(self, elements: Iterable[int] = ()):
        elems = [int(a) for a in elements]
        if any(a < 0 for a in elems):
            raise ValueError(f"beta-set elements must be nonnegative: {elems}")
        if len(set(elems)) != len(elems):
            raise ValueError(f"duplicate beta-set element in {elems}")
        object.__setattr__(self, "elements", tuple(sorted(elems, reverse=True)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, a) -> bool:
        return a in self._members

    @property
    def _members(self) -> frozenset[int]:
        # computed lazily; frozen dataclass so stash on the instance dict
        try:
            return self.__dict__["_set"]
        except KeyError:
            members = frozenset(self.elements)
            object.__setattr__(self, "_set", members)
            return members

    def __repr__(self) -> str:
        return f"BetaSet({set(self.elements) or '{}'})"

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


class BetaHook(NamedTuple):
    a: int
    b: int

    @property
    def length(self) -> int:
        return self.a - self.b


def partition_of(X: BetaSet) -> Partition:
    """Nonzero values of a_i - (t - i) for X = {a_1 > ... > a_t}."""
    t = len(X)
    parts = (a - (t - i) for i, a in enumerate(X.elements, start=1))
    return Partition(tuple(p for p in parts if p))


def beta_set_for(lam: Partition, t: int) -> BetaSet:
    """The unique beta-set of cardinality ``t`` for ``lam``."""
    if t < len(lam):
        raise InvalidSizeError(f"{lam} has {len(lam)} parts; cannot use {t} beads")
    padded = list(lam.parts) + [0] * (t - len(lam))
    return BetaSet(part + (t - i) for i, part in enumerate(padded, start=1))


def shift(X: BetaSet, s: int) -> BetaSet:
    """X^{+s} = (X + s) together with 0, ..., s-1."""
    if s < 0:
        raise ValueError("shift must be nonnegative")
    return BetaSet([a + s for a in X] + list(range(s)))


def hooks(X: BetaSet) -> list[BetaHook]:
    """All (a, b) with a in X, b not in X, 0 <= b < a, sorted decreasingly."""
    return [BetaHook(a, b) for a in X for b in range(a - 1, -1, -1) if b not in X]


def remove_hook(X: BetaSet, z: BetaHook) -> BetaSet:
    a, b = z
    if not (a > b >= 0 and a in X and b not in X):
        raise InvalidHookError(f"{tuple(z)} is not a hook of {X}")
    return BetaSet([e for e in X if e != a] + [b])


def runners(X: BetaSet, d: int) -> tuple[BetaSet, ...]:
    """Bead levels on each runner of the d-abacus: X_j = {k : j + kd in X}."""
    if d < 1:
        raise ValueError("d must be positive")
    levels: list[list[int]] = [[] for _ in range(d)]
    for a in X:
        levels[a % d].append(a // d)
    return tuple(BetaSet(row) for row in levels)


def from_runners(rows: Iterable[BetaSet]) -> BetaSet:
    rows = tuple(rows)
    d = len(rows)
    return BetaSet(j + k * d for j, row in enumerate(rows) for k in row)


def d_core(X: BetaSet, d: int) -> BetaSet:
    """Push every bead up its runner: runner j keeps |X_j| beads at levels 0..|X_j|-1."""
    counts = [len(row) for row in runners(X, d)]
    return BetaSet(j + k * d for j, x in enumerate(counts) for k in range(x))


def core_partition(X: BetaSet, d: int) -> Partition:
    return partition_of(d_core(X, d))


def d_quotient(X: BetaSet, d: int) -> BetaSet:
    """Q_d(X): the runner partitions re-encoded as a balanced d-symbol, then unwound."""
    row_parts = [partition_of(row) for row in runners(X, d)]
    r = max((len(p) for p in row_parts), default=0)
    return from_runners(beta_set_for(p, r) for p in row_parts)


def quotient_partition(X: BetaSet, d: int) -> Partition:
    return partition_of(d_quotient(X, d))


def hook_correspondence_to_partition(X: BetaSet) -> dict[BetaHook, Node]:
    """Length-preserving bijection from hooks of X to boxes of p(X).

    A hook (a, b) with a the i-th largest bead goes to the box in row i whose
    hook length is a - b.
    """
    lam = partition_of(X)
    conj = lam.conjugate()
    row_of = {a: i for i, a in enumerate(X.elements, start=1)}
    out = {}
    for z in hooks(X):
        k = row_of[z.a]
        part = lam[k - 1]
        # hook lengths along a row strictly decrease with the column
        col = next(l for l in range(1, part + 1)
                   if (part - l) + (conj[l - 1] - k) + 1 == z.length)
        out[z] = Node(k, col)
    return out


def abacus_render(X: BetaSet, d: int) -> str:
    """Positions 0, 1, 2, ... in rows of d; occupied positions shown in brackets."""
    if d < 1:
        raise ValueError("d must be positive")
    if not len(X):
        return ""
    nrows = max(X) // d + 1
    width = len(str(nrows * d - 1)) + 2
    lines = []
    for r in range(nrows):
        cells = []
        for pos in range(r * d, (r + 1) * d):
            cells.append((f"[{pos}]" if pos in X else f" {pos} ").rjust(width))
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)
