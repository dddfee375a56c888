"""Integer partitions, Young diagrams and classical hook lengths.

Everything here works directly on the Young diagram. The abacus machinery in
:mod:`symhooks.beta_sets` is the fast path; the functions in this module
double as slow, independent oracles for it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cache
from math import factorial, prod
from typing import Iterator, NamedTuple, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    >>> Partition((7, 5, 4, 1)).n
    17
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "[]"

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= col)
                               for col in range(1, self.parts[0] + 1)))

    def nodes(self) -> Iterator[Node]:
        for k, part in enumerate(self.parts, start=1):
            for l in range(1, part + 1):
                yield Node(k, l)

    def __contains__(self, node) -> bool:
        k, l = node
        return 1 <= k <= len(self.parts) and 1 <= l <= self.parts[k - 1]


class Node(NamedTuple):
    """Box in row ``row`` and column ``col`` (both 1-based, English notation)."""

    row: int
    col: int


class PartitionHook(NamedTuple):
    node: Node
    length: int
    hand_residue: int | None = None
    foot_residue: int | None = None


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions_bounded(n, n)]


@cache
def _partitions_bounded(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions_bounded(n - first, first))
    return tuple(out)


def arm_leg(lam: Partition, node: Node) -> tuple[int, int]:
    k, l = node
    if node not in lam:
        raise ValueError(f"{node} is not in the diagram of {lam}")
    arm = lam[k - 1] - l
    leg = sum(1 for r in range(k, len(lam)) if lam[r] >= l)
    return arm, leg


def hook_length(lam: Partition, node: Node) -> int:
    arm, leg = arm_leg(lam, node)
    return arm + leg + 1


def hook_lengths_direct(lam: Partition) -> list[int]:
    """Multiset of arm + leg + 1 over every box, in row-reading order."""
    conj = lam.conjugate()
    return [(lam[k - 1] - l) + (conj[l - 1] - k) + 1 for k, l in lam.nodes()]


def hook_diagram(lam: Partition) -> list[list[int]]:
    conj = lam.conjugate()
    return [[(part - l) + (conj[l - 1] - k) + 1 for l in range(1, part + 1)]
            for k, part in enumerate(lam.parts, start=1)]


def residue(node: Node, d: int) -> int:
    k, l = node
    return (l - k) % d


def residue_diagram(lam: Partition, d: int) -> list[list[int]]:
    return [[residue(Node(k, l), d) for l in range(1, part + 1)]
            for k, part in enumerate(lam.parts, start=1)]


def hand_foot_residues(lam: Partition, node: Node, d: int) -> tuple[int, int]:
    """Residues of the rightmost box of the row and the bottom box of the column."""
    if node not in lam:
        raise ValueError(f"{node} is not in the diagram of {lam}")
    k, l = node
    bottom = lam.conjugate()[l - 1]
    return residue(Node(k, lam[k - 1]), d), residue(Node(bottom, l), d)


def partition_hooks(lam: Partition, d: int | None = None) -> list[PartitionHook]:
    hooks = []
    for node in lam.nodes():
        hand = foot = None
        if d is not None:
            hand, foot = hand_foot_residues(lam, node, d)
        hooks.append(PartitionHook(node, hook_length(lam, node), hand, foot))
    return hooks


def character_degree(lam: Partition) -> int:
    """Degree of the irreducible character of S_n labelled by ``lam``.

    Raises ArithmeticError if n! is not divisible by the hook product,
    which would mean a bug in the hook computation.
    """
    q, r = divmod(factorial(lam.n), prod(hook_lengths_direct(lam)))
    if r:
        raise ArithmeticError(f"hook product does not divide {lam.n}! for {lam}")
    return q


def count_standard_tableaux(lam: Partition) -> int:
    """Count standard Young tableaux by removing corners one at a time."""
    return _count_syt(lam.parts)


@cache
def _count_syt(parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    total = 0
    for k in range(len(parts)):
        below = parts[k + 1] if k + 1 < len(parts) else 0
        if parts[k] > below:
            smaller = list(parts)
            smaller[k] -= 1
            total += _count_syt(tuple(p for p in smaller if p))
    return total


def rim_hooks(lam: Partition, length: int) -> list[Node]:
    """Corners (k, l) of the hooks of the given length; each names one rim hook."""
    return [node for node in lam.nodes() if hook_length(lam, node) == length]


def remove_rim_hook(lam: Partition, node: Node) -> Partition:
    """Strip the rim hook running from the end of row k to the bottom of column l."""
    k, l = node
    _, leg = arm_leg(lam, node)
    parts = list(lam.parts)
    last = k - 1 + leg
    for r in range(k - 1, last):
        parts[r] = lam[r + 1] - 1
    parts[last] = l - 1
    return Partition(tuple(p for p in parts if p))


def d_core_by_removal(lam: Partition, d: int,
                      removal_order: int | Sequence[int] | random.Random | None = 0) -> Partition:
    """d-core of ``lam`` by stripping d-rim hooks until none is left.

    ``removal_order`` picks which available hook goes next: an int seeds a
    generator, a sequence of ints is consumed cyclically as indices (modulo
    the number of candidates).
    """
    if d < 1:
        raise ValueError("d must be positive")
    if isinstance(removal_order, random.Random):
        rng, picks = removal_order, None
    elif isinstance(removal_order, (int, type(None))):
        rng, picks = random.Random(removal_order), None
    else:
        rng, picks = None, list(removal_order) or [0]
    step = 0
    while True:
        candidates = rim_hooks(lam, d)
        if not candidates:
            return lam
        if picks is None:
            choice = rng.randrange(len(candidates))
        else:
            choice = picks[step % len(picks)] % len(candidates)
        lam = remove_rim_hook(lam, candidates[choice])
        step += 1


def partition_d_quotient(lam: Partition, d: int) -> tuple[Partition, ...]:
    """The d-quotient (p(X_t), ..., p(X_{t+d-1})) read off the d-abacus.

    X is the set of first column hook lengths and t = |X| mod d, which is the
    runner that bead 0 lands on once X is padded to a multiple of d beads.
    This makes the tuple independent of the beta-set used.
    """
    from .beta_sets import beta_set_for, partition_of, runners

    if d < 1:
        raise ValueError("d must be positive")
    beta = beta_set_for(lam, len(lam))
    t = len(beta) % d
    rows = runners(beta, d)
    return tuple(partition_of(rows[(t + i) % d]) for i in range(d))
