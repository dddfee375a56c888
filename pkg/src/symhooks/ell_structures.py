"""l-splitting of symbols, (l, e)-twists, and (l, e)-cores and quotients.

Convention for e: the twist sigma_{d,l,e} turns exactly the hooks (a, b, i, j)
with a - b = l and (j - i) mod d == e into (l, 0)-hooks. The (l, e)-core is
the fixed point of removing those hooks. Under ``SymbolHook.kind`` (which
reports (i - j) mod d) these are the hooks of kind (l, -e mod d).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .beta_sets import BetaSet
from .hook_functions import (DataTuple, LengthMultiset, abs_multiset, length_multiset,
                             minimal_tuple, positive_part)
from .symbols import DSymbol, SymbolHook, balanced_quotient, core, hooks, remove_hook, s_d, s_d_inverse


@dataclass(frozen=True)
class TwistSpec:
    d: int
    ell: int
    e: int = 0

    def __post_init__(self):
        if self.d < 1 or self.ell < 1:
            raise ValueError("d and ell must be positive")
        if not 0 <= self.e < self.d:
            raise ValueError(f"e must lie in [0, {self.d})")


def split(S: DSymbol, ell: int) -> DSymbol:
    """The dl-symbol of the same beta-set."""
    if ell < 1:
        raise ValueError("ell must be positive")
    return s_d(s_d_inverse(S), S.d * ell)


def unsplit(T: DSymbol, d: int) -> DSymbol:
    return s_d(s_d_inverse(T), d)


def split_hook(z: SymbolHook, d: int, ell: int) -> SymbolHook:
    """(a, b, i, j) with a = r l + s, b = r' l + s'  ->  (r, r', s d + i, s' d + j)."""
    (r, s), (r2, s2) = divmod(z.a, ell), divmod(z.b, ell)
    return SymbolHook(r, r2, s * d + z.i, s2 * d + z.j)


def expand_tuple(delta: DataTuple, ell: int) -> DataTuple:
    """Entry at s d + i is s m + c_i; the modulus becomes m l."""
    m = delta.k
    return DataTuple([s * m + c for s in range(ell) for c in delta.c], m * ell)


def runner_counts(S: DSymbol, ell: int) -> list[list[int]]:
    """x[i][s] = number of elements of X_i congruent to s mod l."""
    x = [[0] * ell for _ in range(S.d)]
    for i, X in enumerate(S):
        for a in X:
            x[i][a % ell] += 1
    return x


def ell_tuple(S: DSymbol, ell: int) -> DataTuple:
    """Data tuple with entry s + l * x[i][s] at position s d + i, modulus l."""
    x = runner_counts(S, ell)
    return DataTuple([s + ell * x[i][s] for s in range(ell) for i in range(S.d)], ell)


def ell_quotient(S: DSymbol, ell: int) -> DSymbol:
    return balanced_quotient(split(S, ell))


def ell_core(S: DSymbol, ell: int) -> DSymbol:
    return unsplit(core(split(S, ell)), S.d)


@dataclass
class DecompositionReport:
    ok: bool
    symbol_lengths: LengthMultiset
    quotient_lengths: LengthMultiset
    core_lengths: LengthMultiset

    @property
    def combined(self) -> LengthMultiset:
        return self.quotient_lengths + self.core_lengths


def verify_ell_decomposition(S: DSymbol, ell: int) -> DecompositionReport:
    """H(S) == |H^{delta_{l,S}}(Q_l(S))| + H(C_(l)(S)), zeros included."""
    delta0 = minimal_tuple(S.d)
    H_S = length_multiset(delta0, S)
    H_Q = abs_multiset(length_multiset(ell_tuple(S, ell), ell_quotient(S, ell)))
    H_C = length_multiset(delta0, ell_core(S, ell))
    return DecompositionReport(H_S == H_Q + H_C, H_S, H_Q, H_C)


# -- the (l, e)-twist -------------------------------------------------------

def twist(spec: TwistSpec, n: int) -> int:
    """Write n = r(dl) + s d + t and rotate t by r e modulo d."""
    d, ell, e = spec.d, spec.ell, spec.e
    r, rest = divmod(n, d * ell)
    s, t = divmod(rest, d)
    return r * d * ell + s * d + (t + r * e) % d


def twist_inverse(spec: TwistSpec, n: int) -> int:
    d, ell, e = spec.d, spec.ell, spec.e
    r, rest = divmod(n, d * ell)
    s, t = divmod(rest, d)
    return r * d * ell + s * d + (t - r * e) % d


def twist_beta_set(spec: TwistSpec, X: BetaSet) -> BetaSet:
    return BetaSet(twist(spec, a) for a in X)


def untwist_beta_set(spec: TwistSpec, X: BetaSet) -> BetaSet:
    return BetaSet(twist_inverse(spec, a) for a in X)


def twist_symbol(spec: TwistSpec, S: DSymbol) -> DSymbol:
    """s_d sigma s_d^{-1}; not the same as twisting each row separately."""
    _check(spec, S)
    return s_d(twist_beta_set(spec, s_d_inverse(S)), spec.d)


def _check(spec: TwistSpec, S: DSymbol):
    if S.d != spec.d:
        raise ValueError(f"twist for d = {spec.d} applied to a {S.d}-symbol")


def split_twisted(S: DSymbol, ell: int, e: int) -> DSymbol:
    spec = TwistSpec(S.d, ell, e)
    return s_d(twist_beta_set(spec, s_d_inverse(S)), S.d * ell)


def le_quotient(S: DSymbol, ell: int, e: int) -> DSymbol:
    return balanced_quotient(split_twisted(S, ell, e))


def le_core(S: DSymbol, ell: int, e: int) -> DSymbol:
    """Untwist the l-core of the twisted symbol."""
    spec = TwistSpec(S.d, ell, e)
    C = core(split_twisted(S, ell, e))
    return s_d(untwist_beta_set(spec, s_d_inverse(C)), S.d)


def removable_hooks(S: DSymbol, ell: int, e: int) -> list[SymbolHook]:
    """Hooks of length l whose rows satisfy (j - i) mod d == e."""
    return hooks(S, ell=ell, e=(-e) % S.d)


def core_by_removal(S: DSymbol, ell: int, e: int = 0, rng: random.Random | int | None = 0) -> DSymbol:
    """Remove (l, e)-hooks in random order until none is left."""
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    while True:
        candidates = removable_hooks(S, ell, e)
        if not candidates:
            return S
        S = remove_hook(S, rng.choice(candidates))


def verify_twisted_decomposition(S: DSymbol, ell: int, e: int) -> DecompositionReport:
    """Long-hook identity H_{>0}(S) == nonzero |H^delta(Q_{l,e}(S))| + H_{>0}(C_(l,e)(S)).

    delta is built from the twisted symbol. Short hooks are not compared:
    twisting does not preserve their number.
    """
    spec = TwistSpec(S.d, ell, e)
    delta0 = minimal_tuple(S.d)
    delta = ell_tuple(twist_symbol(spec, S), ell)
    H_S = positive_part(length_multiset(delta0, S))
    H_Q = positive_part(abs_multiset(length_multiset(delta, le_quotient(S, ell, e))))
    H_C = positive_part(length_multiset(delta0, le_core(S, ell, e)))
    return DecompositionReport(H_S == H_Q + H_C, H_S, H_Q, H_C)
