"""Exhaustive and seeded-random verification sweeps.

Each suite first builds its full list of instances from the seed, then checks
them (optionally across worker processes). Reports come back sorted by
instance key, so the output does not depend on scheduling.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial
from typing import Callable, Iterable

from . import beta_sets, ell_structures as ells, hook_functions as hf, partitions as parts
from .beta_sets import BetaSet
from .hook_functions import LengthMultiset
from .sampling import DEFAULT_SEED, random_beta_set, random_data_tuple, random_symbol
from .symbols import DSymbol, s_d, s_d_inverse

SUITES = ("thm33", "thm44", "thm52", "thm54", "degrees", "oracles")


@dataclass
class Report:
    identity: str
    instance: str
    passed: bool
    left: LengthMultiset | None = None
    right: LengthMultiset | None = None
    key: tuple = ()

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def difference(self) -> tuple[LengthMultiset, LengthMultiset]:
        if self.left is None or self.right is None:
            return LengthMultiset(), LengthMultiset()
        return self.left.symmetric_difference(self.right)

    def to_json(self) -> dict:
        out = {"identity": self.identity, "instance": self.instance, "status": self.status}
        if not self.passed and self.left is not None:
            only_left, only_right = self.difference()
            out.update(left=self.left.to_strings(), right=self.right.to_strings(),
                       only_left=only_left.to_strings(), only_right=only_right.to_strings())
        return out

    def line(self) -> str:
        text = f"{self.status.upper()}  {self.identity}  {self.instance}"
        if not self.passed and self.left is not None:
            only_left, only_right = self.difference()
            text += f"  only-left={only_left.to_strings()} only-right={only_right.to_strings()}"
        return text


def _report(identity, instance, key, left, right) -> Report:
    ok = left == right
    return Report(identity, instance, ok, None if ok else left, None if ok else right, key)


def _int_report(identity, instance, key, left: int, right: int) -> Report:
    return _report(identity, instance, key, LengthMultiset([left]), LengthMultiset([right]))


# -- checkers (top level so they pickle) ------------------------------------

def check_symbol_decomposition(key, S: DSymbol, delta: hf.DataTuple) -> list[Report]:
    inst = f"S={S} delta={delta}"
    pointwise = hf.verify_pointwise_decomposition(S, delta)
    multiset = hf.verify_multiset_decomposition(S, delta)
    if pointwise.ok:
        pw = Report("pointwise", inst, True, key=key + (0,))
    else:
        z, side, w, lhs, rhs = pointwise.violation
        pw = _report("pointwise", f"{inst} hook={z} partner={side}{w}", key + (0,),
                     LengthMultiset([lhs]), LengthMultiset([rhs]))
    ms = _report("multiset", inst, key + (1,), multiset.symbol_lengths, multiset.combined)
    return [pw, ms]


def check_partition_split(key, lam: parts.Partition, d: int) -> list[Report]:
    X = beta_sets.beta_set_for(lam, len(lam))
    core_part, quotient_part = hf.partition_hook_split(lam, X, d)
    left = LengthMultiset(parts.hook_lengths_direct(lam))
    return [_report("partition-split", f"lambda={lam} d={d}", key, left, core_part + quotient_part)]


def check_ell(key, S: DSymbol, ell: int) -> list[Report]:
    rep = ells.verify_ell_decomposition(S, ell)
    return [_report("ell-split", f"S={S} ell={ell}", key, rep.symbol_lengths, rep.combined)]


def check_twisted(key, S: DSymbol, ell: int, e: int) -> list[Report]:
    rep = ells.verify_twisted_decomposition(S, ell, e)
    return [_report("twisted-split", f"S={S} ell={ell} e={e}", key, rep.symbol_lengths, rep.combined)]


def check_degree_sum(key, n: int) -> list[Report]:
    total = sum(parts.character_degree(lam) ** 2 for lam in parts.enumerate_partitions(n))
    return [_int_report("sum-of-squares", f"n={n}", key, total, factorial(n))]


def check_syt(key, lam: parts.Partition) -> list[Report]:
    return [_int_report("tableaux-count", f"lambda={lam}", key,
                        parts.character_degree(lam), parts.count_standard_tableaux(lam))]


def check_relative_degree(key, lam: parts.Partition, d: int) -> list[Report]:
    X = beta_sets.beta_set_for(lam, len(lam))
    fac = hf.relative_degree_factorization(lam, X, d)
    return [_int_report("relative-degree", f"lambda={lam} d={d}", key,
                        fac.degree(), parts.character_degree(lam))]


def check_core_oracle(key, X: BetaSet, d: int, seed: int) -> list[Report]:
    fast = beta_sets.core_partition(X, d)
    slow = parts.d_core_by_removal(beta_sets.partition_of(X), d, seed)
    # a partition is determined by the multiset of its parts
    return [_report("abacus-core", f"X={X} d={d}", key, LengthMultiset(fast), LengthMultiset(slow))]


def check_le_core_oracle(key, S: DSymbol, ell: int, e: int, seed: int) -> list[Report]:
    fast = s_d_inverse(ells.le_core(S, ell, e))
    slow = s_d_inverse(ells.core_by_removal(S, ell, e, seed))
    return [_report("le-core", f"S={S} ell={ell} e={e}", key, LengthMultiset(fast), LengthMultiset(slow))]


def check_hook_routes(key, X: BetaSet, d: int) -> list[Report]:
    direct = LengthMultiset(parts.hook_lengths_direct(beta_sets.partition_of(X)))
    via_beta = LengthMultiset(z.length for z in beta_sets.hooks(X))
    via_symbol = hf.length_multiset(hf.partition_tuple(d), s_d(X, d))
    inst = f"X={X} d={d}"
    return [_report("hooks-beta", inst, key + (0,), direct, via_beta),
            _report("hooks-symbol", inst, key + (1,), direct, via_symbol)]


# -- instance builders ------------------------------------------------------

Task = tuple[Callable, tuple]


def thm33_tasks(trials: int, seed: int) -> list[Task]:
    rng = random.Random(seed)
    tasks = []
    for t in range(trials):
        S = random_symbol(rng)
        tasks.append((check_symbol_decomposition, ((t,), S, random_data_tuple(rng, S.d))))
    return tasks


def thm44_tasks(ns: Iterable[int], ds: Iterable[int]) -> list[Task]:
    ds = list(ds)
    return [(check_partition_split, ((n, i, d), lam, d))
            for n in ns for i, lam in enumerate(parts.enumerate_partitions(n)) for d in ds]


def thm52_tasks(trials: int, seed: int, ells_: Iterable[int] = (1, 2, 3, 4)) -> list[Task]:
    rng = random.Random(seed)
    ells_ = list(ells_)
    return [(check_ell, ((t,), random_symbol(rng), rng.choice(ells_))) for t in range(trials)]


def thm54_tasks(trials: int, seed: int, ells_: Iterable[int] = (1, 2, 3, 4),
                es: Iterable[int] | None = None) -> list[Task]:
    rng = random.Random(seed)
    ells_ = list(ells_)
    tasks = []
    for t in range(trials):
        S = random_symbol(rng)
        choices = [e for e in (range(S.d) if es is None else es) if 0 <= e < S.d] or [0]
        tasks.append((check_twisted, ((t,), S, rng.choice(ells_), rng.choice(choices))))
    return tasks


def degree_tasks(ns: Iterable[int], ds: Iterable[int] = (2, 3), syt_limit: int = 6,
                 relative_limit: int = 10) -> list[Task]:
    ns = list(ns)
    ds = list(ds)
    tasks: list[Task] = [(check_degree_sum, (("sum", n), n)) for n in ns]
    for n in range(min(syt_limit, max(ns, default=0)) + 1):
        for i, lam in enumerate(parts.enumerate_partitions(n)):
            tasks.append((check_syt, (("syt", n, i), lam)))
    for n in range(relative_limit + 1):
        for i, lam in enumerate(parts.enumerate_partitions(n)):
            for d in ds:
                tasks.append((check_relative_degree, (("rel", n, i, d), lam, d)))
    return tasks


def oracle_tasks(seed: int, core_trials: int = 500, le_trials: int = 200,
                 hook_trials: int = 500) -> list[Task]:
    rng = random.Random(seed)
    tasks: list[Task] = []
    for t in range(core_trials):
        X = random_beta_set(rng, max_element=30, max_size=10)
        tasks.append((check_core_oracle, (("core", t), X, rng.randint(1, 5), rng.randrange(2**32))))
    for t in range(le_trials):
        S = random_symbol(rng)
        tasks.append((check_le_core_oracle, (("le", t), S, rng.randint(1, 4),
                                             rng.randrange(S.d), rng.randrange(2**32))))
    for t in range(hook_trials):
        X = random_beta_set(rng, max_element=30, max_size=12)
        tasks.append((check_hook_routes, (("hooks", t), X, rng.randint(1, 5))))
    return tasks


def _run_task(task: Task) -> list[Report]:
    fn, args = task
    return fn(*args)


def run_tasks(tasks: list[Task], jobs: int = 1) -> list[Report]:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        chunks = [_run_task(t) for t in tasks]
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=lambda r: _sort_key(r.key))
    return reports


def _sort_key(key: tuple) -> tuple:
    # mixed str/int keys: compare type names first so sorting never raises
    return tuple((type(k).__name__, k) for k in key)


def run_verify(suite: str, *, n: Iterable[int] | None = None, ds: Iterable[int] | None = None,
               trials: int = 1000, seed: int = DEFAULT_SEED, ells_: Iterable[int] | None = None,
               es: Iterable[int] | None = None, jobs: int = 1) -> list[Report]:
    if suite == "thm33":
        tasks = thm33_tasks(trials, seed)
    elif suite == "thm44":
        tasks = thm44_tasks(n if n is not None else range(13), ds or (2, 3, 4, 5))
    elif suite == "thm52":
        tasks = thm52_tasks(trials, seed, ells_ or (1, 2, 3, 4))
    elif suite == "thm54":
        tasks = thm54_tasks(trials, seed, ells_ or (1, 2, 3, 4), es)
    elif suite == "degrees":
        tasks = degree_tasks(n if n is not None else range(9), ds or (2, 3))
    elif suite == "oracles":
        tasks = oracle_tasks(seed)
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return run_tasks(tasks, jobs)


@dataclass(frozen=True)
class SweepConfig:
    """One verification run; ``None`` fields fall back to the suite defaults."""

    suite: str
    n: tuple[int, ...] | None = None
    ds: tuple[int, ...] | None = None
    trials: int = 1000
    seed: int = DEFAULT_SEED
    ells: tuple[int, ...] | None = None
    es: tuple[int, ...] | None = None
    jobs: int = 1

    def run(self) -> list[Report]:
        return run_verify(self.suite, n=self.n, ds=self.ds, trials=self.trials, seed=self.seed,
                          ells_=self.ells, es=self.es, jobs=self.jobs)


# the sweeps behind the acceptance checks
STANDARD_SWEEPS = (
    SweepConfig("thm44", n=tuple(range(15)), ds=(2, 3, 4, 5)),
    SweepConfig("thm33"),
    SweepConfig("thm52"),
    SweepConfig("thm54"),
    SweepConfig("degrees", n=tuple(range(9)), ds=(2, 3)),
    SweepConfig("oracles"),
)
