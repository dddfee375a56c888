"""Reproductions of the worked examples (ids 1.15, 4.8, 5.1, 5.3, 5.6).

Each example is an ordered list of (label, value) items where a value is a
string, a multiset, or a grid (list of rows). ``render_text`` lays them out
for the terminal and ``to_json`` keeps exact values as strings.
"""

from __future__ import annotations

from . import beta_sets as bs
from . import ell_structures as ells
from . import hook_functions as hf
from . import partitions as parts
from . import symbols as sy
from .beta_sets import BetaSet
from .formats import format_grid
from .hook_functions import LengthMultiset
from .partitions import Partition
from .symbols import DSymbol

EXAMPLE_IDS = ("1.15", "4.8", "5.1", "5.3", "5.6")


class UnknownExampleError(KeyError):
    pass


class Grid(list):
    """Rows of a diagram; a marker type so renderers can tell it from a list of values."""


def example_1_15() -> list[tuple[str, object]]:
    X = BetaSet([11, 8, 6, 2, 0])
    d = 3
    S = sy.s_d(X, d)
    Q = sy.balanced_quotient(S)
    C = sy.core(S)
    q, c = bs.quotient_partition(X, d), bs.core_partition(X, d)
    return [
        ("X", str(X)),
        ("p(X)", str(bs.partition_of(X))),
        ("d", str(d)),
        ("abacus of X", bs.abacus_render(X, d)),
        ("S = s_3(X)", str(S)),
        ("row partitions of S", " ".join(f"({p})" for p in sy.row_partitions(S))),
        ("Q(S)", str(Q)),
        ("Q_3(X)", str(bs.d_quotient(X, d))),
        ("q_3(X)", str(q)),
        ("C(S)", str(C)),
        ("C_3(X)", str(bs.d_core(X, d))),
        ("c_3(X)", str(c)),
        ("|q_3(X)| + |c_3(X)|", f"{q.n} + {c.n} = {q.n + c.n}"),
    ]


def example_4_8() -> list[tuple[str, object]]:
    lam = Partition((7, 5, 4, 1))
    X = BetaSet([11, 8, 6, 2, 0])
    d = 3
    mu = bs.quotient_partition(X, d)
    kappa = bs.core_partition(X, d)
    core_part, remainder = hf.partition_hook_split(lam, X, d)
    sizes = tuple(len(r) for r in bs.runners(X, d))
    adjusted = hf.modified_quotient_diagram(lam, X, d)
    flat = LengthMultiset(v for row in adjusted for v in row)
    return [
        ("lambda", str(lam)),
        ("X", str(X)),
        ("d", str(d)),
        ("x", "(" + ",".join(map(str, sizes)) + ")"),
        ("q_3(X)", str(mu)),
        ("c_3(X)", str(kappa)),
        ("hook lengths of lambda", Grid(parts.hook_diagram(lam))),
        ("hook lengths of c_3(X)", Grid(parts.hook_diagram(kappa))),
        ("core hook lengths", core_part),
        ("R", remainder),
        ("3-residues of q_3(X)", Grid(parts.residue_diagram(mu, d))),
        ("adjusted hook lengths of q_3(X)", Grid(adjusted)),
        ("abs(adjusted) == R", str(hf.abs_multiset(flat) == remainder).lower()),
    ]


def _ex5_symbol() -> DSymbol:
    return DSymbol([[9, 7, 4, 2], [3, 1, 0]])


def example_5_1() -> list[tuple[str, object]]:
    S = _ex5_symbol()
    ell = 3
    T = ells.split(S, ell)
    CT = sy.core(T)
    return [
        ("S", str(S)),
        ("X = s_2^-1(S)", str(sy.s_d_inverse(S))),
        ("p(S)", str(sy.partition_of_symbol(S))),
        ("S_*3", str(T)),
        ("row partitions of S_*3", " ".join(f"({p})" for p in sy.row_partitions(T))),
        ("Q_3(S)", str(ells.ell_quotient(S, ell))),
        ("C(S_*3)", str(CT)),
        ("s_6^-1(C(S_*3))", str(sy.s_d_inverse(CT))),
        ("C_(3)(S)", str(ells.ell_core(S, ell))),
    ]


def example_5_3() -> list[tuple[str, object]]:
    S = _ex5_symbol()
    ell = 3
    X = sy.s_d_inverse(S)
    C = ells.ell_core(S, ell)
    Q = ells.ell_quotient(S, ell)
    delta = ells.ell_tuple(S, ell)
    delta0 = hf.minimal_tuple(2)
    report = ells.verify_ell_decomposition(S, ell)
    return [
        ("S", str(S)),
        ("p(S)", str(sy.partition_of_symbol(S))),
        ("abacus of X", bs.abacus_render(X, 2)),
        ("H(S)", Grid(hf.symbol_length_diagram(delta0, S))),
        ("short hooks", str(sum(1 for z in sy.hooks(S) if z.is_short))),
        ("C_(3)(S)", str(C)),
        ("p(C)", str(sy.partition_of_symbol(C))),
        ("H(C) diagram", Grid(hf.symbol_length_diagram(delta0, C))),
        ("H(C)", report.core_lengths),
        ("Q_3(S)", str(Q)),
        ("p(Q)", str(sy.partition_of_symbol(Q))),
        ("delta_3,S", str(delta)),
        ("delta_3,S-lengths of Q", Grid(hf.symbol_length_diagram(delta, Q))),
        ("H(S) == abs(H(Q)) + H(C)", str(report.ok).lower()),
    ]


def example_5_6() -> list[tuple[str, object]]:
    S = _ex5_symbol()
    ell, e = 3, 1
    spec = ells.TwistSpec(2, ell, e)
    X = sy.s_d_inverse(S)
    twisted = ells.twist_symbol(spec, S)
    T = ells.split_twisted(S, ell, e)
    Q = ells.le_quotient(S, ell, e)
    C = ells.le_core(S, ell, e)
    delta = ells.ell_tuple(twisted, ell)
    report = ells.verify_twisted_decomposition(S, ell, e)
    return [
        ("S", str(S)),
        ("X", str(X)),
        ("sigma(X)", str(ells.twist_beta_set(spec, X))),
        ("sigma(S)", str(twisted)),
        ("S_*3,1", str(T)),
        ("Q_3,1(S)", str(Q)),
        ("C(sigma(S)_*3)", str(sy.core(T))),
        ("C_(3,1)(S)", str(C)),
        ("H_>0(C)", report.core_lengths),
        ("delta", str(delta)),
        ("p(Q)", str(sy.partition_of_symbol(Q))),
        ("delta-lengths of Q", Grid(hf.symbol_length_diagram(delta, Q))),
        ("H_>0(S) == abs(H_>0(Q)) + H_>0(C)", str(report.ok).lower()),
    ]


_EXAMPLES = {
    "1.15": example_1_15,
    "4.8": example_4_8,
    "5.1": example_5_1,
    "5.3": example_5_3,
    "5.6": example_5_6,
}


def run_example(example_id: str) -> list[tuple[str, object]]:
    try:
        return _EXAMPLES[example_id]()
    except KeyError:
        raise UnknownExampleError(f"unknown example {example_id!r}; "
                                  f"choose from {', '.join(EXAMPLE_IDS)}") from None


def render_text(items: list[tuple[str, object]]) -> str:
    lines = []
    for label, value in items:
        if isinstance(value, Grid):
            lines.append(f"{label}:")
            lines.extend("  " + row for row in format_grid(value).splitlines())
        elif isinstance(value, LengthMultiset):
            lines.append(f"{label} = {{" + ", ".join(value.to_strings()) + "}")
        elif "\n" in value:
            lines.append(f"{label}:")
            lines.extend("  " + row for row in value.splitlines())
        else:
            lines.append(f"{label} = {value}")
    return "\n".join(lines) + "\n"


def to_json(items: list[tuple[str, object]]) -> dict:
    out = {}
    for label, value in items:
        if isinstance(value, Grid):
            out[label] = [[str(v) for v in row] for row in value]
        elif isinstance(value, LengthMultiset):
            out[label] = value.to_strings()
        else:
            out[label] = value
    return out
