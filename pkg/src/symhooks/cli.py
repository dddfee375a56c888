"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import beta_sets as bs
from . import ell_structures as ells
from . import hook_functions as hf
from . import partitions as parts
from . import symbols as sy
from .beta_sets import BetaSet
from .formats import ParseError, format_grid, parse_data_tuple, parse_object
from .partitions import Partition
from .sampling import DEFAULT_SEED
from .symbols import DSymbol
from .verify import SUITES, run_verify
from .worked_examples import EXAMPLE_IDS, UnknownExampleError, render_text, run_example, to_json


class UsageError(Exception):
    pass


def int_list(text: str) -> list[int]:
    """Parse '3', '2,3,5' or '0-14' (ranges inclusive)."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if "-" in chunk.lstrip("-")[1:] or ("-" in chunk and not chunk.startswith("-")):
            lo, hi = chunk.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(chunk))
    return out


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", help="modulus d (verify: list such as 2,3,4,5)")
    common.add_argument("--ell", help="ell for l-splitting (verify: list)")
    common.add_argument("--e", help="twist parameter e in [d] (verify: list)")
    common.add_argument("--delta", help="data tuple such as (3,6,7,4,5,2;3)")
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="symhooks", parents=[common],
                                     description="Hooks, cores and quotients of partitions, "
                                                 "beta-sets and d-symbols.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, obj=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if obj:
            p.add_argument("object", help="partition 7,5,4,1 | beta-set {11,8,6,2,0} | symbol ({2,0}|{}|{3,2,0})")
        return p

    add("core", "d-core (partition or beta-set) or core of a symbol; --ell/--e for (l,e)-cores")
    add("quotient", "d-quotient (partition or beta-set) or balanced quotient of a symbol")
    add("symbol", "s_d of a beta-set or partition; beta-set and partition of a symbol")
    add("hooks", "list hooks with their lengths")
    add("lengths", "multiset of delta-lengths of the hooks of a symbol")
    add("degree", "character degree n!/prod of hook lengths")
    add("reldegree", "degree factorized through the d-core and d-quotient")
    add("abacus", "draw a beta-set on the d-abacus")
    p = add("render", "draw a diagram")
    p.add_argument("--mode", choices=("abacus", "hooks", "residues"), default="hooks")
    p = add("example", "reproduce a worked example", obj=False)
    p.add_argument("id", help="one of " + ", ".join(EXAMPLE_IDS))
    p = add("verify", "run a verification sweep", obj=False)
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--n", help="sizes: 12, 0-14 or 4,6,8 (degrees: a single N means 0-N)")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--quiet", action="store_true", help="print failures and the summary only")
    return parser


def _need_d(args) -> int:
    if args.d is None:
        raise UsageError("this command needs --d")
    d = int(args.d)
    if d < 1:
        raise UsageError("--d must be positive")
    return d


def _as_beta_set(obj) -> BetaSet:
    if isinstance(obj, Partition):
        return bs.beta_set_for(obj, len(obj))
    if isinstance(obj, DSymbol):
        return sy.s_d_inverse(obj)
    return obj


def _ell_e(args, S: DSymbol) -> tuple[int | None, int]:
    ell = int(args.ell) if args.ell is not None else None
    e = int(args.e) if args.e is not None else 0
    if e and ell is None:
        raise UsageError("--e needs --ell")
    if ell is not None and ell < 1:
        raise UsageError("--ell must be positive")
    if not 0 <= e < S.d:
        raise UsageError(f"--e must lie in [0, {S.d})")
    return ell, e


def cmd_core(obj, args) -> dict:
    if isinstance(obj, DSymbol):
        ell, e = _ell_e(args, obj)
        C = sy.core(obj) if ell is None else ells.le_core(obj, ell, e)
        return {"core": str(C), "partition": str(sy.partition_of_symbol(C))}
    d = _need_d(args)
    X = _as_beta_set(obj)
    out = {"partition": str(bs.core_partition(X, d))}
    if isinstance(obj, BetaSet):
        out["core"] = str(bs.d_core(X, d))
    return out


def cmd_quotient(obj, args) -> dict:
    if isinstance(obj, DSymbol):
        ell, e = _ell_e(args, obj)
        Q = sy.balanced_quotient(obj) if ell is None else ells.le_quotient(obj, ell, e)
        return {"quotient": str(Q), "partition": str(sy.partition_of_symbol(Q))}
    d = _need_d(args)
    if isinstance(obj, Partition):
        return {"quotient": [str(p) for p in parts.partition_d_quotient(obj, d)]}
    return {"quotient": str(bs.d_quotient(obj, d)), "partition": str(bs.quotient_partition(obj, d))}


def cmd_symbol(obj, args) -> dict:
    if isinstance(obj, DSymbol):
        out = {"beta_set": str(sy.s_d_inverse(obj)), "partition": str(sy.partition_of_symbol(obj))}
        ell, e = _ell_e(args, obj)
        if ell is not None:
            out["split"] = str(ells.split_twisted(obj, ell, e))
            if e:
                out["twist"] = str(ells.twist_symbol(ells.TwistSpec(obj.d, ell, e), obj))
        return out
    d = _need_d(args)
    X = _as_beta_set(obj)
    return {"beta_set": str(X), "symbol": str(sy.s_d(X, d)), "partition": str(bs.partition_of(X))}


def cmd_hooks(obj, args) -> dict:
    if isinstance(obj, Partition):
        return {"hooks": [[str(v) for v in row] for row in parts.hook_diagram(obj)],
                "_grid": parts.hook_diagram(obj)}
    if isinstance(obj, BetaSet):
        return {"hooks": [f"({z.a},{z.b}) length {z.length}" for z in bs.hooks(obj)]}
    delta = parse_data_tuple(args.delta) if args.delta else hf.minimal_tuple(obj.d)
    return {"hooks": [f"{z} length {hf.delta_length(delta, z)}" for z in sy.hooks(obj)]}


def cmd_lengths(obj, args) -> dict:
    if isinstance(obj, DSymbol):
        S = obj
        delta = parse_data_tuple(args.delta) if args.delta else hf.minimal_tuple(S.d)
    else:
        d = _need_d(args)
        S = sy.s_d(_as_beta_set(obj), d)
        delta = parse_data_tuple(args.delta) if args.delta else hf.partition_tuple(d)
    return {"symbol": str(S), "delta": str(delta),
            "lengths": hf.length_multiset(delta, S).to_strings()}


def _need_partition(obj) -> Partition:
    if isinstance(obj, Partition):
        return obj
    if isinstance(obj, BetaSet):
        return bs.partition_of(obj)
    return sy.partition_of_symbol(obj)


def cmd_degree(obj, args) -> dict:
    lam = _need_partition(obj)
    return {"partition": str(lam), "n": lam.n, "degree": str(parts.character_degree(lam))}


def cmd_reldegree(obj, args) -> dict:
    d = _need_d(args)
    lam = _need_partition(obj)
    X = obj if isinstance(obj, BetaSet) else bs.beta_set_for(lam, len(lam))
    fac = hf.relative_degree_factorization(lam, X, d)
    return {"partition": str(lam), "d": d, "core": str(bs.core_partition(X, d)),
            "n!/r!": str(fac.index_ratio), "|prod H^delta(Q)|": str(fac.quotient_product),
            "core degree": str(fac.core_degree), "degree": str(fac.degree()),
            "hook formula": str(parts.character_degree(lam))}


def cmd_abacus(obj, args) -> dict:
    d = _need_d(args)
    return {"abacus": bs.abacus_render(_as_beta_set(obj), d)}


def cmd_render(obj, args) -> dict:
    if args.mode == "abacus":
        if isinstance(obj, Partition):
            raise UsageError("abacus mode needs a beta-set or a symbol")
        return cmd_abacus(obj, args)
    if args.mode == "residues":
        if not isinstance(obj, Partition):
            raise UsageError("residues mode needs a partition")
        grid = parts.residue_diagram(obj, _need_d(args))
    elif isinstance(obj, Partition):
        grid = parts.hook_diagram(obj)
    elif isinstance(obj, DSymbol):
        delta = parse_data_tuple(args.delta) if args.delta else hf.minimal_tuple(obj.d)
        grid = hf.symbol_length_diagram(delta, obj)
    else:
        grid = parts.hook_diagram(bs.partition_of(obj))
    return {"diagram": [[str(v) for v in row] for row in grid], "_grid": grid}


COMMANDS = {
    "core": cmd_core, "quotient": cmd_quotient, "symbol": cmd_symbol, "hooks": cmd_hooks,
    "lengths": cmd_lengths, "degree": cmd_degree, "reldegree": cmd_reldegree,
    "abacus": cmd_abacus, "render": cmd_render,
}


def _print_result(result: dict, as_json: bool, out):
    if as_json:
        json.dump({k: v for k, v in result.items() if not k.startswith("_")}, out, indent=2)
        out.write("\n")
        return
    if "_grid" in result:
        out.write(format_grid(result["_grid"]) + "\n")
        return
    for key, value in result.items():
        if isinstance(value, list):
            out.write(f"{key}:\n")
            for item in value:
                out.write(f"  {item}\n")
        elif isinstance(value, str) and "\n" in value:
            out.write(value + "\n")
        else:
            out.write(f"{key} = {value}\n")


def cmd_verify(args, out) -> int:
    ns = int_list(args.n) if args.n else None
    if args.suite == "degrees" and ns is not None and len(ns) == 1:
        ns = list(range(ns[0] + 1))
    reports = run_verify(args.suite, n=ns,
                         ds=int_list(args.d) if args.d else None,
                         trials=args.trials, seed=args.seed,
                         ells_=int_list(args.ell) if args.ell else None,
                         es=int_list(args.e) if args.e else None,
                         jobs=args.jobs)
    failures = sum(1 for r in reports if not r.passed)
    if args.json:
        json.dump([r.to_json() for r in reports], out, indent=1)
        out.write("\n")
    else:
        for r in reports:
            if not (args.quiet and r.passed):
                out.write(r.line() + "\n")
        out.write(f"{args.suite}: {len(reports) - failures} passed, {failures} failed\n")
    return 1 if failures else 0


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "example":
            items = run_example(args.id)
            if args.json:
                json.dump(to_json(items), out, indent=2)
                out.write("\n")
            else:
                out.write(render_text(items))
            return 0
        obj = parse_object(args.object)
        _print_result(COMMANDS[args.command](obj, args), args.json, out)
        return 0
    except (ParseError, UsageError, UnknownExampleError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, UnknownExampleError) else str(exc)
        print(f"symhooks: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
