"""Command-line front end.

Subcommands:

* ``check``      satisfiability; exit 0 = SAT, 1 = UNSAT.
* ``count``      exact model count, optionally size-filtered.
* ``enumerate``  stream models one per line as sorted index sets.
* ``rows``       the final rows with per-row member counts.
* ``faces``      the per-size count vector.
* ``oracle``     brute-force cross-check of the above (small universes).

Exit codes: 0 success (or SAT), 1 UNSAT (check only), 2 usage error,
3 input error.  JSON output serializes counts as decimal strings so
consumers need not handle big integers.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import counting, oracle
from .engine import (
    DEFAULT_ENUM_CAP,
    CollectRows,
    EnumerationCapExceeded,
    KSpec,
    PolicyPreconditionError,
    PrunePolicy,
    enumerate_models,
    run,
)
from .instance import (
    HornInstance,
    ParseError,
    UnsatisfiableInputError,
    order_by_size,
    parse_dimacs,
    parse_native,
)
from .closure import satisfiable

ENUM_CAP_ENV = "HORNROWS_ENUM_CAP"

POLICY_NAMES = {
    "none": PrunePolicy.none,
    "weak": PrunePolicy.weak,
    "feasible": PrunePolicy.feasible,
    "extra-le": PrunePolicy.extra_le,
    "noncover-eq": PrunePolicy.extra_eq_noncover,
    "ie-eq": PrunePolicy.extra_eq_ie,
}


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    path: str
    fmt: str
    merge: bool
    order: str
    output: str
    kspec: KSpec
    strategy: str
    prune: str | None
    limit: int | None
    cap: int


def _add_input_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("path", help="instance file, or - for standard input")
    p.add_argument(
        "-f", "--format", choices=("native", "dimacs"), default="native",
        help="input format (default: native)",
    )
    p.add_argument(
        "--no-merge", action="store_true",
        help="keep implications with equal premises separate",
    )
    p.add_argument(
        "--order", choices=("input", "size-asc"), default="input",
        help="constraint order: as given, or ascending premise/body size",
    )


def _add_k_options(p: argparse.ArgumentParser, ge: bool = True) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--eq", type=int, metavar="K", help="only models of size K")
    g.add_argument("--le", type=int, metavar="K", help="only models of size <= K")
    if ge:
        g.add_argument("--ge", type=int, metavar="K", help="only models of size >= K")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hornrows",
        description="Compact enumeration and exact counting of Horn-formula models.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide satisfiability")
    _add_input_options(p)
    p.add_argument("-o", "--output", choices=("text", "json"), default="text")

    p = sub.add_parser("count", help="count models exactly")
    _add_input_options(p)
    _add_k_options(p)
    p.add_argument(
        "--strategy", choices=counting.STRATEGIES, default="direct",
        help="counting strategy (default: direct)",
    )
    p.add_argument(
        "--prune", choices=tuple(POLICY_NAMES),
        help="pruning policy override for the direct strategy",
    )
    p.add_argument("-o", "--output", choices=("text", "json", "csv"), default="json")

    p = sub.add_parser("enumerate", help="list models one per line")
    _add_input_options(p)
    _add_k_options(p, ge=False)
    p.add_argument("--limit", type=int, metavar="M", help="stop after M models")
    p.add_argument(
        "--cap", type=int,
        help=f"refuse runs beyond this many models (default {DEFAULT_ENUM_CAP}, "
        f"env {ENUM_CAP_ENV})",
    )

    p = sub.add_parser("rows", help="print the final rows")
    _add_input_options(p)
    _add_k_options(p, ge=False)
    p.add_argument("--prune", choices=tuple(POLICY_NAMES), help="pruning policy")
    p.add_argument("-o", "--output", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("faces", help="per-size model counts")
    _add_input_options(p)
    p.add_argument("-o", "--output", choices=("text", "json", "csv"), default="json")

    p = sub.add_parser("oracle", help="brute-force cross-check (w <= 24)")
    _add_input_options(p)
    _add_k_options(p)
    p.add_argument("--models", action="store_true", help="include the model list")
    p.add_argument("--faces", action="store_true", help="include the per-size vector")
    p.add_argument("-o", "--output", choices=("text", "json"), default="json")

    return top


def _kspec(args: argparse.Namespace) -> KSpec:
    if getattr(args, "eq", None) is not None:
        return KSpec.eq(args.eq)
    if getattr(args, "le", None) is not None:
        return KSpec.le(args.le)
    if getattr(args, "ge", None) is not None:
        return KSpec.ge(args.ge)
    return KSpec.all()


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load(args: argparse.Namespace) -> HornInstance:
    text = _read_text(args.path)
    parse = parse_native if args.format == "native" else parse_dimacs
    inst = parse(text, merge=not args.no_merge)
    if args.order == "size-asc":
        inst = order_by_size(inst)
    return inst


def _policy(args: argparse.Namespace, kspec: KSpec) -> PrunePolicy | None:
    name = getattr(args, "prune", None)
    if name is None:
        return None
    factory = POLICY_NAMES[name]
    if name in ("none", "weak", "feasible"):
        return factory()
    if kspec.k is None:
        raise UsageError(f"--prune {name} needs a size filter (--eq/--le)")
    if name == "extra-le" and kspec.kind not in ("le", "eq"):
        raise UsageError("--prune extra-le only fits --le/--eq queries")
    if name in ("noncover-eq", "ie-eq") and kspec.kind != "eq":
        raise UsageError(f"--prune {name} only fits --eq queries")
    return factory(kspec.k)


def _validate_k(kspec: KSpec, w: int) -> None:
    if kspec.k is not None and not 0 <= kspec.k <= w:
        raise UsageError(f"size filter {kspec.k} outside 0..{w}")


def _fmt_set(x) -> str:
    return "{" + ",".join(map(str, sorted(x))) + "}"


def _print_json(payload: dict) -> None:
    print(json.dumps(payload))


# --- subcommands --------------------------------------------------------------


def _cmd_check(args: argparse.Namespace) -> int:
    try:
        inst = _load(args)
        sat = satisfiable(inst)
    except UnsatisfiableInputError:
        sat = False
    if args.output == "json":
        _print_json({"satisfiable": sat})
    else:
        print("SAT" if sat else "UNSAT")
    return 0 if sat else 1


def _count_payload(report: counting.CountReport) -> dict:
    payload = {
        "N": str(report.n),
        "R": report.stats.final_rows,
        "k": str(report.kspec),
        "strategy": report.strategy,
        "policy": report.policy,
        "stats": report.stats.as_dict(),
    }
    if report.f_vector is not None:
        payload["f_vector"] = [str(c) for c in report.f_vector]
    return payload


def _cmd_count(args: argparse.Namespace) -> int:
    kspec = _kspec(args)
    try:
        inst = _load(args)
    except UnsatisfiableInputError as err:
        report = counting.CountReport(
            0, kspec, counting.EngineStats(), args.strategy, "unsatisfiable-input"
        )
        _emit_count(args, report, note=str(err))
        return 0
    _validate_k(kspec, inst.w)
    policy = _policy(args, kspec)
    report = counting.count(inst, kspec, strategy=args.strategy, policy=policy)
    _emit_count(args, report)
    return 0


def _emit_count(args, report: counting.CountReport, note: str | None = None) -> None:
    if args.output == "json":
        payload = _count_payload(report)
        if note:
            payload["note"] = note
        _print_json(payload)
    elif args.output == "csv":
        stats = report.stats
        print("n,r,k,strategy,policy,impositions,deletions,pruned,s_max,max_stack_depth")
        print(
            f"{report.n},{stats.final_rows},{report.kspec},{report.strategy},"
            f"{report.policy},{stats.impositions},{stats.deletions},{stats.pruned},"
            f"{stats.s_max},{stats.max_stack_depth}"
        )
    else:
        print(f"N = {report.n}")
        print(f"final rows: {report.stats.final_rows}")
        print(f"strategy: {report.strategy}, policy: {report.policy}")
        if note:
            print(f"note: {note}")


def _cmd_enumerate(args: argparse.Namespace) -> int:
    kspec = _kspec(args)
    try:
        inst = _load(args)
    except UnsatisfiableInputError:
        return 0
    _validate_k(kspec, inst.w)
    cap = args.cap
    if cap is None:
        cap = int(os.environ.get(ENUM_CAP_ENV, DEFAULT_ENUM_CAP))
    emitted = 0
    for x in enumerate_models(inst, kspec, cap=cap):
        print(_fmt_set(x))
        emitted += 1
        if args.limit is not None and emitted >= args.limit:
            break
    return 0


def _cmd_rows(args: argparse.Namespace) -> int:
    kspec = _kspec(args)
    try:
        inst = _load(args)
    except UnsatisfiableInputError:
        if args.output == "json":
            _print_json({"rows": []})
        return 0
    _validate_k(kspec, inst.w)
    policy = _policy(args, kspec)
    if policy is None:
        policy = PrunePolicy.none()
    sink = CollectRows()
    run(inst, sink, policy)
    entries = []
    for r in sink.rows:
        entry = {"row": r.render(), "cardinality": str(r.cardinality())}
        if kspec.kind in ("le", "eq"):
            entry["card_k"] = str(kspec.row_count(r))
        entries.append(entry)
    if args.output == "json":
        _print_json({"rows": entries, "R": len(entries)})
    elif args.output == "csv":
        cols = "row,cardinality" + (",card_k" if kspec.kind in ("le", "eq") else "")
        print(cols)
        for e in entries:
            print(",".join(e.values()))
    else:
        for e in entries:
            line = f"{e['row']}  |r| = {e['cardinality']}"
            if "card_k" in e:
                line += f"  card({kspec}) = {e['card_k']}"
            print(line)
    return 0


def _cmd_faces(args: argparse.Namespace) -> int:
    try:
        inst = _load(args)
        vector = counting.f_vector(inst)
    except UnsatisfiableInputError as err:
        vector = [0] * (err.w + 1)
    if args.output == "json":
        _print_json({"N": str(sum(vector)), "f_vector": [str(c) for c in vector]})
    elif args.output == "csv":
        print("k,count")
        for k, c in enumerate(vector):
            print(f"{k},{c}")
    else:
        for k, c in enumerate(vector):
            print(f"f[{k}] = {c}")
        print(f"total = {sum(vector)}")
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    kspec = _kspec(args)
    try:
        inst = _load(args)
    except UnsatisfiableInputError as err:
        payload = {"N": "0"}
        if args.faces:
            payload["f_vector"] = ["0"] * (err.w + 1)
        if args.models:
            payload["models"] = []
        _print_json(payload) if args.output == "json" else print("N = 0")
        return 0
    _validate_k(kspec, inst.w)
    n = oracle.oracle_count(inst, kspec)
    payload: dict = {"N": str(n), "k": str(kspec)}
    if args.faces:
        payload["f_vector"] = [str(c) for c in oracle.oracle_f_vector(inst)]
    if args.models:
        models = oracle.oracle_models(inst)
        if kspec.kind == "le":
            models = [m for m in models if len(m) <= kspec.k]
        elif kspec.kind == "ge":
            models = [m for m in models if len(m) >= kspec.k]
        elif kspec.kind == "eq":
            models = [m for m in models if len(m) == kspec.k]
        payload["models"] = [sorted(m) for m in models]
    if args.output == "json":
        _print_json(payload)
    else:
        print(f"N = {n}")
        if args.faces:
            print("f_vector =", " ".join(payload["f_vector"]))
        if args.models:
            for m in payload["models"]:
                print(_fmt_set(m))
    return 0


COMMANDS = {
    "check": _cmd_check,
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "rows": _cmd_rows,
    "faces": _cmd_faces,
    "oracle": _cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, PolicyPreconditionError, counting.StrategyError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (ParseError, OSError, EnumerationCapExceeded) as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        return 0


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
