"""Command-line front end.

Subcommands: construct, stats, search, verify, reduce-critical, support,
threshold, audit-chain.  Reports are JSON on stdout (family text format
with --raw where a family is the payload); exit code 0 means pass/success,
1 means counterexample/infeasible, 2 means usage or domain error.
Identical invocations produce byte-identical output; runs with a
--time-budget are the one documented exception.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import bounds, constructions, proofcheck, search
from .core import (
    FamilyError,
    SetFamily,
    elements_of,
    is_intersecting,
    level,
    matching_number,
    min_member_size,
    rank,
    shadow_degree,
    transversal_number,
)
from .famio import format_family, parse_family

SCHEMA = 1

_VERIFY_CHECKS = (
    "tau-ge-delta",
    "link-degree",
    "no-sunflower",
    "branching",
    "separation",
    "double-separation",
    "critical-bounds",
    "classification",
    "support",
)


def _emit(payload: dict) -> None:
    payload = {"schema": SCHEMA, **payload}
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _family_json(fam: SetFamily) -> dict:
    return {"n": fam.n, "k": fam.k, "sets": [list(s) for s in fam.sets()]}


def _load_family(path: Optional[str]) -> SetFamily:
    if path is None:
        raise FamilyError("an input family is required (--input PATH, or - for stdin)")
    if path == "-":
        return parse_family(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_family(fh.read())


def _write_output(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_base(spec: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in spec.replace(",", " ").split())
    except ValueError:
        raise FamilyError(f"{flag} expects integers like '2,4,6', got {spec!r}") from None


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_construct(args) -> int:
    kind = args.family
    if kind == "star":
        _require(args, "n", "k", "x")
        fam = constructions.star(args.n, args.k, args.x)
    elif kind == "hilton-milner":
        _require(args, "n", "k")
        fam = constructions.hilton_milner(args.n, args.k)
    elif kind == "ell":
        _require(args, "n", "k", "r")
        fam = constructions.ell_family(args.n, args.k, args.r)
    elif kind == "ell-on":
        _require(args, "n", "k", "base")
        fam = constructions.ell_family_on(args.n, args.k, _parse_base(args.base, "--base"))
    elif kind == "complete":
        _require(args, "k", "base")
        fam = constructions.complete_on(_parse_base(args.base, "--base"), args.k, n=args.n)
    elif kind == "design-2-6-3-2":
        fam = constructions.design_2_6_3_2()
    else:  # pragma: no cover - argparse choices guard this
        raise FamilyError(f"unknown construction {kind!r}")
    if args.raw:
        _write_output(format_family(fam), args.out)
    else:
        payload = {"construction": kind, "size": len(fam), "family": _family_json(fam)}
        if args.out:
            _write_output(json.dumps({"schema": SCHEMA, **payload}, indent=2) + "\n", args.out)
        else:
            _emit(payload)
    return 0


def _require(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise FamilyError(
            f"construction {args.family!r} needs --" + ", --".join(missing))


def _cmd_stats(args) -> int:
    fam = _load_family(args.input)
    empty_member = 0 in fam.members
    payload = {
        "n": fam.n,
        "k": fam.k,
        "size": len(fam),
        "uniform": fam.is_uniform,
        "intersecting": is_intersecting(fam),
        "shadow_degree": (shadow_degree(fam) if fam.is_uniform and fam.members else None),
        "matching_number": matching_number(fam),
        "transversal_number": (None if empty_member else transversal_number(fam)),
        "min_member_size": (min_member_size(fam) if fam.members else None),
        "rank": (rank(fam) if fam.members else None),
    }
    _emit(payload)
    return 0


def _cmd_search(args) -> int:
    if args.workers is not None and args.workers < 1:
        raise FamilyError("--workers must be at least 1")
    problem = search.SearchProblem(
        args.n, args.k, args.r,
        enumerate_extremal=args.enumerate,
        node_budget=args.node_budget,
        time_budget=args.time_budget,
    )
    report = search.solve(problem)
    payload = {
        "n": args.n,
        "k": args.k,
        "r": args.r,
        "optimum": report.optimum,
        "feasible": report.feasible,
        "proven": report.proven,
        "witness": _family_json(report.witness) if report.witness else None,
        "classes": ([_family_json(c) for c in report.extremal_classes]
                    if report.extremal_classes is not None else None),
        "nodes_expanded": report.nodes_expanded,
    }
    _emit(payload)
    return 0 if report.feasible else 1


def _cmd_reduce_critical(args) -> int:
    fam = _load_family(args.input)
    reduced = proofcheck.reduce_to_critical(fam)
    if args.raw:
        _write_output(format_family(reduced), args.out)
    else:
        _emit({"size": len(reduced), "rank": rank(reduced),
               "family": _family_json(reduced)})
    return 0


def _cmd_support(args) -> int:
    fam = _load_family(args.input)
    x = proofcheck.minimal_support(fam)
    _emit({"support": list(x), "size": len(x)})
    return 0


def _cmd_threshold(args) -> int:
    if args.formula == "fw2024":
        _emit({"formula_id": "fw2024",
               "formula": bounds.FW2024_THRESHOLD_FORMULA,
               "note": "constant unspecified; exposed symbolically only"})
        return 0
    value = bounds.evaluate_formula(
        args.formula, n=args.n, k=args.k, r=args.r,
        g=args.g, h=args.h, a=args.a, b=args.b)
    _emit({"formula_id": value.formula_id, "params": value.params,
           "decimal_value": str(value.value), "digits": len(str(value.value))})
    return 0


def _cmd_audit_chain(args) -> int:
    report = bounds.audit_inequality_chain(args.n, args.k, args.r)
    steps = [
        {"name": s.name, "support_size": s.support_size, "p": s.p,
         "lhs": s.lhs, "rhs": s.rhs, "relation": s.relation, "holds": s.holds}
        for s in report.steps
    ]
    _emit({
        "formula_id": "inequality-chain",
        "params": {"n": report.n, "k": report.k, "r": report.r},
        "support_range": list(report.support_range),
        "verdict": "pass" if report.verdict else "fail",
        "failing_steps": sum(1 for s in report.steps if not s.holds),
        "steps": steps,
    })
    return 0 if report.verdict else 1


def _verify_report(rep: proofcheck.CheckReport) -> int:
    payload = {"check": rep.check, "passed": rep.passed, "details": rep.details}
    if rep.counterexample is not None:
        payload["counterexample"] = rep.counterexample
    _emit(payload)
    return 0 if rep.passed else 1


def _cmd_verify(args) -> int:
    if args.list:
        _emit({"checks": list(_VERIFY_CHECKS)})
        return 0
    check = args.check
    if check is None:
        raise FamilyError("verify needs a check name (or --list)")

    if check == "tau-ge-delta":
        return _verify_report(proofcheck.verify_tau_ge_delta(_load_family(args.input)))
    if check == "link-degree":
        _need(args, "r")
        return _verify_report(proofcheck.verify_link_degree(_load_family(args.input), args.r))
    if check == "no-sunflower":
        return _verify_report(proofcheck.verify_no_sunflower_3_1(_load_family(args.input)))
    if check == "branching":
        _need(args, "r")
        fam = _load_family(args.input)
        base = level(fam, min_member_size(fam))
        run = proofcheck.run_branching(
            base, args.r,
            choice="random" if args.random else "lex", seed=args.seed)
        return _verify_report(proofcheck.verify_branching_cover(run, fam))
    if check == "separation":
        _need(args, "n", "g", "h")
        g_set = tuple(range(1, args.g + 1))
        h_set = tuple(range(args.g, args.g + args.h))
        inst = proofcheck.SeparationInstance(args.n, ((g_set, h_set, args.g),))
        counted = proofcheck.separating_permutations(inst, 0)
        formula = bounds.separation_count(args.n, args.g, args.h)
        rep = proofcheck.CheckReport(
            "separation", counted == formula,
            {"n": args.n, "g": args.g, "h": args.h,
             "enumerated": counted, "formula": formula},
            None if counted == formula else {"enumerated": counted, "formula": formula})
        return _verify_report(rep)
    if check == "double-separation":
        fam = _load_family(args.input)
        inst = proofcheck.separation_instance_from_family(fam)
        return _verify_report(proofcheck.verify_no_double_separation(inst))
    if check == "critical-bounds":
        return _verify_report(proofcheck.audit_union_bounds(_load_family(args.input)))
    if check == "classification":
        _need(args, "n", "k")
        return _verify_report(proofcheck.verify_delta_k_classification(args.n, args.k))
    if check == "support":
        fam = _load_family(args.input)
        x = proofcheck.minimal_support(fam)
        return _verify_report(proofcheck.CheckReport(
            "support", True, {"support": list(x), "size": len(x)}))
    raise FamilyError(f"unknown check {check!r}; see verify --list")


def _need(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise FamilyError("this check needs --" + ", --".join(missing))


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shadowfam",
        description="Workbench for intersecting families with prescribed shadow degree.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a named family")
    p.add_argument("--family", required=True,
                   choices=["star", "hilton-milner", "ell", "ell-on",
                            "complete", "design-2-6-3-2"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--x", type=int, help="anchor element for star")
    p.add_argument("--base", help="base set, e.g. '2,4,6'")
    p.add_argument("--raw", action="store_true", help="family text format instead of JSON")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("stats", help="basic invariants of a family file")
    p.add_argument("input", help="family file, or - for stdin")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("search", help="exact maximum family size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--enumerate", action="store_true",
                   help="also enumerate extremal isomorphism classes")
    p.add_argument("--node-budget", type=int)
    p.add_argument("--time-budget", type=float, help="seconds")
    p.add_argument("--workers", type=int,
                   help="accepted for interface stability; the solver is sequential")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify", help="run a named verification")
    p.add_argument("check", nargs="?", choices=_VERIFY_CHECKS)
    p.add_argument("--list", action="store_true", help="list available checks")
    p.add_argument("--input", help="family file, or - for stdin")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--random", action="store_true",
                   help="randomized blocking-set choices (branching)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reduce-critical", help="shrink to a critical fixpoint")
    p.add_argument("input", help="family file, or - for stdin")
    p.add_argument("--raw", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_reduce_critical)

    p = sub.add_parser("support", help="lexicographically least minimum support")
    p.add_argument("input", help="family file, or - for stdin")
    p.set_defaults(func=_cmd_support)

    p = sub.add_parser("threshold", help="evaluate a bound formula exactly")
    p.add_argument("--formula", required=True,
                   choices=list(bounds.formula_ids()) + ["fw2024"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("audit-chain", help="exact audit of the closing size-bound chain")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=_cmd_audit_chain)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except FamilyError as exc:
        _emit({"error": str(exc)})
        return 2
    except OSError as exc:
        _emit({"error": str(exc)})
        return 2


def console_main() -> None:  # pragma: no cover - thin wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    console_main()
