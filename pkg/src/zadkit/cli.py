"""``zadkit`` command line.

Exit codes: 0 Yes, 1 No, 2 Unknown; 3 unreadable or malformed input, 4 budget
exceeded, 5 unsupported radical regime, 6 discrepancy between decision routes,
7 any other rejected input (not idempotent, not irreducible, ...).
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import __version__
from .algebra import radical, radical_method, validate_algebra
from .errors import DEFAULT_BUDGET, OverBudget, UnsupportedRadicalRegime, ZadkitError
from .io import (FormatError, dumps, load_algebra, load_any, load_module, read_json, vec_from_json, vec_to_json,
                 write_json)
from .modules import FDModule, principal_projective, regular_module, validate_module
from .report import Instance, jsonable, replay, verdict_report
from .verdict import Answer, Verdict
from .zad import Discrepancy, decide_zad, is_zad_oracle, is_zad_principal_projective
from .zpd import is_zpd, zpd_condition_crosscheck

EXIT_PARSE, EXIT_BUDGET, EXIT_REGIME, EXIT_DISCREPANCY, EXIT_INPUT = 3, 4, 5, 6, 7
MODES = ("fast", "oracle", "both")


def _agree_or_raise(fast: Verdict, oracle: Verdict) -> Verdict:
    if not fast.unknown and fast.answer is not oracle.answer:
        raise Discrepancy(f"{fast.method} says {fast.answer.value}, oracle says {oracle.answer.value}")
    if fast.unknown:
        return oracle
    return Verdict(fast.answer, f"{fast.method}+oracle", fast.evidence or oracle.evidence, fast.reason,
                   dict(fast.details))


def _zpd_verdict(inst: Instance, mode: str, budget: int, seed: int) -> Verdict:
    a = inst.algebra
    if mode == "oracle":
        return is_zad_oracle(regular_module(a), budget)
    fast = is_zpd(a, budget, seed)
    if mode == "fast":
        return fast
    return _agree_or_raise(fast, is_zad_oracle(regular_module(a), budget))


def _projective_verdict(inst: Instance, mode: str, budget: int, seed: int) -> Verdict:
    if mode == "oracle":
        return is_zad_oracle(inst.module, budget)
    fast = is_zad_principal_projective(inst.algebra, inst.idempotent, budget, seed)
    if mode == "fast":
        return fast
    return _agree_or_raise(fast, is_zad_oracle(inst.module, budget))


def run_command(command: str, inst: Instance, *, seed: int = 0, budget: int = DEFAULT_BUDGET,
                mode: str | None = "fast") -> dict:
    """Run one decision command on an in-memory instance and return its report."""
    start = time.perf_counter()
    # decide exactly what the report will store, so replay sees the same instance
    inst = Instance.from_json(inst.to_json())
    a = inst.algebra
    if command == "check-zpd":
        v = _zpd_verdict(inst, mode or "fast", budget, seed)
        target = "regular"
    elif command == "check-zad":
        if inst.idempotent is not None:
            v = _projective_verdict(inst, mode or "fast", budget, seed)
        else:
            v = decide_zad(inst.module, mode or "fast", budget, seed)
        target = "module"
    elif command == "oracle":
        v = is_zad_oracle(inst.module, budget)
        target = "module"
    elif command == "radical":
        rad = radical(a, budget)
        return {"format": 1, "kind": "report", "command": command, "instance": inst.to_json(),
                "verdict": None, "method": radical_method(a, budget), "radical": [vec_to_json(x) for x in rad.basis],
                "dim": rad.dim, "evidence": [], "seed": seed, "budget": budget, "mode": None,
                "timing": {"seconds": round(time.perf_counter() - start, 6)}}
    elif command == "crosscheck":
        rep = zpd_condition_crosscheck(a, budget, seed)
        rows = [{"idempotent": vec_to_json(r.idempotent), "conditions": r.conditions, "agree": r.agree}
                for r in rep.rows]
        return {"format": 1, "kind": "report", "command": command, "instance": inst.to_json(),
                "verdict": None, "method": "crosscheck", "rows": rows,
                "algebra_level": jsonable(rep.algebra_level), "agree": rep.agree, "evidence": [],
                "seed": seed, "budget": budget, "mode": None,
                "timing": {"seconds": round(time.perf_counter() - start, 6)}}
    else:
        raise ValueError(f"unknown command {command!r}")
    return verdict_report(command, inst, v, seed=seed, budget=budget, mode=mode, target=target,
                          seconds=time.perf_counter() - start)


def exit_code_for(report: dict) -> int:
    if report["command"] == "crosscheck":
        return 0 if report["agree"] else EXIT_DISCREPANCY
    if report["verdict"] is None:
        return 0
    return Answer(report["verdict"]).exit_code


# argument handling ------------------------------------------------------------------

def _module_instance(alg_path: str, mod_arg: str | None, projective: str | None) -> Instance:
    a = load_algebra(Path(alg_path))
    if projective is not None:
        try:
            e = vec_from_json(a.field, [x.strip() for x in projective.split(",")])
        except FormatError as exc:
            raise FormatError(f"--projective: {exc}") from None
        if len(e) != a.dim:
            raise FormatError(f"--projective needs {a.dim} coordinates")
        return Instance(a, principal_projective(a, e)[0], e)
    if mod_arg is None or mod_arg == "regular":
        return Instance(a, regular_module(a), regular=True)
    return Instance(a, load_module(Path(mod_arg), algebra=a))


def _summary(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    if report.get("verdict") is not None:
        lines.append(f"verdict: {report['verdict']}")
    lines.append(f"method: {report['method']}")
    if report.get("reason"):
        lines.append(f"reason: {report['reason']}")
    if report["command"] == "radical":
        lines.append(f"radical dim: {report['dim']}")
        lines += [f"  {' '.join(v)}" for v in report["radical"]]
    if report["command"] == "crosscheck":
        for row in report["rows"]:
            marks = " ".join("?" if c is None else ("Y" if c else "N") for c in row["conditions"].values())
            lines.append(f"  e=({', '.join(row['idempotent'])}): {marks}{'' if row['agree'] else '  DISAGREE'}")
        lines.append(f"agree: {report['agree']}")
    for ev in report.get("evidence", []):
        lines.append(f"evidence: {ev['type']}")
    return "\n".join(lines)


def _emit(report: dict, args) -> int:
    if args.out:
        write_json(Path(args.out), report)
    print(dumps(report) if args.json else _summary(report), end="" if args.json else "\n")
    return exit_code_for(report)


def cmd_validate(args) -> int:
    obj = load_any(Path(args.path), check=False)
    problems = validate_module(obj) if isinstance(obj, FDModule) else validate_algebra(obj)
    kind = "module" if isinstance(obj, FDModule) else "algebra"
    if problems:
        print(f"invalid {kind}: {len(problems)} violations")
        for p in problems[:20]:
            print(f"  {p}")
        return 1
    print(f"valid {kind} (dim {obj.dim})")
    return 0


def cmd_radical(args) -> int:
    inst = Instance(load_algebra(Path(args.path)))
    return _emit(run_command("radical", inst, seed=args.seed, budget=args.budget), args)


def cmd_check_zad(args) -> int:
    inst = _module_instance(args.algebra, args.module, args.projective)
    return _emit(run_command("check-zad", inst, seed=args.seed, budget=args.budget, mode=args.mode), args)


def cmd_check_zpd(args) -> int:
    inst = Instance(load_algebra(Path(args.algebra)), regular=True)
    return _emit(run_command("check-zpd", inst, seed=args.seed, budget=args.budget, mode=args.mode), args)


def cmd_oracle(args) -> int:
    inst = _module_instance(args.algebra, args.module, None)
    return _emit(run_command("oracle", inst, seed=args.seed, budget=args.budget, mode="oracle"), args)


def cmd_crosscheck(args) -> int:
    inst = Instance(load_algebra(Path(args.algebra)))
    return _emit(run_command("crosscheck", inst, seed=args.seed, budget=args.budget, mode=None), args)


def cmd_replay(args) -> int:
    res = replay(read_json(Path(args.report)))
    print(("verified: " if res.ok else "replay failed: ") + res.message)
    return 0 if res.ok else 1


def cmd_corpus(args) -> int:
    from .corpus import corpus_dir, write_corpus
    from .shipped import write_reports

    root = Path(args.root) if args.root else corpus_dir()
    files = write_corpus(root)
    reports = write_reports(root)
    print(f"wrote {len(files)} instance files and {len(reports)} reports under {root}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max vectors any enumeration may visit")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write the JSON report here")
    common.add_argument("--json", action="store_true", help="print the full report instead of a summary")

    parser = argparse.ArgumentParser(prog="zadkit", description="Decide zad modules and zpd algebras exactly.")
    parser.add_argument("--version", action="version", version=f"zadkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an algebra or module file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("radical", parents=[common], help="Jacobson radical of an algebra")
    p.add_argument("path")
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("check-zad", parents=[common], help="is the module zad?")
    p.add_argument("algebra")
    p.add_argument("module", nargs="?", help="module file, or 'regular' (the default)")
    p.add_argument("--projective", metavar="E", help="decide A e for this idempotent (comma separated)")
    p.add_argument("--mode", choices=MODES, default="fast")
    p.set_defaults(func=cmd_check_zad)

    p = sub.add_parser("check-zpd", parents=[common], help="is the algebra zpd?")
    p.add_argument("algebra")
    p.add_argument("--mode", choices=MODES, default="fast")
    p.set_defaults(func=cmd_check_zpd)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive zad decision over a finite field")
    p.add_argument("algebra")
    p.add_argument("module", help="module file or 'regular'")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("crosscheck", parents=[common], help="compare the equivalent zpd conditions idempotent by idempotent")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("replay", help="independently verify a report")
    p.add_argument("report")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("corpus", help="regenerate the corpus files and shipped reports")
    p.add_argument("--root", help="corpus directory (default: the in-repo corpus)")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OverBudget as exc:
        print(f"error: over budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except UnsupportedRadicalRegime as exc:
        print(f"error: unsupported radical regime: {exc}", file=sys.stderr)
        return EXIT_REGIME
    except Discrepancy as exc:
        print(f"error: discrepancy: {exc}", file=sys.stderr)
        return EXIT_DISCREPANCY
    except ZadkitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
