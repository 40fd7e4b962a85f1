"""Self-contained JSON reports and the independent replay checker.

A report stores the instance inline, so replay never depends on the corpus files.
Evidence is re-verified from scratch: zad certificates are re-expanded, witnesses
re-enumerated, derivations re-checked.  Reports without a replayable payload
(structural Yes answers such as the irreducible criterion) are replayed by
recomputing the verdict with the stored seed and budget.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .algebra import FDAlgebra
from .exactlin import Field
from .io import (FORMAT, FormatError, algebra_from_json, algebra_to_json, module_from_json, module_to_json,
                 scalar, vec_from_json, vec_to_json)
from .modules import FDModule, principal_projective, regular_module
from .verdict import Answer, Verdict
from .zad import NotZadWitness, ZadCertificate, check_certificate, check_witness
from .zpd import ComponentWitness, Ext1Witness, check_component_witness, check_ext1_witness

TIMING_KEY = "timing"


# evidence encoding --------------------------------------------------------------------

def evidence_to_json(ev, target: str = "module") -> dict | None:
    if ev is None:
        return None
    if isinstance(ev, ZadCertificate):
        return {"type": "zad_certificate", "target": target,
                "entries": [{"x": i, "v": j,
                             "terms": [{"coeff": scalar(c), "a": vec_to_json(a), "m": vec_to_json(m)}
                                       for c, a, m in terms]}
                            for i, j, terms in ev.entries]}
    if isinstance(ev, NotZadWitness):
        return {"type": "not_zad_witness", "target": target, "alpha": vec_to_json(ev.alpha),
                "pair": list(ev.pair), "value": scalar(ev.value)}
    if isinstance(ev, Ext1Witness):
        return {"type": "ext1_witness", "character": vec_to_json(ev.character),
                "derivation": vec_to_json(ev.derivation)}
    if isinstance(ev, ComponentWitness):
        return {"type": "component_witness", "radical": [vec_to_json(v) for v in ev.radical],
                "identity": vec_to_json(ev.identity), "primitive": vec_to_json(ev.primitive),
                "minpoly": vec_to_json(ev.minpoly)}
    return {"type": "opaque", "value": jsonable(ev)}


def evidence_from_json(F: Field, obj: dict):
    kind = obj.get("type")
    try:
        if kind == "zad_certificate":
            return ZadCertificate([(int(e["x"]), int(e["v"]),
                                    [(vec_from_json(F, [t["coeff"]])[0], vec_from_json(F, t["a"]),
                                      vec_from_json(F, t["m"])) for t in e["terms"]])
                                   for e in obj["entries"]])
        if kind == "not_zad_witness":
            return NotZadWitness(vec_from_json(F, obj["alpha"]), tuple(int(x) for x in obj["pair"]),
                                 vec_from_json(F, [obj["value"]])[0])
        if kind == "ext1_witness":
            return Ext1Witness(vec_from_json(F, obj["character"]), vec_from_json(F, obj["derivation"]))
        if kind == "component_witness":
            return ComponentWitness(tuple(vec_from_json(F, v) for v in obj["radical"]),
                                    vec_from_json(F, obj["identity"]), vec_from_json(F, obj["primitive"]),
                                    list(vec_from_json(F, obj["minpoly"])))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed {kind} payload: {exc}") from None
    raise FormatError(f"evidence of type {kind!r} cannot be replayed")


def jsonable(x) -> Any:
    if isinstance(x, (str, int, bool)) or x is None:
        return x
    if isinstance(x, Fraction):
        return scalar(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (ZadCertificate, NotZadWitness, Ext1Witness, ComponentWitness)):
        return evidence_to_json(x)
    return str(x)


# reports --------------------------------------------------------------------------

@dataclass
class Instance:
    algebra: FDAlgebra
    module: FDModule | None = None
    idempotent: tuple | None = None
    regular: bool = False

    def to_json(self) -> dict:
        out: dict[str, Any] = {"algebra": algebra_to_json(self.algebra)}
        if self.module is not None and not self.regular and self.idempotent is None:
            out["module"] = module_to_json(self.module, algebra_ref="inline")
            out["module"].pop("algebra")
        if self.idempotent is not None:
            out["idempotent"] = vec_to_json(self.idempotent)
        if self.regular:
            out["regular"] = True
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Instance":
        a = algebra_from_json(obj["algebra"])
        mod = None
        if "module" in obj:
            mod = module_from_json(dict(obj["module"], algebra="inline"), algebra=a)
        regular = bool(obj.get("regular"))
        if regular:
            mod = regular_module(a)
        e = None
        if "idempotent" in obj:
            e = vec_from_json(a.field, obj["idempotent"])
            mod = principal_projective(a, e)[0]
        return cls(a, mod, e, regular)


def verdict_report(command: str, inst: Instance, verdict: Verdict, *, seed: int, budget: int,
                   mode: str | None = None, target: str = "module", seconds: float = 0.0) -> dict:
    evidence = []
    main = evidence_to_json(verdict.evidence, target)
    if main is not None:
        evidence.append(main)
    details = dict(verdict.details)
    extra = details.pop("oracle_witness", None)
    if extra is not None:
        evidence.append(evidence_to_json(extra, "regular"))
    return {"format": FORMAT, "kind": "report", "command": command, "instance": inst.to_json(),
            "verdict": verdict.answer.value, "method": verdict.method, "reason": verdict.reason,
            "details": jsonable(details), "evidence": evidence, "seed": seed, "budget": budget,
            "mode": mode, TIMING_KEY: {"seconds": round(seconds, 6)}}


def strip_timing(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != TIMING_KEY}


# replay -----------------------------------------------------------------------------

@dataclass
class ReplayResult:
    ok: bool
    checks: list  # (what, passed)

    @property
    def message(self) -> str:
        return "; ".join(f"{what}: {'ok' if passed else 'FAILED'}" for what, passed in self.checks)


_EXPECTED = {"zad_certificate": Answer.YES, "not_zad_witness": Answer.NO,
             "ext1_witness": Answer.NO, "component_witness": Answer.NO}


def replay(report: dict) -> ReplayResult:
    """Re-verify a report without trusting anything but the instance it carries."""
    if report.get("format") != FORMAT or report.get("kind") != "report":
        raise FormatError("not a format-1 report")
    inst = Instance.from_json(report["instance"])
    a = inst.algebra
    try:
        answer = None if report["verdict"] is None else Answer(report["verdict"])
    except (KeyError, ValueError):
        raise FormatError("report has no valid verdict") from None
    budget = int(report.get("budget", 0))
    checks = []
    for obj in report.get("evidence") or []:
        kind = obj.get("type")
        try:
            ev = evidence_from_json(a.field, obj)
        except FormatError:
            checks.append((f"{kind} parse", False))
            continue
        if kind in ("zad_certificate", "not_zad_witness"):
            target = inst.module if obj.get("target", "module") == "module" else regular_module(a)
            if target is None:
                checks.append((kind, False))
                continue
            if kind == "zad_certificate":
                passed = check_certificate(target, ev)
            else:
                passed = a.field.is_finite and check_witness(target, ev, max(budget, 1))
        elif kind == "ext1_witness":
            passed = check_ext1_witness(a, ev)
        else:
            passed = check_component_witness(a, ev)
        checks.append((kind, passed and _EXPECTED[kind] is answer))
    if not checks:
        checks.append(("recompute", _recompute_matches(report)))
    return ReplayResult(all(p for _, p in checks), checks)


def _recompute_matches(report: dict) -> bool:
    from .cli import run_command

    fresh = run_command(report["command"], Instance.from_json(report["instance"]),
                        seed=int(report.get("seed", 0)), budget=int(report.get("budget", 0)),
                        mode=report.get("mode"))
    return strip_timing(fresh) == strip_timing(report)
