"""The reports shipped under ``corpus/reports``: which commands run on which instances."""
from __future__ import annotations

from pathlib import Path

from . import corpus as C
from .modules import principal_projective
from .report import Instance

CROSSCHECK_MAX_DIM = 6


def report_jobs():
    """Yield ``(file stem, command, instance, mode)`` in a fixed order."""
    for name in C.ALGEBRAS:
        a = C.algebra(name)
        yield f"radical__{name}", "radical", Instance(a), None
        yield f"check-zpd__{name}", "check-zpd", Instance(a, regular=True), "fast"
        if a.field.is_finite:
            yield f"check-zpd-both__{name}", "check-zpd", Instance(a, regular=True), "both"
        if a.field == C.F2 and a.dim <= CROSSCHECK_MAX_DIM:
            yield f"crosscheck__{name}", "crosscheck", Instance(a), None
    for name in C.MODULES:
        v = C.module(name)
        yield f"check-zad__{name}", "check-zad", Instance(v.algebra, v), "fast"
        if v.field.is_finite:
            yield f"oracle__{name}", "oracle", Instance(v.algebra, v), "oracle"
            yield f"check-zad-both__{name}", "check-zad", Instance(v.algebra, v), "both"
    for tag in ("q", "f2"):
        a = C.algebra(f"t2_{tag}")
        for label in ("e11", "e22"):
            e = a.field.unit_vector(a.dim, a.labels.index(label))
            yield (f"check-zad-projective__{label}_t2_{tag}", "check-zad",
                   Instance(a, principal_projective(a, e)[0], e), "fast")


def write_reports(root: Path, seed: int = 0) -> list[Path]:
    from .cli import run_command
    from .errors import DEFAULT_BUDGET
    from .io import write_json

    out = []
    for stem, command, inst, mode in report_jobs():
        path = Path(root) / "reports" / f"{stem}.json"
        write_json(path, run_command(command, inst, seed=seed, budget=DEFAULT_BUDGET, mode=mode))
        out.append(path)
    return out
