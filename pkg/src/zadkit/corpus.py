"""The shipped instance corpus: named algebras and modules plus helpers to enumerate them."""
from __future__ import annotations

import itertools
from pathlib import Path
from typing import Callable

from .algebra import (FDAlgebra, cyclic_group_table, direct_sum_algebra, group_algebra, matrix_algebra,
                      path_algebra, poly_quotient, probe_elements, radical, symmetric_group_table, triangular)
from .errors import DEFAULT_BUDGET
from .exactlin import Field, Mat, Subspace
from .modules import (FDModule, hom_space, is_irreducible, make_module, natural_module, principal_projective,
                      quotient_module, regular_module, submodule_as_module, submodule_spanned)

QQ = Field.Q()
F2 = Field.Fp(2)
F3 = Field.Fp(3)
FIELDS = {"q": QQ, "f2": F2, "f3": F3}


def _dual(F):
    return poly_quotient([0, 0, 1], F)


def _build_algebras() -> dict[str, Callable[[], FDAlgebra]]:
    reg: dict[str, Callable[[], FDAlgebra]] = {}
    for tag, F in FIELDS.items():
        for n in (1, 2, 3):
            reg[f"m{n}_{tag}"] = (lambda n=n, F=F: matrix_algebra(n, F))
        reg[f"t2_{tag}"] = lambda F=F: triangular(2, F)
        reg[f"dual_numbers_{tag}"] = lambda F=F: _dual(F)
        reg[f"c2_{tag}"] = lambda F=F: group_algebra(cyclic_group_table(2), F)
        reg[f"c3_{tag}"] = lambda F=F: group_algebra(cyclic_group_table(3), F)
        reg[f"s3_{tag}"] = lambda F=F: group_algebra(symmetric_group_table(3), F)
        reg[f"a2_{tag}"] = lambda F=F: path_algebra(2, [(0, 1)], F)
        reg[f"f_x_f_{tag}"] = lambda F=F: direct_sum_algebra(matrix_algebra(1, F), matrix_algebra(1, F))
    for tag in ("q", "f2"):
        F = FIELDS[tag]
        reg[f"t3_{tag}"] = lambda F=F: triangular(3, F)
        reg[f"a3_{tag}"] = lambda F=F: path_algebra(3, [(0, 1), (1, 2)], F)
        reg[f"f_x_m2_{tag}"] = lambda F=F: direct_sum_algebra(matrix_algebra(1, F), matrix_algebra(2, F))
    reg["qi_q"] = lambda: poly_quotient([1, 0, 1], QQ)
    reg["f4_f2"] = lambda: poly_quotient([1, 1, 1], F2)
    reg["f9_f3"] = lambda: poly_quotient([1, 0, 1], F3)
    reg["kronecker_f2"] = lambda: path_algebra(2, [(0, 1), (0, 1)], F2)
    reg["loop2_f2"] = lambda: path_algebra(1, [(0, 0)], F2, max_length=2)
    reg["t2_x_dual_f2"] = lambda: direct_sum_algebra(triangular(2, F2), _dual(F2))
    reg["f4_x_m2_f2"] = lambda: direct_sum_algebra(poly_quotient([1, 1, 1], F2), matrix_algebra(2, F2))
    return dict(sorted(reg.items()))


ALGEBRAS = _build_algebras()


def _unit(a: FDAlgebra, label: str):
    return a.field.unit_vector(a.dim, a.labels.index(label))


def _build_modules() -> dict[str, tuple[str, Callable[[FDAlgebra], FDModule]]]:
    reg: dict[str, tuple[str, Callable[[FDAlgebra], FDModule]]] = {}
    for tag in FIELDS:
        for n in (1, 2, 3):
            reg[f"natural_m{n}_{tag}"] = (f"m{n}_{tag}", lambda a, n=n: natural_module(a, n))
        for alg in ("dual_numbers", "t2", "c2", "f_x_f"):
            reg[f"regular_{alg}_{tag}"] = (f"{alg}_{tag}", regular_module)
        reg[f"proj_e11_t2_{tag}"] = (f"t2_{tag}", lambda a: principal_projective(a, _unit(a, "e11"))[0])
        reg[f"proj_e22_t2_{tag}"] = (f"t2_{tag}", lambda a: principal_projective(a, _unit(a, "e22"))[0])
        reg[f"proj_e11_m2_{tag}"] = (f"m2_{tag}", lambda a: principal_projective(a, _unit(a, "e11"))[0])
    reg["regular_f4_f2"] = ("f4_f2", regular_module)
    reg["regular_f9_f3"] = ("f9_f3", regular_module)
    reg["regular_qi_q"] = ("qi_q", regular_module)
    reg["regular_m2_f2"] = ("m2_f2", regular_module)
    reg["simple2_s3_f2"] = ("s3_f2", lambda a: _simple_of_dim(a, 2))
    reg["simple2_c3_f2"] = ("c3_f2", lambda a: _simple_of_dim(a, 2))
    reg["simple2_s3_q"] = ("s3_q", lambda a: _standard_s3(a))
    return dict(sorted(reg.items()))


def _simple_of_dim(a: FDAlgebra, d: int) -> FDModule:
    for s in simple_modules(a):
        if s.dim == d:
            return s
    raise LookupError(f"no simple module of dimension {d}")


def _standard_s3(a: FDAlgebra) -> FDModule:
    """The 2-dimensional sum-zero piece of the permutation module of S3 (any field)."""
    F = a.field
    perms = list(itertools.permutations(range(3)))
    mats = [Mat.from_rows(F, [[1 if g[c] == r else 0 for c in range(3)] for r in range(3)], 3) for g in perms]
    perm = make_module(a, mats)
    sub = Subspace.span(F, 3, [(1, -1, 0), (0, 1, -1)])
    return submodule_as_module(perm, sub)[0]


MODULES = _build_modules()


def algebra(name: str) -> FDAlgebra:
    return ALGEBRAS[name]()


def module(name: str) -> FDModule:
    alg_name, build = MODULES[name]
    return build(algebra(alg_name))


def simple_modules(a: FDAlgebra, budget: int = DEFAULT_BUDGET) -> list[FDModule]:
    """All simple modules up to isomorphism, from the top ``A/R`` of the regular module.

    Candidate vectors come basis-first; a vector already inside the isotypic part
    found so far is skipped, and the search stops once that part is all of the top.
    Complete over a finite field within budget, since every simple summand of the
    semisimple top is spun by any of its own nonzero vectors.
    """
    reg = regular_module(a)
    top, _ = quotient_module(reg, radical(a, budget))
    F = a.field
    found: list[FDModule] = []
    covered = Subspace.zero(F, top.dim)
    for w in probe_elements(F, top.dim, 0, 64, budget):
        if covered.is_full():
            break
        if covered.contains(w):
            continue
        sub = submodule_spanned(top, [w])
        s, _ = submodule_as_module(top, sub)
        if not is_irreducible(s, budget).yes:
            continue
        found.append(s)
        images = []
        for h in hom_space(s, top).basis:
            hm = Mat.from_flat(F, top.dim, s.dim, h)
            images.extend(hm.column(c) for c in range(s.dim))
        covered = covered + Subspace.span(F, top.dim, images)
    return sorted(found, key=lambda s: s.dim)


# files ------------------------------------------------------------------------------

def corpus_dir() -> Path:
    """The in-repo corpus directory (next to ``src/``)."""
    return Path(__file__).resolve().parents[2] / "corpus"


def write_corpus(root: Path) -> list[Path]:
    from .io import algebra_to_json, module_to_json, write_json

    written = []
    for name in ALGEBRAS:
        path = root / "algebras" / f"{name}.json"
        write_json(path, algebra_to_json(algebra(name), name))
        written.append(path)
    for name, (alg_name, _) in MODULES.items():
        path = root / "modules" / f"{name}.json"
        write_json(path, module_to_json(module(name), f"../algebras/{alg_name}.json", name))
        written.append(path)
    return written
