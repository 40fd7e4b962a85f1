"""Acceptance criteria 1-8, each at its stated tolerance.

Every test records one ``[PASS]``/``[FAIL]`` line; ``conftest.py`` prints them at the
end of the session and ``python tests/test_acceptance.py`` prints them directly.
"""
import itertools
import json
import random
import time

import pytest

from zadkit import cli, corpus
from zadkit.algebra import make_algebra, probe_elements
from zadkit.errors import DEFAULT_BUDGET
from zadkit.exactlin import Field, Mat
from zadkit.io import dumps
from zadkit.modules import (FDModule, ModuleMap, direct_sum_module, is_homomorphism, is_irreducible,
                            make_module, principal_projective, quotient_module, regular_module,
                            submodule_spanned, validate_module)
from zadkit.report import replay, strip_timing
from zadkit.shipped import report_jobs
from zadkit.zad import (is_zad_irreducible, is_zad_oracle, is_zero_action_preserving, s_span_accumulate,
                        s_span_exhaustive, t_ker)
from zadkit.zpd import E_subalgebra, I_ideal, idempotents_exhaustive, is_zpd, zpd_condition_crosscheck

F2, F3 = Field.Fp(2), Field.Fp(3)
RESULTS: dict[int, str] = {}


def record(n: int, title: str, ok: bool, detail: str) -> None:
    RESULTS[n] = f"[{'PASS' if ok else 'FAIL'}] criterion {n} ({title}): {detail}"
    print(RESULTS[n])


def finite_algebras(fields, max_dim=None):
    out = []
    for name in corpus.ALGEBRAS:
        a = corpus.algebra(name)
        if a.field in fields and (max_dim is None or a.dim <= max_dim):
            out.append((name, a))
    return out


# 1 ------------------------------------------------------------------------------------

def irreducible_instances():
    seen = []
    for name, a in finite_algebras((F2, F3), max_dim=9):
        for s in corpus.simple_modules(a):
            if s.dim <= 4:
                seen.append((f"simple{s.dim}:{name}", s))
    for name in corpus.MODULES:
        v = corpus.module(name)
        if v.field.is_finite and v.algebra.dim <= 9 and v.dim <= 4 and is_irreducible(v).yes:
            seen.append((name, v))
    return seen


def test_criterion_1_oracle_theorem_agreement():
    start = time.perf_counter()
    instances = irreducible_instances()
    mismatches = [name for name, v in instances
                  if is_zad_irreducible(v).answer is not is_zad_oracle(v).answer]
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 60 and len(instances) > 0
    record(1, "irreducible criterion vs oracle", ok,
           f"{len(instances) - len(mismatches)}/{len(instances)} agree in {elapsed:.1f} s (limit 60 s)"
           + (f"; mismatches {mismatches}" if mismatches else ""))
    assert ok


# 2 ------------------------------------------------------------------------------------

def test_criterion_2_four_way_equivalence():
    start = time.perf_counter()
    algs = finite_algebras((F2,), max_dim=6)
    rows, bad = 0, []
    for name, a in algs:
        rep = zpd_condition_crosscheck(a)
        rows += len(rep.rows)
        if not rep.agree:
            bad.append(name)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 120
    record(2, "four equivalent projective conditions", ok,
           f"{len(algs)} algebras, {rows} idempotents, {len(bad)} discrepancies in {elapsed:.1f} s (limit 120 s)"
           + (f"; disagreeing: {bad}" if bad else ""))
    assert ok


# 3 ------------------------------------------------------------------------------------

def test_criterion_3_regular_module_bridge():
    checked, bad = 0, []
    for name, a in finite_algebras((F2, F3)):
        if a.field.count_vectors(a.dim) > DEFAULT_BUDGET:
            continue
        checked += 1
        if is_zpd(a).answer is not is_zad_oracle(regular_module(a)).answer:
            bad.append(name)
    ok = not bad and checked > 0
    record(3, "zpd vs regular-module oracle", ok, f"{checked - len(bad)}/{checked} agree"
           + (f"; mismatches {bad}" if bad else ""))
    assert ok


# 4 ------------------------------------------------------------------------------------

KNOWN = ([(f"m{n}_{f}", "yes") for n in (2, 3) for f in ("q", "f2", "f3")]
         + [(f"dual_numbers_{f}", "no") for f in ("q", "f2", "f3")]
         + [("f4_f2", "no")]
         + [(f"t{n}_{f}", "yes") for n in (2, 3) for f in ("q", "f2")]
         + [(f"f_x_f_{f}", "yes") for f in ("q", "f2", "f3")])


def test_criterion_4_known_verdicts(tmp_path, capsys):
    failures = []
    for name, expected in KNOWN:
        out = tmp_path / f"{name}.json"
        code = cli.main(["check-zpd", str(corpus.corpus_dir() / "algebras" / f"{name}.json"), "--out", str(out)])
        rep = json.loads(out.read_text())
        if rep["verdict"] != expected or code != {"yes": 0, "no": 1}[expected]:
            failures.append(f"{name}: {rep['verdict']}")
            continue
        if not rep["evidence"]:
            failures.append(f"{name}: no certificate or witness")
            continue
        if name.startswith("dual_numbers"):
            ev = rep["evidence"][0]
            if ev["type"] != "ext1_witness" or ev["derivation"] != ["0", "1"]:
                failures.append(f"{name}: witness is not d(x) = 1")
        if cli.main(["replay", str(out)]) != 0:
            failures.append(f"{name}: replay failed")
    capsys.readouterr()
    ok = not failures
    record(4, "known verdicts with replaying evidence", ok,
           f"{len(KNOWN) - len(failures)}/{len(KNOWN)} verdicts correct and replayed"
           + (f"; {failures}" if failures else ""))
    assert ok


# 5 ------------------------------------------------------------------------------------

def f2_module_pools(max_dim=3):
    pools: dict[str, list[FDModule]] = {}
    for name, a in finite_algebras((F2,), max_dim=6):
        pool = [s for s in corpus.simple_modules(a)]
        for e in idempotents_exhaustive(a):
            if any(e):
                p, _ = principal_projective(a, e)
                if all(p != q for q in pool):
                    pool.append(p)
        pool += [corpus.module(m) for m, (alg, _) in corpus.MODULES.items() if alg == name]
        pool = [v for v in pool if v.dim <= max_dim]
        if pool:
            pools[name] = pool
    return pools


def test_criterion_5_direct_sum_and_quotient_laws():
    rng = random.Random(20240501)
    pools = f2_module_pools()
    names = sorted(pools)
    sum_bad = quo_bad = 0
    zad_cache: dict[int, bool] = {}

    def zad(v):
        key = id(v)
        if key not in zad_cache:
            zad_cache[key] = is_zad_oracle(v).yes
        return zad_cache[key]

    for _ in range(200):
        pool = pools[rng.choice(names)]
        v, w = rng.choice(pool), rng.choice(pool)
        if is_zad_oracle(direct_sum_module(v, w)).yes != (zad(v) and zad(w)):
            sum_bad += 1
        s = direct_sum_module(v, w)
        gens = [tuple(rng.randrange(2) for _ in range(s.dim)) for _ in range(rng.randint(1, 2))]
        q, _ = quotient_module(s, submodule_spanned(s, gens))
        if q.dim and zad(v) and zad(w) and not is_zad_oracle(q).yes:
            quo_bad += 1
    ok = sum_bad == 0 and quo_bad == 0
    record(5, "direct-sum and quotient laws", ok,
           f"200 random F2 instances, {sum_bad} direct-sum and {quo_bad} quotient violations")
    assert ok


# 6 ------------------------------------------------------------------------------------

def test_criterion_6_structural_numerics():
    modules = [corpus.module(n) for n in corpus.MODULES]
    modules += [regular_module(corpus.algebra(n)) for n in corpus.ALGEBRAS]
    bad_dim = bad_span = 0
    for v in modules:
        tk = t_ker(v)
        if tk.dim != v.algebra.dim * v.dim - v.dim:
            bad_dim += 1
        if v.field.is_finite and v.field.count_vectors(v.dim) <= DEFAULT_BUDGET:
            span = s_span_exhaustive(v)
        else:
            span = s_span_accumulate(v, probe_elements(v.field, v.dim, seed=0, count=200))
        if not span <= tk:
            bad_span += 1
    f2 = finite_algebras((F2,))
    bad_ei = sum(1 for _, a in f2 if not I_ideal(a) <= E_subalgebra(a))
    ok = bad_dim == bad_span == bad_ei == 0
    record(6, "structural numerics", ok,
           f"{len(modules)} instances: {bad_dim} t_ker dimension errors, {bad_span} span escapes; "
           f"{len(f2)} F2 algebras: {bad_ei} with I not inside E")
    assert ok


# 7 ------------------------------------------------------------------------------------

def small_f2_algebras():
    """Every unital F2-algebra of dimension <= 2, as F2[x]/(x^2 + b x + c) and F2 itself."""
    out = [make_algebra(F2, [[[1]]], [1])]
    for c, b in itertools.product(range(2), repeat=2):
        # basis 1, x with x*x = c*1 + b*x
        sc = [[[1, 0], [0, 1]], [[0, 1], [c, b]]]
        out.append(make_algebra(F2, sc, [1, 0]))
    return out


def all_modules(a, max_dim=2):
    mods = []
    for m in range(1, max_dim + 1):
        for entries in itertools.product(range(2), repeat=m * m * (a.dim - 1)):
            mats = [Mat.identity(F2, m)]
            for k in range(a.dim - 1):
                chunk = entries[k * m * m:(k + 1) * m * m]
                mats.append(Mat.from_flat(F2, m, m, chunk))
            v = make_module(a, mats, validate=False)
            if not validate_module(v):
                mods.append(v)
    return mods


def test_criterion_7_zero_action_preserving_maps_intertwine():
    maps = violations = zap_count = 0
    for a in small_f2_algebras():
        mods = all_modules(a)
        for v in mods:
            zad_v = is_zad_oracle(v).yes
            for w in mods:
                for entries in itertools.product(range(2), repeat=v.dim * w.dim):
                    phi = ModuleMap(v, w, Mat.from_flat(F2, w.dim, v.dim, entries))
                    maps += 1
                    if not is_zero_action_preserving(phi).yes:
                        continue
                    zap_count += 1
                    if zad_v and not is_homomorphism(phi):
                        violations += 1
    ok = violations == 0
    record(7, "zero-action-preserving maps out of zad modules intertwine", ok,
           f"{maps} linear maps, {zap_count} preserve zero actions, {violations} violations")
    assert ok


# 8 ------------------------------------------------------------------------------------

def test_criterion_8_determinism_and_replay():
    root = corpus.corpus_dir() / "reports"
    jobs = list(report_jobs())
    differ, failed = [], []
    for stem, command, inst, mode in jobs:
        shipped = json.loads((root / f"{stem}.json").read_text())
        fresh = cli.run_command(command, inst, seed=shipped["seed"], budget=shipped["budget"], mode=mode)
        if dumps(strip_timing(fresh)) != dumps(strip_timing(shipped)):
            differ.append(stem)
        if not replay(shipped).ok:
            failed.append(stem)
    on_disk = len(list(root.glob("*.json")))
    ok = not differ and not failed and on_disk == len(jobs)
    record(8, "determinism and replay", ok,
           f"{len(jobs) - len(differ)}/{len(jobs)} reports byte-identical (timing excluded), "
           f"{len(jobs) - len(failed)}/{len(jobs)} replay, {on_disk} files shipped"
           + (f"; differing {differ[:5]}" if differ else "") + (f"; failing {failed[:5]}" if failed else ""))
    assert ok


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
