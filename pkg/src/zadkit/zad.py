"""Zero-action-determined (zad) modules.

Tensors in ``A (x) V`` are flattened with ``b_i (x) v_j`` at index ``i * dim(V) + j``.
A module is zad exactly when the span of the pure tensors ``x (x) v`` with
``x v = 0`` fills the kernel of ``x (x) v -> x v``; the oracle computes that span
by visiting every vector of V over a finite field, and the fast paths decide
irreducible and principal projective modules from their structure.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import verdict as V
from .algebra import FDAlgebra, center, probe_elements, split_commutative_semisimple, subalgebra_as_algebra
from .errors import DEFAULT_BUDGET, InvalidModule, NotIrreducible, OverBudget, check_budget, check_enumerable
from .exactlin import (Mat, SpanBuilder, Subspace, Vector, dot, is_zero_vector, kron, nullspace,
                       solve_many, vsub)
from .modules import (FDModule, ModuleMap, acting_algebra, end_algebra, hom_space, is_homomorphism,
                      is_irreducible, module_over_quotient, module_radical, one_dim_modules,
                      principal_projective, quotient_module, submodule_as_module, submodule_spanned)


@dataclass
class ZadCertificate:
    """For every basis pair ``(b_x, v_j)``: terms ``(coeff, a, m)`` with ``a m = 0`` and
    ``b_x (x) v_j - 1 (x) b_x v_j = sum coeff * a (x) m``."""

    entries: list  # (x_index, v_index, [(coeff, a, m), ...])


@dataclass
class NotZadWitness:
    """A functional on ``A (x) V`` that kills every zero-action pure tensor but not
    ``b_x (x) v_j - 1 (x) b_x v_j``; ``f(a, w) = alpha(a (x) w)`` is the bad bilinear map."""

    alpha: Vector
    pair: tuple  # (x_index, v_index)
    value: object


def index(v: FDModule, i: int, j: int) -> int:
    return i * v.dim + j


def pure_tensor(v: FDModule, a: Sequence, w: Sequence) -> Vector:
    return kron(v.field, a, w)


def defect_tensor(v: FDModule, i: int, j: int) -> Vector:
    """``b_i (x) v_j - 1 (x) b_i v_j``."""
    F = v.field
    a = v.algebra
    lhs = pure_tensor(v, a.basis(i), v.basis(j))
    rhs = pure_tensor(v, a.unit, v.action[i].column(j))
    return vsub(F, lhs, rhs)


def action_map(v: FDModule) -> Mat:
    """The ``dim V x (dim A * dim V)`` matrix of ``b_i (x) v_j -> b_i v_j``."""
    cols = [v.action[i].column(j) for i in range(v.algebra.dim) for j in range(v.dim)]
    return Mat.from_columns(v.field, cols, v.dim)


def t_ker(v: FDModule) -> Subspace:
    """Kernel of the action map ``A (x) V -> V``."""
    return nullspace(action_map(v))


def vector_annihilator(v: FDModule, w: Sequence) -> Subspace:
    """``{x in A : x w = 0}``."""
    cols = [op.apply(w) for op in v.action]
    return nullspace(Mat.from_columns(v.field, cols, v.dim))


class _Accumulator:
    def __init__(self, v: FDModule):
        self.v = v
        self.span = SpanBuilder(v.field, v.algebra.dim * v.dim)
        self.generators: list[tuple[Vector, Vector]] = []
        self.target_dim = v.algebra.dim * v.dim - v.dim

    def feed(self, w: Sequence) -> None:
        w = tuple(w)
        if is_zero_vector(w):
            return
        for a in vector_annihilator(self.v, w).basis:
            if self.span.add(pure_tensor(self.v, a, w)):
                self.generators.append((a, w))

    @property
    def complete(self) -> bool:
        return self.span.dim >= self.target_dim


def _accumulate(v: FDModule, candidates: Iterable[Sequence]) -> _Accumulator:
    acc = _Accumulator(v)
    for w in candidates:
        if acc.complete:
            break
        acc.feed(w)
    return acc


def s_span_accumulate(v: FDModule, candidates: Iterable[Sequence]) -> Subspace:
    """Span of the zero-action pure tensors ``x (x) w`` over the supplied ``w``; always inside t_ker."""
    return _accumulate(v, candidates).span.snapshot()


def _exhaustive(v: FDModule, budget: int) -> _Accumulator:
    F = v.field
    if not F.is_finite:
        raise OverBudget("the rational field cannot be enumerated; the oracle needs a finite field")
    check_budget(F.count_vectors(v.dim), budget, "zero-action span")
    # Ann(c w) = Ann(w), so one vector per line suffices
    return _accumulate(v, F.projective_vectors(v.dim))


def s_span_exhaustive(v: FDModule, budget: int = DEFAULT_BUDGET) -> Subspace:
    """The exact span of all zero-action pure tensors (finite fields within budget)."""
    return _exhaustive(v, budget).span.snapshot()


def build_certificate(v: FDModule, generators: Sequence[tuple[Vector, Vector]]) -> ZadCertificate | None:
    """Express every defect tensor in the generators, or None if one is out of reach."""
    n, m = v.algebra.dim, v.dim
    F = v.field
    tensors = [pure_tensor(v, a, w) for a, w in generators]
    targets = [defect_tensor(v, i, j) for i in range(n) for j in range(m)]
    if tensors:
        gmat = Mat.from_columns(F, tensors, n * m)
        sols = solve_many(gmat, targets)
    else:
        sols = [F.zeros(0) if is_zero_vector(t) else None for t in targets]
    entries = []
    for (i, j), sol in zip(((i, j) for i in range(n) for j in range(m)), sols):
        if sol is None:
            return None
        terms = [(c, a, w) for c, (a, w) in zip(sol, generators) if c != 0]
        entries.append((i, j, terms))
    return ZadCertificate(entries)


def check_certificate(v: FDModule, cert: ZadCertificate) -> bool:
    """Independent replay: every term is a zero action and every defect tensor is rebuilt."""
    n, m = v.algebra.dim, v.dim
    F = v.field
    seen = set()
    for i, j, terms in cert.entries:
        if not (0 <= i < n and 0 <= j < m):
            return False
        seen.add((i, j))
        total = [F.zero] * (n * m)
        for c, a, w in terms:
            if len(a) != n or len(w) != m:
                return False
            if not is_zero_vector(v.rho(a).apply(w)):
                return False
            for k, x in enumerate(pure_tensor(v, a, w)):
                total[k] = F.norm(total[k] + c * x)
        if tuple(total) != defect_tensor(v, i, j):
            return False
    return len(seen) == n * m


def build_witness(v: FDModule, span: Subspace) -> NotZadWitness:
    n, m = v.algebra.dim, v.dim
    defects = [(i, j, defect_tensor(v, i, j)) for i in range(n) for j in range(m)]
    for alpha in span.annihilator().basis:
        for i, j, d in defects:
            val = dot(v.field, alpha, d)
            if val != 0:
                return NotZadWitness(alpha, (i, j), val)
    raise AssertionError("span of zero-action tensors already equals the kernel")


def check_witness(v: FDModule, wit: NotZadWitness, budget: int = DEFAULT_BUDGET) -> bool:
    """Independent replay over a finite field: alpha kills ``Ann(w) (x) w`` for every ``w``
    and is nonzero on the named defect tensor."""
    F = v.field
    n, m = v.algebra.dim, v.dim
    if len(wit.alpha) != n * m:
        return False
    i, j = wit.pair
    if not (0 <= i < n and 0 <= j < m) or dot(F, wit.alpha, defect_tensor(v, i, j)) == 0:
        return False
    check_enumerable(F, m, budget, "witness replay")
    for w in F.projective_vectors(m):
        for a in vector_annihilator(v, w).basis:
            if dot(F, wit.alpha, pure_tensor(v, a, w)) != 0:
                return False
    return True


def is_zad_oracle(v: FDModule, budget: int = DEFAULT_BUDGET) -> V.Verdict:
    """Exact decision over a finite field by computing the full zero-action span."""
    acc = _exhaustive(v, budget)
    span = acc.span.snapshot()
    if acc.complete:
        cert = build_certificate(v, acc.generators)
        assert cert is not None
        return V.yes("oracle", cert, span_dim=span.dim)
    return V.no("oracle", build_witness(v, span), span_dim=span.dim, t_ker_dim=acc.target_dim)


def accumulate_certificate(v: FDModule, seed: int = 0, probes: int = 64,
                           budget: int = DEFAULT_BUDGET) -> ZadCertificate | None:
    """Try to certify zad from the probe stream alone (any field)."""
    acc = _accumulate(v, probe_elements(v.field, v.dim, seed, probes, budget))
    if not acc.complete:
        return None
    return build_certificate(v, acc.generators)


# structural fast paths --------------------------------------------------------

def is_zad_irreducible(v: FDModule, budget: int = DEFAULT_BUDGET, seed: int = 0) -> V.Verdict:
    """Irreducible V is zad iff ``dim V > dim End(V)`` or ``End(V)`` is the ground field."""
    irr = is_irreducible(v, budget, seed)
    if not irr.yes:
        raise NotIrreducible(f"irreducibility is {irr.answer.value} ({irr.method})")
    end_dim = hom_space(v, v).dim
    if v.dim > end_dim:
        return V.yes("irreducible:dim>end", end_dim=end_dim, module_dim=v.dim)
    if end_dim == 1:
        return V.yes("irreducible:end=F", end_dim=end_dim, module_dim=v.dim)
    return V.no("irreducible:end-is-proper-division-algebra",
                reason=f"dim V = {v.dim} <= dim End = {end_dim} > 1",
                end_dim=end_dim, module_dim=v.dim)


def _minimal_cyclic(v: FDModule) -> Subspace:
    best = None
    for w in v.field.projective_vectors(v.dim):
        sub = submodule_spanned(v, [w])
        if best is None or sub.dim < best.dim:
            best = sub
            if best.dim == 1:
                break
    return best


def _isotypic_pieces(t: FDModule, seed: int, budget: int) -> list[Subspace] | None:
    """Isotypic components of a semisimple module from the central idempotents of End."""
    end, hs = end_algebra(t)
    z = center(end)
    zalg = subalgebra_as_algebra(end, z, end.unit)
    comps = split_commutative_semisimple(zalg, seed, budget=budget)
    if any(not c.certified for c in comps):
        return None
    pieces = []
    F = t.field
    for comp in comps:
        coords = z.from_coords(comp.identity)
        proj = Mat.from_flat(F, t.dim, t.dim, hs.from_coords(coords))
        pieces.append(Subspace.span(F, t.dim, [proj.column(c) for c in range(t.dim)]))
    return pieces


def is_zad_semisimple(t: FDModule, budget: int = DEFAULT_BUDGET, seed: int = 0) -> V.Verdict:
    """A semisimple module is zad iff one simple of each isotypic type is."""
    if t.dim == 0:
        return V.yes("zero-module")
    pieces = _isotypic_pieces(t, seed, budget)
    if pieces is None:
        return V.unknown("isotypic", "could not split the center of End(T) into fields", seed=seed)
    from .zpd import simple_algebra_zpd

    parts = []
    F = t.field
    for piece in pieces:
        sub, _ = submodule_as_module(t, piece)
        if F.is_finite and F.count_vectors(sub.dim) <= budget:
            simple, _ = submodule_as_module(sub, _minimal_cyclic(sub))
            parts.append(is_zad_irreducible(simple, budget, seed))
        else:
            # the simple summand is zad iff rho(A) on the piece (a simple algebra) is zpd
            b, _ = acting_algebra(sub)
            flag = simple_algebra_zpd(b, seed=seed, budget=budget)
            parts.append(flag)
    return V.conjunction(parts, "isotypic")


def is_zad_principal_projective(a: FDAlgebra, e: Sequence, budget: int = DEFAULT_BUDGET,
                                seed: int = 0) -> V.Verdict:
    """``Ae`` is zad iff its top ``Ae/Re`` is zad and no 1-dimensional quotient ``S`` of ``Ae``
    has a self-extension."""
    from .zpd import ext1_self

    p, _ = principal_projective(a, e)
    top, _ = quotient_module(p, module_radical(p, budget))
    top_verdict = is_zad_semisimple(top, budget, seed)
    if top_verdict.no:
        return V.no("projective:top", top_verdict.evidence, f"top Ae/Re is not zad ({top_verdict.method})",
                    top=top_verdict.method)
    for lam in one_dim_modules(a, budget):
        if lam(e) == 0:
            continue
        dim, wit = ext1_self(a, lam)
        if dim:
            return V.no("projective:ext1", wit, f"Ext^1(S,S) has dimension {dim} for a quotient S of Ae")
    if top_verdict.unknown:
        return V.unknown("projective", f"top undecided: {top_verdict.reason}")
    return V.yes("projective:top+ext1", top=top_verdict.method)


# reductions ------------------------------------------------------------------------

def zad_direct_sum(verdicts: Sequence[V.Verdict]) -> V.Verdict:
    """Direct sum is zad iff every summand is."""
    return V.conjunction(verdicts, "direct-sum")


def zad_quotient_propagate(verdict: V.Verdict) -> V.Verdict:
    """A homomorphic image of a zad module is zad; nothing follows otherwise."""
    if verdict.yes:
        return V.yes("quotient-of-zad")
    return V.unknown("quotient-of-zad", "the source module is not known to be zad")


def zad_over_quotient_transfer(v: FDModule, j: Subspace,
                               decide: Callable[[FDModule], V.Verdict] = is_zad_oracle) -> V.Verdict:
    """Decide V over ``A/J`` for an ideal ``J`` inside ``Ann(V)``; the answer is the same over A."""
    reduced, _ = module_over_quotient(v, j)
    inner = decide(reduced)
    return V.Verdict(inner.answer, f"quotient-transfer:{inner.method}", inner.evidence, inner.reason,
                     dict(inner.details, reduced_algebra_dim=reduced.algebra.dim))


# zero-action preserving maps -----------------------------------------------------------

def is_zero_action_preserving(phi: ModuleMap, budget: int = DEFAULT_BUDGET) -> V.Verdict:
    """Whether ``a phi(m) = 0`` whenever ``a m = 0``, checked on every m (finite fields)."""
    src, tgt = phi.source, phi.target
    F = src.field
    if src.algebra != tgt.algebra:
        raise InvalidModule("zero-action preservation needs a common algebra")
    check_enumerable(F, src.dim, budget, "zero-action preservation")
    for w in F.projective_vectors(src.dim):
        image = phi.matrix.apply(w)
        for a in vector_annihilator(src, w).basis:
            if not is_zero_vector(tgt.rho(a).apply(image)):
                return V.no("exhaustive", (a, w))
    return V.yes("exhaustive")


def zap_implies_hom_check(phi: ModuleMap, budget: int = DEFAULT_BUDGET) -> bool:
    """True unless phi preserves zero actions out of a zad source yet fails to intertwine."""
    if not is_zero_action_preserving(phi, budget).yes:
        return True
    if not is_zad_oracle(phi.source, budget).yes:
        return True
    return is_homomorphism(phi)


# combined decision ------------------------------------------------------------------

class Discrepancy(RuntimeError):
    """Two decision routes disagreed; always a bug."""


def decide_zad(v: FDModule, mode: str = "fast", budget: int = DEFAULT_BUDGET, seed: int = 0,
               probes: int = 64) -> V.Verdict:
    """Decide zad for an arbitrary module.

    ``fast`` tries the probe-stream certificate, then the irreducible criterion,
    then (over a finite field within budget) the oracle; ``oracle`` runs only the
    oracle; ``both`` runs the structural routes and the oracle and insists they agree.
    """
    if mode == "oracle":
        return is_zad_oracle(v, budget)
    if mode not in ("fast", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    structural = _structural_zad(v, budget, seed, probes)
    F = v.field
    in_budget = F.is_finite and F.count_vectors(v.dim) <= budget
    if mode == "fast":
        if structural.unknown and in_budget:
            return is_zad_oracle(v, budget)
        return structural
    if not in_budget:
        return structural
    oracle = is_zad_oracle(v, budget)
    if not structural.unknown and structural.answer is not oracle.answer:
        raise Discrepancy(f"{structural.method} says {structural.answer.value}, oracle says {oracle.answer.value}")
    if structural.unknown:
        return oracle
    # keep the structural method but carry the oracle's replayable evidence
    return V.Verdict(structural.answer, f"{structural.method}+oracle", oracle.evidence, structural.reason,
                     dict(structural.details))


def _structural_zad(v: FDModule, budget: int, seed: int, probes: int) -> V.Verdict:
    if v.dim == 0:
        return V.yes("zero-module")
    cert = accumulate_certificate(v, seed, probes, budget)
    if cert is not None:
        return V.yes("accumulation", cert, seed=seed)
    try:
        irr = is_irreducible(v, budget, seed)
    except OverBudget:
        irr = V.unknown("irreducibility", "over budget")
    if irr.yes:
        return is_zad_irreducible(v, budget, seed)
    if v.action == v.algebra.left_ops:
        # the regular module is zad exactly when the algebra is zpd
        from .zpd import is_zpd

        res = is_zpd(v.algebra, budget, seed, certify=False)
        return V.Verdict(res.answer, f"regular:{res.method}", res.evidence, res.reason, dict(res.details))
    return V.unknown("fast", "no certificate from the probe stream and no applicable criterion", seed=seed)
