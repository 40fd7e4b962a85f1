"""Finite-dimensional left modules given by one action matrix per algebra basis element."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from . import verdict as V
from .algebra import (FDAlgebra, center, commutator_ideal, make_algebra, mult, probe_elements,
                      quotient_algebra, radical, split_commutative_semisimple)
from .errors import (DEFAULT_BUDGET, InvalidCharacter, InvalidModule, NotIdempotent, OverBudget,
                     UnsupportedRadicalRegime, check_enumerable)
from .exactlin import (Field, Mat, SpanBuilder, Subspace, Vector, block_diag, is_zero_vector,
                       kron_mat, minimal_polynomial, nullspace, poly_roots, subspace_sum)


@dataclass(frozen=True, eq=False)
class FDModule:
    algebra: FDAlgebra
    dim: int
    action: tuple  # of Mat, one per algebra basis element

    @property
    def field(self) -> Field:
        return self.algebra.field

    def rho(self, x: Sequence) -> Mat:
        """Action matrix of an arbitrary algebra element."""
        F, m = self.field, self.dim
        acc = [[F.zero] * m for _ in range(m)]
        for xi, op in zip(x, self.action):
            if xi == 0:
                continue
            for r in range(m):
                src, row = op.entries[r], acc[r]
                for c in range(m):
                    if src[c] != 0:
                        row[c] += xi * src[c]
        return Mat(F, m, m, tuple(tuple(F.norm(v) for v in row) for row in acc))

    def act(self, x: Sequence, w: Sequence) -> Vector:
        F = self.field
        out = [F.zero] * self.dim
        for xi, op in zip(x, self.action):
            if xi == 0:
                continue
            for r in range(self.dim):
                s = op.entries[r]
                out[r] += xi * sum((s[c] * w[c] for c in range(self.dim) if s[c] != 0), F.zero)
        return tuple(F.norm(v) for v in out)

    def basis(self, j: int) -> Vector:
        return self.field.unit_vector(self.dim, j)

    def __eq__(self, other):
        if not isinstance(other, FDModule):
            return NotImplemented
        return self.algebra == other.algebra and self.action == other.action

    def __hash__(self):
        return hash((self.algebra, self.action))

    def __repr__(self) -> str:
        return f"FDModule(dim={self.dim}, over {self.algebra!r})"


@dataclass(frozen=True)
class Character:
    """An algebra map ``A -> F``: the 1-dimensional module with ``x`` acting by ``values . x``."""

    algebra: FDAlgebra
    values: Vector

    def __call__(self, x: Sequence):
        F = self.algebra.field
        return F.norm(sum((a * b for a, b in zip(self.values, x)), F.zero))


@dataclass(frozen=True)
class ModuleMap:
    source: FDModule
    target: FDModule
    matrix: Mat  # target.dim x source.dim


def make_module(a: FDAlgebra, action: Sequence, validate: bool = True) -> FDModule:
    mats = []
    for op in action:
        mats.append(op if isinstance(op, Mat) else Mat.from_rows(a.field, op, None))
    if len(mats) != a.dim:
        raise InvalidModule(f"expected {a.dim} action matrices, got {len(mats)}")
    m = mats[0].rows if mats else 0
    mats = [Mat.zero(a.field, m, m) if op.rows == 0 and m == 0 else op for op in mats]
    v = FDModule(a, m, tuple(mats))
    if validate:
        bad = validate_module(v)
        if bad:
            raise InvalidModule(f"{len(bad)} violations, first: {bad[0]}")
    return v


def zero_module(a: FDAlgebra) -> FDModule:
    return FDModule(a, 0, tuple(Mat.zero(a.field, 0, 0) for _ in range(a.dim)))


def validate_module(v: FDModule) -> list[tuple]:
    a = v.algebra
    if len(v.action) != a.dim:
        return [("action_count", len(v.action))]
    for i, op in enumerate(v.action):
        if (op.rows, op.cols) != (v.dim, v.dim) or op.field != a.field:
            return [("shape", i)]
    out = []
    if v.rho(a.unit) != Mat.identity(a.field, v.dim):
        out.append(("unit",))
    for i, j in itertools.product(range(a.dim), repeat=2):
        if v.action[i] @ v.action[j] != v.rho(a.sc[i][j]):
            out.append(("relation", i, j))
    return out


def regular_module(a: FDAlgebra) -> FDModule:
    return FDModule(a, a.dim, a.left_ops)


def natural_module(a: FDAlgebra, n: int) -> FDModule:
    """Column vectors for ``matrix_algebra(n, F)`` (basis ``e_ab`` at index ``a*n+b``)."""
    F = a.field
    if a.dim != n * n:
        raise InvalidModule("natural module needs a matrix algebra on n*n matrix units")
    mats = []
    for idx in range(n * n):
        r, c = divmod(idx, n)
        mats.append(Mat(F, n, n, tuple(tuple(F.one if (i, j) == (r, c) else F.zero for j in range(n))
                                        for i in range(n))))
    return make_module(a, mats)


def character_module(ch: Character) -> FDModule:
    F = ch.algebra.field
    return FDModule(ch.algebra, 1, tuple(Mat(F, 1, 1, ((x,),)) for x in ch.values))


def direct_sum_module(v: FDModule, w: FDModule) -> FDModule:
    if v.algebra != w.algebra:
        raise InvalidModule("direct sum of modules over different algebras")
    return FDModule(v.algebra, v.dim + w.dim,
                    tuple(block_diag(x, y) for x, y in zip(v.action, w.action)))


def tensor_module(v: FDModule, w: FDModule, ab: FDAlgebra) -> FDModule:
    """``V (x) W`` over ``tensor_product_algebra(A, B)``."""
    mats = [kron_mat(x, y) for x in v.action for y in w.action]
    return make_module(ab, mats)


def is_submodule(v: FDModule, sub: Subspace) -> bool:
    return all(sub.contains(op.apply(u)) for op in v.action for u in sub.basis)


def submodule_spanned(v: FDModule, vectors: Sequence[Sequence]) -> Subspace:
    """Smallest submodule containing ``vectors`` (spin under the action)."""
    sb = SpanBuilder(v.field, v.dim)
    queue = [tuple(w) for w in vectors if sb.add(w)]
    while queue:
        w = queue.pop()
        for op in v.action:
            u = op.apply(w)
            if sb.add(u):
                queue.append(u)
    return sb.snapshot()


def submodule_as_module(v: FDModule, sub: Subspace) -> tuple[FDModule, Mat]:
    """The submodule with its echelon basis, plus the embedding (columns = basis)."""
    if not is_submodule(v, sub):
        raise InvalidModule("subspace is not closed under the action")
    F = v.field
    mats = [Mat.from_columns(F, [sub.coords(op.apply(u)) for u in sub.basis], sub.dim) for op in v.action]
    emb = Mat.from_columns(F, sub.basis, v.dim)
    return FDModule(v.algebra, sub.dim, tuple(mats)), emb


def quotient_module(v: FDModule, sub: Subspace) -> tuple[FDModule, Mat]:
    """``V / sub`` on the non-pivot coordinates, plus the projection matrix."""
    if not is_submodule(v, sub):
        raise InvalidModule("subspace is not closed under the action")
    F = v.field
    comp = sub.complement_indices()
    mats = [Mat.from_columns(F, [sub.quotient_coords(op.column(c)) for c in comp], len(comp))
            for op in v.action]
    proj = Mat.from_columns(F, [sub.quotient_coords(v.basis(k)) for k in range(v.dim)], len(comp))
    return FDModule(v.algebra, len(comp), tuple(mats)), proj


def principal_projective(a: FDAlgebra, e: Sequence) -> tuple[FDModule, Mat]:
    """``Ae`` as a module, with its embedding into the regular module."""
    e = tuple(e)
    if is_zero_vector(e) or mult(a, e, e) != e:
        raise NotIdempotent("principal projectives need a nonzero idempotent")
    ae = Subspace.span(a.field, a.dim, [mult(a, a.basis(i), e) for i in range(a.dim)])
    return submodule_as_module(regular_module(a), ae)


def hom_space(v: FDModule, w: FDModule) -> Subspace:
    """Intertwiners ``X`` (``dim w x dim v``, flattened row-major) with ``X rho_V = rho_W X``."""
    if v.algebra != w.algebra:
        raise InvalidModule("Hom between modules over different algebras")
    F = v.field
    dv, dw = v.dim, w.dim
    nvar = dv * dw
    rows = []
    for pv, pw in zip(v.action, w.action):
        for r in range(dw):
            for c in range(dv):
                row = [F.zero] * nvar
                for k in range(dv):
                    x = pv.entries[k][c]
                    if x != 0:
                        row[r * dv + k] += x
                for k in range(dw):
                    x = pw.entries[r][k]
                    if x != 0:
                        row[k * dv + c] -= x
                if any(x != 0 for x in row):
                    rows.append(tuple(F.norm(x) for x in row))
    return nullspace(Mat(F, len(rows), nvar, tuple(rows)))


def is_homomorphism(phi: ModuleMap) -> bool:
    return all(phi.matrix @ x == y @ phi.matrix for x, y in zip(phi.source.action, phi.target.action))


def end_algebra(v: FDModule) -> tuple[FDAlgebra, Subspace]:
    """``End_A(V)`` under composition, in the echelon basis of ``hom_space(v, v)``."""
    F, m = v.field, v.dim
    hs = hom_space(v, v)
    mats = [Mat.from_flat(F, m, m, b) for b in hs.basis]
    sc = [[hs.coords((x @ y).flat()) for y in mats] for x in mats]
    unit = hs.coords(Mat.identity(F, m).flat())
    return make_algebra(F, sc, unit), hs


def annihilator(v: FDModule) -> Subspace:
    a = v.algebra
    cols = [op.flat() for op in v.action]
    return nullspace(Mat.from_columns(a.field, cols, v.dim * v.dim))


def module_radical(v: FDModule, budget: int = DEFAULT_BUDGET) -> Subspace:
    """``R V`` for the Jacobson radical R of the algebra."""
    rad = radical(v.algebra, budget)
    vecs = []
    for r in rad.basis:
        op = v.rho(r)
        vecs.extend(op.column(c) for c in range(v.dim))
    return Subspace.span(v.field, v.dim, vecs)


def module_over_quotient(v: FDModule, j: Subspace) -> tuple[FDModule, FDAlgebra]:
    """``V`` viewed over ``A/J`` for an ideal ``J`` inside the annihilator."""
    if not j.issubset(annihilator(v)):
        raise InvalidModule("the ideal does not annihilate the module")
    quo, _ = quotient_algebra(v.algebra, j)
    mats = [v.action[i] for i in j.complement_indices()]
    return make_module(quo, mats), quo


def acting_algebra(v: FDModule) -> tuple[FDAlgebra, Subspace]:
    """The image ``rho(A)`` inside ``End_F(V)`` as an algebra (``A / Ann(V)``)."""
    F, m = v.field, v.dim
    img = Subspace.span(F, m * m, [op.flat() for op in v.action])
    mats = [Mat.from_flat(F, m, m, b) for b in img.basis]
    sc = [[img.coords((x @ y).flat()) for y in mats] for x in mats]
    unit = img.coords(Mat.identity(F, m).flat())
    return make_algebra(F, sc, unit, radical=None), img


# irreducibility -----------------------------------------------------------------

def _proper_spin(v: FDModule, vectors) -> Subspace | None:
    for w in vectors:
        if is_zero_vector(w):
            continue
        sub = submodule_spanned(v, [w])
        if sub.dim < v.dim:
            return sub
    return None


def is_irreducible(v: FDModule, budget: int = DEFAULT_BUDGET, seed: int = 0, probes: int = 64) -> V.Verdict:
    """Exhaustive spinning over a small finite field; sound sufficient tests otherwise.

    Over Q (or beyond the budget) a proper spin gives No; Yes needs either
    ``rho(A) = End_F(V)`` or a semisimple ``V`` whose endomorphism algebra is
    certified to be a field.  Anything else is Unknown.
    """
    if v.dim == 0:
        raise InvalidModule("the zero module is not irreducible by convention and is rejected")
    F = v.field
    if v.dim == 1:
        return V.yes("dimension-one")
    if F.is_finite and F.count_vectors(v.dim) <= budget:
        sub = _proper_spin(v, F.projective_vectors(v.dim))
        if sub is not None:
            return V.no("exhaustive-spin", sub)
        return V.yes("exhaustive-spin")
    sub = _proper_spin(v, probe_elements(F, v.dim, seed, probes, budget))
    if sub is not None:
        return V.no("probe-spin", sub, seed=seed)
    acting = Subspace.span(F, v.dim * v.dim, [op.flat() for op in v.action])
    if acting.is_full():
        return V.yes("burnside")
    try:
        semisimple = module_radical(v, budget).is_zero()
    except (UnsupportedRadicalRegime, OverBudget) as exc:
        return V.unknown("probe-spin", f"no proper spin found; radical unavailable: {exc}", seed=seed)
    if semisimple:
        end, _ = end_algebra(v)
        if end.dim == 1:
            return V.yes("semisimple-schur")
        if center(end).is_full():
            comps = split_commutative_semisimple(end, seed, probes, budget)
            if len(comps) == 1 and comps[0].certified:
                return V.yes("semisimple-end-field")
            if len(comps) > 1:
                # a nontrivial idempotent in End splits V
                e = comps[0].identity
                _, hs = end_algebra(v)
                proj = Mat.from_flat(F, v.dim, v.dim, hs.from_coords(e))
                img = Subspace.span(F, v.dim, [proj.column(c) for c in range(v.dim)])
                return V.no("end-idempotent", img)
    return V.unknown("probe-spin", "no proper spin found and no irreducibility certificate", seed=seed)


# 1-dimensional modules -------------------------------------------------------------

def _character_leaves(c: FDAlgebra) -> list[Vector]:
    F = c.field
    leaves = []

    def walk(w: Subspace, idx: int):
        if idx == c.dim:
            if w.dim != 1:
                raise AssertionError("commutative semisimple quotient did not split into lines")
            u = w.basis[0]
            leaves.append(tuple(w.coords(mult(c, c.basis(i), u))[0] for i in range(c.dim)))
            return
        cols = [w.coords(mult(c, c.basis(idx), u)) for u in w.basis]
        op = Mat.from_columns(F, cols, w.dim)
        for r in poly_roots(minimal_polynomial(op), F):
            ker = nullspace(op - Mat.identity(F, w.dim).scale(r))
            walk(Subspace.span(F, c.dim, [w.from_coords(k) for k in ker.basis]), idx + 1)

    walk(Subspace.full(F, c.dim), 0)
    return leaves


def one_dim_modules(a: FDAlgebra, budget: int = DEFAULT_BUDGET) -> list[Character]:
    """Every algebra map ``A -> F``.

    They factor through ``C = A / (R + [A, A])``, a commutative semisimple algebra;
    its lines are found by splitting along eigenvalues in F of each basis element.
    """
    F = a.field
    j = subspace_sum(radical(a, budget), commutator_ideal(a))
    if j.is_full():
        return []
    c, proj = quotient_algebra(a, j)
    out = []
    for vals in _character_leaves(c):
        lam = tuple(F.norm(sum((proj.entries[k][i] * vals[k] for k in range(c.dim)), F.zero))
                    for i in range(a.dim))
        out.append(Character(a, lam))
    out.sort(key=lambda ch: tuple(str(x) for x in ch.values))
    return out


def is_character(a: FDAlgebra, values: Sequence) -> bool:
    F = a.field
    lam = Character(a, tuple(values))
    if lam(a.unit) != F.one:
        return False
    return all(F.norm(values[i] * values[j]) == lam(a.sc[i][j])
               for i in range(a.dim) for j in range(a.dim))


def characters_bruteforce(a: FDAlgebra, budget: int = DEFAULT_BUDGET) -> list[Character]:
    """All characters by enumerating every functional (finite fields only)."""
    check_enumerable(a.field, a.dim, budget, "character enumeration")
    return [Character(a, vals) for vals in a.field.all_vectors(a.dim) if is_character(a, vals)]


def check_character(lam: Character) -> None:
    if not is_character(lam.algebra, lam.values):
        raise InvalidCharacter("values do not define an algebra map to the ground field")
