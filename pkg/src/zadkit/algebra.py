"""Finite-dimensional unital associative algebras given by structure constants.

Basis products are ``b_i * b_j = sum_k sc[i][j][k] b_k``.  Elements are coordinate
tuples.  Constructors for the standard test corpus live at the bottom of the
module; the ones whose radical is known by construction attach it so that
small characteristics need no enumeration.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Sequence

from .errors import (DEFAULT_BUDGET, InvalidAlgebra, NotAnIdeal,
                     UnsupportedRadicalRegime, check_enumerable)
from .exactlin import (Field, Mat, SpanBuilder, Subspace, Vector, is_zero_vector,
                       nullspace, poly_factor, poly_mul, solve, vsub)


@dataclass(frozen=True, eq=False)
class FDAlgebra:
    field: Field
    dim: int
    sc: tuple
    unit: Vector
    labels: tuple | None = None
    declared_radical: tuple | None = None  # basis vectors of the radical, if known
    radical_origin: str | None = None      # "constructor" or "declared"
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def __eq__(self, other):
        if not isinstance(other, FDAlgebra):
            return NotImplemented
        return (self.field, self.dim, self.sc, self.unit) == (other.field, other.dim, other.sc, other.unit)

    def __hash__(self):
        return hash((self.field, self.dim, self.sc, self.unit))

    @cached_property
    def _terms(self) -> list:
        # nonzero (k, c) for every basis pair, the hot path of mult
        return [[[(k, c) for k, c in enumerate(self.sc[i][j]) if c != 0]
                 for j in range(self.dim)] for i in range(self.dim)]

    @cached_property
    def left_ops(self) -> tuple:
        """Matrices of ``y -> b_i y``."""
        n = self.dim
        return tuple(Mat(self.field, n, n, tuple(tuple(self.sc[i][j][k] for j in range(n)) for k in range(n)))
                     for i in range(n))

    @cached_property
    def right_ops(self) -> tuple:
        """Matrices of ``y -> y b_i``."""
        n = self.dim
        return tuple(Mat(self.field, n, n, tuple(tuple(self.sc[j][i][k] for j in range(n)) for k in range(n)))
                     for i in range(n))

    def basis(self, i: int) -> Vector:
        return self.field.unit_vector(self.dim, i)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"b{i}"

    def element(self, xs: Sequence) -> Vector:
        return self.field.vec(xs)

    def zero(self) -> Vector:
        return self.field.zeros(self.dim)

    def __repr__(self) -> str:
        return f"FDAlgebra(dim={self.dim}, field={self.field})"


def make_algebra(field: Field, sc, unit, labels=None, radical=None, radical_origin=None,
                 validate: bool = True) -> FDAlgebra:
    n = len(unit)
    sc = tuple(tuple(field.vec(sc[i][j]) for j in range(n)) for i in range(n))
    rad = None if radical is None else tuple(field.vec(v) for v in radical)
    if rad is not None:
        rad = Subspace.span(field, n, rad).basis
    a = FDAlgebra(field, n, sc, field.vec(unit), tuple(labels) if labels else None, rad,
                  radical_origin if rad is not None else None)
    if validate:
        problems = validate_algebra(a)
        if problems:
            raise InvalidAlgebra(f"{len(problems)} violations, first: {problems[0]}")
    return a


def _dims_ok(a: FDAlgebra) -> list:
    n = a.dim
    if len(a.sc) != n or any(len(r) != n for r in a.sc) or any(len(c) != n for r in a.sc for c in r):
        return [("shape",)]
    if len(a.unit) != n:
        return [("unit_length",)]
    return []


def validate_algebra(a: FDAlgebra) -> list[tuple]:
    """Violated invariants, each as a tuple naming the failing indices."""
    bad = _dims_ok(a)
    if bad:
        return bad
    F, n, c = a.field, a.dim, a.sc
    out = []
    for i, j, k in itertools.product(range(n), repeat=3):
        for m in range(n):
            lhs = sum((c[i][j][l] * c[l][k][m] for l in range(n)), F.zero)
            rhs = sum((c[j][k][l] * c[i][l][m] for l in range(n)), F.zero)
            if F.norm(lhs - rhs) != 0:
                out.append(("associativity", i, j, k, m))
    for j in range(n):
        bj = a.basis(j)
        if mult(a, a.unit, bj) != bj:
            out.append(("left_unit", j))
        if mult(a, bj, a.unit) != bj:
            out.append(("right_unit", j))
    return out


def mult(a: FDAlgebra, x: Sequence, y: Sequence) -> Vector:
    if len(x) != a.dim or len(y) != a.dim:
        raise ValueError(f"expected vectors of length {a.dim}")
    F = a.field
    out = [F.zero] * a.dim
    terms = a._terms
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        row = terms[i]
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            s = xi * yj
            for k, c in row[j]:
                out[k] += s * c
    return tuple(F.norm(v) for v in out)


def commutator(a: FDAlgebra, x: Sequence, y: Sequence) -> Vector:
    return vsub(a.field, mult(a, x, y), mult(a, y, x))


def _combine_ops(a: FDAlgebra, ops, x) -> Mat:
    F, n = a.field, a.dim
    acc = [[F.zero] * n for _ in range(n)]
    for xi, op in zip(x, ops):
        if xi == 0:
            continue
        for r in range(n):
            row, src = acc[r], op.entries[r]
            for col in range(n):
                if src[col] != 0:
                    row[col] += xi * src[col]
    return Mat(F, n, n, tuple(tuple(F.norm(v) for v in row) for row in acc))


def left_mult_operator(a: FDAlgebra, x: Sequence) -> Mat:
    return _combine_ops(a, a.left_ops, x)


def right_mult_operator(a: FDAlgebra, x: Sequence) -> Mat:
    return _combine_ops(a, a.right_ops, x)


def power(a: FDAlgebra, x: Sequence, k: int) -> Vector:
    out = a.unit
    for _ in range(k):
        out = mult(a, out, x)
    return out


def is_idempotent(a: FDAlgebra, e: Sequence) -> bool:
    return mult(a, e, e) == tuple(e)


def is_nilpotent_element(a: FDAlgebra, x: Sequence) -> bool:
    y = tuple(x)
    for _ in range(a.dim):
        if is_zero_vector(y):
            return True
        y = mult(a, y, x)
    return is_zero_vector(y)


# ideals and subalgebras -----------------------------------------------------

def is_ideal(a: FDAlgebra, sub: Subspace) -> bool:
    for v in sub.basis:
        for i in range(a.dim):
            b = a.basis(i)
            if not sub.contains(mult(a, b, v)) or not sub.contains(mult(a, v, b)):
                return False
    return True


def is_subalgebra(a: FDAlgebra, sub: Subspace) -> bool:
    return all(sub.contains(mult(a, u, v)) for u in sub.basis for v in sub.basis)


def ideal_closure(a: FDAlgebra, gens: Sequence[Sequence]) -> Subspace:
    """Smallest two-sided ideal containing ``gens``."""
    sb = SpanBuilder(a.field, a.dim)
    queue = [tuple(g) for g in gens if sb.add(g)]
    basis = [a.basis(i) for i in range(a.dim)]
    while queue:
        v = queue.pop()
        for b in basis:
            for w in (mult(a, b, v), mult(a, v, b)):
                if sb.add(w):
                    queue.append(w)
    return sb.snapshot()


def subalgebra_closure(a: FDAlgebra, gens: Sequence[Sequence], include_unit: bool = True) -> Subspace:
    """Smallest (unital if ``include_unit``) subalgebra containing ``gens``."""
    sb = SpanBuilder(a.field, a.dim)
    seen: list = []
    queue = list(gens) + ([a.unit] if include_unit else [])
    while queue:
        v = tuple(queue.pop())
        if not sb.add(v):
            continue
        seen.append(v)
        for u in seen:
            queue.append(mult(a, u, v))
            queue.append(mult(a, v, u))
    return sb.snapshot()


def product_space(a: FDAlgebra, x: Subspace, y: Subspace) -> Subspace:
    return Subspace.span(a.field, a.dim, [mult(a, u, v) for u in x.basis for v in y.basis])


def is_nilpotent_ideal(a: FDAlgebra, j: Subspace) -> bool:
    cur = j
    for _ in range(a.dim + 1):
        if cur.is_zero():
            return True
        nxt = product_space(a, cur, j)
        if nxt.dim == cur.dim:
            return False
        cur = nxt
    return cur.is_zero()


def center(a: FDAlgebra) -> Subspace:
    """``{x : x y = y x for all y}`` as the joint kernel of ``L_i - R_i``."""
    cols = [(l - r).flat() for l, r in zip(a.left_ops, a.right_ops)]
    return nullspace(Mat.from_columns(a.field, cols, a.dim * a.dim))


def commutator_ideal(a: FDAlgebra) -> Subspace:
    gens = [commutator(a, a.basis(i), a.basis(j)) for i in range(a.dim) for j in range(i + 1, a.dim)]
    return ideal_closure(a, gens)


# radical ---------------------------------------------------------------------

def trace_form(a: FDAlgebra) -> Mat:
    F = a.field
    ops = a.left_ops
    n = a.dim
    rows = []
    for i in range(n):
        rows.append(tuple(F.norm(sum((ops[i].entries[r][c] * ops[j].entries[c][r]
                                      for r in range(n) for c in range(n)), F.zero))
                          for j in range(n)))
    return Mat(F, n, n, tuple(rows))


def trace_form_regime(a: FDAlgebra) -> bool:
    return a.field.kind == "Q" or a.field.p > a.dim


def _radical_exhaustive(a: FDAlgebra, budget: int) -> Subspace:
    # x lies in the radical iff x*y is nilpotent for every y (nil one-sided ideals are radical)
    F = a.field
    check_enumerable(F, a.dim, budget, "radical enumeration")
    elements = list(F.all_vectors(a.dim))
    basis = [a.basis(i) for i in range(a.dim)]
    nilpotent_cache: dict = {}

    def nil(z):
        r = nilpotent_cache.get(z)
        if r is None:
            r = nilpotent_cache[z] = is_nilpotent_element(a, z)
        return r

    sb = SpanBuilder(F, a.dim)
    for x in elements:
        if is_zero_vector(x) or sb.contains(x) or not nil(x):
            continue
        if all(nil(mult(a, x, b)) for b in basis) and all(nil(mult(a, x, y)) for y in elements):
            sb.add(x)
    return sb.snapshot()


def radical(a: FDAlgebra, budget: int = DEFAULT_BUDGET) -> Subspace:
    """Jacobson radical.

    Uses the constructor-supplied radical when present, the kernel of the trace
    form ``tr(L_x L_y)`` in characteristic 0 or p > dim, and otherwise an
    enumeration of all elements if that fits in ``budget``.
    """
    cached = a._cache.get("radical")
    if cached is not None:
        return cached
    if a.declared_radical is not None:
        rad = Subspace.span(a.field, a.dim, a.declared_radical)
        method = a.radical_origin or "declared"
    elif trace_form_regime(a):
        rad = nullspace(trace_form(a))
        method = "trace-form"
    elif a.field.count_vectors(a.dim) <= budget:
        rad = _radical_exhaustive(a, budget)
        method = "exhaustive"
    else:
        raise UnsupportedRadicalRegime(
            f"characteristic {a.field.p} <= dimension {a.dim}, no supplied radical, "
            f"and {a.field.p}^{a.dim} elements exceed the budget {budget}")
    if not is_ideal(a, rad) or not is_nilpotent_ideal(a, rad):
        raise InvalidAlgebra(f"computed radical ({method}) is not a nilpotent ideal")
    a._cache["radical"] = rad
    a._cache["radical_method"] = method
    return rad


def radical_method(a: FDAlgebra, budget: int = DEFAULT_BUDGET) -> str:
    radical(a, budget)
    return a._cache["radical_method"]


def _known_radical(a: FDAlgebra) -> Subspace | None:
    if "radical" in a._cache:
        return a._cache["radical"]
    if a.declared_radical is not None or trace_form_regime(a):
        return radical(a)
    return None


# quotients and subalgebras as algebras --------------------------------------

def quotient_algebra(a: FDAlgebra, j: Subspace) -> tuple[FDAlgebra, Mat]:
    """``A/J`` on the non-pivot coordinates of J, with the projection matrix."""
    if j.ambient_dim != a.dim or j.field != a.field:
        raise NotAnIdeal("subspace does not live in this algebra")
    if not is_ideal(a, j):
        raise NotAnIdeal("subspace is not a two-sided ideal")
    if j.is_full():
        raise NotAnIdeal("cannot take the quotient by the whole algebra")
    F = a.field
    comp = j.complement_indices()
    m = len(comp)
    sc = [[j.quotient_coords(mult(a, a.basis(p), a.basis(q))) for q in comp] for p in comp]
    unit = j.quotient_coords(a.unit)
    labels = [a.label(i) for i in comp] if a.labels else None
    rad_vecs, origin = None, None
    known = _known_radical(a)
    if known is not None:
        if known.issubset(j):
            rad_vecs, origin = [], "quotient-of-semisimple"
        elif j.issubset(known):
            rad_vecs, origin = [j.quotient_coords(v) for v in known.basis], "quotient-of-radical"
    quo = make_algebra(F, sc, unit, labels, rad_vecs, origin)
    proj = Mat.from_columns(F, [j.quotient_coords(a.basis(i)) for i in range(a.dim)], m)
    return quo, proj


def subalgebra_as_algebra(a: FDAlgebra, sub: Subspace, unit: Sequence) -> FDAlgebra:
    """The subalgebra ``sub`` as an algebra in its echelon basis, with the given identity."""
    sc = [[sub.coords(mult(a, u, v)) for v in sub.basis] for u in sub.basis]
    return make_algebra(a.field, sc, sub.coords(unit))


def ideal_identity(a: FDAlgebra, ideal: Subspace) -> Vector | None:
    """The element ``e`` of ``ideal`` acting as identity on it from both sides, if any."""
    F = a.field
    k = ideal.dim
    cols, rhs = [], []
    # unknown coefficients t: e = sum t_s u_s ; e u_j = u_j and u_j e = u_j
    for u in ideal.basis:
        left = [mult(a, us, u) for us in ideal.basis]
        right = [mult(a, u, us) for us in ideal.basis]
        for side in (left, right):
            for coord in range(a.dim):
                cols.append([side[s][coord] for s in range(k)])
                rhs.append(u[coord])
    sol = solve(Mat.from_rows(F, cols, k) if cols else Mat.zero(F, 0, k), rhs)
    if sol is None:
        return None
    return ideal.from_coords(sol)


# constructors ----------------------------------------------------------------

def matrix_algebra(n: int, field: Field) -> FDAlgebra:
    """Full matrix algebra M_n(F) on the matrix units ``e_ab`` (index ``a*n+b``)."""
    F = field
    N = n * n
    sc = [[[0] * N for _ in range(N)] for _ in range(N)]
    for a_, b, c, d in itertools.product(range(n), repeat=4):
        if b == c:
            sc[a_ * n + b][c * n + d][a_ * n + d] = 1
    unit = [1 if i // n == i % n else 0 for i in range(N)]
    labels = [f"e{i // n + 1}{i % n + 1}" for i in range(N)]
    return make_algebra(F, sc, unit, labels, [], "constructor")


def triangular(n: int, field: Field) -> FDAlgebra:
    """Upper triangular n x n matrices; the radical is the strictly upper part."""
    units = [(i, j) for i in range(n) for j in range(i, n)]
    idx = {u: k for k, u in enumerate(units)}
    N = len(units)
    sc = [[[0] * N for _ in range(N)] for _ in range(N)]
    for (a_, b), (c, d) in itertools.product(units, repeat=2):
        if b == c:
            sc[idx[(a_, b)]][idx[(c, d)]][idx[(a_, d)]] = 1
    unit = [1 if i == j else 0 for i, j in units]
    rad = [field.unit_vector(N, idx[(i, j)]) for i, j in units if i < j]
    return make_algebra(field, sc, unit, [f"e{i + 1}{j + 1}" for i, j in units], rad, "constructor")


def poly_quotient(f: Sequence, field: Field) -> FDAlgebra:
    """``F[x]/(f)`` for monic ``f`` (coefficients lowest degree first), basis ``1, x, ...``."""
    F = field
    f = [F(c) for c in f]
    d = len(f) - 1
    if d < 1 or f[-1] != 1:
        raise InvalidAlgebra("poly_quotient needs a monic nonconstant polynomial")

    def reduce(coeffs):
        c = list(coeffs) + [F.zero] * max(0, d - len(coeffs))
        for deg in range(len(c) - 1, d - 1, -1):
            t = c[deg]
            if t != 0:
                for k in range(d + 1):
                    c[deg - d + k] = F.norm(c[deg - d + k] - t * f[k])
        return c[:d]

    sc = [[reduce([0] * (i + j) + [1]) for j in range(d)] for i in range(d)]
    labels = ["1"] + ["x" if k == 1 else f"x^{k}" for k in range(1, d)]
    # radical = (squarefree part of f) / (f)
    sqfree = [F.one]
    for fac, _ in poly_factor(f, F):
        sqfree = poly_mul(F, sqfree, fac)
    gens = [reduce([F.zero] * k + sqfree) for k in range(d)]
    rad = Subspace.span(F, d, gens).basis
    return make_algebra(F, sc, F.unit_vector(d, 0), labels, rad, "constructor")


def group_algebra(table: Sequence[Sequence[int]], field: Field) -> FDAlgebra:
    """Group algebra from a multiplication table ``table[g][h] = index of g*h``."""
    n = len(table)
    if any(len(r) != n or any(not 0 <= x < n for x in r) for r in table):
        raise InvalidAlgebra("group table must be a square table of element indices")
    ident = next((g for g in range(n) if all(table[g][h] == h and table[h][g] == h for h in range(n))), None)
    if ident is None:
        raise InvalidAlgebra("group table has no identity")
    for g, h, k in itertools.product(range(n), repeat=3):
        if table[table[g][h]][k] != table[g][table[h][k]]:
            raise InvalidAlgebra("group table is not associative")
    for g in range(n):
        if not any(table[g][h] == ident for h in range(n)):
            raise InvalidAlgebra(f"element {g} has no inverse")
    sc = [[[0] * n for _ in range(n)] for _ in range(n)]
    for g in range(n):
        for h in range(n):
            sc[g][h][table[g][h]] = 1
    coprime = field.kind == "Q" or n % field.p != 0
    rad, origin = ([], "constructor") if coprime else (None, None)  # Maschke
    return make_algebra(field, sc, field.unit_vector(n, ident), [f"g{g}" for g in range(n)], rad, origin)


def cyclic_group_table(n: int) -> list[list[int]]:
    return [[(g + h) % n for h in range(n)] for g in range(n)]


def symmetric_group_table(k: int) -> list[list[int]]:
    perms = list(itertools.permutations(range(k)))
    idx = {p: i for i, p in enumerate(perms)}
    # (g*h)(x) = g(h(x))
    return [[idx[tuple(g[h[x]] for x in range(k))] for h in perms] for g in perms]


def path_algebra(num_vertices: int, arrows: Sequence[tuple[int, int]], field: Field,
                 max_length: int | None = None) -> FDAlgebra:
    """Path algebra of a quiver; cyclic quivers need ``max_length`` (longer paths are zero).

    Paths are arrow sequences read left to right; ``p * q`` is the concatenation
    when ``p`` ends where ``q`` starts.  The radical is the arrow ideal.
    """
    src = [s for s, _ in arrows]
    tgt = [t for _, t in arrows]
    if any(not 0 <= v < num_vertices for v in src + tgt):
        raise InvalidAlgebra("arrow endpoint out of range")
    limit = max_length
    if limit is None:
        limit = num_vertices  # acyclic paths have fewer arrows than vertices
    paths: list[tuple] = [("e", v) for v in range(num_vertices)]
    layer = [(a,) for a in range(len(arrows))]
    length = 1
    while layer and length <= limit:
        paths.extend(("p", p) for p in layer)
        layer = [p + (a,) for p in layer for a in range(len(arrows)) if tgt[p[-1]] == src[a]]
        length += 1
    if layer and max_length is None:
        raise InvalidAlgebra("quiver has an oriented cycle; pass max_length")
    idx = {p: k for k, p in enumerate(paths)}
    N = len(paths)

    def ends(p):
        if p[0] == "e":
            return p[1], p[1]
        return src[p[1][0]], tgt[p[1][-1]]

    sc = [[[0] * N for _ in range(N)] for _ in range(N)]
    for p, q in itertools.product(paths, repeat=2):
        (_, pt), (qs, _) = ends(p), ends(q)
        if pt != qs:
            continue
        if p[0] == "e":
            r = q
        elif q[0] == "e":
            r = p
        else:
            r = ("p", p[1] + q[1])
        if r in idx:
            sc[idx[p]][idx[q]][idx[r]] = 1
    unit = [1 if p[0] == "e" else 0 for p in paths]
    labels = [f"e{p[1]}" if p[0] == "e" else "a" + ".".join(str(x) for x in p[1]) for p in paths]
    rad = [field.unit_vector(N, k) for k, p in enumerate(paths) if p[0] == "p"]
    return make_algebra(field, sc, unit, labels, rad, "constructor")


def direct_sum_algebra(a: FDAlgebra, b: FDAlgebra) -> FDAlgebra:
    if a.field != b.field:
        raise InvalidAlgebra("direct sum of algebras over different fields")
    F = a.field
    n, m = a.dim, b.dim
    N = n + m
    sc = [[[F.zero] * N for _ in range(N)] for _ in range(N)]
    for i, j in itertools.product(range(n), repeat=2):
        sc[i][j][:n] = a.sc[i][j]
    for i, j in itertools.product(range(m), repeat=2):
        sc[n + i][n + j][n:] = b.sc[i][j]
    labels = None
    if a.labels or b.labels:
        labels = [f"{a.label(i)}.1" for i in range(n)] + [f"{b.label(i)}.2" for i in range(m)]
    rad, origin = None, None
    if a.declared_radical is not None and b.declared_radical is not None:
        rad = [tuple(v) + F.zeros(m) for v in a.declared_radical] + \
              [F.zeros(n) + tuple(v) for v in b.declared_radical]
        origin = "constructor"
    return make_algebra(F, sc, tuple(a.unit) + tuple(b.unit), labels, rad, origin)


def tensor_product_algebra(a: FDAlgebra, b: FDAlgebra) -> FDAlgebra:
    """``A (x) B`` on the basis ``a_i (x) b_j`` with index ``i*dim(B)+j``."""
    if a.field != b.field:
        raise InvalidAlgebra("tensor product of algebras over different fields")
    F = a.field
    n, m = a.dim, b.dim
    N = n * m
    sc = [[[F.zero] * N for _ in range(N)] for _ in range(N)]
    for i, k in itertools.product(range(n), repeat=2):
        ca = a.sc[i][k]
        for j, l in itertools.product(range(m), repeat=2):
            cb = b.sc[j][l]
            row = sc[i * m + j][k * m + l]
            for p_, x in enumerate(ca):
                if x == 0:
                    continue
                for q, y in enumerate(cb):
                    if y != 0:
                        row[p_ * m + q] = F.norm(x * y)
    unit = [F.norm(x * y) for x in a.unit for y in b.unit]
    labels = [f"{a.label(i)}*{b.label(j)}" for i in range(n) for j in range(m)]
    return make_algebra(F, sc, unit, labels)


# probing and splitting of semisimple pieces ------------------------------------

def probe_elements(field: Field, dim: int, seed: int, count: int, budget: int = DEFAULT_BUDGET):
    """Deterministic candidate stream: basis vectors, pairwise sums and differences,
    then every vector (finite field within budget) or seeded small-integer vectors."""
    import random

    basis = [field.unit_vector(dim, i) for i in range(dim)]
    yield from basis
    one = field.one
    for i in range(dim):
        for j in range(i + 1, dim):
            v = [field.zero] * dim
            v[i], v[j] = one, one
            yield tuple(v)
            v[j] = field.norm(-one)
            yield tuple(v)
    if field.is_finite and field.count_vectors(dim) <= budget:
        yield from field.all_vectors(dim)
        return
    rng = random.Random(seed)
    for _ in range(count):
        yield field.vec(rng.randint(-3, 3) for _ in range(dim))


def poly_eval_element(a: FDAlgebra, coeffs, z) -> Vector:
    F = a.field
    out = a.zero()
    for c in reversed(list(coeffs)):
        out = mult(a, out, z)
        out = tuple(F.norm(x + c * u) for x, u in zip(out, a.unit))
    return out


def _restricted(a: FDAlgebra, z, w: Subspace) -> Mat:
    cols = [w.coords(mult(a, z, u)) for u in w.basis]
    return Mat.from_columns(a.field, cols, w.dim)


@dataclass
class FieldComponent:
    """A simple piece ``space`` of a commutative semisimple algebra.

    ``primitive`` generates the piece and ``minpoly`` is its irreducible minimal
    polynomial of degree ``dim space``; both are None when no probe settled it.
    """

    space: Subspace
    identity: Vector
    primitive: Vector | None
    minpoly: list | None

    @property
    def certified(self) -> bool:
        return self.primitive is not None


def split_commutative_semisimple(c: FDAlgebra, seed: int = 0, probes: int = 200,
                                 budget: int = DEFAULT_BUDGET) -> list[FieldComponent]:
    """Split a commutative semisimple algebra into its field components."""
    from .exactlin import minimal_polynomial, poly_eval_matrix

    F = c.field
    pending = [Subspace.full(F, c.dim)]
    done: list[FieldComponent] = []
    while pending:
        w = pending.pop()
        settled = False
        for z in probe_elements(F, c.dim, seed, probes, budget):
            m_op = _restricted(c, z, w)
            mp = minimal_polynomial(m_op)
            factors = poly_factor(mp, F)
            if len(factors) > 1:
                for fac, mul in factors:
                    pw = [F.one]
                    for _ in range(mul):
                        pw = poly_mul(F, pw, fac)
                    ker = nullspace(poly_eval_matrix(pw, m_op))
                    pending.append(Subspace.span(F, c.dim, [w.from_coords(k) for k in ker.basis]))
                settled = True
                break
            if factors[0][1] == 1 and len(mp) - 1 == w.dim:
                ident = ideal_identity(c, w)
                # the primitive element generates w: project z to the piece
                done.append(FieldComponent(w, ident, mult(c, z, ident), mp))
                settled = True
                break
        if not settled:
            done.append(FieldComponent(w, ideal_identity(c, w), None, None))
    done.sort(key=lambda comp: comp.space.pivots)
    return done


def find_zero_divisor(b: FDAlgebra, seed: int = 0, probes: int = 200,
                      budget: int = DEFAULT_BUDGET) -> tuple[Vector, Vector] | None:
    """Nonzero ``u, w`` with ``u w = 0``, found from a reducible minimal polynomial."""
    from .exactlin import minimal_polynomial

    F = b.field
    for z in probe_elements(F, b.dim, seed, probes, budget):
        mp = minimal_polynomial(left_mult_operator(b, z))
        factors = poly_factor(mp, F)
        if len(factors) == 1 and factors[0][1] == 1:
            continue
        fac, mul = factors[0]
        if len(factors) == 1:
            u = poly_eval_element(b, fac, z)
            w = poly_eval_element(b, _poly_pow(F, fac, mul - 1), z)
        else:
            head = _poly_pow(F, fac, mul)
            rest = [F.one]
            for f2, m2 in factors[1:]:
                rest = poly_mul(F, rest, _poly_pow(F, f2, m2))
            u = poly_eval_element(b, head, z)
            w = poly_eval_element(b, rest, z)
        return u, w
    return None


def _poly_pow(F: Field, f, k: int) -> list:
    out = [F.one]
    for _ in range(k):
        out = poly_mul(F, out, f)
    return out
