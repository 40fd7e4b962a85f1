import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zadkit.exactlin import (Field, Mat, Subspace, SpanBuilder, inverse, minimal_polynomial, nullspace,
                             poly_eval_matrix, poly_factor, poly_roots, rank, rref, solve, subspace_contains,
                             subspace_eq, subspace_sum)

from strategies import fields, matrices, vectors

QQ, F2, F3 = Field.Q(), Field.Fp(2), Field.Fp(3)


def test_field_normalises_and_parses():
    assert F3(5) == 2 and F3(-1) == 2
    assert QQ("3/6") == Fraction(1, 2)
    assert F3.inv(2) == 2
    with pytest.raises(ZeroDivisionError):
        F3.inv(0)
    with pytest.raises(ValueError):
        Field.Fp(4)


def test_rref_examples():
    assert rref(Mat.identity(QQ, 3)) == Mat.identity(QQ, 3)
    assert rref(Mat.zero(QQ, 2, 4)) == Mat.zero(QQ, 2, 4)
    assert rref(Mat.from_rows(QQ, [[2, 4], [1, 2]])).entries == ((1, 2), (0, 0))


def test_nullspace_examples():
    assert nullspace(Mat.zero(QQ, 3, 3)).dim == 3
    assert nullspace(Mat.identity(F3, 4)).is_zero()
    ns = nullspace(Mat.from_rows(F2, [[1, 1]]))
    assert ns.basis == ((1, 1),)
    # exhaustive: exactly the vectors killed by [[1, 1]]
    killed = {v for v in F2.all_vectors(2) if (v[0] + v[1]) % 2 == 0}
    assert {v for v in F2.all_vectors(2) if ns.contains(v)} == killed


def test_subspace_examples():
    x = Subspace.span(QQ, 2, [(1, 0)])
    assert subspace_eq(subspace_sum(x, Subspace.zero(QQ, 2)), x)
    assert not subspace_contains(x, (0, 1))
    s = subspace_sum(Subspace.span(F2, 3, [(1, 0, 0)]), Subspace.span(F2, 3, [(1, 1, 0)]))
    assert s == Subspace.span(F2, 3, [(1, 0, 0), (0, 1, 0)])
    members = {v for v in F2.all_vectors(3) if s.contains(v)}
    assert members == {(a, b, 0) for a in (0, 1) for b in (0, 1)}


def test_solve_and_inverse():
    m = Mat.from_rows(QQ, [[1, 2], [3, 4]])
    x = solve(m, (5, 6))
    assert m @ x == (5, 6)
    assert inverse(m) @ m == Mat.identity(QQ, 2)
    assert solve(Mat.from_rows(QQ, [[1, 1], [1, 1]]), (1, 2)) is None


def test_polynomials():
    # x^2 + 1 over F2 is (x + 1)^2; over Q it is irreducible
    assert [(list(f), k) for f, k in poly_factor([1, 0, 1], F2)] == [([1, 1], 2)]
    assert len(poly_factor([1, 0, 1], QQ)) == 1
    assert sorted(poly_roots([-2, 1, 1], QQ)) == [-2, 1]  # x^2 + x - 2
    m = Mat.from_rows(QQ, [[0, -1], [1, 0]])
    mp = minimal_polynomial(m)
    assert list(mp) == [1, 0, 1]
    assert poly_eval_matrix(mp, m).is_zero()


def test_span_builder_tracks_dimension():
    sb = SpanBuilder(F2, 3)
    assert sb.add((1, 1, 0))
    assert not sb.add((1, 1, 0))
    assert sb.add((0, 1, 1))
    assert sb.contains((1, 0, 1))
    assert sb.dim == 2


# properties -----------------------------------------------------------------------

@given(matrices())
def test_rref_is_idempotent(m):
    assert rref(rref(m)) == rref(m)


@given(matrices())
def test_rank_nullity(m):
    assert nullspace(m).dim + rank(m) == m.cols


@given(matrices())
def test_nullspace_vectors_are_killed(m):
    for v in nullspace(m).basis:
        assert all(x == 0 for x in m @ v)


@st.composite
def three_subspaces(draw):
    F = draw(fields())
    n = draw(st.integers(1, 4))
    subs = []
    for _ in range(3):
        k = draw(st.integers(0, n))
        subs.append(Subspace.span(F, n, [draw(vectors(F, n)) for _ in range(k)]))
    return subs


@given(three_subspaces())
def test_sum_is_associative_commutative_with_zero(subs):
    x, y, z = subs
    zero = Subspace.zero(x.field, x.ambient_dim)
    assert subspace_eq(subspace_sum(x, y), subspace_sum(y, x))
    assert subspace_sum(subspace_sum(x, y), z) == subspace_sum(x, subspace_sum(y, z))
    assert subspace_sum(x, zero) == x


@given(three_subspaces())
def test_intersection_dimension_formula(subs):
    x, y, _ = subs
    assert (x + y).dim + x.intersection(y).dim == x.dim + y.dim
    assert x.intersection(y) <= x and x.intersection(y) <= y


@given(three_subspaces())
def test_annihilator_is_orthogonal_complement(subs):
    x = subs[0]
    ann = x.annihilator()
    assert ann.dim == x.ambient_dim - x.dim
    F = x.field
    for a in ann.basis:
        for b in x.basis:
            assert F.norm(sum(p * q for p, q in zip(a, b))) == 0


@given(st.sampled_from([2, 3]).flatmap(
    lambda p: st.tuples(st.just(Field.Fp(p)), st.integers(1, 6 if p == 2 else 4))).flatmap(
    lambda fn: st.tuples(st.just(fn[0]), st.just(fn[1]),
                         st.lists(vectors(fn[0], fn[1]), max_size=4))))
def test_contains_matches_enumeration(args):
    F, n, gens = args
    sub = Subspace.span(F, n, gens)
    members = set()
    for coeffs in itertools.product(F.elements(), repeat=len(gens)):
        members.add(tuple(F.norm(sum(c * g[i] for c, g in zip(coeffs, gens))) for i in range(n)))
    if not gens:
        members = {F.zeros(n)}
    assert {v for v in F.all_vectors(n) if sub.contains(v)} == members


@given(matrices(min_rows=1, max_rows=4, max_cols=4))
def test_solve_finds_solutions_exactly_when_consistent(m):
    F = m.field
    target = m @ tuple(F(i + 1) for i in range(m.cols))
    x = solve(m, target)
    assert x is not None and m @ x == target


@given(matrices(F=QQ, min_rows=1, max_rows=3, min_cols=1, max_cols=3))
def test_rationals_stay_exact(m):
    for row in rref(m).entries:
        assert all(isinstance(x, Fraction) for x in row)
