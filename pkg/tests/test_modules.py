import itertools

import pytest
from hypothesis import given, strategies as st

from zadkit import corpus
from zadkit.algebra import (direct_sum_algebra, group_algebra, matrix_algebra, poly_quotient, triangular,
                            cyclic_group_table)
from zadkit.errors import InvalidModule, NotIdempotent, OverBudget
from zadkit.exactlin import Field, Mat, Subspace
from zadkit.modules import (Character, annihilator, characters_bruteforce, direct_sum_module, end_algebra,
                            hom_space, is_irreducible, make_module, module_radical, natural_module,
                            one_dim_modules, principal_projective, quotient_module, regular_module,
                            submodule_spanned, validate_module, zero_module)

from strategies import corpus_algebra_names, corpus_algebras, vectors

QQ, F2, F3 = Field.Q(), Field.Fp(2), Field.Fp(3)


def e(a, label):
    return a.field.unit_vector(a.dim, a.labels.index(label))


def dual(F=QQ):
    return poly_quotient([0, 0, 1], F)


def test_validate_module_examples():
    assert validate_module(regular_module(matrix_algebra(2, QQ))) == []
    assert validate_module(natural_module(matrix_algebra(2, QQ), 2)) == []
    reg = regular_module(dual())
    ops = list(reg.action)
    ops[1] = ops[1] + Mat.identity(QQ, 2)
    broken = make_module(reg.algebra, ops, validate=False)
    assert validate_module(broken)
    with pytest.raises(InvalidModule):
        make_module(reg.algebra, ops)


def test_regular_module_examples():
    reg = regular_module(dual())
    assert reg.dim == 2 and reg.action[1] == Mat.from_rows(QQ, [[0, 0], [1, 0]])
    assert regular_module(matrix_algebra(2, QQ)).dim == 4
    ff = direct_sum_algebra(matrix_algebra(1, QQ), matrix_algebra(1, QQ))
    ops = regular_module(ff).action
    assert ops[0] == Mat.from_rows(QQ, [[1, 0], [0, 0]]) and ops[1] == Mat.from_rows(QQ, [[0, 0], [0, 1]])


def test_principal_projective_examples():
    t = triangular(2, QQ)
    assert principal_projective(t, t.unit)[0] == regular_module(t)
    assert principal_projective(t, e(t, "e11"))[0].dim == 1
    p, emb = principal_projective(t, e(t, "e22"))
    assert p.dim == 2
    image = Subspace.span(QQ, 3, [emb.column(c) for c in range(2)])
    assert image == Subspace.span(QQ, 3, [e(t, "e22"), e(t, "e12")])
    with pytest.raises(NotIdempotent):
        principal_projective(t, e(t, "e12"))


def test_hom_space_examples():
    m2 = matrix_algebra(2, F2)
    assert hom_space(*[natural_module(m2, 2)] * 2).dim == 1
    assert end_algebra(regular_module(dual(F2)))[0].dim == 2


def test_annihilator_examples():
    assert annihilator(regular_module(triangular(3, QQ))).is_zero()
    d = dual()
    s = Character(d, (1, 0))
    from zadkit.modules import character_module
    assert annihilator(character_module(s)) == Subspace.span(QQ, 2, [e(d, "x")])
    a = direct_sum_algebra(matrix_algebra(1, QQ), matrix_algebra(2, QQ))
    nat = natural_module(matrix_algebra(2, QQ), 2)
    v = make_module(a, [Mat.zero(QQ, 2, 2)] + list(nat.action))
    assert annihilator(v) == Subspace.span(QQ, 5, [a.basis(0)])


def test_module_radical_and_quotient_examples():
    assert module_radical(natural_module(matrix_algebra(3, QQ), 3)).is_zero()
    reg = regular_module(dual())
    rad = module_radical(reg)
    assert rad == Subspace.span(QQ, 2, [(0, 1)])
    top, proj = quotient_module(reg, rad)
    assert top.dim == 1 and top.action[1] == Mat.zero(QQ, 1, 1)
    assert proj.rows == 1 and proj.cols == 2


def test_irreducibility_examples():
    assert is_irreducible(natural_module(matrix_algebra(2, F2), 2)).yes
    v = is_irreducible(regular_module(dual(F2)))
    assert v.no and v.evidence == Subspace.span(F2, 2, [(0, 1)])
    assert is_irreducible(regular_module(poly_quotient([1, 1, 1], F2))).yes
    # over Q: Burnside, the field case, and a proper split
    assert is_irreducible(natural_module(matrix_algebra(3, QQ), 3)).method == "burnside"
    assert is_irreducible(regular_module(poly_quotient([1, 0, 1], QQ))).method == "semisimple-end-field"
    assert is_irreducible(regular_module(group_algebra(cyclic_group_table(2), QQ))).no


def test_character_examples():
    assert one_dim_modules(matrix_algebra(2, QQ)) == []
    d = dual()
    assert [ch.values for ch in one_dim_modules(d)] == [(1, 0)]
    t = triangular(2, QQ)
    vals = {ch.values for ch in one_dim_modules(t)}
    i11, i12, i22 = (t.labels.index(x) for x in ("e11", "e12", "e22"))
    expected = set()
    for a, b in ((1, 0), (0, 1)):
        v = [0, 0, 0]
        v[i11], v[i22], v[i12] = a, b, 0
        expected.add(tuple(v))
    assert vals == expected


def test_direct_sum_examples():
    m2 = matrix_algebra(2, QQ)
    nat = natural_module(m2, 2)
    assert direct_sum_module(nat, zero_module(m2)) == nat
    f = matrix_algebra(1, QQ)
    s = direct_sum_module(regular_module(f), regular_module(f))
    assert s.dim == 2 and s.action[0] == Mat.identity(QQ, 2)


# properties ---------------------------------------------------------------------------------

MODULE_NAMES = list(corpus.MODULES)


@pytest.mark.parametrize("name", MODULE_NAMES)
def test_end_contains_identity_and_is_closed(name):
    v = corpus.module(name)
    hs = hom_space(v, v)
    ident = Mat.identity(v.field, v.dim)
    assert hs.contains(ident.flat())
    mats = [Mat.from_flat(v.field, v.dim, v.dim, b) for b in hs.basis]
    for x, y in itertools.product(mats, repeat=2):
        assert hs.contains((x @ y).flat())


@pytest.mark.parametrize("name", list(corpus.ALGEBRAS))
def test_regular_annihilator_is_zero(name):
    assert annihilator(regular_module(corpus.algebra(name))).is_zero()


@given(st.sampled_from(MODULE_NAMES).map(corpus.module), st.data())
def test_quotients_validate(v, data):
    vecs = data.draw(st.lists(vectors(v.field, v.dim), max_size=2))
    sub = submodule_spanned(v, vecs)
    q, proj = quotient_module(v, sub)
    assert validate_module(q) == []
    for i, op in enumerate(v.action):  # the projection intertwines
        assert proj @ op == q.action[i] @ proj


@pytest.mark.parametrize("name", corpus_algebra_names(F2) + corpus_algebra_names(F3))
def test_characters_match_bruteforce(name):
    a = corpus.algebra(name)
    fast = sorted(ch.values for ch in one_dim_modules(a))
    slow = sorted(ch.values for ch in characters_bruteforce(a))
    assert fast == slow


def test_enumeration_over_q_is_over_budget():
    from zadkit.zpd import idempotents_exhaustive

    a = corpus.algebra("t2_q")
    with pytest.raises(OverBudget):
        characters_bruteforce(a)
    with pytest.raises(OverBudget):
        idempotents_exhaustive(a)


@given(corpus_algebras(F2, max_dim=6))
def test_projective_dimensions_complement(a):
    from zadkit.zpd import idempotents_exhaustive

    F = a.field
    for idem in idempotents_exhaustive(a):
        comp = tuple(F.norm(u - x) for u, x in zip(a.unit, idem))
        d1 = principal_projective(a, idem)[0].dim if any(idem) else 0
        d2 = principal_projective(a, comp)[0].dim if any(comp) else 0
        assert d1 + d2 == a.dim
