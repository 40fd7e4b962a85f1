import pytest
from hypothesis import assume, given, settings, strategies as st

from zadkit import corpus
from zadkit.algebra import (direct_sum_algebra, is_ideal, matrix_algebra, mult, path_algebra, poly_quotient,
                            quotient_algebra, radical, triangular)
from zadkit.exactlin import Field, Subspace
from zadkit.modules import Character, one_dim_modules, regular_module
from zadkit.zad import is_zad_oracle
from zadkit.zpd import (ComponentWitness, Ext1Witness, E_subalgebra, I_ideal, check_component_witness,
                        check_ext1_witness, ext1_self, idempotents_exhaustive, is_zpd,
                        primitive_idempotents, semisimple_components, zpd_condition_crosscheck)

from strategies import corpus_algebra_names

QQ, F2, F3 = Field.Q(), Field.Fp(2), Field.Fp(3)


def dual(F=QQ):
    return poly_quotient([0, 0, 1], F)


def test_ext1_examples():
    d = dual()
    dim, wit = ext1_self(d, Character(d, (1, 0)))
    assert dim == 1 and tuple(wit.derivation) == (0, 1)
    assert check_ext1_witness(d, wit)
    t = triangular(2, QQ)
    for lam in one_dim_modules(t):
        assert ext1_self(t, lam)[0] == 0
    a2 = path_algebra(2, [(0, 1)], QQ)
    assert all(ext1_self(a2, lam)[0] == 0 for lam in one_dim_modules(a2))


def test_ext1_with_a_loop():
    # A2 with an extra loop at vertex 0 (paths of length > 2 dropped)
    q = path_algebra(2, [(0, 1), (0, 0)], QQ, max_length=2)
    dims = {}
    for lam in one_dim_modules(q):
        vertex = 0 if lam(q.basis(q.labels.index("e0"))) == 1 else 1
        dims[vertex] = ext1_self(q, lam)[0]
    assert dims == {0: 1, 1: 0}


def test_semisimple_component_examples():
    rep = semisimple_components(matrix_algebra(2, QQ))
    assert [(c.dim, c.center_dim) for c in rep.components] == [(4, 1)] and rep.components[0].flag.yes
    rep = semisimple_components(poly_quotient([1, 1, 1], F2))
    assert [(c.dim, c.center_dim) for c in rep.components] == [(2, 2)] and rep.components[0].flag.no
    a = direct_sum_algebra(matrix_algebra(1, QQ), matrix_algebra(2, QQ))
    comps = sorted((c.dim, c.flag.answer.value) for c in semisimple_components(a).components)
    assert comps == [(1, "yes"), (4, "yes")]


def test_is_zpd_examples():
    v = is_zpd(matrix_algebra(2, QQ))
    assert v.yes and v.method == "wedderburn+ext1"
    v = is_zpd(dual())
    assert v.no and isinstance(v.evidence, Ext1Witness) and tuple(v.evidence.derivation) == (0, 1)
    assert is_zad_oracle(regular_module(dual(F2))).no
    assert is_zpd(triangular(3, QQ)).yes
    f4 = poly_quotient([1, 1, 1], F2)
    v = is_zpd(f4)
    assert v.no and isinstance(v.evidence, ComponentWitness)
    assert check_component_witness(f4, v.evidence)


def test_component_witness_tampering():
    a = poly_quotient([1, 0, 1], QQ)  # Q(i)
    wit = is_zpd(a).evidence
    assert check_component_witness(a, wit)
    assert not check_component_witness(a, ComponentWitness(wit.radical, (1, 0), (1, 0), wit.minpoly))
    t = triangular(2, QQ)
    # the strictly upper part is the radical; passing nothing claims T2 is semisimple
    assert not check_component_witness(t, ComponentWitness((), t.unit, t.unit, [0, 1]))


def test_ext1_witness_tampering():
    d = dual()
    assert not check_ext1_witness(d, Ext1Witness((1, 0), (0, 0)))
    assert not check_ext1_witness(d, Ext1Witness((1, 1), (0, 1)))  # not a character
    t = triangular(2, QQ)
    lam = one_dim_modules(t)[0]
    assert not check_ext1_witness(t, Ext1Witness(lam.values, (1, 0, 0)))


def test_idempotent_examples():
    assert sorted(idempotents_exhaustive(matrix_algebra(1, F3))) == [(0,), (1,)]
    assert sorted(idempotents_exhaustive(dual(F2))) == [(0, 0), (1, 0)]
    assert len(idempotents_exhaustive(matrix_algebra(2, F2))) == 8
    prims = primitive_idempotents(matrix_algebra(2, F2))
    assert len(prims) == 6  # rank-one idempotents


@pytest.mark.parametrize("name,expected", [("t2_f2", True), ("dual_numbers_f2", False), ("m2_f2", True)])
def test_crosscheck_examples(name, expected):
    rep = zpd_condition_crosscheck(corpus.algebra(name))
    assert rep.agree
    assert rep.algebra_level["is_zpd"] is expected


# properties -------------------------------------------------------------------------------

SMALL_FINITE = [n for n in corpus_algebra_names(F2) + corpus_algebra_names(F3)
                if corpus.algebra(n).field.count_vectors(corpus.algebra(n).dim) <= 2 ** 12]


@pytest.mark.parametrize("name", SMALL_FINITE)
def test_zpd_matches_regular_oracle(name):
    a = corpus.algebra(name)
    assert is_zpd(a).answer is is_zad_oracle(regular_module(a)).answer


@pytest.mark.parametrize("name", corpus_algebra_names(F2, max_dim=6) + corpus_algebra_names(F3, max_dim=4))
def test_i_inside_e(name):
    a = corpus.algebra(name)
    assert I_ideal(a) <= E_subalgebra(a)


@pytest.mark.parametrize("name", list(corpus.ALGEBRAS))
def test_components_partition_the_semisimple_quotient(name):
    a = corpus.algebra(name)
    rad = radical(a)
    abar = a if rad.is_zero() else quotient_algebra(a, rad)[0]
    rep = semisimple_components(a)
    assert sum(c.dim for c in rep.components) == rep.semisimple_dim == abar.dim
    for c in rep.components:
        piece = Subspace.span(a.field, abar.dim, [mult(abar, c.identity, abar.basis(i)) for i in range(abar.dim)])
        assert is_ideal(abar, piece)


@pytest.mark.parametrize("name", list(corpus.ALGEBRAS))
def test_local_algebras_are_zpd_only_when_one_dimensional(name):
    a = corpus.algebra(name)
    rad = radical(a)
    if a.dim - rad.dim == 1:  # A/R = F, so A is local
        assert is_zpd(a).yes == (a.dim == 1)


@pytest.mark.parametrize("name", list(corpus.ALGEBRAS))
def test_zpd_evidence_replays(name):
    from zadkit.zad import check_certificate

    a = corpus.algebra(name)
    v = is_zpd(a)
    assert not v.unknown
    if isinstance(v.evidence, Ext1Witness):
        assert check_ext1_witness(a, v.evidence)
    elif isinstance(v.evidence, ComponentWitness):
        assert check_component_witness(a, v.evidence)
    elif v.yes:
        assert check_certificate(regular_module(a), v.evidence)


PAIRABLE = [n for n in corpus.ALGEBRAS if corpus.algebra(n).dim <= 4]


@settings(max_examples=25)
@given(st.sampled_from(PAIRABLE), st.sampled_from(PAIRABLE))
def test_zpd_of_direct_sum_is_conjunction(x, y):
    a, b = corpus.algebra(x), corpus.algebra(y)
    assume(a.field == b.field)
    va, vb = is_zpd(a, certify=False), is_zpd(b, certify=False)
    vs = is_zpd(direct_sum_algebra(a, b), certify=False)
    assert vs.yes == (va.yes and vb.yes)
