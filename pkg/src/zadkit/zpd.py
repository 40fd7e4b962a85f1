"""Zero-product-determined (zpd) algebras.

The fast decision: ``A`` is zpd iff every simple component of ``A/R`` is zpd and
no 1-dimensional module has a self-extension.  Over a finite field the four
equivalent conditions on principal projectives can be evaluated independently
by brute force, which is what :func:`zpd_condition_crosscheck` does.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import verdict as V
from .algebra import (FDAlgebra, center, commutator, find_zero_divisor, ideal_closure, is_idempotent,
                      mult, quotient_algebra, radical, split_commutative_semisimple,
                      subalgebra_as_algebra, subalgebra_closure)
from .errors import DEFAULT_BUDGET, check_enumerable
from .exactlin import Mat, Subspace, Vector, is_zero_vector, nullspace
from .modules import (Character, FDModule, character_module, check_character, hom_space, make_module,
                      one_dim_modules, principal_projective, quotient_module, regular_module)


@dataclass
class Ext1Witness:
    """A nonzero lambda-derivation ``d``: ``d(ab) = lambda(a) d(b) + d(a) lambda(b)``."""

    character: Vector
    derivation: Vector


def ext1_self(a: FDAlgebra, lam: Character) -> tuple[int, Ext1Witness | None]:
    """Dimension of ``Ext^1(S, S)`` for the 1-dimensional module ``S`` of ``lam``.

    Self-extensions of S are the upper triangular actions ``[[lam, d], [0, lam]]``;
    coboundaries vanish because both diagonal characters agree, so the space is
    exactly the lambda-derivations.
    """
    check_character(lam)
    F, n = a.field, a.dim
    lv = lam.values
    rows = []
    for i in range(n):
        for j in range(n):
            row = [a.sc[i][j][k] for k in range(n)]
            row[j] = F.norm(row[j] - lv[i])
            row[i] = F.norm(row[i] - lv[j])
            rows.append(row)
    rows.append(list(a.unit))
    ders = nullspace(Mat.from_rows(F, rows, n))
    if ders.is_zero():
        return 0, None
    return ders.dim, Ext1Witness(lv, ders.basis[0])


def extension_module(a: FDAlgebra, wit: Ext1Witness) -> FDModule:
    F = a.field
    mats = [Mat(F, 2, 2, ((lv, d), (F.zero, lv))) for lv, d in zip(wit.character, wit.derivation)]
    return make_module(a, mats)


def check_ext1_witness(a: FDAlgebra, wit: Ext1Witness) -> bool:
    """Replay: d is a nonzero lambda-derivation and the extension it defines does not split."""
    from .modules import is_character

    F, n = a.field, a.dim
    lv, d = tuple(wit.character), tuple(wit.derivation)
    if len(lv) != n or len(d) != n or not is_character(a, lv) or is_zero_vector(d):
        return False
    lam = Character(a, lv)
    dfun = Character(a, d)  # plain linear functional evaluation
    for i in range(n):
        for j in range(n):
            lhs = dfun(a.sc[i][j])
            rhs = F.norm(lv[i] * d[j] + d[i] * lv[j])
            if lhs != rhs:
                return False
    try:
        x = extension_module(a, wit)
    except Exception:
        return False
    s = character_module(lam)
    # a splitting is a map X -> S that is the identity on the submodule spanned by the first basis vector
    return all(h[0] == 0 for h in hom_space(x, s).basis)


# semisimple part ----------------------------------------------------------------

def simple_algebra_zpd(b: FDAlgebra, seed: int = 0, probes: int = 200,
                       budget: int = DEFAULT_BUDGET) -> V.Verdict:
    """zpd flag of a simple algebra ``M_n(D)``: zpd iff ``n >= 2`` or the algebra is F."""
    if b.dim == 1:
        return V.yes("simple:dim=1")
    zdim = center(b).dim
    if b.field.is_finite:
        # finite division rings are fields, so b = M_n(K) and n >= 2 iff dim b > dim Z(b)
        if b.dim > zdim:
            return V.yes("simple:finite-noncommutative", center_dim=zdim)
        return V.no("simple:proper-field-extension", reason=f"commutative simple algebra of dim {b.dim}",
                    center_dim=zdim)
    if b.dim == zdim:
        return V.no("simple:proper-field-extension", reason=f"commutative simple algebra of dim {b.dim}",
                    center_dim=zdim)
    zd = find_zero_divisor(b, seed, probes, budget)
    if zd is not None:
        return V.yes("simple:zero-divisor", {"zero_divisor": zd}, center_dim=zdim)
    return V.unknown("simple:division-probe", f"no zero divisor among {probes} probes; may be a division algebra",
                     seed=seed, center_dim=zdim)


@dataclass
class Component:
    dim: int
    center_dim: int
    flag: V.Verdict
    identity: Vector | None  # central idempotent in A/R coordinates
    primitive: Vector | None = None
    minpoly: list | None = None


@dataclass
class WedderburnReport:
    semisimple_dim: int
    components: list = field(default_factory=list)


def semisimple_components(a: FDAlgebra, seed: int = 0, budget: int = DEFAULT_BUDGET) -> WedderburnReport:
    """Simple components of ``A/R`` with their zpd flags."""
    rad = radical(a, budget)
    abar = a if rad.is_zero() else quotient_algebra(a, rad)[0]
    z = center(abar)
    zalg = subalgebra_as_algebra(abar, z, abar.unit)
    report = WedderburnReport(abar.dim)
    for comp in split_commutative_semisimple(zalg, seed, budget=budget):
        c = z.from_coords(comp.identity)
        prim = z.from_coords(comp.primitive) if comp.primitive is not None else None
        if not comp.certified:
            report.components.append(Component(
                0, comp.space.dim,
                V.unknown("wedderburn", "center component not certified simple", seed=seed), c))
            continue
        piece = Subspace.span(a.field, abar.dim, [mult(abar, c, abar.basis(i)) for i in range(abar.dim)])
        b = subalgebra_as_algebra(abar, piece, c)
        flag = simple_algebra_zpd(b, seed, budget=budget)
        if flag.yes and flag.evidence:
            u, w = flag.evidence["zero_divisor"]
            flag.evidence = {"zero_divisor": (piece.from_coords(u), piece.from_coords(w))}
        report.components.append(Component(piece.dim, comp.space.dim, flag, c, prim, comp.minpoly))
    return report


# the algebra-level decision --------------------------------------------------------

@dataclass
class ComponentWitness:
    """A simple component of ``A/R`` that is a field bigger than F."""

    radical: tuple
    identity: Vector
    primitive: Vector
    minpoly: list


def is_zpd(a: FDAlgebra, budget: int = DEFAULT_BUDGET, seed: int = 0, certify: bool = True) -> V.Verdict:
    """Decide zpd from the semisimple quotient and the self-extensions of 1-dimensional modules.

    With ``certify`` a Yes also carries a replayable zad certificate for the
    regular module when the probe stream (or, over a small finite field, the
    full enumeration) finds one.
    """
    method = "wedderburn+ext1"
    report = semisimple_components(a, seed, budget)
    for lam in one_dim_modules(a, budget):
        dim, wit = ext1_self(a, lam)
        if dim:
            return V.no(method, wit, f"a 1-dimensional module has dim Ext^1(S,S) = {dim}")
    undecided = []
    for comp in report.components:
        if comp.flag.no:
            wit = None
            if comp.primitive is not None:
                wit = ComponentWitness(radical(a, budget).basis, comp.identity, comp.primitive, comp.minpoly)
            extra = {}
            if certify:
                extra = _oracle_evidence(a, budget)
            return V.no(method, wit, f"A/R has a simple component that is a proper field extension "
                                     f"(dim {comp.dim})", **extra)
        if comp.flag.unknown:
            undecided.append(comp.flag.reason)
    if undecided:
        return V.unknown(method, "; ".join(undecided), seed=seed)
    evidence = None
    if certify:
        from .zad import accumulate_certificate, is_zad_oracle

        reg = regular_module(a)
        evidence = accumulate_certificate(reg, seed, budget=budget)
        if evidence is None and a.field.is_finite and a.field.count_vectors(a.dim) <= budget:
            evidence = is_zad_oracle(reg, budget).evidence
    return V.yes(method, evidence, components=len(report.components))


def _oracle_evidence(a: FDAlgebra, budget: int) -> dict:
    from .zad import is_zad_oracle

    if not a.field.is_finite or a.field.count_vectors(a.dim) > budget:
        return {}
    res = is_zad_oracle(regular_module(a), budget)
    return {"oracle_witness": res.evidence} if res.no else {}


def check_component_witness(a: FDAlgebra, wit: ComponentWitness) -> bool:
    """Replay: the radical is a nilpotent ideal, the identity is a central idempotent of A/R,
    and the component it cuts out is a field (irreducible minimal polynomial of full degree)."""
    from .algebra import is_ideal, is_nilpotent_ideal, left_mult_operator, trace_form_regime, trace_form
    from .exactlin import minimal_polynomial, poly_factor

    F = a.field
    rad = Subspace.span(F, a.dim, wit.radical)
    if not is_ideal(a, rad) or not is_nilpotent_ideal(a, rad):
        return False
    abar = a if rad.is_zero() else quotient_algebra(a, rad)[0]
    if trace_form_regime(abar) and not nullspace(trace_form(abar)).is_zero():
        return False  # the claimed radical is too small
    c, z = tuple(wit.identity), tuple(wit.primitive)
    if len(c) != abar.dim or not is_idempotent(abar, c) or is_zero_vector(c):
        return False
    if any(mult(abar, c, abar.basis(i)) != mult(abar, abar.basis(i), c) for i in range(abar.dim)):
        return False
    piece = Subspace.span(F, abar.dim, [mult(abar, c, abar.basis(i)) for i in range(abar.dim)])
    if not piece.contains(z) or piece.dim < 2:
        return False
    b = subalgebra_as_algebra(abar, piece, c)
    if center(b).dim != b.dim:
        return False
    mp = minimal_polynomial(left_mult_operator(b, piece.coords(z)))
    if len(mp) - 1 != b.dim:
        return False
    facs = poly_factor(mp, F)
    return len(facs) == 1 and facs[0][1] == 1


# brute-force idempotent machinery (finite fields) -------------------------------------

def idempotents_exhaustive(a: FDAlgebra, budget: int = DEFAULT_BUDGET) -> list[Vector]:
    F = a.field
    check_enumerable(F, a.dim, budget, "idempotent enumeration")
    return [e for e in F.all_vectors(a.dim) if mult(a, e, e) == e]


def E_subalgebra(a: FDAlgebra, budget: int = DEFAULT_BUDGET, idempotents=None) -> Subspace:
    """Subalgebra generated by all idempotents."""
    idem = idempotents if idempotents is not None else idempotents_exhaustive(a, budget)
    return subalgebra_closure(a, idem, include_unit=True)


def I_ideal(a: FDAlgebra, budget: int = DEFAULT_BUDGET, idempotents=None) -> Subspace:
    """Ideal generated by all commutators of idempotents with arbitrary elements."""
    idem = idempotents if idempotents is not None else idempotents_exhaustive(a, budget)
    gens = [commutator(a, e, a.basis(j)) for e in idem for j in range(a.dim)]
    return ideal_closure(a, gens)


def primitive_idempotents(a: FDAlgebra, budget: int = DEFAULT_BUDGET, idempotents=None) -> list[Vector]:
    """Nonzero idempotents whose corner algebra ``eAe`` has only the idempotents 0 and e."""
    idem = idempotents if idempotents is not None else idempotents_exhaustive(a, budget)
    out = []
    for e in idem:
        if is_zero_vector(e):
            continue
        inside = sum(1 for f in idem if mult(a, e, f) == f and mult(a, f, e) == f)
        if inside == 2:
            out.append(e)
    return out


def right_multiple(a: FDAlgebra, sub: Subspace, e: Sequence) -> Subspace:
    """``S e`` for a subspace S."""
    return Subspace.span(a.field, a.dim, [mult(a, x, e) for x in sub.basis])


@dataclass
class CrosscheckRow:
    idempotent: Vector
    conditions: dict  # name -> bool or None (undecided)

    @property
    def agree(self) -> bool:
        vals = [v for v in self.conditions.values() if v is not None]
        return len(set(vals)) <= 1


@dataclass
class CrosscheckReport:
    rows: list
    algebra_level: dict

    @property
    def discrepancies(self) -> list:
        bad = [r for r in self.rows if not r.agree]
        vals = [v for v in self.algebra_level.values() if v is not None]
        if len(set(vals)) > 1:
            bad.append(CrosscheckRow(None, self.algebra_level))
        return bad

    @property
    def agree(self) -> bool:
        return not self.discrepancies


def _answer(v: V.Verdict):
    return None if v.unknown else v.yes


def _semisimple_quotient_zpd_oracle(a: FDAlgebra, rad: Subspace, budget: int) -> bool:
    from .zad import is_zad_oracle

    abar = a if rad.is_zero() else quotient_algebra(a, rad)[0]
    return is_zad_oracle(regular_module(abar), budget).yes


def zpd_condition_crosscheck(a: FDAlgebra, budget: int = DEFAULT_BUDGET, seed: int = 0) -> CrosscheckReport:
    """Evaluate the four equivalent principal-projective conditions for every nonzero idempotent.

    (1) Ae is zad (oracle); (2) Ae/Re is zad (oracle) and Re is inside Ie;
    (3) the structural route (top + Ext^1); (4) Ae = Ee.
    """
    from .zad import is_zad_oracle, is_zad_principal_projective

    idem = idempotents_exhaustive(a, budget)
    e_sub = E_subalgebra(a, budget, idem)
    i_sub = I_ideal(a, budget, idem)
    rad = radical(a, budget)
    rows = []
    zad_of = {}
    for e in idem:
        if is_zero_vector(e):
            continue
        p, _ = principal_projective(a, e)
        ae = Subspace.span(a.field, a.dim, [mult(a, a.basis(i), e) for i in range(a.dim)])
        re = right_multiple(a, rad, e)
        c1 = is_zad_oracle(p, budget).yes
        zad_of[e] = c1
        re_in_p = Subspace.span(a.field, p.dim, [ae.coords(x) for x in re.basis])
        top, _ = quotient_module(p, re_in_p)
        c2 = is_zad_oracle(top, budget).yes and re.issubset(right_multiple(a, i_sub, e))
        c3 = _answer(is_zad_principal_projective(a, e, budget, seed))
        c4 = ae == right_multiple(a, e_sub, e)
        rows.append(CrosscheckRow(e, {"(1) Ae zad": c1, "(2) top zad and Re<=Ie": c2,
                                      "(3) top zad and Ext1=0": c3, "(4) Ae=Ee": c4}))
    prims = primitive_idempotents(a, budget, idem)
    algebra_level = {
        "is_zpd": _answer(is_zpd(a, budget, seed, certify=False)),
        "regular module zad": is_zad_oracle(regular_module(a), budget).yes,
        "primitive Ae all zad": all(zad_of[e] for e in prims),
        "A=E": e_sub.is_full(),
        "A/R zpd and R<=I": _semisimple_quotient_zpd_oracle(a, rad, budget) and rad.issubset(i_sub),
    }
    return CrosscheckReport(rows, algebra_level)
