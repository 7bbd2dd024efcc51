"""Extended affine root supersystems: layered data, axioms, construction and decomposition.

Oracles: finite layered data over a free radical are lifted to explicit root
sets (radical generators become basis symbols with zero pairing) and checked by
the explicit axiom verifier; structure conditions over finite radicals are
re-evaluated by enumerating the group.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from structure_cases import TRIVIAL, Z, Z2, Z4, cases, cos, fin, whole
from rootsuper.catalog import TypeLabel, build, build_pathological
from rootsuper.classify import classify_lfrss, ears_type
from rootsuper.extaffine import (
    EarsDatum,
    ExcludedTypeError,
    HypothesisError,
    MixedLayersError,
    StructureDatum,
    StructureError,
    check_radical_generation,
    is_tame_ears,
    quotient_ears,
    structure_conditions,
    structure_construct,
    structure_decompose,
    structure_part,
    super_root_construct,
    verify_ears_axioms,
)
from rootsuper.form import GramForm
from rootsuper.lattice import BasisSymbol, LatticeElement, RadicalGroup, RadicalSubset
from rootsuper.rootsys import RootSet, is_irreducible, verify_axioms

ZERO = LatticeElement()


def model(label):
    return build(TypeLabel.parse(label))


def uniform(label, group, subset):
    """Every layer (including the isotropic one) equal to ``subset``."""
    R = model(label).rootset
    return EarsDatum(R, group, {r: subset for r in R.roots})


def explicit(E):
    """Lift finite layers over ℤ^k to an explicit root set with k extra null basis symbols."""
    Q, k = E.quotient, E.radical.free_rank
    assert not E.radical.torsion
    syms = tuple(BasisSymbol("radical-generator", i) for i in range(k))
    n = len(Q.basis)
    gram = [list(row) + [0] * k for row in Q.form.gram] + [[0] * (n + k) for _ in range(k)]
    form = GramForm(Q.basis + syms, tuple(map(tuple, gram)))
    roots = []
    for dot, eta in E.finite_roots():
        x = dot
        for c, s in zip(eta, syms):
            x = x + LatticeElement.of((c, s))
        roots.append(x)
    return RootSet(form, roots)


# -- the layered representation --------------------------------------------------------


def test_from_rootset_lifts_back():
    R = build_pathological("i", 2)
    E = EarsDatum.from_rootset(R)
    assert E.radical == RadicalGroup(1)
    assert {E.lift(x) for x in E.finite_roots()} == set(R.roots)
    assert verify_ears_axioms(E).passed
    assert E.isotropic_layer.elements() == [(0,)]
    assert ears_type(E) == TypeLabel.parse("A(2,2)")


def test_trivial_radical_quotient_is_identity():
    R = model("B(1,2)").rootset
    E = EarsDatum.from_rootset(R)
    assert set(quotient_ears(E).roots) == set(R.roots)
    assert classify_lfrss(quotient_ears(E)).label == classify_lfrss(R).label


def test_membership_oracle_agrees_with_enumeration():
    R = model("B(1,1)").rootset
    layers = {r: fin(Z, [0], [1], [-1]) for r in R.roots}
    E = EarsDatum(R, Z, layers)
    roots = set(E.finite_roots())
    for dot in R.roots:
        for eta in range(-3, 4):
            assert E.contains((dot, (eta,))) == ((dot, (eta,)) in roots)


def test_layers_must_be_nonempty_and_cover_the_quotient():
    R = model("B(1,1)").rootset
    with pytest.raises(ValueError):
        EarsDatum(R, Z2, {r: whole(Z2) for r in R.roots[1:]})


@settings(max_examples=60)
@given(st.sampled_from(["B(1,1)", "BC(1,1)", "A(1,1)"]), st.randoms(use_true_random=False))
def test_ears_axioms_agree_with_explicit_lift(label, rnd):
    R = model(label).rootset
    layers = {}
    for r in R.roots:
        s = {0} if r.is_zero() else set()
        s |= {x for x in range(-2, 3) if rnd.random() < 0.5} or {0}
        layers[r] = s
    if rnd.random() < 0.7:  # make S_{-α} = −S_α most of the time
        for r in R.roots:
            layers[-r] = layers[-r] | {-x for x in layers[r]}
    E = EarsDatum(R, Z, {r: fin(Z, *[[x] for x in s]) for r, s in layers.items()})
    got = {c.axiom: c.passed for c in verify_ears_axioms(E).checks}
    want = {c.axiom: c.passed for c in verify_axioms(explicit(E)).checks}
    assert got == want


def test_asymmetric_layers_fail_s2():
    R = model("B(1,1)").rootset
    a = R.real[0]
    layers = {r: whole(Z2) for r in R.roots}
    layers[a] = fin(Z2, [0])
    layers[-a] = fin(Z2, [1])
    rep = verify_ears_axioms(EarsDatum(R, Z2, layers))
    assert not rep["S2"].passed


def test_mixed_layers_are_rejected():
    R = model("B(1,1)").rootset
    layers = {r: whole(Z) for r in R.roots}
    layers[R.real[0]] = fin(Z, [0])
    with pytest.raises(MixedLayersError):
        verify_ears_axioms(EarsDatum(R, Z, layers))


def test_ears_root_strings():
    E = uniform("B(1,1)", Z, whole(Z))
    R = E.quotient
    a = next(r for r in R.real if R.pair(r, r) > 0)
    s = E.root_string((a, (0,)), (ZERO, (5,)))
    assert (s.p, s.q) == (1, 1)


# -- tameness and radical generation ---------------------------------------------------------


def test_tameness():
    assert is_tame_ears(EarsDatum.from_rootset(model("B(1,1)").rootset))
    assert is_tame_ears(uniform("B(1,1)", Z, whole(Z)))
    R = model("B(1,1)").rootset
    layers = {r: fin(Z4, [0]) for r in R.roots}
    layers[ZERO] = whole(Z4)  # isotropic roots that are not differences of roots
    E = EarsDatum(R, Z4, layers)
    assert verify_ears_axioms(E).passed and not is_tame_ears(E)
    with pytest.raises(StructureError):
        structure_decompose(E)


def brute_generated(E):
    """⟨R⁰⟩ in a finite radical group by closure."""
    g = E.radical
    gens = [tuple(x) for x in E.isotropic_layer.elements()]
    out, todo = {tuple(g.zero())}, [tuple(g.zero())]
    while todo:
        x = todo.pop()
        for s in gens:
            y = tuple(g.add(x, s))
            if y not in out:
                out.add(y)
                todo.append(y)
    return out


@pytest.mark.parametrize("case", [c for c in cases() if c[2].is_finite], ids=lambda c: c[0])
def test_radical_generation_matches_closure(case):
    name, label, g, sub = case
    E = structure_construct(StructureDatum(label, **sub), g)
    gen = brute_generated(E)
    for a in g.elements():
        n = check_radical_generation(E, a)
        want = next((k for k in range(1, 13) if tuple(g.scale(k, a)) in gen), None)
        assert n == want


def test_radical_generation_on_free_radical():
    E = uniform("B(1,1)", Z, cos(Z, [[2]], [[0]]))
    assert check_radical_generation(E, [1]) == 2
    assert check_radical_generation(E, [3], bound=1) is None  # inconclusive, not a refutation


def test_radical_generation_refuses_excluded_types():
    E = EarsDatum.from_rootset(build_pathological("i", 2))
    with pytest.raises(ExcludedTypeError):
        check_radical_generation(E, [1])
    with pytest.raises(ExcludedTypeError):
        check_radical_generation(uniform("BC(1,1)", Z2, whole(Z2)), [1])


# -- construction from S ---------------------------------------------------------------------


def test_super_root_construct_with_trivial_radical():
    R = model("B(1,2)").rootset
    E = super_root_construct(R.form, TRIVIAL, {r: whole(TRIVIAL) for r in R.roots if not r.is_zero()})
    assert set(E.quotient.roots) == set(R.roots)
    assert E.isotropic_layer.equals(whole(TRIVIAL))


def test_super_root_construct_gains_isotropic_layer():
    R = model("B(1,1)").rootset
    E = super_root_construct(R.form, Z2, {r: whole(Z2) for r in R.roots if not r.is_zero()})
    assert E.isotropic_layer.equals(whole(Z2))
    assert verify_ears_axioms(E).passed and is_tame_ears(E)


def test_super_root_construct_reports_missing_reflection():
    R = model("B(1,1)").rootset
    layers = {r: whole(Z2) for r in R.roots if not r.is_zero()}
    victim = max(R.real, key=R.key)
    layers[victim] = fin(Z2, [0])
    layers[-victim] = fin(Z2, [0])
    with pytest.raises(HypothesisError) as err:
        super_root_construct(R.form, Z2, layers)
    assert err.value.witness


# -- structure theorem ---------------------------------------------------------------------------


def test_structure_parts():
    assert structure_part("B(2,3)") == "i"
    assert structure_part("BC(1,3)") == "ii"
    assert structure_part("C(1,3)") == "iii"
    assert structure_part("C(2,3)") == "iv"
    # C(a,b) and C(b,a) are the same supersystem up to negating the form
    assert structure_part("C(3,2)") == "iv"
    for bad in ("A(2,2)", "BC(1,1)", "C(1,2)", "C(2,1)", "C(2,2)"):
        with pytest.raises(ExcludedTypeError):
            structure_part(bad)


def test_part_one_conditions_on_z4_by_enumeration():
    F, S = fin(Z4, [0], [2]), whole(Z4)
    conds = dict(structure_conditions(StructureDatum(TypeLabel.parse("B(1,1)"), F, S=S), Z4))
    f, s = {0, 2}, {0, 1, 2, 3}
    assert conds["F is a subgroup"] == all((a - b) % 4 in f for a in f for b in f)
    assert conds["S is a p.r.s."] == (0 in s and all((a - 2 * b) % 4 in s for a in s for b in s))
    assert conds["F+S ⊆ S"] == all((a + b) % 4 in s for a in f for b in s)
    assert conds["2S+F ⊆ F"] == all((2 * a + b) % 4 in f for a in s for b in f)
    assert all(conds.values())


def test_part_two_rejects_large_e_over_trivial_f():
    d = StructureDatum(TypeLabel.parse("BC(1,2)"), fin(Z2, [0]), S=whole(Z2), E1=whole(Z2), E2=whole(Z2))
    # F + E₁ = ℤ/2 is not inside F = {0}
    assert not all((a + b) % 2 in {0} for a in {0} for b in {0, 1})
    with pytest.raises(StructureError) as err:
        structure_construct(d, Z2)
    assert "F+E1 ⊆ F" in err.value.conditions


def test_trivial_radical_construction_is_the_model():
    d = StructureDatum(TypeLabel.parse("B(1,2)"), whole(TRIVIAL), S=whole(TRIVIAL))
    E = structure_construct(d, TRIVIAL)
    assert set(E.quotient.roots) == set(model("B(1,2)").rootset.roots)
    assert verify_ears_axioms(E).passed


@pytest.mark.parametrize("case", cases(), ids=lambda c: c[0])
def test_structure_round_trip(case):
    name, label, g, sub = case
    d = StructureDatum(label, **sub)
    E = structure_construct(d, g)
    assert verify_ears_axioms(E).passed
    assert is_tame_ears(E)
    assert is_irreducible(quotient_ears(E))
    assert ears_type(E) == label.canonical()
    back = structure_decompose(E)
    assert back.same_sets(d)


def test_violations_are_named():
    d = StructureDatum(TypeLabel.parse("B(1,1)"), fin(Z4, [0], [1]), S=whole(Z4))
    with pytest.raises(StructureError) as err:
        structure_construct(d, Z4)
    assert "F is a subgroup" in err.value.conditions
    with pytest.raises(StructureError) as err:
        structure_construct(StructureDatum(TypeLabel.parse("B(1,1)"), whole(Z4)), Z4)
    assert "missing subset S" in err.value.conditions


def test_decompose_affine_style_input():
    E = uniform("B(1,1)", Z, whole(Z))
    d = structure_decompose(E)
    assert d.F.equals(whole(Z)) and d.S.equals(whole(Z))


def test_decompose_refuses_excluded_types():
    with pytest.raises(ExcludedTypeError):
        structure_decompose(uniform("C(2,2)", TRIVIAL, whole(TRIVIAL)))
    with pytest.raises(ExcludedTypeError):
        structure_decompose(uniform("A(1,1)", Z2, whole(Z2)))

