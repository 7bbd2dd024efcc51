"""Catalog models: labels, root systems, realizations, bases and the pathological examples."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rootsuper import intmat
from rootsuper.catalog import (
    TypeLabel,
    build,
    build_lfrs,
    build_lfrs_type,
    build_pathological,
    canonical_lambda,
    desk_labels,
    integral_base_of,
    lambda_orbit,
    length_partition,
    reduced_sub_supersystem,
)
from rootsuper.classify import cartan_type
from rootsuper.lattice import BasisSymbol, LatticeElement, dlt, eps, gam
from rootsuper.rootsys import is_irreducible, is_tame, reflect, verify_axioms, verify_base

ZERO = LatticeElement()
HALF = Fraction(1, 2)
STAR = BasisSymbol("star")


def e(i):
    return LatticeElement.of((1, eps(i)))


def d(i):
    return LatticeElement.of((1, dlt(i)))


def g(i):
    return LatticeElement.of((1, gam(i)))


def naive_orbit(R, seed):
    seen, todo = {seed}, [seed]
    while todo:
        x = todo.pop()
        for a in R.real:
            y = reflect(R.form, a, x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


# closed-form counts of nonzero roots
LFRS_COUNT = {
    "A": lambda n: n * (n - 1),  # Ȧ_T with |T| = n
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "BC": lambda n: 2 * n * n + 2 * n,
}


# -- labels -----------------------------------------------------------------------


def test_label_parsing_and_printing():
    for text in ["B(1,3)", "Adot(0,4)", "Cdot(0,2)", "D(2,1,1/2)", "AB(1,3)", "G(1,2)", "A(2,2)", "BC(2,3)"]:
        lab = TypeLabel.parse(text)
        assert TypeLabel.parse(str(lab)) == lab
    for bad in ["X(1)", "B(0,0)", "Adot(2,2)", "AB(1,2)", "D(2,1,-1)", "D(2,1,0)", "C(1,1)"]:
        with pytest.raises(ValueError):
            TypeLabel.parse(bad)


def test_canonical_sorts_symmetric_families():
    assert TypeLabel.parse("BC(3,1)").canonical() == TypeLabel.parse("BC(1,3)")
    assert TypeLabel.parse("Adot(4,2)").canonical() == TypeLabel.parse("Adot(2,4)")
    assert TypeLabel.parse("B(3,1)").canonical() == TypeLabel.parse("B(3,1)")


def brute_lambda_orbit(lam):
    out, todo = {lam}, [lam]
    while todo:
        x = todo.pop()
        for y in (1 / x, -1 - x):
            if y not in out:
                out.add(y)
                todo.append(y)
    return out


def test_lambda_orbit_examples():
    assert set(lambda_orbit(2)) == {Fraction(2), HALF, Fraction(-3), Fraction(-1, 3), Fraction(-3, 2), Fraction(-2, 3)}
    assert canonical_lambda(2) == -3
    assert set(lambda_orbit(1)) == {Fraction(1), Fraction(-2), -HALF}
    assert canonical_lambda(-HALF) == canonical_lambda(1)


@given(st.fractions(min_value=-20, max_value=20, max_denominator=12).filter(lambda x: x not in (0, -1)))
def test_lambda_orbit_matches_closure(lam):
    orb = set(lambda_orbit(lam))
    assert orb == brute_lambda_orbit(Fraction(lam))
    assert 6 % len(orb) == 0
    c = canonical_lambda(lam)
    assert c in orb and canonical_lambda(c) == c
    assert all(canonical_lambda(x) == c for x in orb)


# -- locally finite root systems -------------------------------------------------------------


def test_small_root_systems():
    B = build_lfrs("B", [1, 2])
    assert set(B.roots) == {ZERO, e(1), -e(1), e(2), -e(2), e(1) + e(2), e(1) - e(2), -e(1) + e(2), -e(1) - e(2)}
    A = build_lfrs("A", [1, 2, 3])
    assert len(A) - 1 == 6 and all(sum(r.coeffs.values()) == 0 for r in A.roots)
    assert set(build_lfrs("C", [1]).roots) == {ZERO, 2 * e(1), -2 * e(1)}


@pytest.mark.parametrize("family", sorted(LFRS_COUNT))
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_root_counts(family, n):
    R = build_lfrs(family, n)
    assert len(R) - 1 == LFRS_COUNT[family](n)
    assert verify_axioms(R).passed


@pytest.mark.parametrize("family,rank,count", [("E", 6, 72), ("E", 7, 126), ("E", 8, 240), ("F", 4, 48), ("G", 2, 12)])
def test_exceptional_root_systems(family, rank, count):
    R = build_lfrs_type(TypeLabel(family, (rank,))).rootset
    assert len(R) - 1 == count
    assert verify_axioms(R).passed
    assert cartan_type(R) == f"{family}{rank}"


def test_length_partition_of_bc2():
    sh, lg, ex = length_partition(build_lfrs("BC", 2))
    assert sh == {e(1), -e(1), e(2), -e(2)}
    assert lg == {s * e(1) + t * e(2) for s in (1, -1) for t in (1, -1)}
    assert ex == {2 * e(1), -2 * e(1), 2 * e(2), -2 * e(2)}
    sh, lg, ex = length_partition(build_lfrs("A", 3))
    assert not lg and not ex
    sh, lg, ex = length_partition(build_lfrs("B", 2))
    assert sh == {e(1), -e(1), e(2), -e(2)} and not ex


# -- supersystem models ---------------------------------------------------------------------


def test_imaginary_models():
    a = build(TypeLabel.parse("Adot(0,2)"))
    star = a.distinguished
    assert star == LatticeElement.of((1, STAR))
    assert set(a.rootset.nonsingular) == {star, -star, star + e(2) - e(1), -(star + e(2) - e(1))}
    c = build(TypeLabel.parse("Cdot(0,2)"))
    assert set(c.rootset.real) == {s * e(1) + t * e(2) for s in (1, -1) for t in (1, -1)} | {
        2 * e(1), -2 * e(1), 2 * e(2), -2 * e(2)}
    for label in ("Adot(0,3)", "Cdot(0,3)", "Adot(2,3)"):
        m = build(TypeLabel.parse(label))
        assert m.rootset.pair(m.distinguished, m.distinguished) == 0


def test_real_models():
    m = build(TypeLabel.parse("D(2,1,1)"))
    assert m.distinguished == HALF * (e(0) + d(0) + g(0))
    assert m.rootset.pair(m.distinguished, m.distinguished) == 0
    assert len(build(TypeLabel.parse("AB(1,3)")).rootset.nonsingular) == 16
    b = build(TypeLabel.parse("B(1,1)"))
    assert len(b.rootset.nonsingular) == 4 and set(naive_orbit(b.rootset, b.distinguished)) == set(b.rootset.nonsingular)


def test_nonsingular_roots_are_the_orbit_of_the_distinguished_root():
    for label in desk_labels(max_size=3, max_ell=3):
        m = build(label)
        R = m.rootset
        orb = naive_orbit(R, m.distinguished)
        assert set(R.nonsingular) == orb | {-x for x in orb}, label


def test_real_and_imaginary_span():
    for label in desk_labels(max_size=3, max_ell=2):
        R = build(label).rootset
        full = intmat.rational_rank([r.vector(R.basis) for r in R.roots])
        real = intmat.rational_rank([r.vector(R.basis) for r in R.real])
        assert (real == full) == (label.family not in ("Adot", "Cdot")), label


def test_models_are_irreducible_and_nondegenerate():
    for label in desk_labels(max_size=2, max_ell=2):
        R = build(label).rootset
        assert is_irreducible(R) and R.is_nondegenerate() and R.isotropic == (ZERO,), label


# -- bases ------------------------------------------------------------------------------------


def test_tabulated_bases():
    assert integral_base_of("BC(1,1)").elements == (e(0), e(0) + d(0))
    dl = integral_base_of(TypeLabel.parse("D(2,1,3/5)")).elements
    assert dl == (e(0), d(0), HALF * (e(0) + d(0) + g(0)))
    c = integral_base_of("C(1,3)").elements
    assert c == (e(0),) + tuple(HALF * e(0) - d(p) for p in (1, 2, 3))


def test_every_model_has_a_verified_base():
    for label in desk_labels(max_size=3, max_ell=3):
        m = build(label)
        rep = verify_base(m.rootset, m.base)
        assert rep.passed, (label, rep)


# -- reduced sub-supersystems and scalar multiples ---------------------------------------------------


def test_reduced_sub_supersystems():
    a11 = build(TypeLabel.parse("A(1,1)"))
    S = reduced_sub_supersystem(a11)
    R = a11.rootset
    assert set(R.nonsingular) <= S
    assert len(S) == len(R.nonsingular) + 3  # one A₁ component and {0}
    bc = build(TypeLabel.parse("BC(2,2)"))
    S = reduced_sub_supersystem(bc)
    assert set(bc.rootset.roots) - S == {2 * e(1), -2 * e(1), 2 * e(2), -2 * e(2)}
    b = build(TypeLabel.parse("B(2,3)"))
    assert reduced_sub_supersystem(b) == frozenset(b.rootset.roots)


def test_uniqueness_on_reduced_sub_supersystems():
    for label in ("A(1,1)", "BC(1,2)", "C(2,2)", "C(1,3)"):
        m = build(TypeLabel.parse(label))
        S = reduced_sub_supersystem(m)
        R = m.rootset
        for dl in R.nonsingular:
            for a in S:
                if R.pair(a, a) != 0 and R.pair(dl, a) != 0:
                    assert ((dl + a) in S) != ((dl - a) in S)


# -- pathological examples ---------------------------------------------------------------------------


@pytest.mark.parametrize("which,ell", [("i", 2), ("i", 3), ("ii", None)])
def test_pathological_examples(which, ell):
    R = build_pathological(which, ell)
    assert verify_axioms(R).passed
    assert R.isotropic == (ZERO,)
    assert not R.is_nondegenerate() and len(R.radical_basis) >= 1
    assert is_tame(R)


def test_pathological_needs_ell_at_least_two():
    with pytest.raises(ValueError):
        build_pathological("i", 1)
