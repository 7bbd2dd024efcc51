"""Classification: Dynkin recognition, type labels, isomorphism witnesses.

Inputs are disguised by a random unimodular change of coordinates and a random
rescaling of the form; the returned maps are then checked root by root.
"""

import random
from fractions import Fraction

import pytest

from rootsuper.catalog import TypeLabel, build, build_lfrs, desk_labels
from rootsuper.classify import (
    ClassificationError,
    cartan_matrix,
    cartan_type,
    classify_lfrss,
    is_isomorphic,
    is_real_type,
    real_components,
    simple_system,
)
from rootsuper.form import GramForm
from rootsuper.lattice import BasisSymbol, LatticeElement
from rootsuper.rootsys import RootSet, direct_sum


def random_unimodular(n, rnd, steps=12):
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rnd.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            U[0] = [-x for x in U[0]]
            continue
        k = rnd.choice([-1, 1])
        U[i] = [a + k * b for a, b in zip(U[i], U[j])]
    if rnd.random() < 0.5:
        U[0] = [-x for x in U[0]]
    return U


def inverse(U):
    n = len(U)
    a = [[Fraction(x) for x in U[i]] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next(i for i in range(c, n) if a[i][c])
        a[c], a[p] = a[p], a[c]
        a[c] = [x / a[c][c] for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [r[n:] for r in a]


def disguise(R, rnd, scalar):
    """New coordinates x' = x·U over fresh symbols, with the form scaled by ``scalar``."""
    n = len(R.basis)
    U = random_unimodular(n, rnd)
    V = inverse(U)
    G = R.form.gram
    # x = x'·V, so G' = scalar·V·G·Vᵀ gives x'·G'·y'ᵀ = scalar·x·G·yᵀ
    Gp = [[scalar * sum(V[i][k] * G[k][l] * V[j][l] for k in range(n) for l in range(n)) for j in range(n)]
          for i in range(n)]
    syms = tuple(BasisSymbol("radical-generator", 100 + i) for i in range(n))
    roots = []
    for r in R.roots:
        v = r.vector(R.basis)
        roots.append(LatticeElement.from_vector(syms, [sum(v[k] * U[k][j] for k in range(n)) for j in range(n)]))
    return RootSet(GramForm(syms, tuple(map(tuple, Gp))), roots)


def assert_witness(res, R):
    """The returned map carries the model's roots onto R and scales the form by ``res.scalar``."""
    M = res.model.rootset
    image = {res.map_element(x) for x in M.roots}
    assert image == set(R.roots)
    for a in M.roots[::5]:
        for b in M.roots[::7]:
            assert R.pair(res.map_element(a), res.map_element(b)) == res.scalar * M.pair(a, b)


# -- Dynkin recognition --------------------------------------------------------------


@pytest.mark.parametrize("family,n,name", [("B", 3, "B3"), ("BC", 2, "BC2"), ("A", 4, "A3"), ("C", 3, "C3"),
                                           ("D", 4, "D4"), ("B", 2, "B2"), ("C", 2, "B2"), ("D", 3, "A3"), ("B", 1, "A1")])
def test_cartan_type_of_classical_systems(family, n, name):
    assert cartan_type(build_lfrs(family, n)) == name


def test_cartan_matrix_of_b2():
    R = build_lfrs("B", 2)
    simple = simple_system(R, R.real)
    A = cartan_matrix(R, simple)
    assert all(A[i][i] == 2 for i in range(2))
    assert sorted([A[0][1], A[1][0]]) == [-2, -1]


def test_cartan_type_of_exceptional_real_parts():
    R = build(TypeLabel.parse("G(1,2)")).rootset
    names = sorted(cartan_type(R, c) for c in real_components(R))
    assert names == ["BC1", "G2"]
    R = build(TypeLabel.parse("AB(1,3)")).rootset
    assert sorted(cartan_type(R, c) for c in real_components(R)) == ["A1", "B3"]


def test_non_root_system_is_rejected():
    R = build_lfrs("B", 2)
    partial = [r for r in R.real if r.coeffs != {}][:-1]
    with pytest.raises(ClassificationError):
        cartan_type(R, partial)


# -- labels -----------------------------------------------------------------------------


def test_classify_round_trip_on_catalog():
    for label in desk_labels(max_size=3, max_ell=3):
        R = build(label).rootset
        res = classify_lfrss(R)
        assert res.label == label.canonical()
        if label == label.canonical():
            assert res.scalar == 1
        assert_witness(res, R)


def test_real_and_imaginary_types():
    assert is_real_type(build(TypeLabel.parse("B(2,3)")).rootset)
    assert not is_real_type(build(TypeLabel.parse("Adot(0,3)")).rootset)


def test_classify_c13():
    assert classify_lfrss(build(TypeLabel.parse("C(1,3)")).rootset).label == TypeLabel.parse("C(1,3)")


def test_lambda_orbit_classifies_identically():
    a = classify_lfrss(build(TypeLabel.parse("D(2,1,2)")).rootset).label
    b = classify_lfrss(build(TypeLabel.parse("D(2,1,1/2)")).rootset).label
    assert a == b == TypeLabel("D", (2, 1), Fraction(-3))


def test_b_and_bc_are_distinguished():
    a = classify_lfrss(build(TypeLabel.parse("B(2,3)")).rootset).label
    b = classify_lfrss(build(TypeLabel.parse("BC(2,3)")).rootset).label
    assert a != b and a.family == "B" and b.family == "BC"


@pytest.mark.parametrize("seed", range(12))
def test_disguised_inputs_classify(seed):
    rnd = random.Random(seed)
    labels = desk_labels(max_size=2, max_ell=2)
    label = rnd.choice(labels)
    R = build(label).rootset
    scalar = Fraction(rnd.choice([1, 2, 3, -1, -2]), rnd.choice([1, 2, 5]))
    Rp = disguise(R, rnd, scalar)
    res = classify_lfrss(Rp)
    assert res.label == label.canonical()
    assert_witness(res, Rp)
    iso = is_isomorphic(R, Rp)
    assert iso is not None and iso.scalar == scalar
    for x in R.roots[::2]:
        for y in R.roots[::5]:
            assert Rp.pair(iso(x), iso(y)) == scalar * R.pair(x, y)


def test_rejects_non_supersystems():
    with pytest.raises(ClassificationError):
        classify_lfrss(direct_sum(build_lfrs("A", [1, 2]), build_lfrs("A", [3, 4])))


# -- isomorphism -----------------------------------------------------------------------------


def test_isomorphism_examples():
    R = build(TypeLabel.parse("B(1,2)")).rootset
    iso = is_isomorphic(R, R)
    assert iso.scalar == 1 and all(iso(x) == x for x in R.roots)
    doubled = RootSet(R.form.scaled(2), R.roots)
    assert is_isomorphic(R, doubled).scalar == 2
    assert is_isomorphic(build(TypeLabel.parse("A(1,1)")).rootset, build(TypeLabel.parse("BC(1,1)")).rootset) is None


def test_distinct_labels_are_not_isomorphic():
    models = {}
    for label in desk_labels(max_size=2, max_ell=2):
        models.setdefault(label.canonical(), build(label).rootset)
    keys = sorted(models, key=str)
    for i, a in enumerate(keys):
        for b in keys[i + 1:]:
            assert is_isomorphic(models[a], models[b]) is None, (a, b)
