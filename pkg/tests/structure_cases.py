"""Desk-scale structure-theorem instances shared by the test modules.

Each case is ``(name, label, radical, subsets)``; the subsets satisfy every
condition of the relevant part, so the construction must succeed.
"""

from rootsuper.catalog import TypeLabel
from rootsuper.lattice import RadicalGroup, RadicalSubset

TRIVIAL = RadicalGroup(0, ())
Z = RadicalGroup(1, ())
Z2 = RadicalGroup(0, (2,))
Z4 = RadicalGroup(0, (4,))
Z2Z2 = RadicalGroup(0, (2, 2))


def fin(g, *elems):
    return RadicalSubset.finite(g, [list(e) for e in elems])


def cos(g, gens, reps):
    return RadicalSubset.cosets(g, gens, reps)


def whole(g):
    return RadicalSubset.whole(g)


def cases():
    """Instances of parts (i)–(iv) over {0}, ℤ/2, ℤ/4, ℤ/2⊕ℤ/2 and ℤ."""
    lab = TypeLabel.parse
    even = cos(Z, [[2]], [[0]])
    odd = cos(Z, [[2]], [[1]])
    return [
        ("i/B(1,1)/Z4", lab("B(1,1)"), Z4, dict(F=fin(Z4, [0], [2]), S=whole(Z4))),
        ("i/B(1,2)/0", lab("B(1,2)"), TRIVIAL, dict(F=whole(TRIVIAL), S=whole(TRIVIAL))),
        ("i/B(2,1)/Z", lab("B(2,1)"), Z, dict(F=even, S=whole(Z))),
        ("i/B(1,3)/Z2Z2", lab("B(1,3)"), Z2Z2, dict(F=fin(Z2Z2, [0, 0]), S=whole(Z2Z2))),
        ("i/D(2,1,2)/Z2", lab("D(2,1,2)"), Z2, dict(F=whole(Z2), S=whole(Z2))),
        ("i/D(2,3)/Z", lab("D(2,3)"), Z, dict(F=whole(Z), S=whole(Z))),
        ("i/G(1,2)/Z", lab("G(1,2)"), Z, dict(F=whole(Z), S=whole(Z))),
        ("i/AB(1,3)/Z2", lab("AB(1,3)"), Z2, dict(F=whole(Z2), S=whole(Z2))),
        ("i/Adot(2,3)/Z2Z2", lab("Adot(2,3)"), Z2Z2, dict(F=whole(Z2Z2), S=whole(Z2Z2))),
        ("i/Cdot(0,2)/Z4", lab("Cdot(0,2)"), Z4, dict(F=whole(Z4), S=whole(Z4))),
        ("ii/BC(1,2)/Z2", lab("BC(1,2)"), Z2,
         dict(F=fin(Z2, [0]), S=whole(Z2), E1=fin(Z2, [0]), E2=fin(Z2, [0]))),
        ("ii/BC(2,2)/Z", lab("BC(2,2)"), Z, dict(F=even, S=whole(Z), E1=even, E2=even)),
        ("iii/C(1,3)/Z", lab("C(1,3)"), Z, dict(F=whole(Z), S=whole(Z), L2=odd)),
        ("iii/C(1,3)/Z4", lab("C(1,3)"), Z4, dict(F=whole(Z4), S=whole(Z4), L2=fin(Z4, [1], [3]))),
        ("iv/C(2,3)/Z2Z2", lab("C(2,3)"), Z2Z2,
         dict(F=whole(Z2Z2), L1=fin(Z2Z2, [0, 0], [1, 0]), L2=fin(Z2Z2, [0, 1], [1, 1]))),
        ("iv/C(3,3)/Z4", lab("C(3,3)"), Z4, dict(F=whole(Z4), L1=fin(Z4, [0], [2]), L2=fin(Z4, [1], [3]))),
        ("iv/C(2,3)/Z", lab("C(2,3)"), Z, dict(F=whole(Z), L1=even, L2=odd)),
    ]
