"""Named-basis lattice elements, finitely generated abelian groups and their subsets.

The subsets are the building blocks of extended affine data: a layer of an
extended affine root supersystem is a subset of the radical group, and the
structure conditions are containments between such subsets.  Infinite subsets
are unions of cosets of a finite-index subgroup, so every predicate can be
decided inside a finite quotient group.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from . import intmat

__all__ = [
    "KINDS",
    "BasisSymbol",
    "LatticeElement",
    "RadicalGroup",
    "RadicalSubset",
    "FiniteSet",
    "CosetUnion",
    "subgroup_generated",
    "is_prs",
    "is_srs",
    "is_subgroup",
    "subset_sum",
    "contains",
    "common_modulus",
    "class_representatives",
]

KINDS = ("epsilon", "delta", "gamma", "star", "radical-generator")
_PREFIX = {"epsilon": "e", "delta": "d", "gamma": "g", "star": "a*", "radical-generator": "s"}
_SYMBOL_RE = re.compile(r"^(e|d|g|s)(-?\d+|[A-Za-z_]\w*)$")


@dataclass(frozen=True)
class BasisSymbol:
    """A named basis vector such as ε_3, δ_0, γ_0, α* or a radical generator σ."""

    kind: str
    index: Union[int, str, None] = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown basis kind {self.kind!r}")

    def sort_key(self) -> tuple:
        idx = self.index
        if idx is None:
            key: tuple = (0, 0, "")
        elif isinstance(idx, int):
            key = (1, idx, "")
        else:
            key = (2, 0, str(idx))
        return (KINDS.index(self.kind), key)

    def __lt__(self, other: "BasisSymbol") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        prefix = _PREFIX[self.kind]
        if self.kind == "star":
            return prefix if self.index is None else f"{prefix}{self.index}"
        return f"{prefix}{'' if self.index is None else self.index}"

    @classmethod
    def parse(cls, text: str) -> "BasisSymbol":
        text = text.strip()
        if text.startswith("a*"):
            rest = text[2:]
            return cls("star", int(rest) if rest.lstrip("-").isdigit() else (rest or None))
        m = _SYMBOL_RE.match(text)
        if not m:
            raise ValueError(f"cannot parse basis symbol {text!r}")
        kind = {"e": "epsilon", "d": "delta", "g": "gamma", "s": "radical-generator"}[m.group(1)]
        raw = m.group(2)
        return cls(kind, int(raw) if raw.lstrip("-").isdigit() else raw)


def eps(i: Union[int, str]) -> BasisSymbol:
    return BasisSymbol("epsilon", i)


def dlt(i: Union[int, str]) -> BasisSymbol:
    return BasisSymbol("delta", i)


def gam(i: Union[int, str]) -> BasisSymbol:
    return BasisSymbol("gamma", i)


STAR = BasisSymbol("star")


class LatticeElement:
    """A finitely supported coefficient vector over named basis symbols.

    Roots are integral in their own lattice, but catalog realizations use rational
    coordinates such as ½ε₀, so coefficients are stored as :class:`Fraction`.
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, coeffs: Union[Mapping[BasisSymbol, object], Iterable[Tuple[BasisSymbol, object]], None] = None):
        acc: Dict[BasisSymbol, Fraction] = {}
        if coeffs is not None:
            pairs = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for sym, c in pairs:
                acc[sym] = acc.get(sym, Fraction(0)) + Fraction(c)
        items = tuple(sorted(((s, c) for s, c in acc.items() if c != 0), key=lambda sc: sc[0].sort_key()))
        self._items = items
        self._hash = hash(items)

    @classmethod
    def of(cls, *terms: Tuple[object, BasisSymbol]) -> "LatticeElement":
        """Build from ``(coefficient, symbol)`` pairs, e.g. ``of((1, eps(1)), (-1, eps(2)))``."""
        return cls((s, c) for c, s in terms)

    @property
    def coeffs(self) -> Dict[BasisSymbol, Fraction]:
        return dict(self._items)

    def support(self) -> Tuple[BasisSymbol, ...]:
        return tuple(s for s, _ in self._items)

    def coeff(self, sym: BasisSymbol) -> Fraction:
        for s, c in self._items:
            if s == sym:
                return c
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._items

    def __add__(self, other: "LatticeElement") -> "LatticeElement":
        return LatticeElement(list(self._items) + list(other._items))

    def __neg__(self) -> "LatticeElement":
        return LatticeElement((s, -c) for s, c in self._items)

    def __sub__(self, other: "LatticeElement") -> "LatticeElement":
        return self + (-other)

    def __mul__(self, k: object) -> "LatticeElement":
        k = Fraction(k)
        return LatticeElement((s, k * c) for s, c in self._items)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LatticeElement) and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def vector(self, basis: Sequence[BasisSymbol]) -> Tuple[Fraction, ...]:
        pos = {s: i for i, s in enumerate(basis)}
        out = [Fraction(0)] * len(basis)
        for s, c in self._items:
            if s not in pos:
                raise KeyError(f"basis symbol {s} is not in the basis")
            out[pos[s]] = c
        return tuple(out)

    @classmethod
    def from_vector(cls, basis: Sequence[BasisSymbol], vec: Sequence[object]) -> "LatticeElement":
        return cls(zip(basis, vec))

    def __repr__(self) -> str:
        return f"LatticeElement({self})"

    def __str__(self) -> str:
        if not self._items:
            return "0"
        parts = []
        for s, c in self._items:
            if c == 1:
                parts.append(f"+{s}")
            elif c == -1:
                parts.append(f"-{s}")
            else:
                sign = "+" if c > 0 else "-"
                parts.append(f"{sign}{abs(c)}{s}")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


# ---------------------------------------------------------------------------
# Finitely generated abelian groups

Element = Tuple[int, ...]


@dataclass(frozen=True)
class RadicalGroup:
    """ℤ^free_rank ⊕ ℤ/m_1 ⊕ … ⊕ ℤ/m_k with m_1 | m_2 | … (each m_i ≥ 2).

    Elements are integer tuples: free coordinates first, then torsion residues
    normalized into ``[0, m_i)``.
    """

    free_rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "torsion", tuple(int(m) for m in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for m in self.torsion:
            if m < 2:
                raise ValueError("torsion invariant factors must be at least 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion invariant factors must form a divisibility chain")

    @property
    def dim(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> Optional[int]:
        if not self.is_finite:
            return None
        out = 1
        for m in self.torsion:
            out *= m
        return out

    @property
    def exponent(self) -> int:
        """Exponent of the torsion part (1 for a torsion-free group)."""
        return self.torsion[-1] if self.torsion else 1

    def zero(self) -> Element:
        return (0,) * self.dim

    def normalize(self, v: Sequence[int]) -> Element:
        if len(v) != self.dim:
            raise ValueError(f"element {tuple(v)} has wrong length for {self}")
        r = self.free_rank
        return tuple(int(x) for x in v[:r]) + tuple(int(x) % m for x, m in zip(v[r:], self.torsion))

    def element(self, free: Sequence[int] = (), torsion: Sequence[int] = ()) -> Element:
        free = list(free) + [0] * (self.free_rank - len(free))
        torsion = list(torsion) + [0] * (len(self.torsion) - len(torsion))
        return self.normalize(free + torsion)

    def add(self, a: Element, b: Element) -> Element:
        return self.normalize([x + y for x, y in zip(a, b)])

    def neg(self, a: Element) -> Element:
        return self.normalize([-x for x in a])

    def sub(self, a: Element, b: Element) -> Element:
        return self.normalize([x - y for x, y in zip(a, b)])

    def scale(self, k: int, a: Element) -> Element:
        return self.normalize([k * x for x in a])

    def relation_rows(self) -> List[List[int]]:
        rows = []
        for i, m in enumerate(self.torsion):
            row = [0] * self.dim
            row[self.free_rank + i] = m
            rows.append(row)
        return rows

    def elements(self) -> List[Element]:
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite group")
        return [tuple(t) for t in itertools.product(*(range(m) for m in self.torsion))]

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{m}" for m in self.torsion]
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Finite quotient spaces used to decide coset predicates


@dataclass(frozen=True)
class _ClassSpace:
    """The finite group ``A / m·A`` (or ``A`` itself when ``A`` is finite)."""

    group: RadicalGroup
    modulus: int

    @cached_property
    def sizes(self) -> Tuple[int, ...]:
        g = self.group
        if g.is_finite:
            return g.torsion
        return (self.modulus,) * g.free_rank + tuple(gcd(self.modulus, m) for m in g.torsion)

    @property
    def exact(self) -> bool:
        """True when classes are single elements (the group is finite)."""
        return self.group.is_finite

    def reduce(self, v: Sequence[int]) -> Element:
        return tuple(int(x) % s for x, s in zip(v, self.sizes))

    def lattice_rows(self) -> List[List[int]]:
        n = self.group.dim
        return [[s if i == j else 0 for j in range(n)] for i, s in enumerate(self.sizes)]

    def all_classes(self) -> List[Element]:
        return [tuple(t) for t in itertools.product(*(range(s) for s in self.sizes))]


def _space_for(group: RadicalGroup, modulus: int) -> _ClassSpace:
    if group.is_finite:
        return _ClassSpace(group, group.exponent)
    return _ClassSpace(group, modulus)


# ---------------------------------------------------------------------------
# Subsets


class RadicalSubset:
    """A subset of a :class:`RadicalGroup`: a :class:`FiniteSet` or a :class:`CosetUnion`."""

    group: RadicalGroup

    # -- construction helpers -------------------------------------------------
    @staticmethod
    def finite(group: RadicalGroup, elements: Iterable[Sequence[int]]) -> "FiniteSet":
        return FiniteSet(group, frozenset(group.normalize(e) for e in elements))

    @staticmethod
    def cosets(group: RadicalGroup, generators: Iterable[Sequence[int]], reps: Iterable[Sequence[int]]) -> "RadicalSubset":
        """The union of the cosets ``r + H`` with ``H`` generated by ``generators``.

        ``H`` must have finite index; otherwise a ``ValueError`` is raised.
        """
        rows = [list(map(int, g)) for g in generators] + group.relation_rows()
        lat = intmat.hnf(rows, group.dim) if rows else []
        if len(lat) != group.dim:
            raise ValueError("the given subgroup does not have finite index")
        return CosetUnion._canonical(group, lat, [tuple(map(int, r)) for r in reps])

    @staticmethod
    def whole(group: RadicalGroup) -> "RadicalSubset":
        unit = [[int(i == j) for j in range(group.dim)] for i in range(group.dim)]
        return RadicalSubset.cosets(group, unit, [group.zero()])

    @staticmethod
    def zero(group: RadicalGroup) -> "FiniteSet":
        return FiniteSet(group, frozenset([group.zero()]))

    @staticmethod
    def multiples(group: RadicalGroup, k: int) -> "RadicalSubset":
        """The subgroup ``k·A``."""
        return scaled(RadicalSubset.whole(group), k)

    # -- interface --------------------------------------------------------------
    def contains_element(self, x: Sequence[int]) -> bool:  # pragma: no cover - abstract
        raise NotImplementedError

    def __contains__(self, x: Sequence[int]) -> bool:
        return self.contains_element(x)

    def is_empty(self) -> bool:  # pragma: no cover - abstract
        raise NotImplementedError

    def is_finite_set(self) -> bool:
        """True when the subset has finitely many elements."""
        return isinstance(self, FiniteSet) or self.group.is_finite or self.is_empty()

    def elements(self) -> List[Element]:  # pragma: no cover - abstract
        raise NotImplementedError

    def to_finite(self) -> "FiniteSet":
        if not self.is_finite_set():
            raise ValueError("subset is infinite")
        return FiniteSet(self.group, frozenset(self.elements()))

    def equals(self, other: "RadicalSubset") -> bool:
        return contains(self, other) and contains(other, self)

    def exponent(self) -> int:  # pragma: no cover - abstract
        raise NotImplementedError

    def describe(self) -> str:  # pragma: no cover - abstract
        raise NotImplementedError


@dataclass(frozen=True)
class FiniteSet(RadicalSubset):
    group: RadicalGroup
    items: FrozenSet[Element] = field(default_factory=frozenset)

    def contains_element(self, x: Sequence[int]) -> bool:
        return self.group.normalize(x) in self.items

    def is_empty(self) -> bool:
        return not self.items

    def elements(self) -> List[Element]:
        return sorted(self.items)

    def exponent(self) -> int:
        return 1

    def describe(self) -> str:
        return "{" + ", ".join(str(e) for e in self.elements()) + "}"


@dataclass(frozen=True)
class CosetUnion(RadicalSubset):
    """``⋃ (r + H)`` over a finite-index subgroup ``H``.

    ``lattice`` is the Hermite basis of the preimage of ``H`` in ``ℤ^dim`` (it
    always contains the torsion relations); ``reps`` are the canonical reduced
    representatives.  Construction goes through :meth:`_canonical`, which also
    replaces ``H`` by the full stabilizer of the set so that equal sets have equal
    representations.
    """

    group: RadicalGroup
    lattice: Tuple[Tuple[int, ...], ...]
    reps: Tuple[Element, ...]

    @staticmethod
    def _canonical(group: RadicalGroup, lattice: Sequence[Sequence[int]], reps: Iterable[Sequence[int]]) -> RadicalSubset:
        lattice = tuple(tuple(r) for r in lattice)
        reduced = sorted({intmat.reduce_mod_hnf(r, lattice) for r in reps})
        if not reduced:
            return FiniteSet(group, frozenset())
        raw = CosetUnion(group, lattice, tuple(reduced))
        space = _space_for(group, raw.exponent())
        classes = raw._classes(space)
        return _from_classes(space, classes)

    def exponent(self) -> int:
        return intmat.triangular_exponent(self.lattice)

    def contains_element(self, x: Sequence[int]) -> bool:
        return intmat.reduce_mod_hnf(self.group.normalize(x), self.lattice) in self._rep_set

    @cached_property
    def _rep_set(self) -> FrozenSet[Element]:
        return frozenset(self.reps)

    def is_empty(self) -> bool:
        return not self.reps

    def index(self) -> int:
        det = 1
        for i, row in enumerate(self.lattice):
            det *= row[i]
        tors = 1
        for m in self.group.torsion:
            tors *= m
        return det // tors

    def _subgroup_classes(self, space: _ClassSpace) -> List[Element]:
        """Elements of ``H`` modulo the space lattice (requires ``H ⊇ space``)."""
        gens = [space.reduce(r) for r in self.lattice]
        seen = {space.reduce([0] * self.group.dim)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = space.reduce([a + b for a, b in zip(x, g)])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def _classes(self, space: _ClassSpace) -> FrozenSet[Element]:
        hs = self._subgroup_classes(space)
        return frozenset(space.reduce([a + b for a, b in zip(r, h)]) for r in self.reps for h in hs)

    def elements(self) -> List[Element]:
        if not self.group.is_finite:
            raise ValueError("subset is infinite")
        space = _space_for(self.group, 1)
        return sorted(self._classes(space))

    def subgroup_generators(self) -> List[Element]:
        """Generators of ``H`` as group elements (zero rows dropped)."""
        out = []
        for row in self.lattice:
            e = self.group.normalize(row)
            if any(e):
                out.append(e)
        return out

    def describe(self) -> str:
        gens = ", ".join(str(g) for g in self.subgroup_generators()) or "0"
        return "{" + ", ".join(str(r) for r in self.reps) + "} + <" + gens + ">"


def _from_classes(space: _ClassSpace, classes: Iterable[Element]) -> RadicalSubset:
    """Canonical subset from a set of classes of ``space``."""
    group = space.group
    classes = frozenset(space.reduce(c) for c in classes)
    if not classes:
        return FiniteSet(group, frozenset())
    base = min(classes)
    stab = []
    for c in classes:
        s = space.reduce([a - b for a, b in zip(c, base)])
        if all(space.reduce([a + b for a, b in zip(x, s)]) in classes for x in classes):
            stab.append(s)
    rows = space.lattice_rows() + [list(s) for s in stab] + group.relation_rows()
    lat = tuple(tuple(r) for r in intmat.hnf(rows, group.dim))
    reps = sorted({intmat.reduce_mod_hnf(c, lat) for c in classes})
    return CosetUnion(group, lat, tuple(reps))


def _check_same(x: RadicalSubset, y: RadicalSubset) -> None:
    if x.group != y.group:
        raise ValueError(f"ambient group mismatch: {x.group} vs {y.group}")


def common_modulus(subsets: Iterable[RadicalSubset]) -> int:
    """An integer ``m`` such that every coset union in ``subsets`` is a union of ``m·A``-cosets."""
    m = 1
    for x in subsets:
        if isinstance(x, CosetUnion):
            m = intmat.lcm(m, x.exponent())
    return m


def class_representatives(x: RadicalSubset, modulus: int) -> List[Element]:
    """Representatives of the classes of ``x`` modulo ``modulus·A``.

    For a finite set (or a finite group) these are exactly the elements.
    """
    if isinstance(x, FiniteSet):
        return x.elements()
    if x.group.is_finite:
        return x.elements()
    space = _space_for(x.group, modulus)
    return sorted(x._classes(space))


def _classes_pair(x: RadicalSubset, y: RadicalSubset) -> Tuple[_ClassSpace, FrozenSet[Element], FrozenSet[Element]]:
    space = _space_for(x.group, common_modulus([x, y]))
    cx = frozenset(space.reduce(e) for e in class_representatives(x, space.modulus))
    cy = frozenset(space.reduce(e) for e in class_representatives(y, space.modulus))
    return space, cx, cy


def _both_coset_mode(x: RadicalSubset, y: RadicalSubset) -> bool:
    return x.group.is_finite or (isinstance(x, CosetUnion) and isinstance(y, CosetUnion))


def negated(x: RadicalSubset) -> RadicalSubset:
    g = x.group
    if isinstance(x, FiniteSet):
        return FiniteSet(g, frozenset(g.neg(e) for e in x.items))
    return CosetUnion._canonical(g, x.lattice, [g.neg(r) for r in x.reps])


def translated(x: RadicalSubset, a: Sequence[int]) -> RadicalSubset:
    g = x.group
    if isinstance(x, FiniteSet):
        return FiniteSet(g, frozenset(g.add(e, a) for e in x.items))
    return CosetUnion._canonical(g, x.lattice, [g.add(r, a) for r in x.reps])


def scaled(x: RadicalSubset, k: int) -> RadicalSubset:
    """``k·X = {k·x : x ∈ X}``."""
    g = x.group
    if isinstance(x, FiniteSet):
        return FiniteSet(g, frozenset(g.scale(k, e) for e in x.items))
    if x.is_empty():
        return x
    rows = [[k * a for a in r] for r in x.lattice] + g.relation_rows()
    lat = intmat.hnf(rows, g.dim)
    if len(lat) != g.dim:
        # k·H has infinite index only when k = 0 on a free part.
        return FiniteSet(g, frozenset(g.scale(k, r) for r in x.reps)) if k == 0 else _unreachable()
    return CosetUnion._canonical(g, lat, [g.scale(k, r) for r in x.reps])


def _unreachable() -> RadicalSubset:  # pragma: no cover - defensive
    raise AssertionError("scaling produced an infinite-index subgroup")


def subset_sum(x: RadicalSubset, y: RadicalSubset) -> RadicalSubset:
    """The exact Minkowski sum ``X + Y``."""
    _check_same(x, y)
    g = x.group
    if x.is_empty() or y.is_empty():
        return FiniteSet(g, frozenset())
    if isinstance(x, FiniteSet) and isinstance(y, FiniteSet):
        return FiniteSet(g, frozenset(g.add(a, b) for a in x.items for b in y.items))
    if g.is_finite:
        return FiniteSet(g, frozenset(g.add(a, b) for a in x.elements() for b in y.elements()))
    if isinstance(x, FiniteSet):
        x, y = y, x
    if isinstance(y, FiniteSet):
        assert isinstance(x, CosetUnion)
        return CosetUnion._canonical(g, x.lattice, [g.add(r, b) for r in x.reps for b in y.items])
    space, cx, cy = _classes_pair(x, y)
    return _from_classes(space, (space.reduce([a + b for a, b in zip(p, q)]) for p in cx for q in cy))


def difference(x: RadicalSubset, y: RadicalSubset) -> RadicalSubset:
    """``X − Y``."""
    return subset_sum(x, negated(y))


def union(x: RadicalSubset, y: RadicalSubset) -> RadicalSubset:
    _check_same(x, y)
    g = x.group
    if x.is_empty():
        return y
    if y.is_empty():
        return x
    if isinstance(x, FiniteSet) and isinstance(y, FiniteSet):
        return FiniteSet(g, x.items | y.items)
    if g.is_finite:
        return FiniteSet(g, frozenset(x.elements()) | frozenset(y.elements()))
    if isinstance(x, CosetUnion) and isinstance(y, CosetUnion):
        space, cx, cy = _classes_pair(x, y)
        return _from_classes(space, cx | cy)
    fin, cos = (x, y) if isinstance(x, FiniteSet) else (y, x)
    if contains(cos, fin):
        return cos
    raise ValueError("union of an infinite coset union with extra finite points is not representable")


def contains(x: RadicalSubset, y: RadicalSubset) -> bool:
    """Decide ``Y ⊆ X`` exactly."""
    _check_same(x, y)
    if y.is_empty():
        return True
    if isinstance(y, FiniteSet):
        return all(x.contains_element(e) for e in y.items)
    if y.group.is_finite:
        return all(x.contains_element(e) for e in y.elements())
    if isinstance(x, FiniteSet):
        return False  # y is an infinite coset union
    space, cx, cy = _classes_pair(x, y)
    return cy <= cx


def subgroup_generated(x: RadicalSubset) -> RadicalSubset:
    """The subgroup generated by a nonempty subset.

    Finite-index results come back as a coset union with the single
    representative 0; finite subgroups (e.g. ``{0}`` inside ℤ) as finite sets.
    """
    g = x.group
    if x.is_empty():
        raise ValueError("the subset must be nonempty")
    if isinstance(x, CosetUnion):
        rows = [list(r) for r in x.lattice] + [list(r) for r in x.reps]
    else:
        rows = [list(e) for e in x.items]
    rows += g.relation_rows()
    lat = intmat.hnf(rows, g.dim) if rows else []
    if g.dim and len(lat) == g.dim:
        return CosetUnion._canonical(g, lat, [g.zero()])
    if isinstance(x, FiniteSet) and all(e[: g.free_rank] == (0,) * g.free_rank for e in x.items):
        seen = {g.zero()}
        frontier = [g.zero()]
        gens = sorted(x.items)
        while frontier:
            nxt = []
            for a in frontier:
                for b in gens:
                    for c in (g.add(a, b), g.sub(a, b)):
                        if c not in seen:
                            seen.add(c)
                            nxt.append(c)
            frontier = nxt
        return FiniteSet(g, frozenset(seen))
    if g.dim == 0:
        return FiniteSet(g, frozenset([()]))
    raise ValueError("the generated subgroup is infinite of infinite index; not representable")


def is_subgroup(x: RadicalSubset) -> bool:
    """Nonempty and closed under subtraction."""
    return not x.is_empty() and contains(x, difference(x, x))


def is_srs(x: RadicalSubset) -> bool:
    """Symmetric reflection subspace: nonempty with ``X − 2X ⊆ X``."""
    if x.is_empty():
        return False
    ok = contains(x, difference(x, scaled(x, 2)))
    if ok and not x.equals(negated(x)):  # pragma: no cover - mathematical guarantee
        raise AssertionError("a symmetric reflection subspace must satisfy X = -X")
    return ok


def is_prs(x: RadicalSubset) -> bool:
    """Pointed reflection subspace: ``0 ∈ X`` and ``X − 2X ⊆ X``."""
    return not x.is_empty() and x.contains_element(x.group.zero()) and is_srs(x)


def iter_pairs(xs: Sequence[Element]) -> Iterator[Tuple[Element, Element]]:
    return itertools.product(xs, xs)


def class_space(group: RadicalGroup, modulus: int) -> Tuple[int, ...]:
    """Cyclic orders of ``A/modulus·A`` (or of ``A`` itself when ``A`` is finite)."""
    return _space_for(group, modulus).sizes
