"""Concrete realizations of the classified locally finite root (super)systems.

Index sets are finite: ``T = {1, …, |T|}`` and ``T' = {1, …, |T'|}``, with the
distinguished indices ``t₀ = p₀ = 1``.  Rank-one summands sit on the index-0
symbols ``ε₀, δ₀, γ₀``.  Each realization fixes a concrete diagonal (or, for
the imaginary types, the prescribed non-diagonal) Gram matrix normalized so
that the distinguished nonsingular root ``δ*`` is isotropic:

==============  ===========================================  =====================
type            real part and form                           ``δ*``
==============  ===========================================  =====================
A(ℓ,ℓ)          Ȧ on ε₁…ε_{ℓ+1} (+1), Ȧ on δ₁…δ_{ℓ+1} (−1)      ω₁¹ + ω₁²
B(T,T')         B_T on ε (+1), BC_{T'} on δ (−1)             ε₁ + δ₁
BC(T,T')        BC_T on ε (+1), BC_{T'} on δ (−1)            ε₁ + δ₁
BC(1,1)         BC₁ on ε₀ (+1), BC₁ on δ₀ (−1)                 ε₀ + δ₀
BC(1,T)         BC₁ on ε₀ (−1), BC_T on ε (+1)                 ε₀ + ε₁
C(T,T')         C_T on ε (+1), C_{T'} on δ (−1)              ε₁ + δ₁
C(1,T')         A₁ on ε₀ (+4), C_{T'} on δ (−1)                ½ε₀ + δ₁
D(T,T')         D_T on ε (+1), C_{T'} on δ (−1)              ε₁ + δ₁
B(1,T)          A₁ on ε₀ (−1), BC_T on ε (+1)                  ε₀ + ε₁
B(T,1)          BC₁ on ε₀ (−1), B_T on ε (+1)                  ε₀ + ε₁
D(1,T)          A₁ on ε₀ (−4), D_T on ε (+1)                   ½ε₀ + ε₁
AB(1,3)         A₁ on ε₀ (−3), B₃ on ε₁…ε₃ (+1)                ½ε₀ + ½(ε₁+ε₂+ε₃)
G(1,2)          BC₁ on ε₀ (−2), G₂ on ε₁…ε₃ (+1)               ε₀ − ε₂ + ε₃
D(2,1,λ)        A₁ on ε₀, δ₀, γ₀ with (1, λ, −1−λ)             ½(ε₀ + δ₀ + γ₀)
D(2,T)          A₁ on ε₀ and δ₀ (−2 each), C_T on ε (+1)        ½ε₀ + ½δ₀ + ε₁
==============  ===========================================  =====================

``R_ns^× = W·δ*`` (``±W·δ*`` for A(ℓ,ℓ)); the imaginary types use ``±W·α*``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .form import GramForm, evaluate, format_rational, parse_rational
from .lattice import STAR, BasisSymbol, LatticeElement, dlt, eps, gam
from .rootsys import BaseDatum, RootSet, orbit_closure

__all__ = [
    "TypeLabel",
    "Model",
    "Component",
    "WeightDatum",
    "LFRS_FAMILIES",
    "canonical_lfrs_name",
    "lambda_orbit",
    "canonical_lambda",
    "build",
    "build_lfrs",
    "build_lfrs_type",
    "build_imaginary",
    "build_real",
    "integral_base_of",
    "length_partition",
    "length_classes",
    "reduced_sub_supersystem",
    "build_pathological",
    "desk_labels",
    "SIGMA",
]

ZERO = LatticeElement()
HALF = Fraction(1, 2)
SIGMA = BasisSymbol("radical-generator", 0)

LFRS_FAMILIES = ("A", "B", "C", "D", "BC", "E", "F", "G")
SUPER_FAMILIES = ("Adot", "Cdot", "A", "B", "BC", "C", "D", "AB", "G")
IMAGINARY_FAMILIES = ("Adot", "Cdot")


# ---------------------------------------------------------------------------
# λ-orbits for D(2,1,λ)


def _check_lambda(lam: Fraction) -> Fraction:
    lam = Fraction(lam)
    if lam in (0, -1):
        raise ValueError("λ must avoid 0 and -1")
    return lam


def lambda_orbit(lam: object) -> List[Fraction]:
    """Orbit of ``λ`` under the group generated by ``x ↦ 1/x`` and ``x ↦ −1−x``."""
    start = _check_lambda(parse_rational(lam))
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for y in (1 / x, -1 - x):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return sorted(seen, key=lambda q: (q.numerator, q.denominator))


def canonical_lambda(lam: object) -> Fraction:
    """The orbit element minimal in (numerator, denominator) lexicographic order."""
    return lambda_orbit(lam)[0]


# ---------------------------------------------------------------------------
# Type labels


def canonical_lfrs_name(family: str, rank: int) -> Tuple[str, int]:
    """Canonical Cartan name of a finite irreducible root system, resolving the small-rank aliases."""
    if family == "A" and rank >= 1:
        return "A", rank
    if family == "B" and rank >= 1:
        return ("A", 1) if rank == 1 else ("B", rank)
    if family == "C" and rank >= 1:
        return {1: ("A", 1), 2: ("B", 2)}.get(rank, ("C", rank))
    if family == "D" and rank >= 3:
        return ("A", 3) if rank == 3 else ("D", rank)
    if family == "BC" and rank >= 1:
        return "BC", rank
    if (family, rank) in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)):
        return family, rank
    raise ValueError(f"{family}{rank} is not an irreducible finite root system")


_LFRS_RE = re.compile(r"^(BC|A|B|C|D|E|F|G)_?(\d+)$")
_SUPER_RE = re.compile(r"^(Adot|Cdot|AB|BC|A|B|C|D|G)\(\s*(\d+)\s*,\s*(\d+)\s*(?:,\s*([-+]?\d+(?:/\d+)?)\s*)?\)$")


@dataclass(frozen=True)
class TypeLabel:
    """A type name such as ``B(1,3)``, ``D(2,1,1/2)``, ``Adot(0,4)`` or ``BC3``.

    ``params`` are index-set sizes; a locally finite root system label has a
    single parameter, its rank.
    """

    family: str
    params: Tuple[int, ...]
    lam: Optional[Fraction] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if self.lam is not None:
            object.__setattr__(self, "lam", Fraction(self.lam))

    # -- parsing and printing ------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "TypeLabel":
        s = text.strip().replace(" ", "").replace("Ȧ", "Adot").replace("Ċ", "Cdot").replace("λ", "")
        m = _SUPER_RE.match(s)
        if m:
            fam, a, b, lam = m.groups()
            label = cls(fam, (int(a), int(b)), Fraction(lam) if lam is not None else None)
        else:
            m = _LFRS_RE.match(s)
            if not m:
                raise ValueError(f"cannot parse type label {text!r}")
            label = cls(m.group(1), (int(m.group(2)),))
        label.validate()
        return label

    def __str__(self) -> str:
        if self.is_lfrs:
            return f"{self.family}{self.params[0]}"
        inner = ",".join(str(p) for p in self.params)
        if self.lam is not None:
            inner += "," + format_rational(self.lam)
        return f"{self.family}({inner})"

    # -- classification of labels ------------------------------------------

    @property
    def is_lfrs(self) -> bool:
        return len(self.params) == 1

    @property
    def is_imaginary(self) -> bool:
        return self.family in IMAGINARY_FAMILIES

    @property
    def is_real(self) -> bool:
        return not self.is_lfrs and not self.is_imaginary

    def validate(self) -> "TypeLabel":
        f, p = self.family, self.params
        if self.is_lfrs:
            if f not in LFRS_FAMILIES:
                raise ValueError(f"unknown family {f}")
            canonical_lfrs_name(f, p[0])
            if self.lam is not None:
                raise ValueError("λ only applies to D(2,1,λ)")
            return self
        if len(p) != 2 or f not in SUPER_FAMILIES:
            raise ValueError(f"unknown type {f}{p}")
        a, b = p
        if self.lam is not None and not (f == "D" and p == (2, 1)):
            raise ValueError("λ only applies to D(2,1,λ)")
        ok = {
            "Adot": (a == 0 and b >= 2) or (a >= 2 and b >= 2 and a != b),
            "Cdot": a == 0 and b >= 2,
            "A": a == b and a >= 1,
            "B": (a >= 2 and b >= 2) or (a == 1 and b >= 1) or (a >= 2 and b == 1),
            "BC": a >= 1 and b >= 1,
            "C": a >= 1 and b >= 1 and (a, b) != (1, 1),
            "D": (a >= 3 and b >= 2) or (a == 1 and b >= 3) or (a == 2 and b >= 2) or (p == (2, 1) and self.lam is not None),
            "AB": p == (1, 3),
            "G": p == (1, 2),
        }[f]
        if not ok:
            raise ValueError(f"parameters {p} are not allowed for type {f}")
        if self.lam is not None:
            _check_lambda(self.lam)
        return self

    def canonical(self, lam: bool = True) -> "TypeLabel":
        """Representative of the isomorphism class: aliases resolved, symmetric families sorted,
        and (when ``lam``) ``λ`` replaced by its orbit minimum."""
        self.validate()
        if self.is_lfrs:
            fam, n = canonical_lfrs_name(self.family, self.params[0])
            return TypeLabel(fam, (n,))
        a, b = self.params
        if self.family in ("Adot", "BC", "C") and a > b:
            return TypeLabel(self.family, (b, a))
        if self.lam is not None and lam:
            return TypeLabel("D", (2, 1), canonical_lambda(self.lam))
        return self

    # -- structure-theorem vocabulary --------------------------------------

    @property
    def kind(self) -> str:
        """Short family key used by the structure theorem, e.g. ``'B(T,1)'`` or ``'C(1,T)'``."""
        if self.is_lfrs:
            return "lfrs"
        f, (a, b) = self.family, self.canonical(lam=False).params
        if f in IMAGINARY_FAMILIES:
            return f"{f}(0,T)" if a == 0 else f"{f}(T,T')"
        if f == "A":
            return "A(l,l)"
        if f == "B":
            return "B(1,T)" if a == 1 else ("B(T,1)" if b == 1 else "B(T,T')")
        if f == "BC":
            return "BC(1,1)" if (a, b) == (1, 1) else ("BC(1,T)" if a == 1 else "BC(T,T')")
        if f == "C":
            return "C(1,T)" if a == 1 else "C(T,T')"
        if f == "D":
            if self.lam is not None:
                return "D(2,1,l)"
            return {1: "D(1,T)", 2: "D(2,T)"}.get(a, "D(T,T')")
        return f"{f}({a},{b})"


# ---------------------------------------------------------------------------
# Root systems on explicit symbols


def _e(*terms: Tuple[object, BasisSymbol]) -> LatticeElement:
    return LatticeElement.of(*terms)


def _lfrs_roots(family: str, syms: Sequence[BasisSymbol]) -> FrozenSet[LatticeElement]:
    """Nonzero roots of Ȧ_T, D_T, B_T, C_T or BC_T on the symbols ``syms``."""
    out = set()
    for i, s in enumerate(syms):
        for t in syms[i + 1:]:
            out.add(_e((1, s), (-1, t)))
            out.add(_e((-1, s), (1, t)))
            if family != "A":
                out.add(_e((1, s), (1, t)))
                out.add(_e((-1, s), (-1, t)))
        if family in ("B", "BC"):
            out.add(_e((1, s)))
            out.add(_e((-1, s)))
        if family in ("C", "BC"):
            out.add(_e((2, s)))
            out.add(_e((-2, s)))
    if family not in ("A", "B", "C", "D", "BC"):
        raise ValueError(f"unknown classical family {family}")
    return frozenset(out)


def _g2_roots(syms: Sequence[BasisSymbol]) -> FrozenSet[LatticeElement]:
    out = set()
    for i, j, t in itertools.permutations(range(3)):
        out.add(_e((1, syms[i]), (-1, syms[j])))
        out.add(_e((2, syms[i]), (-1, syms[j]), (-1, syms[t])))
        out.add(_e((-2, syms[i]), (1, syms[j]), (1, syms[t])))
    return frozenset(out)


def _half_spin(syms: Sequence[BasisSymbol], parity: Optional[int]) -> Iterator[LatticeElement]:
    for signs in itertools.product((1, -1), repeat=len(syms)):
        if parity is None or signs.count(-1) % 2 == parity:
            yield LatticeElement((s, Fraction(c, 2)) for c, s in zip(signs, syms))


def _f4_roots(syms: Sequence[BasisSymbol]) -> FrozenSet[LatticeElement]:
    return _lfrs_roots("B", syms) | frozenset(_half_spin(syms, None))


def _e8_roots(syms: Sequence[BasisSymbol]) -> FrozenSet[LatticeElement]:
    return _lfrs_roots("D", syms) | frozenset(_half_spin(syms, 0))


def _e_roots(rank: int, syms: Sequence[BasisSymbol]) -> FrozenSet[LatticeElement]:
    """E₈ on eight symbols; E₇ and E₆ as the roots orthogonal to ``ε₇+ε₈`` (and ``ε₆−ε₇``)."""
    roots = _e8_roots(syms)
    perp = []
    if rank <= 7:
        perp.append({syms[6]: 1, syms[7]: 1})
    if rank <= 6:
        perp.append({syms[5]: 1, syms[6]: -1})
    return frozenset(r for r in roots if all(sum(r.coeff(s) * c for s, c in v.items()) == 0 for v in perp))


_EXCEPTIONAL_SIZE = {"G": 3, "F": 4, "E": 8}


def _component_roots(family: str, rank: int, syms: Sequence[BasisSymbol]) -> FrozenSet[LatticeElement]:
    if family == "A":
        return _lfrs_roots("A", syms)
    if family in ("B", "C", "D", "BC"):
        return _lfrs_roots(family, syms)
    if family == "G":
        return _g2_roots(syms)
    if family == "F":
        return _f4_roots(syms)
    if family == "E":
        return _e_roots(rank, syms)
    raise ValueError(family)


def _symbols_for(family: str, rank: int, kind: str = "epsilon", start: int = 1) -> Tuple[BasisSymbol, ...]:
    n = rank + 1 if family == "A" else _EXCEPTIONAL_SIZE.get(family, rank)
    return tuple(BasisSymbol(kind, start + i) for i in range(n))


def _diag_form(entries: Sequence[Tuple[BasisSymbol, Fraction]]) -> GramForm:
    entries = sorted(entries, key=lambda e: e[0].sort_key())
    return GramForm.diagonal(entries)


def build_lfrs(family: str, T, kind: str = "epsilon", scale: object = 1) -> RootSet:
    """The root system Ȧ_T, D_T, B_T, C_T or BC_T with ``(ε_i, ε_j) = scale·δ_ij``.

    ``T`` is either a size (meaning ``{1, …, T}``) or an explicit list of indices.
    """
    if family not in ("A", "B", "C", "D", "BC"):
        raise ValueError(f"family must be one of A, B, C, D, BC, not {family}")
    indices = list(range(1, int(T) + 1)) if isinstance(T, int) else list(T)
    if not indices:
        raise ValueError("index set must be nonempty")
    if len(set(indices)) != len(indices):
        raise ValueError("repeated index")
    syms = tuple(BasisSymbol(kind, i) for i in indices)
    form = _diag_form([(s, Fraction(scale)) for s in syms])
    name = ("Adot" if family == "A" else family) + f"_{len(syms)}"
    return RootSet(form, _lfrs_roots(family, syms) | {ZERO}, name=name)


# ---------------------------------------------------------------------------
# Models


@dataclass(frozen=True)
class Component:
    """One irreducible summand ``S_i`` of the real part."""

    name: str
    roots: FrozenSet[LatticeElement]
    symbols: Tuple[BasisSymbol, ...]


@dataclass(frozen=True)
class WeightDatum:
    """Fundamental weights used to define ``δ*``: per component, a map like ``{"omega1": ω₁}``."""

    weights: Tuple[Tuple[Tuple[str, LatticeElement], ...], ...]

    def get(self, component: int, name: str = "omega1") -> LatticeElement:
        return dict(self.weights[component])[name]


@dataclass(frozen=True)
class Model:
    """A catalog realization: the root set plus its marked data."""

    label: TypeLabel
    rootset: RootSet
    base: BaseDatum
    components: Tuple[Component, ...]
    distinguished: Optional[LatticeElement] = None
    weights: Optional[WeightDatum] = None

    @property
    def form(self) -> GramForm:
        return self.rootset.form


def _simple_system(roots: Iterable[LatticeElement], basis: Sequence[BasisSymbol]) -> List[LatticeElement]:
    """Indecomposable positive roots for the lexicographic order on coordinates."""
    pos = [r for r in roots if not r.is_zero() and next(c for c in r.vector(basis) if c) > 0]
    posset = set(pos)
    dec = {a + b for a in pos for b in pos}
    return sorted((r for r in posset if r not in dec), key=lambda r: tuple(-c for c in r.vector(basis)))


def _lfrs_base(family: str, rank: int, syms: Sequence[BasisSymbol], roots) -> List[LatticeElement]:
    """Standard simple roots for the classical families, generic ones otherwise."""
    s = syms
    chain = [_e((1, s[i]), (-1, s[i + 1])) for i in range(len(s) - 1)]
    if family == "A":
        return chain
    if family in ("B", "BC"):
        return chain + [_e((1, s[-1]))]
    if family == "C":
        return chain + [_e((2, s[-1]))]
    if family == "D":
        return chain + [_e((1, s[-2]), (1, s[-1]))]
    if family == "G":
        return [_e((1, s[0]), (-1, s[1])), _e((-2, s[0]), (1, s[1]), (1, s[2]))]
    if family == "F":
        return [_e((1, s[1]), (-1, s[2])), _e((1, s[2]), (-1, s[3])), _e((1, s[3])),
                LatticeElement([(s[0], HALF), (s[1], -HALF), (s[2], -HALF), (s[3], -HALF)])]
    return _simple_system(roots, syms)


def _omega1(family: str, syms: Sequence[BasisSymbol]) -> LatticeElement:
    if family == "A":
        n = len(syms)
        return LatticeElement([(syms[0], 1)] + [(s, Fraction(-1, n)) for s in syms])
    if family == "G":
        return _e((1, syms[2]), (-1, syms[1]))
    return _e((1, syms[0]))


def build_lfrs_type(label: TypeLabel) -> Model:
    """Model of a finite irreducible root system given by its Cartan name."""
    label = label.canonical()
    fam, n = label.family, label.params[0]
    syms = _symbols_for(fam, n)
    roots = _component_roots(fam, n, syms)
    form = _diag_form([(s, Fraction(1)) for s in syms])
    rs = RootSet(form, roots | {ZERO}, name=str(label))
    base = BaseDatum(tuple(_lfrs_base(fam, n, syms, roots)), "base")
    weights = None
    if fam in ("A", "B", "C", "D", "BC", "G"):
        weights = WeightDatum(((("omega1", _omega1(fam, syms)),),))
    return Model(label, rs, base, (Component(str(label), roots, syms),), None, weights)


def _rank_one(sym: BasisSymbol, bc: bool) -> FrozenSet[LatticeElement]:
    out = {_e((1, sym)), _e((-1, sym))}
    if bc:
        out |= {_e((2, sym)), _e((-2, sym))}
    return frozenset(out)


def _point(sym: BasisSymbol, bc: bool = False) -> Component:
    return Component("BC1" if bc else "A1", _rank_one(sym, bc), (sym,))


def _assemble(label: TypeLabel, comps: Sequence[Component], scales: Dict[BasisSymbol, Fraction],
              dstar: LatticeElement, Pi: Sequence[LatticeElement], weights: WeightDatum,
              extra_gram: Optional[Dict[Tuple[BasisSymbol, BasisSymbol], Fraction]] = None,
              signed_orbit: bool = False, base_kind: str = "base") -> Model:
    basis = sorted(scales, key=lambda s: s.sort_key())
    if dstar.support() and any(s not in scales for s in dstar.support()):
        raise ValueError("distinguished root outside the basis")
    pos = {s: i for i, s in enumerate(basis)}
    gram = [[Fraction(0)] * len(basis) for _ in basis]
    for s, v in scales.items():
        gram[pos[s]][pos[s]] = Fraction(v)
    for (s, t), v in (extra_gram or {}).items():
        gram[pos[s]][pos[t]] = gram[pos[t]][pos[s]] = Fraction(v)
    form = GramForm(tuple(basis), tuple(map(tuple, gram)))
    if evaluate(form, dstar, dstar) != 0:
        raise AssertionError(f"normalization failed for {label}: (δ*,δ*) ≠ 0")
    real = frozenset().union(*(c.roots for c in comps))
    seeds = [dstar, -dstar] if signed_orbit else [dstar]
    ns = orbit_closure(form, real, seeds)
    rs = RootSet(form, set(real) | set(ns) | {ZERO}, name=str(label))
    return Model(label, rs, BaseDatum(tuple(Pi), base_kind), tuple(comps), dstar, weights)


def _weights(*per: Sequence[Tuple[str, LatticeElement]]) -> WeightDatum:
    return WeightDatum(tuple(tuple(p) for p in per))


def build_imaginary(label: TypeLabel) -> Model:
    """The imaginary types Adot(0,T), Cdot(0,T) and Adot(T,T')."""
    label = label.canonical()
    if not label.is_imaginary:
        raise ValueError(f"{label} is not of imaginary type")
    a, b = label.params
    scales: Dict[BasisSymbol, Fraction] = {STAR: Fraction(0)}
    extra = {}
    if a == 0:
        T = [eps(i) for i in range(1, b + 1)]
        fam = "C" if label.family == "Cdot" else "A"
        comps = [Component(_name("C", b) if fam == "C" else f"A{b - 1}", _lfrs_roots(fam, T), tuple(T))]
        scales.update({s: Fraction(1) for s in T})
        extra[(STAR, T[0])] = Fraction(1)
        Pi = [_e((1, STAR))]
        if label.family == "Cdot":
            Pi.append(_e((2, T[0])))
        Pi += [_e((1, t), (-1, T[0])) for t in T[1:]]
    else:
        T = [eps(i) for i in range(1, a + 1)]
        Tp = [dlt(p) for p in range(1, b + 1)]
        comps = [Component(f"A{a - 1}", _lfrs_roots("A", T), tuple(T)),
                 Component(f"A{b - 1}", _lfrs_roots("A", Tp), tuple(Tp))]
        scales.update({s: Fraction(1) for s in T})
        scales.update({s: Fraction(-1) for s in Tp})
        extra[(STAR, T[0])] = Fraction(1)
        extra[(STAR, Tp[0])] = Fraction(1)
        Pi = [_e((1, STAR))] + [_e((1, t), (-1, T[0])) for t in T[1:]] + [_e((1, p), (-1, Tp[0])) for p in Tp[1:]]
    return _assemble(label, comps, scales, _e((1, STAR)), Pi, _weights(*[() for _ in comps]), extra, signed_orbit=True)


def build_real(label: TypeLabel) -> Model:
    """The real types of rank two and three summands (including D(2,1,λ))."""
    label = label.canonical(lam=False)
    if not label.is_real:
        raise ValueError(f"{label} is not a real-type supersystem label")
    f, (a, b) = label.family, label.params
    kind = label.kind
    e0, d0, g0 = eps(0), dlt(0), gam(0)
    one = Fraction(1)
    T = [eps(i) for i in range(1, a + 1)]
    Tp = [dlt(p) for p in range(1, b + 1)]

    def unit(syms, v):
        return {s: Fraction(v) for s in syms}

    if kind == "A(l,l)":
        l = a
        E = [eps(i) for i in range(1, l + 2)]
        D = [dlt(i) for i in range(1, l + 2)]
        comps = [Component(f"A{l}", _lfrs_roots("A", E), tuple(E)), Component(f"A{l}", _lfrs_roots("A", D), tuple(D))]
        w1, w2 = _omega1("A", E), _omega1("A", D)
        dstar = w1 + w2
        Pi = [_e((1, E[i]), (-1, E[i + 1])) for i in range(l - 1)] + [dstar] + [_e((1, D[r]), (-1, D[r + 1])) for r in range(l)]
        return _assemble(label, comps, {**unit(E, 1), **unit(D, -1)}, dstar, Pi,
                         _weights([("omega1", w1)], [("omega1", w2)]), signed_orbit=True, base_kind="integral-base")

    def classic_pair(fam1, fam2, Pi):
        c1 = Component(_name(fam1, a), _lfrs_roots(fam1, T), tuple(T))
        c2 = Component(_name(fam2, b), _lfrs_roots(fam2, Tp), tuple(Tp))
        dstar = _e((1, T[0]), (1, Tp[0]))
        return _assemble(label, [c1, c2], {**unit(T, 1), **unit(Tp, -1)}, dstar, Pi,
                         _weights([("omega1", _e((1, T[0])))], [("omega1", _e((1, Tp[0])))]))

    t0, p0 = T[0], Tp[0] if Tp else None
    if kind in ("B(T,T')", "BC(T,T')"):
        Pi = [_e((1, t0))] + [_e((1, t), (-1, t0)) for t in T[1:]] + [_e((1, p), (-1, t0)) for p in Tp]
        return classic_pair("B" if f == "B" else "BC", "BC", Pi)
    if kind == "C(T,T')":
        Pi = [_e((2, t0))] + [_e((1, t), (-1, t0)) for t in T[1:]] + [_e((1, p), (-1, t0)) for p in Tp]
        return classic_pair("C", "C", Pi)
    if kind == "D(T,T')":
        Pi = [_e((2, p0))] + [_e((1, p), (-1, p0)) for p in Tp[1:]] + [_e((1, t), (-1, p0)) for t in T]
        return classic_pair("D", "C", Pi)

    # Rank-one first summand on ε₀ (and δ₀, γ₀); the second summand lives on ε₁, ε₂, …
    if kind == "BC(1,1)":
        comps = [_point(e0, True), _point(d0, True)]
        dstar = _e((1, e0), (1, d0))
        Pi = [_e((1, e0)), dstar]
        return _assemble(label, comps, {e0: one, d0: -one}, dstar, Pi,
                         _weights([("omega1", _e((HALF, e0)))], [("omega1", _e((HALF, d0)))]))
    U = [eps(i) for i in range(1, b + 1)]  # the second summand's index set for (1,T)-types
    if kind == "BC(1,T)":
        comps = [_point(e0, True), Component(f"BC{b}", _lfrs_roots("BC", U), tuple(U))]
        dstar = _e((1, e0), (1, U[0]))
        Pi = [_e((1, e0)), _e((1, U[0]))] + [_e((1, t), (-1, U[0])) for t in U[1:]]
        return _assemble(label, comps, {e0: -one, **unit(U, 1)}, dstar, Pi,
                         _weights([("omega1", _e((HALF, e0)))], [("omega1", _e((1, U[0])))]))
    if kind == "B(1,T)":
        comps = [_point(e0), Component(f"BC{b}", _lfrs_roots("BC", U), tuple(U))]
        dstar = _e((1, e0), (1, U[0]))
        Pi = [_e((1, e0))] + [_e((1, e0), (-1, t)) for t in U]
        w2 = _e((HALF, U[0])) if b == 1 else _e((1, U[0]))
        return _assemble(label, comps, {e0: -one, **unit(U, 1)}, dstar, Pi,
                         _weights([("omega1", _e((HALF, e0)))], [("omega1", w2)]))
    if kind == "B(T,1)":
        V = [eps(i) for i in range(1, a + 1)]
        comps = [_point(e0, True), Component(_name("B", a), _lfrs_roots("B", V), tuple(V))]
        dstar = _e((1, e0), (1, V[0]))
        Pi = [_e((1, e0))] + [_e((1, e0), (-1, t)) for t in V]
        return _assemble(label, comps, {e0: -one, **unit(V, 1)}, dstar, Pi,
                         _weights([("omega1", _e((HALF, e0)))], [("omega1", _e((1, V[0])))]))
    if kind == "C(1,T)":
        comps = [_point(e0), Component(_name("C", b), _lfrs_roots("C", Tp), tuple(Tp))]
        dstar = _e((HALF, e0), (1, Tp[0]))
        Pi = [_e((1, e0))] + [_e((HALF, e0), (-1, p)) for p in Tp]
        return _assemble(label, comps, {e0: Fraction(4), **unit(Tp, -1)}, dstar, Pi,
                         _weights([("omega1", _e((HALF, e0)))], [("omega1", _e((1, Tp[0])))]))
    if kind == "D(1,T)":
        comps = [_point(e0), Component(_name("D", b), _lfrs_roots("D", U), tuple(U))]
        dstar = _e((HALF, e0), (1, U[0]))
        Pi = [_e((1, e0))] + [_e((HALF, e0), (-1, t)) for t in U]
        return _assemble(label, comps, {e0: Fraction(-4), **unit(U, 1)}, dstar, Pi,
                         _weights([("omega1", _e((HALF, e0)))], [("omega1", _e((1, U[0])))]))
    if kind == "AB(1,3)":
        V = [eps(i) for i in (1, 2, 3)]
        comps = [_point(e0), Component("B3", _lfrs_roots("B", V), tuple(V))]
        w3 = LatticeElement((s, HALF) for s in V)
        dstar = _e((HALF, e0)) + w3
        Pi = [_e((1, V[0]), (-1, V[1])), _e((1, V[1]), (-1, V[2])), _e((1, V[2])),
              LatticeElement([(e0, HALF)] + [(s, -HALF) for s in V])]
        return _assemble(label, comps, {e0: Fraction(-3), **unit(V, 1)}, dstar, Pi,
                         _weights([("omega1", _e((HALF, e0)))], [("omega1", _e((1, V[0]))), ("omega3", w3)]))
    if kind == "G(1,2)":
        V = [eps(i) for i in (1, 2, 3)]
        comps = [_point(e0, True), Component("G2", _g2_roots(V), tuple(V))]
        w1 = _omega1("G", V)
        dstar = _e((1, e0)) + w1
        Pi = [_e((1, e0)), _e((1, e0), (-1, V[0]), (1, V[1])), _e((2, V[0]), (-1, V[1]), (-1, V[2]))]
        return _assemble(label, comps, {e0: Fraction(-2), **unit(V, 1)}, dstar, Pi,
                         _weights([("omega1", _e((HALF, e0)))], [("omega1", w1)]))
    if kind == "D(2,1,l)":
        lam = label.lam
        comps = [_point(e0), _point(d0), _point(g0)]
        dstar = _e((HALF, e0), (HALF, d0), (HALF, g0))
        Pi = [_e((1, e0)), _e((1, d0)), dstar]
        return _assemble(label, comps, {e0: one, d0: lam, g0: -1 - lam}, dstar, Pi,
                         _weights(*[[("omega1", _e((HALF, s)))] for s in (e0, d0, g0)]))
    if kind == "D(2,T)":
        comps = [_point(e0), _point(d0), Component(_name("C", b), _lfrs_roots("C", U), tuple(U))]
        dstar = _e((HALF, e0), (HALF, d0), (1, U[0]))
        Pi = [_e((1, e0)), _e((1, d0)), dstar] + [_e((1, t), (-1, U[0])) for t in U[1:]]
        return _assemble(label, comps, {e0: Fraction(-2), d0: Fraction(-2), **unit(U, 1)}, dstar, Pi,
                         _weights([("omega1", _e((HALF, e0)))], [("omega1", _e((HALF, d0)))], [("omega1", _e((1, U[0])))]))
    raise ValueError(f"no realization for {label}")  # pragma: no cover - labels are validated


def _name(family: str, n: int) -> str:
    fam, r = canonical_lfrs_name(family, n)
    return f"{fam}{r}"


@lru_cache(maxsize=None)
def build(label) -> Model:
    """Model for any catalog label (string or :class:`TypeLabel`).

    Symmetric families are realized in their sorted form; ``λ`` is kept as given.
    """
    if isinstance(label, str):
        label = TypeLabel.parse(label)
    label.validate()
    if label.is_lfrs:
        return build_lfrs_type(label)
    if label.is_imaginary:
        return build_imaginary(label)
    return build_real(label)


def integral_base_of(label) -> BaseDatum:
    """The tabulated ``Π`` (kind ``integral-base`` for A(ℓ,ℓ), ``base`` otherwise)."""
    return build(label).base


# ---------------------------------------------------------------------------
# Length classes and reduced sub-supersystems


def length_classes(R: RootSet, component: Iterable[LatticeElement]) -> Tuple[FrozenSet[LatticeElement], FrozenSet[LatticeElement], FrozenSet[LatticeElement]]:
    """``(short, long, extra-long)`` roots of one irreducible real component, by ``|(α,α)|``."""
    comp = [r for r in component if not r.is_zero()]
    if not comp:
        return frozenset(), frozenset(), frozenset()
    norms = {r: abs(R.pair(r, r)) for r in comp}
    m = min(norms.values())
    sh = frozenset(r for r in comp if norms[r] == m)
    members = set(comp)
    ex = frozenset(2 * r for r in sh if 2 * r in members)
    lg = frozenset(members - sh - ex)
    return sh, lg, ex


def length_partition(R: RootSet) -> Tuple[FrozenSet[LatticeElement], FrozenSet[LatticeElement], FrozenSet[LatticeElement]]:
    """``(R_sh, R_lg, R_ex)`` of an irreducible locally finite root system."""
    from .rootsys import is_irreducible

    if R.nonsingular or not is_irreducible(R):
        raise ValueError("length partition needs an irreducible locally finite root system")
    return length_classes(R, R.real)


def reduced_sub_supersystem(model: Model) -> FrozenSet[LatticeElement]:
    """A sub-supersystem ``S`` with ``S_ns = R_ns`` and ``⟨S⟩ = ⟨R⟩`` on which the sign ``r`` of
    ``α + rδ ∈ S`` is unique; ``S = R`` except for A(1,1), BC, C(T,T') and C(1,T)."""
    if isinstance(model, (str, TypeLabel)):
        model = build(model)
    R = model.rootset
    label = model.label.canonical(lam=False)
    kind = label.kind
    keep = set(R.roots)
    comps = model.components
    if kind == "A(l,l)" and label.params == (1, 1):
        keep -= comps[1].roots
    elif kind in ("BC(T,T')", "BC(1,1)", "BC(1,T)", "C(T,T')"):
        c1 = comps[0]
        keep -= {r for r in c1.roots if len(r.support()) == 1 and abs(r.coeff(r.support()[0])) == 2}
    elif kind == "C(1,T)":
        keep -= comps[0].roots
    return frozenset(keep)


# ---------------------------------------------------------------------------
# Degenerate examples


def build_pathological(which: str, ell: Optional[int] = None) -> RootSet:
    """Extended affine root supersystems with ``R⁰ = {0}`` whose form on ``⟨R⟩`` is degenerate.

    ``which='A_ll_ex'`` (``ℓ ≥ 2``): ``Ṙ_re ∪ ±(W·δ* + σ)`` over type A(ℓ,ℓ).
    ``which='A11_ex'``: ``Ṙ_re ∪ (Ṙ_ns^× ± σ)`` over type A(1,1).
    Here ``σ`` is a new basis symbol in the radical of the extended form.
    ``"i"`` and ``"ii"`` are accepted as aliases of the two names.
    """
    which = {"i": "A_ll_ex", "ii": "A11_ex"}.get(which, which)
    if which == "A_ll_ex":
        if ell is None or ell < 2:
            raise ValueError("the A(ℓ,ℓ) example needs ℓ ≥ 2")
        model = build(TypeLabel("A", (ell, ell)))
    elif which == "A11_ex":
        model = build(TypeLabel("A", (1, 1)))
    else:
        raise ValueError("which must be 'A_ll_ex' or 'A11_ex'")
    dot = model.rootset
    n = len(dot.basis)
    gram = [list(row) + [Fraction(0)] for row in dot.form.gram] + [[Fraction(0)] * (n + 1)]
    form = GramForm(dot.basis + (SIGMA,), tuple(map(tuple, gram)))
    sigma = _e((1, SIGMA))
    roots = set(dot.real) | {ZERO}
    if which == "A_ll_ex":
        orbit = orbit_closure(dot.form, dot.real, [model.distinguished])
        roots |= {w + sigma for w in orbit} | {-(w + sigma) for w in orbit}
    else:
        roots |= {d + sigma for d in dot.nonsingular} | {d - sigma for d in dot.nonsingular}
    return RootSet(form, roots, name=f"{which}" + (f"({ell})" if ell else ""))


# ---------------------------------------------------------------------------
# Desk-scale instance lists


def desk_labels(max_size: int = 4, max_ell: int = 3, lambdas: Sequence[object] = (1, 2, Fraction(-1, 2), Fraction(3, 5)),
                include_lfrs: bool = False) -> List[TypeLabel]:
    """Every supersystem label with index sets of size ``1 … max_size`` allowed by the tables."""
    out: List[TypeLabel] = []
    rng = range(1, max_size + 1)
    for n in rng:
        for fam in ("Adot", "Cdot"):
            out.append(TypeLabel(fam, (0, n)))
    for m in rng:
        for n in rng:
            out.append(TypeLabel("Adot", (m, n)))
    for l in range(1, max_ell + 1):
        out.append(TypeLabel("A", (l, l)))
    for fam in ("B", "BC", "C", "D"):
        for a in rng:
            for b in rng:
                out.append(TypeLabel(fam, (a, b)))
    out += [TypeLabel("AB", (1, 3)), TypeLabel("G", (1, 2))]
    out += [TypeLabel("D", (2, 1), Fraction(parse_rational(l))) for l in lambdas]
    if include_lfrs:
        for fam in ("A", "B", "C", "D", "BC"):
            for n in rng:
                out.append(TypeLabel(fam, (n,)))
        out += [TypeLabel("G", (2,)), TypeLabel("F", (4,))]
    seen, valid = set(), []
    for lab in out:
        try:
            lab.validate()
        except ValueError:
            continue
        key = lab.canonical(lam=False)
        if key not in seen:
            seen.add(key)
            valid.append(key)
    return valid
