"""Finite root supersystems: partition, reflections, strings, axioms and bases.

A :class:`RootSet` is a finite subset ``R`` of a rational coordinate space with
a symmetric form; its lattice is ``A = ⟨R⟩``.  Internally every root is scaled
to an integer vector so that pairings, reflections and membership tests run on
plain integer tuples.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import intmat
from .form import GramForm, evaluate, radical as form_radical
from .lattice import BasisSymbol, LatticeElement

__all__ = [
    "RootSet",
    "RootString",
    "RootStringError",
    "AxiomCheck",
    "AxiomReport",
    "BaseDatum",
    "BaseReport",
    "STRING_BOUND",
    "partition",
    "reflect",
    "root_string",
    "string_from_oracle",
    "verify_axioms",
    "connected_components",
    "is_irreducible",
    "is_tame",
    "direct_sum",
    "real_part",
    "weyl_orbit",
    "orbit_closure",
    "is_reflectable_set",
    "verify_base",
    "saturate_nondegenerate",
    "is_sub_supersystem",
    "zlinear_closure",
    "is_zlinearly_closed",
]

STRING_BOUND = 8

IVec = Tuple[int, ...]


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


class RootSet:
    """A finite set of roots together with the ambient form.

    ``roots`` need not contain ``0``; axiom (S1) is checked by
    :func:`verify_axioms`, not enforced here.
    """

    def __init__(self, form: GramForm, roots: Iterable[LatticeElement], name: Optional[str] = None):
        self.form = form
        self.name = name
        basis = form.basis
        raw = {r: tuple(Fraction(c) for c in r.vector(basis)) for r in set(roots)}
        den = intmat.common_denominator(c for v in raw.values() for c in v)
        gden = intmat.common_denominator(x for row in form.gram for x in row)
        self._den = den
        self._gram_int = [[int(x * gden) for x in row] for row in form.gram]
        order = sorted(raw, key=lambda r: raw[r])
        self._roots: Tuple[LatticeElement, ...] = tuple(order)
        self._vec: List[IVec] = [tuple(int(c * den) for c in raw[r]) for r in order]
        self._pos: Dict[IVec, int] = {v: i for i, v in enumerate(self._vec)}
        self._index: Dict[LatticeElement, int] = {r: i for i, r in enumerate(order)}
        self._gvec: List[IVec] = [self._apply_gram(v) for v in self._vec]
        self._norm: List[int] = [_dot(g, v) for g, v in zip(self._gvec, self._vec)]

    # -- basic accessors -------------------------------------------------

    @property
    def basis(self) -> Tuple[BasisSymbol, ...]:
        return self.form.basis

    @property
    def roots(self) -> Tuple[LatticeElement, ...]:
        """All roots in canonical (coordinate) order."""
        return self._roots

    def __len__(self) -> int:
        return len(self._roots)

    def __iter__(self):
        return iter(self._roots)

    def __contains__(self, x: object) -> bool:
        if isinstance(x, LatticeElement):
            try:
                return self._ivec(x) in self._pos
            except (KeyError, ValueError):
                return False
        return False

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSet) and self.form == other.form and set(self._roots) == set(other._roots)

    def __hash__(self) -> int:
        return hash((self.form, frozenset(self._roots)))

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"RootSet({len(self._roots)} roots{label})"

    def key(self, r: LatticeElement) -> Tuple[Fraction, ...]:
        """Canonical sort key of a lattice element (its coordinate vector)."""
        return r.vector(self.basis)

    def sort(self, elements: Iterable[LatticeElement]) -> List[LatticeElement]:
        return sorted(elements, key=self.key)

    def rootset(self) -> FrozenSet[LatticeElement]:
        return frozenset(self._roots)

    # -- integer internals -----------------------------------------------

    def _apply_gram(self, v: Sequence[int]) -> IVec:
        return tuple(_dot(row, v) for row in self._gram_int)

    def _ivec(self, x: LatticeElement) -> IVec:
        out = []
        for c in x.vector(self.basis):
            s = c * self._den
            if s.denominator != 1:
                raise ValueError("not on the scaled coordinate grid")
            out.append(int(s))
        return tuple(out)

    def _elem(self, v: IVec) -> LatticeElement:
        i = self._pos.get(v)
        if i is not None:
            return self._roots[i]
        return LatticeElement.from_vector(self.basis, [Fraction(c, self._den) for c in v])

    def pair(self, a: LatticeElement, b: LatticeElement) -> Fraction:
        return evaluate(self.form, a, b)

    @cached_property
    def _pair_matrix(self) -> List[List[int]]:
        return [[_dot(g, v) for v in self._vec] for g in self._gvec]

    # -- radical and partition ------------------------------------------

    @cached_property
    def lattice_basis(self) -> Tuple[LatticeElement, ...]:
        """A ℤ-basis (Hermite form) of ``A = ⟨R⟩``."""
        rows = intmat.lattice_basis([r.vector(self.basis) for r in self._roots])
        return tuple(LatticeElement.from_vector(self.basis, r) for r in rows)

    @property
    def rank(self) -> int:
        return len(self.lattice_basis)

    @cached_property
    def radical_basis(self) -> Tuple[LatticeElement, ...]:
        """A ℤ-basis of the radical of the form restricted to ``⟨R⟩``."""
        return tuple(form_radical(self.form, list(self._roots)))

    def is_nondegenerate(self) -> bool:
        return not self.radical_basis

    @cached_property
    def _span_rows(self) -> List[IVec]:
        rows = intmat.hnf(self._vec, len(self.basis)) if self._vec else []
        return [tuple(r) for r in rows]

    def _in_radical_idx(self, i: int) -> bool:
        g = self._gvec[i]
        return all(_dot(g, row) == 0 for row in self._span_rows)

    @cached_property
    def _classes(self) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
        iso, real, ns = [], [], []
        for i in range(len(self._roots)):
            if self._norm[i] != 0:
                real.append(i)
            elif self._in_radical_idx(i):
                iso.append(i)
            else:
                ns.append(i)
        return tuple(iso), tuple(real), tuple(ns)

    @property
    def isotropic(self) -> Tuple[LatticeElement, ...]:
        """``R⁰ = R ∩ A⁰``."""
        return tuple(self._roots[i] for i in self._classes[0])

    @property
    def real(self) -> Tuple[LatticeElement, ...]:
        """Nonzero real roots ``R_re^×``."""
        return tuple(self._roots[i] for i in self._classes[1])

    @property
    def nonsingular(self) -> Tuple[LatticeElement, ...]:
        """Nonzero nonsingular roots ``R_ns^×``."""
        return tuple(self._roots[i] for i in self._classes[2])

    @property
    def nonisotropic(self) -> Tuple[LatticeElement, ...]:
        """``R^× = R ∖ R⁰``."""
        iso = set(self._classes[0])
        return tuple(r for i, r in enumerate(self._roots) if i not in iso)

    def is_real(self, a: LatticeElement) -> bool:
        return self.pair(a, a) != 0

    def is_nonsingular(self, a: LatticeElement) -> bool:
        i = self._index.get(a)
        if i is not None:
            return i in set(self._classes[2])
        return self.pair(a, a) == 0 and any(self.pair(a, r) != 0 for r in self._roots)

    # -- derived systems ----------------------------------------------------

    def restricted(self, roots: Iterable[LatticeElement], name: Optional[str] = None) -> "RootSet":
        """The same form with a different root set."""
        return RootSet(self.form, roots, name=name)

    def pruned(self) -> "RootSet":
        """Drop basis symbols that no root uses."""
        used = {s for r in self._roots for s in r.support()}
        idx = [j for j, s in enumerate(self.basis) if s in used]
        form = GramForm(tuple(self.basis[j] for j in idx), tuple(tuple(self.form.gram[i][j] for j in idx) for i in idx))
        return RootSet(form, self._roots, name=self.name)

    def component_rootsets(self) -> List["RootSet"]:
        """Each connected component of ``R^×`` with ``0`` adjoined, as a pruned root set."""
        zero = LatticeElement()
        return [RootSet(self.form, set(c) | {zero}).pruned() for c in connected_components(self)]


# ---------------------------------------------------------------------------
# Elementary operations


def partition(R: RootSet) -> Tuple[FrozenSet[LatticeElement], FrozenSet[LatticeElement], FrozenSet[LatticeElement]]:
    """``(R⁰, R_re^×, R_ns^×)``: isotropic roots and the nonzero real / nonsingular roots."""
    return frozenset(R.isotropic), frozenset(R.real), frozenset(R.nonsingular)


def reflect(form: GramForm, alpha: LatticeElement, beta: LatticeElement) -> LatticeElement:
    """``r_α(β) = β − 2(β,α)/(α,α)·α`` for a real ``α``."""
    n = evaluate(form, alpha, alpha)
    if n == 0:
        raise ValueError(f"{alpha} is not a real root")
    return beta - alpha * (2 * evaluate(form, beta, alpha) / n)


@dataclass(frozen=True)
class RootString:
    """The ``α``-string ``β − pα, …, β + qα`` through ``β``."""

    p: int
    q: int
    members: Tuple[LatticeElement, ...]


class RootStringError(ValueError):
    """Raised when a root string is broken, unbounded in the scan window, or of the wrong length."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


def string_from_oracle(member: Callable[[int], bool], ratio: Fraction, bound: int = STRING_BOUND) -> Tuple[int, int]:
    """Determine ``(p, q)`` of a root string from a membership oracle ``k ↦ β + kα ∈ R``.

    ``ratio`` is ``2(β,α)/(α,α)``.  Raises :class:`RootStringError` when the set
    of ``k`` in ``[−bound, bound]`` is not an interval through ``0``, touches the
    window edge, or fails ``p − q = ratio``.
    """
    ks = [k for k in range(-bound, bound + 1) if member(k)]
    if 0 not in ks:
        raise RootStringError("not-a-root", "β is not a root")
    lo, hi = min(ks), max(ks)
    if lo == -bound or hi == bound:
        raise RootStringError("bound", f"root string reaches the scan bound {bound}")
    if len(ks) != hi - lo + 1:
        missing = next(k for k in range(lo, hi + 1) if k not in ks)
        raise RootStringError("non-contiguous", f"root string has a gap at k={missing}")
    p, q = -lo, hi
    if p - q != ratio:
        raise RootStringError("length", f"p-q={p - q} but 2(β,α)/(α,α)={ratio}")
    return p, q


def root_string(R, alpha: LatticeElement, beta: LatticeElement, bound: int = STRING_BOUND) -> RootString:
    """The ``α``-string through ``β`` in a :class:`RootSet` (or any object with ``root_string``)."""
    if not isinstance(R, RootSet):
        return R.root_string(alpha, beta, bound=bound)
    n = R.pair(alpha, alpha)
    if n == 0 or alpha not in R:
        raise ValueError(f"{alpha} is not a nonzero real root")
    if beta not in R:
        raise ValueError(f"{beta} is not a root")
    a, b = R._ivec(alpha), R._ivec(beta)
    ratio = 2 * R.pair(beta, alpha) / n

    def member(k: int) -> bool:
        return tuple(x + k * y for x, y in zip(b, a)) in R._pos

    p, q = string_from_oracle(member, ratio, bound)
    members = tuple(R._elem(tuple(x + k * y for x, y in zip(b, a))) for k in range(-p, q + 1))
    return RootString(p, q, members)


# ---------------------------------------------------------------------------
# Axiom verification


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of one axiom; ``witness`` lists the offending roots when it fails."""

    axiom: str
    passed: bool
    witness: Tuple[str, ...] = ()
    detail: str = ""

    def to_json(self) -> dict:
        out = {"axiom": self.axiom, "passed": self.passed}
        if not self.passed:
            out["witness"] = list(self.witness)
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class AxiomReport:
    checks: Tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, axiom: str) -> AxiomCheck:
        for c in self.checks:
            if c.axiom == axiom:
                return c
        raise KeyError(axiom)

    def failures(self) -> List[AxiomCheck]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"passed": self.passed, "axioms": [c.to_json() for c in self.checks]}


def _ok(axiom: str) -> AxiomCheck:
    return AxiomCheck(axiom, True)


def _fail(axiom: str, witness: Sequence[object], detail: str) -> AxiomCheck:
    return AxiomCheck(axiom, False, tuple(str(w) for w in witness), detail)


def _strings_on_lines(vec: Sequence[IVec], a: int, P: Sequence[Sequence[int]], bound: int) -> Optional[Tuple[int, int, str]]:
    """Check every ``α``-string at once by grouping roots into lines ``β + ℤα``.

    Returns ``(α, β, reason)`` indices for the first failing string, else ``None``.
    """
    va = vec[a]
    j = next(i for i, x in enumerate(va) if x)
    lines: Dict[IVec, List[Tuple[int, int]]] = {}
    for b, vb in enumerate(vec):
        q = vb[j] // va[j]
        rep = tuple(x - q * y for x, y in zip(vb, va))
        lines.setdefault(rep, []).append((q, b))
    na = P[a][a]
    for members in lines.values():
        qs = sorted(q for q, _ in members)
        lo, hi = qs[0], qs[-1]
        contiguous = len(qs) == hi - lo + 1
        for q, b in members:
            if not contiguous:
                return a, b, "root string is not contiguous"
            p_, q_ = q - lo, hi - q
            if p_ >= bound or q_ >= bound:
                return a, b, f"root string reaches the scan bound {bound}"
            if (p_ - q_) * na != 2 * P[a][b]:
                return a, b, f"p-q={p_ - q_} but 2(β,α)/(α,α)={Fraction(2 * P[a][b], na)}"
    return None


def verify_axioms(R: RootSet, bound: int = STRING_BOUND) -> AxiomReport:
    """Check (S1)–(S5) exhaustively over all relevant pairs of roots.

    The lattice of a :class:`RootSet` is ``⟨R⟩`` by definition, so (S1)
    amounts to ``0 ∈ R``.
    """
    roots, vec, pos, P = R._roots, R._vec, R._pos, R._pair_matrix
    n = len(roots)
    iso, real, ns = R._classes
    checks = []

    zero = (0,) * len(R.basis)
    checks.append(_ok("S1") if zero in pos else _fail("S1", ["0"], "0 is not a root"))

    s2 = next((i for i in range(n) if tuple(-x for x in vec[i]) not in pos), None)
    checks.append(_ok("S2") if s2 is None else _fail("S2", [roots[s2]], "the negative is not a root"))

    s3 = None
    for a in real:
        na = P[a][a]
        for b in range(n):
            if (2 * P[a][b]) % na:
                s3 = (a, b)
                break
        if s3:
            break
    if s3 is None:
        checks.append(_ok("S3"))
    else:
        a, b = s3
        checks.append(_fail("S3", [roots[a], roots[b]], f"2(α,β)/(α,α) = {Fraction(2 * P[a][b], P[a][a])} is not an integer"))

    s4 = None
    for a in real:
        s4 = _strings_on_lines(vec, a, P, bound)
        if s4:
            break
    if s4 is None:
        checks.append(_ok("S4"))
    else:
        checks.append(_fail("S4", [roots[s4[0]], roots[s4[1]]], s4[2]))

    s5 = None
    for a in ns:
        va = vec[a]
        for b in range(n):
            if P[a][b] == 0:
                continue
            vb = vec[b]
            if tuple(y - x for x, y in zip(va, vb)) not in pos and tuple(y + x for x, y in zip(va, vb)) not in pos:
                s5 = (a, b)
                break
        if s5:
            break
    if s5 is None:
        checks.append(_ok("S5"))
    else:
        checks.append(_fail("S5", [roots[s5[0]], roots[s5[1]]], "neither β−α nor β+α is a root"))
    return AxiomReport(tuple(checks))


# ---------------------------------------------------------------------------
# Connectivity


def connected_components(R: RootSet) -> List[FrozenSet[LatticeElement]]:
    """Components of ``R^×`` under the relation ``(α, β) ≠ 0``, ordered by their least root."""
    iso = set(R._classes[0])
    idx = [i for i in range(len(R)) if i not in iso]
    P = R._pair_matrix
    seen = set()
    comps = []
    for start in idx:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in idx:
                if j not in seen and P[i][j] != 0:
                    seen.add(j)
                    comp.append(j)
                    queue.append(j)
        comps.append(frozenset(R._roots[i] for i in comp))
    return comps


def is_irreducible(R: RootSet) -> bool:
    return bool(R._classes[1]) and len(connected_components(R)) == 1


def is_tame(R: RootSet) -> bool:
    """Every isotropic root is ``β + γ`` shifted from a non-isotropic root ``β`` (``α + β ∈ R``)."""
    iso = set(R._classes[0])
    others = [R._vec[i] for i in range(len(R)) if i not in iso]
    for i in R._classes[0]:
        v = R._vec[i]
        if not any(tuple(x + y for x, y in zip(v, w)) in R._pos for w in others):
            return False
    return True


def direct_sum(R1: RootSet, R2: RootSet) -> RootSet:
    """Orthogonal direct sum; the bases must be disjoint."""
    clash = set(R1.basis) & set(R2.basis)
    if clash:
        raise ValueError(f"basis collision: {sorted(str(s) for s in clash)}")
    n1, n2 = len(R1.basis), len(R2.basis)
    gram = [list(row) + [Fraction(0)] * n2 for row in R1.form.gram]
    gram += [[Fraction(0)] * n1 + list(row) for row in R2.form.gram]
    form = GramForm(R1.basis + R2.basis, tuple(map(tuple, gram)))
    return RootSet(form, set(R1.roots) | set(R2.roots) | {LatticeElement()})


def real_part(R: RootSet) -> RootSet:
    """``(⟨R_re⟩, form, R_re)`` with unused basis symbols removed."""
    return RootSet(R.form, set(R.real) | {LatticeElement()}).pruned()


# ---------------------------------------------------------------------------
# Orbits and reflectable sets


def orbit_closure(form: GramForm, reflectors: Iterable[LatticeElement], seeds: Iterable[LatticeElement]) -> List[LatticeElement]:
    """Closure of ``seeds`` under the reflections ``r_α`` (α in ``reflectors``), sorted."""
    basis = form.basis
    reflectors = list(reflectors)
    seeds = list(seeds)
    den = intmat.common_denominator(c for x in reflectors + seeds for c in x.vector(basis))
    gden = intmat.common_denominator(x for row in form.gram for x in row)
    gram = [[int(x * gden) for x in row] for row in form.gram]
    refl = []
    for a in reflectors:
        va = tuple(int(c * den) for c in a.vector(basis))
        ga = tuple(_dot(row, va) for row in gram)
        n = _dot(ga, va)
        if n == 0:
            raise ValueError(f"{a} is not real")
        refl.append((va, ga, n))
    start = [tuple(int(c * den) for c in s.vector(basis)) for s in seeds]
    seen = set(start)
    queue = deque(sorted(seen))
    while queue:
        v = queue.popleft()
        for va, ga, n in refl:
            num = 2 * _dot(ga, v)
            if not num:
                continue
            if num % n:
                return _orbit_closure_rational(form, reflectors, seeds)
            c = num // n
            w = tuple(x - c * y for x, y in zip(v, va))
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return [LatticeElement.from_vector(basis, [Fraction(x, den) for x in v]) for v in sorted(seen)]


def _orbit_closure_rational(form: GramForm, reflectors: Sequence[LatticeElement], seeds: Sequence[LatticeElement]) -> List[LatticeElement]:
    basis = form.basis
    refl = []
    for a in reflectors:
        va = a.vector(basis)
        ga = [sum((form.gram[i][j] * va[j] for j in range(len(basis))), Fraction(0)) for i in range(len(basis))]
        n = sum((x * y for x, y in zip(ga, va)), Fraction(0))
        refl.append((va, ga, n))
    start = [tuple(s.vector(basis)) for s in seeds]
    seen = set(start)
    queue = deque(sorted(seen))
    while queue:
        v = queue.popleft()
        for va, ga, n in refl:
            c = 2 * sum((x * y for x, y in zip(ga, v)), Fraction(0)) / n
            if c:
                w = tuple(x - c * y for x, y in zip(v, va))
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return [LatticeElement.from_vector(basis, v) for v in sorted(seen)]


def weyl_orbit(R: RootSet, seed: LatticeElement) -> List[LatticeElement]:
    """``W·seed`` for the Weyl group generated by all nonzero real roots of ``R``."""
    return orbit_closure(R.form, R.real, [seed])


def _reduced_real(R: RootSet) -> FrozenSet[LatticeElement]:
    real = set(R.real)
    return frozenset(a for a in real if a * Fraction(1, 2) not in real)


def is_reflectable_set(R: RootSet, Pi: Iterable[LatticeElement]) -> bool:
    """Whether ``W_Π(Π)`` equals the nonzero reduced real roots of ``R``."""
    Pi = list(Pi)
    real = set(R.real)
    if not Pi or any(p not in real for p in Pi):
        return False
    closure = orbit_closure(R.form, Pi, Pi)
    return set(closure) == set(_reduced_real(R))


# ---------------------------------------------------------------------------
# Bases


@dataclass(frozen=True)
class BaseDatum:
    """An ordered candidate base ``Π`` and the property it is claimed to have."""

    elements: Tuple[LatticeElement, ...]
    kind: str = "base"

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        if self.kind not in ("base", "integral-base"):
            raise ValueError("kind must be 'base' or 'integral-base'")


@dataclass(frozen=True)
class BaseReport:
    integral: bool
    chain: Optional[bool]
    witness: Optional[str] = None
    detail: str = ""
    kind: str = "base"

    @property
    def passed(self) -> bool:
        return self.integral and (self.kind != "base" or bool(self.chain))

    def to_json(self) -> dict:
        out = {"kind": self.kind, "integral": self.integral, "chain": self.chain, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


def integral_coordinates(R: RootSet, Pi: Sequence[LatticeElement], x: LatticeElement) -> Optional[List[Fraction]]:
    """Coordinates of ``x`` in terms of ``Π`` (``None`` if ``x`` is outside the ℚ-span)."""
    return intmat.RowSolver([p.vector(R.basis) for p in Pi]).solve(x.vector(R.basis))


def verify_base(R: RootSet, base, kind: Optional[str] = None) -> BaseReport:
    """Check that ``Π`` is a ℤ-basis of ``⟨R⟩`` and, for ``kind='base'``, the ±1-chain property.

    The chain search walks partial sums inside the finite set ``R^×`` itself, so
    no height bound is needed.
    """
    if isinstance(base, BaseDatum):
        Pi, kind = list(base.elements), kind or base.kind
    else:
        Pi, kind = list(base), kind or "base"
    members = set(R.roots)
    outside = next((p for p in Pi if p not in members), None)
    if outside is not None:
        return BaseReport(False, None, str(outside), "element of Π is not a root", kind)
    rows = [p.vector(R.basis) for p in Pi]
    if intmat.rational_rank(rows) != len(Pi):
        return BaseReport(False, None, None, "Π is linearly dependent", kind)
    solver = intmat.RowSolver(rows)
    for r in R.roots:
        c = solver.solve(r.vector(R.basis))
        if c is None:
            return BaseReport(False, None, str(r), "root outside the span of Π", kind)
        if any(x.denominator != 1 for x in c):
            return BaseReport(False, None, str(r), "root has non-integral Π-coordinates", kind)
    if kind != "base":
        return BaseReport(True, None, None, "", kind)
    iso = set(R._classes[0])
    nonzero = {R._vec[i] for i in range(len(R)) if i not in iso}
    steps = [R._ivec(p) for p in Pi]
    steps += [tuple(-x for x in s) for s in steps]
    reached = {s for s in steps if s in nonzero}
    queue = deque(sorted(reached))
    while queue:
        g = queue.popleft()
        for s in steps:
            h = tuple(x + y for x, y in zip(g, s))
            if h in nonzero and h not in reached:
                reached.add(h)
                queue.append(h)
    missing = [R._elem(v) for v in R._vec if v in nonzero and v not in reached]
    if missing:
        return BaseReport(True, False, str(missing[0]), f"{len(missing)} roots are not reachable by ±1 chains", kind)
    return BaseReport(True, True, None, "", kind)


def _gram_nullity(form: GramForm, elems: Sequence[LatticeElement]) -> int:
    if not elems:
        return 0
    vecs = [e.vector(form.basis) for e in elems]
    return len(elems) - intmat.rational_rank(form.restricted_gram(vecs))


def saturate_nondegenerate(R: RootSet, Pi: Sequence[LatticeElement], X: Iterable[LatticeElement]) -> List[LatticeElement]:
    """A finite ``Y ⊇ X`` inside ``Π`` on whose span the form is nondegenerate.

    Greedy: while the Gram matrix of ``Y`` is singular, add the first element of
    ``Π`` that lowers its nullity, or failing that the first one that pairs
    nontrivially with ``Y``.  The result is listed in ``Π``-order.
    """
    Pi = list(Pi)
    Y = list(dict.fromkeys(X))
    if any(x not in Pi for x in Y):
        raise ValueError("X must be a subset of Π")
    form = R.form
    while _gram_nullity(form, Y):
        rest = [p for p in Pi if p not in Y]
        if not rest:
            raise ValueError("Π is exhausted but the form is still degenerate")
        current = _gram_nullity(form, Y)
        pick = next((p for p in rest if _gram_nullity(form, Y + [p]) < current), None)
        if pick is None:
            pick = next((p for p in rest if any(evaluate(form, p, y) != 0 for y in Y)), rest[0])
        Y.append(pick)
    order = {p: i for i, p in enumerate(Pi)}
    return sorted(Y, key=order.__getitem__)


# ---------------------------------------------------------------------------
# Sub-supersystems


def is_sub_supersystem(R: RootSet, S: Iterable[LatticeElement]) -> bool:
    """Sub-supersystem test: nondegenerate on ``⟨S⟩``, ``0 ∈ S``, reflection closed, and
    ``{γ−β, γ+β} ∩ S ≠ ∅`` for nonsingular ``γ ∈ S`` and ``β ∈ S`` with ``(β,γ) ≠ 0``."""
    S = set(S)
    if not S <= set(R.roots) or LatticeElement() not in S:
        return False
    if form_radical(R.form, list(S)):
        return False
    real = [a for a in S if R.pair(a, a) != 0]
    ns = set(R.nonsingular)
    for a in real:
        for b in S:
            if reflect(R.form, a, b) not in S:
                return False
    for g in S:
        if g not in ns:
            continue
        for b in S:
            if R.pair(b, g) != 0 and (g - b) not in S and (g + b) not in S:
                return False
    return True


def zlinear_closure(R: RootSet, S: Iterable[LatticeElement]) -> FrozenSet[LatticeElement]:
    """``R ∩ span_ℤ S``."""
    S = list(S)
    rows = intmat.lattice_basis([s.vector(R.basis) for s in S])
    if not rows:
        return frozenset(r for r in R.roots if r.is_zero())
    out = set()
    for r in R.roots:
        c = intmat.solve_rows(rows, r.vector(R.basis))
        if c is not None and all(x.denominator == 1 for x in c):
            out.add(r)
    return frozenset(out)


def is_zlinearly_closed(R: RootSet, S: Iterable[LatticeElement]) -> bool:
    S = frozenset(S)
    return zlinear_closure(R, S) == S
