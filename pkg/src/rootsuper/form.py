"""Exact symmetric bilinear forms given by Gram matrices over named bases."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from . import intmat
from .lattice import BasisSymbol, LatticeElement

Rational = Fraction


def parse_rational(value: object) -> Fraction:
    """Accept ints, Fractions and ``"p/q"`` strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as a rational")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class GramForm:
    """A symmetric form ``(a, b) = aᵀ·gram·b`` on the span of ``basis``."""

    basis: Tuple[BasisSymbol, ...]
    gram: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        basis = tuple(self.basis)
        gram = tuple(tuple(Fraction(x) for x in row) for row in self.gram)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "gram", gram)
        n = len(basis)
        if len(set(basis)) != n:
            raise ValueError("repeated basis symbol")
        if len(gram) != n or any(len(r) != n for r in gram):
            raise ValueError("gram matrix has the wrong shape")
        for i in range(n):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("gram matrix is not symmetric")

    @classmethod
    def diagonal(cls, entries: Sequence[Tuple[BasisSymbol, object]]) -> "GramForm":
        basis = tuple(s for s, _ in entries)
        n = len(basis)
        gram = [[Fraction(0)] * n for _ in range(n)]
        for i, (_, v) in enumerate(entries):
            gram[i][i] = Fraction(v)
        return cls(basis, tuple(map(tuple, gram)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pair(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        """Pair two coordinate vectors."""
        total = Fraction(0)
        for i, ui in enumerate(u):
            if ui:
                row = self.gram[i]
                total += ui * sum((row[j] * vj for j, vj in enumerate(v) if vj), Fraction(0))
        return total

    def scaled(self, r: object) -> "GramForm":
        r = Fraction(r)
        return GramForm(self.basis, tuple(tuple(r * x for x in row) for row in self.gram))

    def restricted_gram(self, vectors: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
        return [[self.pair(u, v) for v in vectors] for u in vectors]


def evaluate(form: GramForm, a: LatticeElement, b: LatticeElement) -> Fraction:
    """The pairing ``(a, b)``; unknown basis symbols raise ``KeyError``."""
    return form.pair(a.vector(form.basis), b.vector(form.basis))


def radical(form: GramForm, lattice_generators: Sequence[LatticeElement]) -> List[LatticeElement]:
    """A ℤ-basis of the radical of the form restricted to ``⟨lattice_generators⟩``."""
    vecs = [g.vector(form.basis) for g in lattice_generators]
    basis = intmat.lattice_basis(vecs)
    if not basis:
        return []
    gram = form.restricted_gram(basis)
    d = intmat.common_denominator(x for row in gram for x in row)
    kernel = intmat.left_kernel([[int(x * d) for x in row] for row in gram])
    out = []
    for k in kernel:
        v = [sum((c * b[j] for c, b in zip(k, basis)), Fraction(0)) for j in range(form.dim)]
        out.append(LatticeElement.from_vector(form.basis, v))
    # Present the result in Hermite form over the ambient coordinates.
    rows = intmat.lattice_basis([e.vector(form.basis) for e in out])
    return [LatticeElement.from_vector(form.basis, r) for r in rows]


def complement_indices(form: GramForm, radical_basis: Sequence[LatticeElement]) -> List[int]:
    """Indices of the first basis vectors that complete the radical to a ℚ-basis."""
    chosen: List[List[Fraction]] = [list(r.vector(form.basis)) for r in radical_basis]
    rank = intmat.rational_rank(chosen)
    picked = []
    for j in range(form.dim):
        e = [Fraction(int(i == j)) for i in range(form.dim)]
        if intmat.rational_rank(chosen + [e]) > rank:
            chosen.append(e)
            rank += 1
            picked.append(j)
    return picked


def quotient_form(form: GramForm, radical_basis: Sequence[LatticeElement]) -> GramForm:
    """The induced form on the complement of the radical spanned by leading basis vectors.

    ``radical_basis`` must lie in the kernel of the form, and the induced form must
    be nondegenerate (i.e. the radical basis spans the whole kernel).
    """
    for r in radical_basis:
        v = r.vector(form.basis)
        for j in range(form.dim):
            e = [Fraction(int(i == j)) for i in range(form.dim)]
            if form.pair(v, e) != 0:
                raise ValueError(f"{r} is not in the radical of the form")
    idx = complement_indices(form, radical_basis)
    sub = GramForm(tuple(form.basis[j] for j in idx), tuple(tuple(form.gram[i][j] for j in idx) for i in idx))
    if sub.dim and intmat.determinant(sub.gram) == 0:
        raise ValueError("radical basis does not span the kernel; induced form is degenerate")
    return sub
