"""Exact integer and rational linear algebra on row vectors.

Everything here works on plain Python lists of ``int`` or ``Fraction`` so that
results are exact.  Matrices are lists of rows; lattices are described by the
rows that generate them.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

IntRow = List[int]
RatRow = List[Fraction]


def lcm(a: int, b: int) -> int:
    """Least common multiple of two non-negative integers (lcm(0, b) = b)."""
    if a == 0:
        return b
    if b == 0:
        return a
    return a * b // gcd(a, b)


def _echelon(rows: List[IntRow], ncols: int) -> Tuple[List[IntRow], int]:
    """Integer row-reduce ``rows`` in place, pivoting on the first ``ncols`` columns.

    Only unimodular row operations are used, so appended columns (for example an
    identity block) record the transformation.  Returns the rows and the number
    of pivot rows; rows from that index on are zero in the pivot columns.
    """
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        if r >= nrows:
            break
        while True:
            nz = [i for i in range(r, nrows) if rows[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(rows[i][col]))
            rows[r], rows[piv] = rows[piv], rows[r]
            done = True
            p = rows[r][col]
            for i in range(r + 1, nrows):
                if rows[i][col]:
                    q = rows[i][col] // p
                    if q:
                        ri, rr = rows[i], rows[r]
                        rows[i] = [a - q * b for a, b in zip(ri, rr)]
                    if rows[i][col]:
                        done = False
            if done:
                break
        if r < nrows and rows[r][col] != 0:
            if rows[r][col] < 0:
                rows[r] = [-a for a in rows[r]]
            p = rows[r][col]
            for i in range(r):
                q = rows[i][col] // p
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
            r += 1
    return rows, r


def hnf(rows: Iterable[Sequence[int]], ncols: Optional[int] = None) -> List[IntRow]:
    """Row Hermite normal form of the lattice spanned by integer ``rows``.

    The result lists a basis of the lattice: pivots are positive and strictly move
    right, entries above a pivot lie in ``[0, pivot)``.  Zero rows are dropped.
    """
    work = [list(map(int, r)) for r in rows]
    if ncols is None:
        ncols = len(work[0]) if work else 0
    if not work:
        return []
    work, rank = _echelon(work, ncols)
    return [row for row in work[:rank]]


def left_kernel(mat: Sequence[Sequence[int]]) -> List[IntRow]:
    """A ℤ-basis (in Hermite form) of ``{x ∈ ℤ^m : x · mat = 0}``."""
    m = len(mat)
    if m == 0:
        return []
    n = len(mat[0])
    aug = [list(map(int, mat[i])) + [1 if j == i else 0 for j in range(m)] for i in range(m)]
    aug, rank = _echelon(aug, n)
    kernel = [row[n:] for row in aug[rank:]]
    return hnf(kernel, m) if kernel else []


def unimodular_transform(mat: Sequence[Sequence[int]]) -> Tuple[List[IntRow], List[IntRow], int]:
    """Return ``(H, U, rank)`` with ``U · mat = H`` and ``U`` unimodular.

    ``H`` is in row echelon form; its rows from ``rank`` on vanish.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    aug = [list(map(int, mat[i])) + [1 if j == i else 0 for j in range(m)] for i in range(m)]
    aug, rank = _echelon(aug, n)
    return [row[:n] for row in aug], [row[n:] for row in aug], rank


def common_denominator(values: Iterable[Fraction]) -> int:
    return reduce(lcm, (Fraction(v).denominator for v in values), 1)


def rational_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rational_row_basis(rows))


def rational_row_basis(rows: Sequence[Sequence[Fraction]]) -> List[RatRow]:
    """Reduced row echelon basis of the ℚ-span of ``rows``."""
    work = [[Fraction(x) for x in r] for r in rows]
    if not work:
        return []
    n = len(work[0])
    basis: List[RatRow] = []
    pivots: List[int] = []
    for row in work:
        row = list(row)
        for b, pc in zip(basis, pivots):
            if row[pc]:
                f = row[pc]
                row = [a - f * c for a, c in zip(row, b)]
        lead = next((j for j in range(n) if row[j]), None)
        if lead is None:
            continue
        inv = 1 / row[lead]
        row = [a * inv for a in row]
        for k, (b, pc) in enumerate(zip(basis, pivots)):
            if b[lead]:
                f = b[lead]
                basis[k] = [a - f * c for a, c in zip(b, row)]
        basis.append(row)
        pivots.append(lead)
    order = sorted(range(len(basis)), key=lambda k: pivots[k])
    return [basis[k] for k in order]


def determinant(mat: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    a = [[Fraction(x) for x in r] for r in mat]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def solve_rows(basis: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Optional[RatRow]:
    """Coefficients ``c`` with ``Σ c_i basis_i = v``, or ``None`` if ``v`` is outside the span.

    ``basis`` must be linearly independent.
    """
    k = len(basis)
    if k == 0:
        return [] if all(x == 0 for x in v) else None
    n = len(v)
    # Solve the transposed system (n equations, k unknowns) by elimination.
    a = [[Fraction(basis[i][j]) for i in range(k)] + [Fraction(v[j])] for j in range(n)]
    row = 0
    piv_cols: List[int] = []
    for c in range(k):
        piv = next((i for i in range(row, n) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][c]
        a[row] = [x * inv for x in a[row]]
        for i in range(n):
            if i != row and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[row])]
        piv_cols.append(c)
        row += 1
    if any(a[i][k] != 0 for i in range(row, n)):
        return None
    if len(piv_cols) < k:
        raise ValueError("basis rows are linearly dependent")
    out = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        out[c] = a[i][k]
    return out


def integer_inverse(mat: Sequence[Sequence[int]]) -> List[IntRow]:
    """Inverse of a unimodular integer matrix."""
    n = len(mat)
    a = [[Fraction(x) for x in mat[i]] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    out = []
    for i in range(n):
        row = a[i][n:]
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def lattice_basis(vectors: Sequence[Sequence[Fraction]]) -> List[RatRow]:
    """A ℤ-basis (Hermite form, rescaled) of the group generated by rational vectors."""
    vecs = [[Fraction(x) for x in v] for v in vectors]
    if not vecs:
        return []
    d = common_denominator(x for v in vecs for x in v)
    rows = hnf([[int(x * d) for x in v] for v in vecs], len(vecs[0]))
    return [[Fraction(x, d) for x in r] for r in rows]


def reduce_mod_hnf(v: Sequence[int], basis: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Canonical representative of ``v`` modulo a full-rank square upper-triangular HNF lattice."""
    out = list(v)
    for j, row in enumerate(basis):
        p = row[j]
        q = out[j] // p
        if q:
            out = [a - q * b for a, b in zip(out, row)]
    return tuple(out)


def triangular_exponent(basis: Sequence[Sequence[int]]) -> int:
    """Exponent of ``ℤ^n / L`` for a full-rank square upper-triangular basis of ``L``."""
    n = len(basis)
    exp = 1
    for j in range(n):
        # Solve x · basis = e_j by forward substitution on the triangular rows.
        x = [Fraction(0)] * n
        target = [Fraction(int(i == j)) for i in range(n)]
        acc = [Fraction(0)] * n
        for i in range(n):
            need = target[i] - acc[i]
            x[i] = need / basis[i][i]
            if x[i]:
                acc = [a + x[i] * b for a, b in zip(acc, basis[i])]
        exp = lcm(exp, common_denominator(x))
    return exp


class RowSolver:
    """Repeatedly solve ``Σ c_i basis_i = v`` for a fixed linearly independent ``basis``."""

    def __init__(self, basis: Sequence[Sequence[Fraction]]):
        self.basis = [[Fraction(x) for x in r] for r in basis]
        k = len(self.basis)
        n = len(self.basis[0]) if k else 0
        rref = rational_row_basis(self.basis)
        if len(rref) != k:
            raise ValueError("basis rows are linearly dependent")
        self.pivots = [next(j for j in range(n) if r[j]) for r in rref]
        square = [[row[j] for j in self.pivots] for row in self.basis]
        self._inverse = _rational_inverse(square)

    def solve(self, v: Sequence[Fraction]) -> Optional[RatRow]:
        k = len(self.basis)
        if k == 0:
            return [] if all(x == 0 for x in v) else None
        w = [Fraction(v[j]) for j in self.pivots]
        c = [sum((w[i] * self._inverse[i][j] for i in range(k) if w[i]), Fraction(0)) for j in range(k)]
        for j in range(len(v)):
            if sum((c[i] * self.basis[i][j] for i in range(k) if c[i]), Fraction(0)) != v[j]:
                return None
        return c


def _rational_inverse(mat: Sequence[Sequence[Fraction]]) -> List[RatRow]:
    n = len(mat)
    a = [[Fraction(x) for x in mat[i]] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def complete_to_unimodular(rows: Sequence[Sequence[int]], n: int) -> List[IntRow]:
    """Rows ``C`` such that ``C`` stacked over ``rows`` is unimodular.

    ``rows`` must be linearly independent and span a saturated sublattice of
    ``ℤ^n`` (e.g. the kernel of an integer form); otherwise ``ValueError``.
    """
    k = len(rows)
    if k == 0:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    cols = [[int(rows[r][c]) for r in range(k)] for c in range(n)]
    _, U, rank = unimodular_transform(cols)
    if rank != k:
        raise ValueError("rows are linearly dependent")
    W = integer_inverse([list(r) for r in zip(*U)])
    comp = [list(r) for r in W[k:]]
    if abs(determinant(comp + [list(map(int, r)) for r in rows])) != 1:
        raise ValueError("rows do not span a saturated sublattice")
    return comp
