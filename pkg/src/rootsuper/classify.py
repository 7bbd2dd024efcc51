"""Recognition of finite irreducible locally finite root supersystems.

The decision procedure:

1. split the nonzero real roots into irreducible components and name each one
   from the Dynkin diagram of a simple system (positive roots for the
   lexicographic order on coordinates, then the indecomposable ones);
2. decide real versus imaginary type by comparing the rational span of the
   real roots with that of all roots;
3. read the type off the multiset of component names (for D(2,1,λ), recover
   ``λ`` from the squared lengths of the three A₁ summands);
4. build the catalog model and search for an explicit isomorphism
   ``φ: ⟨R_model⟩ → ⟨R⟩`` with ``(φa, φb) = scalar·(a, b)`` and
   ``φ(R_model) = R``, which certifies the answer.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import intmat
from .catalog import Model, TypeLabel, build, canonical_lambda, canonical_lfrs_name, lambda_orbit
from .lattice import LatticeElement
from .rootsys import RootSet, is_irreducible

__all__ = [
    "ClassificationError",
    "ClassificationResult",
    "Isomorphism",
    "cartan_matrix",
    "cartan_type",
    "simple_system",
    "real_components",
    "is_real_type",
    "classify_lfrss",
    "canonical_lambda",
    "lambda_orbit",
    "is_isomorphic",
    "ears_type",
]

SEARCH_BUDGET = 500_000


class ClassificationError(ValueError):
    """The input is reducible, degenerate, or matches no tabulated type."""


# ---------------------------------------------------------------------------
# Finite root systems


def real_components(R: RootSet) -> List[FrozenSet[LatticeElement]]:
    """Connected components of the nonzero real roots, ordered by their least root."""
    idx = list(R._classes[1])
    P = R._pair_matrix
    seen, comps = set(), []
    for s in idx:
        if s in seen:
            continue
        seen.add(s)
        comp, queue = [s], deque([s])
        while queue:
            i = queue.popleft()
            for j in idx:
                if j not in seen and P[i][j]:
                    seen.add(j)
                    comp.append(j)
                    queue.append(j)
        comps.append(frozenset(R._roots[i] for i in comp))
    return comps


def simple_system(R: RootSet, roots: Iterable[LatticeElement]) -> List[LatticeElement]:
    """Indecomposable positive roots of a finite root system, positivity being the
    lexicographic sign of the coordinate vector."""
    vecs = [R._ivec(r) for r in roots if not r.is_zero()]
    pos = [v for v in vecs if next(x for x in v if x) > 0]
    posset = set(pos)
    sums = {tuple(x + y for x, y in zip(a, b)) for a in pos for b in pos}
    simple = sorted((v for v in posset if v not in sums), reverse=True)
    return [R._elem(v) for v in simple]


def cartan_matrix(R: RootSet, simple: Sequence[LatticeElement]) -> List[List[int]]:
    """``A_ij = 2(α_i, α_j)/(α_j, α_j)``."""
    out = []
    for a in simple:
        row = []
        for b in simple:
            v = 2 * R.pair(a, b) / R.pair(b, b)
            if v.denominator != 1:
                raise ClassificationError("simple system has non-integral Cartan entries")
            row.append(int(v))
        out.append(row)
    return out


_ROOT_COUNT = {"A": lambda n: n * (n + 1), "B": lambda n: 2 * n * n, "C": lambda n: 2 * n * n,
               "D": lambda n: 2 * n * (n - 1), "BC": lambda n: 2 * n * n + 2 * n,
               "G": lambda n: 12, "F": lambda n: 48, "E": lambda n: {6: 72, 7: 126, 8: 240}[n]}


def cartan_type(R: RootSet, roots: Optional[Iterable[LatticeElement]] = None) -> str:
    """Canonical Cartan name (``"A3"``, ``"BC2"``, ``"G2"``, …) of an irreducible finite root system.

    ``roots`` defaults to the nonzero real roots of ``R``.
    """
    roots = [r for r in (R.real if roots is None else roots) if not r.is_zero()]
    if not roots:
        raise ClassificationError("empty root system")
    members = set(roots)
    reduced = not any(2 * r in members for r in roots)
    simple = simple_system(R, roots)
    n = len(simple)
    A = cartan_matrix(R, simple)
    if not reduced:
        name = ("BC", n)
    else:
        name = _dynkin_name(R, simple, A)
    fam, rank = canonical_lfrs_name(*name)
    if len(roots) != _ROOT_COUNT[fam](rank):
        raise ClassificationError(f"{len(roots)} roots do not form a root system of type {fam}{rank}")
    return f"{fam}{rank}"


def _dynkin_name(R: RootSet, simple: Sequence[LatticeElement], A: List[List[int]]) -> Tuple[str, int]:
    n = len(simple)
    if n == 1:
        return "A", 1
    adj = {i: [j for j in range(n) if j != i and A[i][j]] for i in range(n)}
    bond = {(i, j): A[i][j] * A[j][i] for i in range(n) for j in adj[i]}
    degrees = [len(adj[i]) for i in range(n)]
    if any(m == 3 for m in bond.values()):
        if n != 2:
            raise ClassificationError("triple bond outside G2")
        return "G", 2
    doubles = [(i, j) for (i, j), m in bond.items() if m == 2 and i < j]
    if len(doubles) > 1 or max(degrees) > 3 or any(m > 3 for m in bond.values()):
        raise ClassificationError("not a Dynkin diagram")
    if doubles:
        i, j = doubles[0]
        if n == 2:
            return "B", 2
        if degrees[i] == 2 and degrees[j] == 2:
            if n != 4:
                raise ClassificationError("double bond in the middle outside F4")
            return "F", 4
        leaf = i if degrees[i] == 1 else j
        other = j if leaf == i else i
        short = abs(R.pair(simple[leaf], simple[leaf])) < abs(R.pair(simple[other], simple[other]))
        return ("B" if short else "C"), n
    branches = [i for i in range(n) if degrees[i] == 3]
    if not branches:
        return "A", n
    if len(branches) > 1:
        raise ClassificationError("not a Dynkin diagram")
    b = branches[0]
    arms = []
    for start in adj[b]:
        length, prev, cur = 1, b, start
        while True:
            nxt = [k for k in adj[cur] if k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return "D", n
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return "E", n
    raise ClassificationError("not a Dynkin diagram")


# ---------------------------------------------------------------------------
# Supersystems


def _span_rank(R: RootSet, roots: Iterable[LatticeElement]) -> int:
    return intmat.rational_rank([R._ivec(r) for r in roots])


def is_real_type(R: RootSet) -> bool:
    """``span_ℚ R_re = ℚ ⊗ ⟨R⟩``."""
    return _span_rank(R, R.real) == _span_rank(R, R.roots)


def _parse_name(name: str) -> Tuple[str, int]:
    fam = name.rstrip("0123456789")
    return fam, int(name[len(fam):])


def _is_c(name: str, n: int) -> bool:
    """Whether ``name`` is the canonical name of C_n."""
    return name == "{}{}".format(*canonical_lfrs_name("C", n))


def _c_rank(name: str) -> Optional[int]:
    fam, r = _parse_name(name)
    if fam == "C" or name == "B2":
        return r
    return None


def _label_from_components(real_type: bool, names: Sequence[str], R: RootSet, comps) -> Optional[TypeLabel]:
    """Table lookup from the component names of the real part."""
    count = Counter(names)
    parsed = sorted(_parse_name(n) for n in names)
    if not real_type:
        if len(names) == 1:
            fam, r = parsed[0]
            if fam == "A":
                return TypeLabel("Adot", (0, r + 1))
            c = _c_rank(names[0])
            if c is not None and c >= 2:
                return TypeLabel("Cdot", (0, c))
            return None
        if len(names) == 2 and all(f == "A" for f, _ in parsed) and parsed[0][1] != parsed[1][1]:
            return TypeLabel("Adot", (parsed[0][1] + 1, parsed[1][1] + 1))
        return None
    if len(names) == 3:
        if count["A1"] == 3:
            norms = [_component_norm(R, c) for c in comps]
            if sum(norms) != 0:
                return None
            return TypeLabel("D", (2, 1), canonical_lambda(norms[1] / norms[0]))
        if count["A1"] == 2:
            other = next(n for n in names if n != "A1")
            c = _c_rank(other)
            if c is not None and c >= 2:
                return TypeLabel("D", (2, c))
        return None
    if len(names) != 2:
        return None
    (f1, r1), (f2, r2) = parsed
    n1, n2 = f"{f1}{r1}", f"{f2}{r2}"
    if n1 == n2 and f1 == "A":
        return TypeLabel("A", (r1, r1))
    pair = {n1, n2}
    if "A1" in pair:
        other = n2 if n1 == "A1" else n1
        fo, ro = _parse_name(other)
        if other == "B3":
            return TypeLabel("AB", (1, 3))
        if fo == "BC":
            return TypeLabel("B", (1, ro))
        if other == "A3":
            return TypeLabel("D", (1, 3))
        if fo == "D":
            return TypeLabel("D", (1, ro))
        c = _c_rank(other)
        if c is not None and c >= 2:
            return TypeLabel("C", (1, c))
        return None
    if "BC1" in pair:
        other = n2 if n1 == "BC1" else n1
        fo, ro = _parse_name(other)
        if other == "G2":
            return TypeLabel("G", (1, 2))
        if other == "BC1":
            return TypeLabel("BC", (1, 1))
        if fo == "BC":
            return TypeLabel("BC", (1, ro))
        if fo == "B" or other == "B2":
            return TypeLabel("B", (ro, 1))
        return None
    if f1 == "BC" and f2 == "BC":
        return TypeLabel("BC", (min(r1, r2), max(r1, r2)))
    bc = [n for n in (n1, n2) if n.startswith("BC")]
    if len(bc) == 1:
        other = n2 if n1 == bc[0] else n1
        fo, ro = _parse_name(other)
        if fo == "B" and ro >= 2:
            return TypeLabel("B", (ro, _parse_name(bc[0])[1]))
        return None
    cs = [_c_rank(n) for n in (n1, n2)]
    ds = [n for n in (n1, n2) if n == "A3" or _parse_name(n)[0] == "D"]
    if len(ds) == 1:
        other = n2 if n1 == ds[0] else n1
        c = _c_rank(other)
        if c is not None:
            fd, rd = _parse_name(ds[0])
            return TypeLabel("D", (3 if ds[0] == "A3" else rd, c))
        return None
    if all(c is not None for c in cs):
        return TypeLabel("C", (min(cs), max(cs)))
    return None


def _component_norm(R: RootSet, comp: Iterable[LatticeElement]) -> Fraction:
    r = min(comp, key=R.key)
    return R.pair(r, r)


@dataclass(frozen=True)
class ClassificationResult:
    """The type, the form-scaling witness and the images of the model's base.

    ``images[i]`` is the image of ``model.base.elements[i]``; the map satisfies
    ``(φa, φb)_input = scalar·(a, b)_model`` and carries the model's roots onto
    the input roots exactly.
    """

    label: TypeLabel
    scalar: Fraction
    model: Model
    images: Tuple[LatticeElement, ...]

    @property
    def basis_map(self) -> Dict[LatticeElement, LatticeElement]:
        return dict(zip(self.model.base.elements, self.images))

    def map_element(self, x: LatticeElement) -> LatticeElement:
        """``φ(x)`` for an element ``x`` of the model's lattice."""
        basis = self.model.rootset.basis
        coords = intmat.RowSolver([p.vector(basis) for p in self.model.base.elements]).solve(x.vector(basis))
        if coords is None or any(c.denominator != 1 for c in coords):
            raise ValueError(f"{x} is not in the model lattice")
        out = LatticeElement()
        for c, img in zip(coords, self.images):
            out = out + img * c
        return out


def _find_isomorphism(model: Model, R: RootSet) -> Optional[Tuple[Fraction, Tuple[LatticeElement, ...]]]:
    """Backtracking search for ``φ`` on the model's integral base."""
    M = model.rootset
    Pi = list(model.base.elements)
    k = len(Pi)
    if k != R.rank or len(M) != len(R):
        return None
    mgram = [[M.pair(a, b) for b in Pi] for a in Pi]
    # Visit order: a real element first, then by connectivity.
    first = next((i for i in range(k) if mgram[i][i] != 0), None)
    if first is None:
        return None
    order = [first]
    while len(order) < k:
        rest = [i for i in range(k) if i not in order]
        nxt = next((i for i in rest if any(mgram[i][j] for j in order)), rest[0])
        order.append(nxt)
    # Integer Π-coordinates of every model root, grouped by the last base element they use.
    solver = intmat.RowSolver([p.vector(M.basis) for p in Pi])
    coords = []
    for r in M.roots:
        c = solver.solve(r.vector(M.basis))
        if c is None or any(x.denominator != 1 for x in c):
            return None
        coords.append([int(x) for x in c])
    rank_of = {i: n for n, i in enumerate(order)}
    checks: List[List[List[int]]] = [[] for _ in range(k)]
    for c in coords:
        used = [rank_of[i] for i in range(k) if c[i]]
        checks[max(used) if used else 0].append(c)

    P = R._pair_matrix
    vec, pos = R._vec, R._pos
    n_in = len(R)
    dim = len(R.basis)
    images: List[Optional[int]] = [None] * k
    state = {"r": None, "nodes": 0}
    # Try the input root with the same coordinates first, when bases agree.
    same = {}
    if R.basis == M.basis:
        for i, p in enumerate(Pi):
            same[i] = R._index.get(p)

    def consistent(step: int, cand: int) -> bool:
        i, r = order[step], state["r"]
        if P[cand][cand] != r * mgram[i][i]:
            return False
        return all(P[cand][images[order[s]]] == r * mgram[i][order[s]] for s in range(step))

    def image_ok(step: int) -> bool:
        for c in checks[step]:
            v = [0] * dim
            for i in range(k):
                if c[i]:
                    w = vec[images[i]]
                    for t in range(dim):
                        v[t] += c[i] * w[t]
            if tuple(v) not in pos:
                return False
        return True

    def search(step: int) -> bool:
        if step == k:
            return True
        i = order[step]
        cands = list(range(n_in))
        pref = same.get(i)
        if pref is not None:
            cands.remove(pref)
            cands.insert(0, pref)
        for cand in cands:
            state["nodes"] += 1
            if state["nodes"] > SEARCH_BUDGET:
                raise ClassificationError("isomorphism search budget exhausted")
            if any(images[order[s]] == cand for s in range(step)):
                continue
            set_r = step == 0
            if set_r:
                if P[cand][cand] == 0:
                    continue
                state["r"] = Fraction(P[cand][cand]) / mgram[i][i]
            if consistent(step, cand):
                images[i] = cand
                if image_ok(step) and search(step + 1):
                    return True
                images[i] = None
            if set_r:
                state["r"] = None
        return False

    if not search(0):
        return None
    # Final check: the image of the model root set is the input root set.
    img = set()
    for c in coords:
        v = [0] * dim
        for i in range(k):
            if c[i]:
                w = vec[images[i]]
                for t in range(dim):
                    v[t] += c[i] * w[t]
        img.add(tuple(v))
    if img != set(vec):
        return None
    scale = R._den ** 2 * intmat.common_denominator(x for row in R.form.gram for x in row)
    return state["r"] / scale, tuple(R._roots[images[i]] for i in range(k))


@lru_cache(maxsize=512)
def classify_lfrss(R: RootSet) -> ClassificationResult:
    """Type of a finite irreducible locally finite root supersystem, with an explicit witness."""
    if not R.is_nondegenerate():
        raise ClassificationError("the form is degenerate on ⟨R⟩")
    if not is_irreducible(R):
        raise ClassificationError("the root supersystem is not irreducible")
    comps = real_components(R)
    names = [cartan_type(R, c) for c in comps]
    if not R.nonsingular:
        if len(names) != 1:
            raise ClassificationError("reducible root system")
        label = TypeLabel.parse(names[0])
    else:
        label = _label_from_components(is_real_type(R), names, R, comps)
        if label is None:
            raise ClassificationError(f"no tabulated type has real part {' + '.join(sorted(names))}")
    label = label.canonical()
    model = build(label)
    found = _find_isomorphism(model, R)
    if found is None:
        raise ClassificationError(f"real part matches {label} but no isomorphism to the model exists")
    scalar, images = found
    return ClassificationResult(label, scalar, model, images)


@dataclass(frozen=True)
class Isomorphism:
    """A bijection ``ψ: R₁ → R₂`` extending to a group isomorphism, with ``(ψx, ψy)₂ = scalar·(x, y)₁``."""

    mapping: Dict[LatticeElement, LatticeElement]
    scalar: Fraction

    def __call__(self, x: LatticeElement) -> LatticeElement:
        return self.mapping[x]


def is_isomorphic(R1: RootSet, R2: RootSet) -> Optional[Isomorphism]:
    """Compare canonical labels; on a match compose the two model maps."""
    c1, c2 = classify_lfrss(R1), classify_lfrss(R2)
    if c1.label != c2.label:
        return None
    model = c1.model
    # ψ = φ₂ ∘ φ₁⁻¹ on roots.
    inverse1 = {c1.map_element(r): r for r in model.rootset.roots}
    mapping = {x: c2.map_element(inverse1[x]) for x in R1.roots}
    return Isomorphism(mapping, c2.scalar / c1.scalar)


def ears_type(E) -> TypeLabel:
    """The type of an extended affine root supersystem: the type of its quotient by the radical."""
    from .extaffine import quotient_ears

    return classify_lfrss(quotient_ears(E)).label
