"""Linear maps between evolution algebras and exact verification of their properties.

A map is stored by its matrix ``T``: row ``i`` holds the coordinates of
``f(e_i)`` in the target's natural basis, so ``f(u) = u^T T``.

All checks only look at basis pairs. Both products and ``f`` are bilinear,
hence ``f(u*v) = f(u)*f(v)`` for all ``u, v`` iff it holds for every pair
``(e_i, e_j)``; the test suite cross-checks this on random vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import EvolutionAlgebra, from_graph, from_random_walk, multiply
from .errors import DimensionMismatch, NotRegularOrBiregular, SingularMap
from .graph import Graph, RegularityClass, classify
from .linalg import det
from .radical import RadicalScalar, as_radical

RMatrix = tuple[tuple[RadicalScalar, ...], ...]


@dataclass(frozen=True)
class LinearMap:
    source: EvolutionAlgebra
    target: EvolutionAlgebra
    T: RMatrix

    def __post_init__(self):
        n = self.source.n
        if self.target.n != n or len(self.T) != n or any(len(r) != n for r in self.T):
            raise DimensionMismatch("map matrix must be n x n between algebras of equal dimension")

    @property
    def n(self) -> int:
        return self.source.n

    # ---------------------------------------------------------- builders

    @classmethod
    def from_matrix(cls, source, target, matrix: Sequence[Sequence]) -> "LinearMap":
        return cls(source, target, tuple(tuple(as_radical(x) for x in row) for row in matrix))

    @classmethod
    def diagonal(cls, source, target, entries: Sequence) -> "LinearMap":
        n = len(entries)
        return cls.from_matrix(
            source, target, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @classmethod
    def monomial(cls, source, target, perm: Sequence[int], alphas: Sequence) -> "LinearMap":
        """``f(e_i) = alphas[i] * e_{perm[i]}``."""
        n = len(perm)
        rows = [[0] * n for _ in range(n)]
        for i, (p, a) in enumerate(zip(perm, alphas)):
            rows[i][p] = a
        return cls.from_matrix(source, target, rows)

    @classmethod
    def identity(cls, source, target) -> "LinearMap":
        return cls.diagonal(source, target, [1] * source.n)

    @classmethod
    def null(cls, source, target) -> "LinearMap":
        return cls.from_matrix(source, target, [[0] * source.n for _ in range(source.n)])

    def scaled(self, c) -> "LinearMap":
        return LinearMap(self.source, self.target, tuple(tuple(x * c for x in r) for r in self.T))

    def retarget(self, source: EvolutionAlgebra, target: EvolutionAlgebra) -> "LinearMap":
        return LinearMap(source, target, self.T)

    # ----------------------------------------------------------- queries

    def monomial_form(self) -> tuple[tuple[int, ...], tuple[RadicalScalar, ...]] | None:
        """``(perm, alphas)`` when every row and column has exactly one nonzero entry."""
        perm = []
        alphas = []
        for row in self.T:
            nz = [k for k, x in enumerate(row) if x]
            if len(nz) != 1:
                return None
            perm.append(nz[0])
            alphas.append(row[nz[0]])
        if len(set(perm)) != self.n:
            return None
        return tuple(perm), tuple(alphas)

    @property
    def is_monomial(self) -> bool:
        return self.monomial_form() is not None

    @property
    def is_null(self) -> bool:
        return all(not x for row in self.T for x in row)

    def to_json(self) -> dict:
        return {
            "source": self.source.label,
            "target": self.target.label,
            "n": self.n,
            "T": [[x.to_json() for x in row] for row in self.T],
        }

    @classmethod
    def from_json(cls, data: dict, source, target) -> "LinearMap":
        return cls(source, target, tuple(tuple(RadicalScalar.from_json(x) for x in row) for row in data["T"]))

    def __str__(self) -> str:
        mono = self.monomial_form()
        head = f"{self.source.label} -> {self.target.label}"
        if mono is not None:
            perm, alphas = mono
            body = ", ".join(f"e{i + 1} -> ({a}) e{p + 1}" for i, (p, a) in enumerate(zip(perm, alphas)))
            return f"{head}: {body}"
        return f"{head}: T = {[[str(x) for x in r] for r in self.T]}"


# ----------------------------------------------------------- evaluation


def apply(f: LinearMap, u: Sequence) -> list[RadicalScalar]:
    if len(u) != f.n:
        raise DimensionMismatch(f"expected a vector of length {f.n}")
    out = [RadicalScalar(0)] * f.n
    for i, ui in enumerate(u):
        if not ui:
            continue
        for k, t in enumerate(f.T[i]):
            if t:
                out[k] = out[k] + t * ui
    return out


def compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """``g o f`` (apply ``f`` first)."""
    if f.target.C != g.source.C:
        raise DimensionMismatch("target of f differs from source of g")
    n = f.n
    rows = []
    for i in range(n):
        row = []
        for k in range(n):
            acc = RadicalScalar(0)
            for j in range(n):
                if f.T[i][j] and g.T[j][k]:
                    acc = acc + f.T[i][j] * g.T[j][k]
            row.append(acc)
        rows.append(tuple(row))
    return LinearMap(f.source, g.target, tuple(rows))


def _product_of_images(target: EvolutionAlgebra, row_a, row_b) -> list[RadicalScalar]:
    """``f(e_i) * g(e_j)`` in the target from the two image rows."""
    out = [RadicalScalar(0)] * target.n
    for k in range(target.n):
        if row_a[k] and row_b[k]:
            w = row_a[k] * row_b[k]
            for r, c in enumerate(target.C[k]):
                if c:
                    out[r] = out[r] + w * c
    return out


def _image_of_square(h: LinearMap, i: int) -> list[RadicalScalar]:
    """``h(e_i * e_i)`` computed in the source then mapped."""
    return apply(h, h.source.C[i])


def is_homomorphism(f: LinearMap) -> bool:
    n = f.n
    for i in range(n):
        if _product_of_images(f.target, f.T[i], f.T[i]) != _image_of_square(f, i):
            return False
        for j in range(i + 1, n):
            if any(_product_of_images(f.target, f.T[i], f.T[j])):
                return False
    return True


def homomorphism_defects(f: LinearMap) -> list[tuple[int, int]]:
    """Basis pairs ``(i, j)``, ``i <= j``, where ``f(e_i e_j) != f(e_i) f(e_j)``."""
    bad = []
    for i in range(f.n):
        for j in range(i, f.n):
            lhs = _product_of_images(f.target, f.T[i], f.T[j])
            rhs = _image_of_square(f, i) if i == j else [0] * f.n
            if lhs != rhs:
                bad.append((i, j))
    return bad


def _subset_det(T: RMatrix) -> RadicalScalar:
    """Division-free determinant, Laplace expansion memoised over used-column sets.

    Rows are consumed in order; picking column ``c`` for the current row adds one
    inversion per already used column to the right of ``c``.
    """
    n = len(T)
    minors: dict[int, RadicalScalar] = {0: RadicalScalar(1)}
    for row in T:
        nxt: dict[int, RadicalScalar] = {}
        for mask, val in minors.items():
            for c in range(n):
                if mask >> c & 1 or not row[c]:
                    continue
                term = row[c] * val
                if bin(mask >> (c + 1)).count("1") % 2:
                    term = -term
                new = mask | (1 << c)
                nxt[new] = nxt.get(new, RadicalScalar(0)) + term
        minors = {m: v for m, v in nxt.items() if v}
    return minors.get((1 << n) - 1, RadicalScalar(0))


def map_det(f: LinearMap) -> RadicalScalar:
    if all(x.is_rational for row in f.T for x in row):
        return RadicalScalar(det([[x.to_fraction() for x in row] for row in f.T]))
    return _subset_det(f.T)


def is_invertible(f: LinearMap) -> bool:
    if f.monomial_form() is not None:
        return True
    return bool(map_det(f))


def is_isomorphism(f: LinearMap) -> bool:
    return is_invertible(f) and is_homomorphism(f)


def is_isotopism(f: LinearMap, g: LinearMap, h: LinearMap) -> bool:
    """``f(u) * g(v) = h(u * v)`` for all basis pairs, with all three maps invertible."""
    for name, m in (("f", f), ("g", g), ("h", h)):
        if not is_invertible(m):
            raise SingularMap(f"{name} is not invertible")
    if not (f.source.C == g.source.C == h.source.C and f.target.C == g.target.C == h.target.C):
        raise DimensionMismatch("isotopism maps must share source and target")
    n = f.n
    for i in range(n):
        for j in range(n):
            lhs = _product_of_images(f.target, f.T[i], g.T[j])
            rhs = _image_of_square(h, i) if i == j else [0] * n
            if lhs != rhs:
                return False
    return True


def isotopism_kind(f: LinearMap, g: LinearMap, h: LinearMap) -> str | None:
    """``'isomorphism'``, ``'strong'``, ``'isotopism'`` or None."""
    if not is_isotopism(f, g, h):
        return None
    if f.T == g.T == h.T:
        return "isomorphism"
    if f.T == g.T:
        return "strong"
    return "isotopism"


# -------------------------------------------------------------- witnesses


def strong_isotopy_witness(g: Graph) -> tuple[LinearMap, LinearMap]:
    """``f(e_i) = sqrt(deg i) e_i`` and ``h = id``, both from A(G) to A_RW(G)."""
    a, rw = from_graph(g), from_random_walk(g)
    f = LinearMap.diagonal(a, rw, [RadicalScalar.sqrt(d) for d in g.degrees])
    h = LinearMap.identity(a, rw)
    return f, h


def biregular_iso_witness(g: Graph, cls: RegularityClass | None = None) -> LinearMap:
    """Diagonal isomorphism for regular and biregular graphs.

    Regular(d): ``A_RW(G) -> A(G)`` with ``f(e_i) = e_i / d``.
    Biregular(d1, d2): ``A(G) -> A_RW(G)`` with ``f(e_i) = (d1^2 d2)^(1/3) e_i``
    on the first side and ``(d1 d2^2)^(1/3) e_i`` on the second.
    """
    cls = classify(g) if cls is None else cls
    if cls.is_regular:
        return LinearMap.diagonal(from_random_walk(g), from_graph(g), [Fraction(1, cls.d1)] * g.n)
    if cls.is_biregular:
        d1, d2 = cls.d1, cls.d2
        s1 = RadicalScalar.cbrt(d1 * d1 * d2)
        s2 = RadicalScalar.cbrt(d1 * d2 * d2)
        entries = [s1 if i in cls.part1 else s2 for i in range(g.n)]
        return LinearMap.diagonal(from_graph(g), from_random_walk(g), entries)
    raise NotRegularOrBiregular(f"{g.label()} is neither regular nor biregular")


def complete_bipartite_witness(m: int, n: int, perm: Sequence[int] | None = None) -> LinearMap:
    """Side-preserving monomial isomorphism ``A_RW(K_{m,n}) -> A(K_{m,n})``.

    Scalars ``m^(-1/3) n^(-2/3)`` on the m-side and ``m^(-2/3) n^(-1/3)`` on the n-side.
    """
    from .graph import complete_bipartite

    g = complete_bipartite(m, n)
    perm = tuple(range(m + n)) if perm is None else tuple(perm)
    if any((perm[i] < m) != (i < m) for i in range(m + n)):
        raise ValueError("permutation must preserve the two sides")
    a1 = RadicalScalar.power(m, Fraction(-1, 3)) * RadicalScalar.power(n, Fraction(-2, 3))
    a2 = RadicalScalar.power(m, Fraction(-2, 3)) * RadicalScalar.power(n, Fraction(-1, 3))
    alphas = [a1 if i < m else a2 for i in range(m + n)]
    return LinearMap.monomial(from_random_walk(g), from_graph(g), perm, alphas)


def verify_bilinearity(f: LinearMap, u: Sequence, v: Sequence) -> bool:
    """Direct check ``f(u*v) == f(u)*f(v)`` on explicit vectors."""
    lhs = apply(f, multiply(f.source, u, v))
    rhs = multiply(f.target, apply(f, u), apply(f, v))
    return [as_radical(x) for x in lhs] == [as_radical(x) for x in rhs]
