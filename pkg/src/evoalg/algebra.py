"""Evolution algebras over Q with a fixed natural basis.

In the natural basis ``e_i * e_j = 0`` for ``i != j`` and
``e_i * e_i = sum_k C[i][k] e_k``, so the structure matrix ``C`` determines
everything.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch
from .graph import Graph
from .linalg import det

Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class EvolutionAlgebra:
    n: int
    C: Matrix
    label: str = field(default="", compare=False)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence], label: str = "") -> "EvolutionAlgebra":
        rows = tuple(tuple(Fraction(x) for x in r) for r in matrix)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("structure matrix must be square")
        return cls(n, rows, label)

    def square(self, i: int) -> tuple[Fraction, ...]:
        """Coordinates of ``e_i * e_i``."""
        return self.C[i]

    def basis(self, i: int) -> tuple[int, ...]:
        return tuple(1 if k == i else 0 for k in range(self.n))

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.n

    def support(self, i: int) -> frozenset[int]:
        return frozenset(k for k, c in enumerate(self.C[i]) if c)

    def structure_det(self) -> Fraction:
        return Fraction(det(self.C))

    def relations(self) -> list[str]:
        """Human readable ``e_i^2 = ...`` lines with 1-based labels."""
        out = []
        for i, row in enumerate(self.C):
            terms = []
            for k, c in enumerate(row):
                if not c:
                    continue
                coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                terms.append(f"{coef}e{k + 1}")
            out.append(f"e{i + 1}^2 = " + (" + ".join(terms) if terms else "0"))
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "label": self.label,
            "C": [[f"{c.numerator}/{c.denominator}" for c in row] for row in self.C],
        }

    @classmethod
    def from_json(cls, data: dict) -> "EvolutionAlgebra":
        return cls.from_matrix([[Fraction(c) for c in row] for row in data["C"]], data.get("label", ""))


def from_graph(g: Graph) -> EvolutionAlgebra:
    """A(G): structure constants are the adjacency matrix."""
    return EvolutionAlgebra.from_matrix(g.adjacency, f"A({g.label()})")


def from_random_walk(g: Graph) -> EvolutionAlgebra:
    """A_RW(G): structure constants a_ik / deg(i), the simple random walk kernel."""
    rows = []
    for i, row in enumerate(g.adjacency):
        d = g.degrees[i]
        rows.append([Fraction(a, d) for a in row])
    return EvolutionAlgebra.from_matrix(rows, f"A_RW({g.label()})")


def multiply(alg: EvolutionAlgebra, u: Sequence, v: Sequence) -> list:
    """Product in the natural basis: ``(u*v)_k = sum_i u_i v_i c_ik``.

    Coordinates may be ints, Fractions or RadicalScalars.
    """
    if len(u) != alg.n or len(v) != alg.n:
        raise DimensionMismatch(f"expected vectors of length {alg.n}")
    out: list = [0] * alg.n
    for i in range(alg.n):
        if not u[i] or not v[i]:
            continue
        w = u[i] * v[i]
        for k, c in enumerate(alg.C[i]):
            if c:
                out[k] = out[k] + w * c
    return out


def is_markov(alg: EvolutionAlgebra) -> bool:
    return all(0 <= c <= 1 for row in alg.C for c in row) and all(sum(row) == 1 for row in alg.C)
