"""Isomorphism decisions between A_RW(G) and A(G), and monomial automorphisms.

A monomial map ``f(e_i) = alpha_i e_{pi(i)}`` from A_RW(G) to A(G) is a
homomorphism iff for all i, k

    a[i][pi^-1(k)] * alpha[pi^-1(k)] == deg(i) * alpha_i**2 * a[pi(i)][k].

Its zero pattern says exactly that ``pi`` is a graph automorphism; what is
left is ``alpha_l = deg(i) * alpha_i**2`` for every edge (i, l), which does
not involve ``pi`` at all.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import config
from .algebra import EvolutionAlgebra, from_graph, from_random_walk
from .errors import NotRegular, SingularStructureMatrix
from .graph import Graph, Permutation, RegularityClass, classify, graph_automorphisms
from .linalg import det, solve_linear
from .maps import LinearMap, biregular_iso_witness, is_homomorphism, is_isomorphism
from .radical import RadicalScalar


@dataclass(frozen=True)
class CondPiSolution:
    pi: Permutation
    alphas: tuple[RadicalScalar, ...]

    def to_map(self, g: Graph) -> LinearMap:
        """The monomial map ``A_RW(G) -> A(G)`` it encodes."""
        return LinearMap.monomial(from_random_walk(g), from_graph(g), self.pi, self.alphas)

    def to_json(self) -> dict:
        return {"pi": [p + 1 for p in self.pi], "alphas": [a.to_json() for a in self.alphas]}


def inverse_permutation(pi: Sequence[int]) -> Permutation:
    inv = [0] * len(pi)
    for i, p in enumerate(pi):
        inv[p] = i
    return tuple(inv)


def cycle_notation(pi: Sequence[int]) -> str:
    """1-based cycle notation, ``()`` for the identity."""
    seen = set()
    cycles = []
    for start in range(len(pi)):
        if start in seen or pi[start] == start:
            seen.add(start)
            continue
        cyc = []
        v = start
        while v not in seen:
            seen.add(v)
            cyc.append(str(v + 1))
            v = pi[v]
        cycles.append("(" + " ".join(cyc) + ")")
    return "".join(cycles) or "()"


def satisfies_support_condition(g: Graph, pi: Sequence[int]) -> bool:
    """Zero pattern of the monomial condition: a[i][pi^-1(k)] != 0 iff a[pi(i)][k] != 0."""
    inv = inverse_permutation(pi)
    a = g.adjacency
    return all(
        bool(a[i][inv[k]]) == bool(a[pi[i]][k]) for i in range(g.n) for k in range(g.n)
    )


def satisfies_condpi(g: Graph, pi: Sequence[int], alphas: Sequence[RadicalScalar]) -> bool:
    inv = inverse_permutation(pi)
    a = g.adjacency
    for i in range(g.n):
        rhs_scale = alphas[i] * alphas[i] * g.degrees[i]
        for k in range(g.n):
            lhs = alphas[inv[k]] if a[i][inv[k]] else 0
            rhs = rhs_scale if a[pi[i]][k] else 0
            if lhs != rhs:
                return False
    return True


def _real_roots(R: RadicalScalar, m: int) -> list[RadicalScalar]:
    """Real solutions of ``x**m == R`` for a monomial ``R`` and ``m != 0``."""
    if m < 0:
        return _real_roots(R.inverse(), -m)
    if R.sign() > 0:
        root = R.root(m)
        return [root, -root] if m % 2 == 0 else [root]
    if m % 2 == 0:
        return []
    return [-((-R).root(m))]


@lru_cache(maxsize=1024)
def propagate_scalars(g: Graph) -> tuple[RadicalScalar, ...] | None:
    """Nonzero reals with ``alpha_l = deg(i) alpha_i^2`` on every edge, or None.

    Every alpha is written as ``coef_v * x**(2**depth_v)`` along a BFS tree from
    vertex 0 (``x = alpha_0``). Each directed edge then reads
    ``x**m == R`` with ``m = 2**depth_l - 2**(depth_i + 1)``; the equation with
    the smallest nonzero ``|m|`` supplies the candidate roots and every other
    equation is checked exactly.
    """
    n = g.n
    deg = g.degrees
    depth = [-1] * n
    coef: list[RadicalScalar | None] = [None] * n
    depth[0] = 0
    coef[0] = RadicalScalar(1)
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in sorted(g.neighbors[u]):
            if depth[v] < 0:
                depth[v] = depth[u] + 1
                coef[v] = coef[u] * coef[u] * deg[u]
                queue.append(v)

    equations = []
    for i in range(n):
        for l in sorted(g.neighbors[i]):
            m = 2 ** depth[l] - 2 ** (depth[i] + 1)
            R = coef[i] * coef[i] * deg[i] / coef[l]
            if m == 0:
                if R != 1:
                    return None
            else:
                equations.append((abs(m), m, i, l, R))
    equations.sort(key=lambda e: (e[0], e[2], e[3]))
    _, m, _, _, R = equations[0]
    for x in sorted(_real_roots(R, m), key=lambda r: -r.sign()):
        alphas = tuple(coef[v] * x ** (2 ** depth[v]) for v in range(n))
        if all(alphas[l] == deg[i] * alphas[i] * alphas[i] for i in range(n) for l in g.neighbors[i]):
            return alphas
    return None


def condpi_solve(g: Graph, pi: Sequence[int]) -> CondPiSolution | None:
    """Nonzero scalars making ``f_pi: A_RW(G) -> A(G)`` an isomorphism, if any."""
    pi = tuple(pi)
    if sorted(pi) != list(range(g.n)) or not satisfies_support_condition(g, pi):
        return None
    alphas = propagate_scalars(g)
    if alphas is None or not satisfies_condpi(g, pi, alphas):
        return None
    return CondPiSolution(pi, alphas)


def monomial_iso_search(g: Graph, bound: int | None = -1) -> list[CondPiSolution]:
    """Every monomial isomorphism ``A_RW(G) -> A(G)``, one per admissible permutation."""
    autos = graph_automorphisms(g, bound)
    if propagate_scalars(g) is None:
        return []
    out = [s for pi in autos if (s := condpi_solve(g, pi)) is not None]
    return sorted(out, key=lambda s: s.pi)


# ------------------------------------------------------- automorphisms of E


def _support_preserving_perms(C) -> list[Permutation]:
    n = len(C)
    nz = [[bool(C[i][j]) for j in range(n)] for i in range(n)]
    sig = [
        (nz[i][i], sum(nz[i]), sum(nz[k][i] for k in range(n))) for i in range(n)
    ]
    image = [-1] * n
    used = [False] * n
    out: list[Permutation] = []

    def extend(v: int) -> None:
        if v == n:
            out.append(tuple(image))
            return
        for w in range(n):
            if used[w] or sig[w] != sig[v]:
                continue
            if any(nz[u][v] != nz[image[u]][w] or nz[v][u] != nz[w][image[u]] for u in range(v)):
                continue
            image[v] = w
            used[w] = True
            extend(v + 1)
            used[w] = False
        image[v] = -1

    extend(0)
    return out


def _solve_aut_scalars(C, pi: Permutation) -> tuple[RadicalScalar, ...] | None:
    """Solve ``c_ij alpha_j = alpha_i^2 c_{pi(i) pi(j)}`` for nonzero real alphas.

    Signs follow from ``alpha_j = r_ij alpha_i^2``; magnitudes from the linear
    system ``log|alpha_j| - 2 log|alpha_i| = log|r_ij|``, solved exactly one
    prime at a time on the exponent vectors.
    """
    n = len(C)
    rows: list[list[int]] = []
    ratios: list[Fraction] = []
    sign: list[int] = [0] * n
    for i in range(n):
        for j in range(n):
            if not C[i][j]:
                continue
            r = Fraction(C[pi[i]][pi[j]]) / Fraction(C[i][j])
            s = 1 if r > 0 else -1
            if sign[j] and sign[j] != s:
                return None
            sign[j] = s
            row = [0] * n
            row[j] += 1
            row[i] -= 2
            rows.append(row)
            ratios.append(abs(r))
    if any(s == 0 for s in sign):
        return None
    factored = [RadicalScalar(r).exponents() if r != 1 else {} for r in ratios]
    primes = sorted({p for f in factored for p in f})
    exps: list[dict[int, Fraction]] = [{} for _ in range(n)]
    for p in primes:
        sol = solve_linear(rows, [f.get(p, 0) for f in factored])
        if sol is None:
            return None
        for v in range(n):
            if sol.x[v]:
                exps[v][p] = sol.x[v]
    alphas = []
    for v in range(n):
        val = RadicalScalar(sign[v])
        for p, e in exps[v].items():
            val = val * RadicalScalar.power(p, e)
        alphas.append(val)
    return tuple(alphas)


def aut_group(e: EvolutionAlgebra, bound: int | None = -1) -> list[tuple[Permutation, tuple[RadicalScalar, ...]]]:
    """Monomial automorphisms ``g(e_i) = alpha_i e_{pi(i)}`` of an algebra with invertible C."""
    config.check_size(e.n, config.exact_bound() if bound == -1 else bound)
    if det(e.C) == 0:
        raise SingularStructureMatrix(f"{e.label or 'algebra'} has a singular structure matrix")
    out = []
    for pi in _support_preserving_perms(e.C):
        alphas = _solve_aut_scalars(e.C, pi)
        if alphas is None:
            continue
        inv = inverse_permutation(pi)
        if all(
            e.C[i][inv[k]] * alphas[inv[k]] == alphas[i] * alphas[i] * e.C[pi[i]][k]
            for i in range(e.n)
            for k in range(e.n)
        ):
            out.append((pi, alphas))
    return sorted(out, key=lambda t: t[0])


def aut_element_map(e: EvolutionAlgebra, pi: Sequence[int], alphas: Sequence) -> LinearMap:
    return LinearMap.monomial(e, e, pi, alphas)


# ------------------------------------------------ regular-graph correspondence


def _regular_degree(alg: EvolutionAlgebra) -> int | None:
    """d when C is the adjacency matrix of a d-regular graph."""
    if any(c not in (0, 1) for row in alg.C for c in row):
        return None
    sums = {sum(row) for row in alg.C}
    return int(sums.pop()) if len(sums) == 1 else None


def rw_iso_to_aut(f: LinearMap, d: int) -> LinearMap:
    """``g = d * f``: an isomorphism A_RW(G) -> A(G) becomes an automorphism of A(G)."""
    target_deg = _regular_degree(f.target)
    expected_source = tuple(tuple(c / d for c in row) for row in f.target.C)
    if target_deg != d or f.source.C != expected_source:
        raise NotRegular(f"maps are not between A_RW(G) and A(G) of a {d}-regular graph")
    return LinearMap(f.target, f.target, f.scaled(d).T)


def aut_to_rw_iso(g: LinearMap, d: int) -> LinearMap:
    """``f = g / d``: an automorphism of A(G) becomes an isomorphism A_RW(G) -> A(G)."""
    if _regular_degree(g.source) != d or g.source.C != g.target.C:
        raise NotRegular(f"map is not an endomorphism of A(G) for a {d}-regular graph")
    label = g.source.label
    rw_label = "A_RW" + label[1:] if label.startswith("A(") else f"RW[{label}]"
    rw = EvolutionAlgebra(g.n, tuple(tuple(c / d for c in row) for row in g.source.C), rw_label)
    return LinearMap(rw, g.target, g.scaled(Fraction(1, d)).T)


# ---------------------------------------------------------------- verdicts


@dataclass(frozen=True)
class IsoVerdict:
    """Outcome of :func:`decide_iso`.

    ``kind`` is ``isomorphic``, ``only_null`` or ``undecided``. ``only_null`` is
    only produced for non-singular graphs.
    """

    kind: str
    graph: Graph
    det: int
    cls: RegularityClass
    witness: LinearMap | None = None
    mechanism: str | None = None
    evidence: dict | None = field(default=None, compare=False)

    @property
    def singular(self) -> bool:
        return self.det == 0

    def summary(self) -> str:
        if self.kind == "isomorphic":
            return f"Isomorphic({self.mechanism})"
        if self.kind == "only_null":
            return "OnlyNullHomomorphism"
        return f"Undecided(singular={self.singular})"

    def to_json(self, graph_id: str | None = None) -> dict:
        out = {
            "graph_id": graph_id or self.graph.label(),
            "n": self.graph.n,
            "det": str(self.det),
            "class": self.cls.to_json(),
            "verdict": self.kind,
        }
        if self.mechanism:
            out["mechanism"] = self.mechanism
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.evidence is not None:
            out["evidence"] = self.evidence
        return out


def decide_iso(
    g: Graph,
    restarts: int = 50,
    seed: int = 0,
    tol: float = 1e-9,
    bound: int | None = -1,
    numeric_bound: int | None = -1,
) -> IsoVerdict:
    """Decide whether A_RW(G) and A(G) are isomorphic.

    Regular and biregular graphs get an explicit diagonal witness, singular or
    not. A non-singular graph that is neither has only the null homomorphism.
    A singular graph that is neither is left undecided, with the monomial
    search result and numeric search evidence attached.
    """
    config.check_size(g.n, config.exact_bound() if bound == -1 else bound)
    d = det(g.adjacency)
    cls = classify(g)
    if cls.is_regular or cls.is_biregular:
        witness = biregular_iso_witness(g, cls)
        return IsoVerdict("isomorphic", g, d, cls, witness, cls.kind)
    if d != 0:
        return IsoVerdict("only_null", g, d, cls)

    from .homsearch import evidence_json, numeric_hom_search

    monomials = monomial_iso_search(g, bound)
    if monomials:
        witness = monomials[0].to_map(g)
        assert is_isomorphism(witness)
        return IsoVerdict("isomorphic", g, d, cls, witness, "monomial-found")
    candidates = numeric_hom_search(g, restarts=restarts, tol=tol, seed=seed, bound=numeric_bound)
    evidence = evidence_json(g, candidates, restarts, tol, seed)
    return IsoVerdict("undecided", g, d, cls, evidence=evidence)


def verify_witness(v: IsoVerdict) -> bool:
    return v.witness is not None and is_isomorphism(v.witness)
