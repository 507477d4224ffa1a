"""Finite simple connected graphs: parsing, degrees, bipartition and symmetry.

Vertices are 0-based indices in the Python API. Text formats (edge lists,
reports) use 1-based labels.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import config
from .errors import (
    Disconnected,
    DuplicateEdge,
    GraphError,
    MalformedGraph6,
    MalformedLine,
    SelfLoop,
    VertexOutOfRange,
)

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Immutable simple connected undirected graph on vertices ``0..n-1``."""

    n: int
    neighbors: tuple[frozenset[int], ...]
    name: str = field(default="", compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "") -> "Graph":
        """Build from 0-based edges, validating simplicity and connectivity."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u + 1}")
            if v in nbrs[u]:
                raise DuplicateEdge(f"duplicate edge {u + 1}-{v + 1}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        g = cls(n, tuple(frozenset(s) for s in nbrs), name)
        _validate(g)
        return g

    @classmethod
    def from_adjacency(cls, matrix, name: str = "") -> "Graph":
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError("adjacency matrix must be square")
        if not np.array_equal(a, a.T):
            raise GraphError("adjacency matrix must be symmetric")
        if np.any(np.diag(a)):
            raise SelfLoop("adjacency matrix has a nonzero diagonal")
        if not np.all((a == 0) | (a == 1)):
            raise GraphError("adjacency matrix must be 0/1")
        n = a.shape[0]
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]]
        return cls.from_edges(n, edges, name)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in sorted(self.neighbors[i]) if i < j]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.neighbors) // 2

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.neighbors)

    def degree(self, i: int) -> int:
        return degree(self, i)

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.neighbors[i]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Dense 0/1 adjacency matrix as nested tuples of Python ints."""
        return tuple(
            tuple(1 if j in self.neighbors[i] else 0 for j in range(self.n)) for i in range(self.n)
        )

    def adjacency_array(self) -> np.ndarray:
        return np.array(self.adjacency, dtype=np.float64)

    def label(self) -> str:
        return self.name or to_graph6(self)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count}, g6={to_graph6(self)!r})"


def _validate(g: Graph) -> None:
    if g.n < 2:
        raise GraphError("graphs need at least 2 vertices (deg(i) >= 1 is required)")
    seen = bfs_distances(g, 0)
    if any(d < 0 for d in seen):
        missing = [i + 1 for i, d in enumerate(seen) if d < 0]
        raise Disconnected(f"vertices {missing} unreachable from vertex 1")


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Graph distance from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in sorted(g.neighbors[u]):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def degree(g: Graph, i: int) -> int:
    if not 0 <= i < g.n:
        raise VertexOutOfRange(f"vertex {i} outside 0..{g.n - 1}")
    return len(g.neighbors[i])


# ---------------------------------------------------------------- parsing


def parse_edge_list(text: str, name: str = "") -> Graph:
    """Parse whitespace separated ``u v`` lines with 1-based labels.

    An optional first data line ``n <count>`` fixes the vertex count, which
    otherwise defaults to the largest label seen. Blank lines and ``#``
    comments are ignored.
    """
    n: int | None = None
    pairs: list[tuple[int, int, int]] = []
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if first and parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise MalformedLine("expected 'n <count>'", lineno)
            n = int(parts[1])
            first = False
            continue
        first = False
        if len(parts) != 2:
            raise MalformedLine(f"expected two vertex labels, got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(f"non-integer vertex label in {line!r}", lineno) from None
        if u < 1 or v < 1:
            raise MalformedLine("vertex labels are 1-based", lineno)
        pairs.append((u, v, lineno))

    if n is None:
        n = max((max(u, v) for u, v, _ in pairs), default=0)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v, lineno in pairs:
        if u > n or v > n:
            raise MalformedLine(f"vertex label exceeds n={n}", lineno)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}", lineno)
        if v - 1 in nbrs[u - 1]:
            raise DuplicateEdge(f"duplicate edge {u}-{v}", lineno)
        nbrs[u - 1].add(v - 1)
        nbrs[v - 1].add(u - 1)
    g = Graph(n, tuple(frozenset(s) for s in nbrs), name)
    _validate(g)
    return g


def _g6_bits(g: Graph) -> Iterator[int]:
    for j in range(1, g.n):
        for i in range(j):
            yield 1 if j in g.neighbors[i] else 0


def _g6_size_prefix(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError("graph6 supports at most 258047 vertices here")


def to_graph6(g: Graph) -> str:
    """Encode without the optional ``>>graph6<<`` header."""
    bits = list(_g6_bits(g))
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        body.append(chr(value + 63))
    return _g6_size_prefix(g.n) + "".join(body)


def parse_graph6(text: str, name: str = "") -> Graph:
    """Decode a single graph6 line (header and trailing newline tolerated)."""
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<") :]
    if not line:
        raise MalformedGraph6("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in line):
        raise MalformedGraph6(f"character outside the printable graph6 range in {line!r}")
    data = [ord(c) - 63 for c in line]
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise MalformedGraph6("unsupported or truncated size prefix")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != -(-nbits // 6):
        raise MalformedGraph6(f"expected {-(-nbits // 6)} data bytes for n={n}, got {len(body)}")
    bits = [(byte >> (5 - s)) & 1 for byte in body for s in range(6)]
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    try:
        return Graph.from_edges(n, edges, name)
    except Disconnected:
        raise
    except GraphError as exc:
        raise MalformedGraph6(str(exc)) from exc


# ---------------------------------------------------------- classification


@dataclass(frozen=True)
class RegularityClass:
    """Regular(d), Biregular(d1, d2) or Neither.

    ``part1``/``part2`` hold the BFS-parity bipartition anchored at vertex 0
    whenever one exists, also for regular bipartite graphs such as K_{n,n};
    ``d1`` is the degree on the side containing vertex 0.
    """

    kind: str
    d1: int | None = None
    d2: int | None = None
    part1: frozenset[int] | None = None
    part2: frozenset[int] | None = None

    @property
    def is_regular(self) -> bool:
        return self.kind == "regular"

    @property
    def is_biregular(self) -> bool:
        """A valid (d1, d2) bipartition exists; true for regular bipartite graphs too."""
        return self.kind == "biregular" or (self.kind == "regular" and self.has_bipartition)

    @property
    def has_bipartition(self) -> bool:
        return self.part1 is not None

    def summary(self) -> str:
        if self.kind == "regular":
            text = f"Regular({self.d1})"
            if self.has_bipartition:
                text += f"; also Biregular({self.d1},{self.d1})"
            return text
        if self.kind == "biregular":
            return f"Biregular({self.d1},{self.d2})"
        return "Neither"

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.d1 is not None:
            out["d1"] = self.d1
        if self.d2 is not None:
            out["d2"] = self.d2
        if self.has_bipartition:
            out["V1"] = [v + 1 for v in sorted(self.part1)]
            out["V2"] = [v + 1 for v in sorted(self.part2)]
        return out


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Even/odd distance classes from vertex 0, or None if some edge stays inside a class."""
    dist = bfs_distances(g, 0)
    for u, v in g.edges():
        if dist[u] % 2 == dist[v] % 2:
            return None
    even = frozenset(i for i in range(g.n) if dist[i] % 2 == 0)
    odd = frozenset(i for i in range(g.n) if dist[i] % 2 == 1)
    return even, odd


def classify(g: Graph) -> RegularityClass:
    degs = g.degrees
    parts = bipartition(g)
    if len(set(degs)) == 1:
        d = degs[0]
        if parts is None:
            return RegularityClass("regular", d, d)
        return RegularityClass("regular", d, d, parts[0], parts[1])
    if parts is None:
        return RegularityClass("neither")
    v1, v2 = parts
    side1 = {degs[i] for i in v1}
    side2 = {degs[i] for i in v2}
    if len(side1) == 1 and len(side2) == 1:
        return RegularityClass("biregular", side1.pop(), side2.pop(), v1, v2)
    return RegularityClass("neither")


# ------------------------------------------------------------ automorphisms


def _refined_colors(g: Graph) -> list[int]:
    """Stable colouring by iterated degree refinement; automorphisms preserve it."""
    colors = list(g.degrees)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in g.neighbors[v]))) for v in range(g.n)]
        palette = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def iter_automorphisms(g: Graph) -> Iterator[Permutation]:
    """Yield every adjacency-preserving permutation, as tuples ``p[i] = image of i``."""
    n = g.n
    colors = _refined_colors(g)
    order = []
    seen = [False] * n
    # BFS order from the vertex in the rarest colour class; every later vertex
    # has an earlier neighbour, which restricts its candidate images.
    counts = {c: colors.count(c) for c in set(colors)}
    start = min(range(n), key=lambda v: (counts[colors[v]], v))
    queue = deque([start])
    seen[start] = True
    while queue:
        u = queue.popleft()
        order.append(u)
        for v in sorted(g.neighbors[u]):
            if not seen[v]:
                seen[v] = True
                queue.append(v)
    anchor = [None] * n
    placed: set[int] = set()
    for v in order:
        for u in g.neighbors[v]:
            if u in placed:
                anchor[v] = u
                break
        placed.add(v)

    image = [-1] * n
    used = [False] * n

    def extend(depth: int) -> Iterator[Permutation]:
        if depth == n:
            yield tuple(image)
            return
        v = order[depth]
        pool = g.neighbors[image[anchor[v]]] if anchor[v] is not None else range(n)
        for w in sorted(pool):
            if used[w] or colors[w] != colors[v]:
                continue
            if any(
                (u in g.neighbors[v]) != (image[u] in g.neighbors[w])
                for u in order[:depth]
            ):
                continue
            image[v] = w
            used[w] = True
            yield from extend(depth + 1)
            used[w] = False
            image[v] = -1

    yield from extend(0)


def graph_automorphisms(g: Graph, bound: int | None = -1) -> list[Permutation]:
    """All automorphisms of ``g``, sorted lexicographically.

    ``bound=-1`` uses the configured exact size bound; ``None`` disables it.
    """
    config.check_size(g.n, config.exact_bound() if bound == -1 else bound)
    return sorted(iter_automorphisms(g))


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    n = g.n
    if sorted(perm) != list(range(n)):
        return False
    return all(
        (j in g.neighbors[i]) == (perm[j] in g.neighbors[perm[i]])
        for i in range(n)
        for j in range(n)
    )


# ------------------------------------------------------------ named graphs


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C_{n}")


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P_{n}")


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"K_{n}")


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with side one ``0..m-1`` and side two ``m..m+n-1``."""
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)], f"K_{m},{n}")


def friendship(k: int) -> Graph:
    """k triangles sharing the hub vertex ``2k`` (label 2k+1)."""
    hub = 2 * k
    edges = []
    for t in range(k):
        a, b = 2 * t, 2 * t + 1
        edges += [(a, b), (a, hub), (b, hub)]
    return Graph.from_edges(2 * k + 1, edges, f"F_{k}")


def double_star_tree(m: int, n: int) -> Graph:
    """Diameter-3 tree: m leaves on hub m+n, n leaves on hub m+n+1, hubs joined."""
    u, v = m + n, m + n + 1
    edges = [(i, u) for i in range(m)] + [(m + j, v) for j in range(n)] + [(u, v)]
    return Graph.from_edges(m + n + 2, edges, f"T_{m},{n}")


def from_one_based(n: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
    return Graph.from_edges(n, [(u - 1, v - 1) for u, v in edges], name)
