"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx


def cofactor_det(m):
    """Laplace expansion along the first row; O(n!)."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for c in range(n):
        if m[0][c] == 0:
            continue
        minor = [row[:c] + row[c + 1 :] for row in m[1:]]
        total += (-1) ** c * m[0][c] * cofactor_det(minor)
    return total


def brute_force_automorphisms(adj):
    n = len(adj)
    out = []
    for p in itertools.permutations(range(n)):
        if all(adj[p[i]][p[j]] == adj[i][j] for i in range(n) for j in range(n)):
            out.append(p)
    return out


def networkx_graph6(n, edges) -> str:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def networkx_edges(text: str):
    g = nx.from_graph6_bytes(text.encode())
    return g.number_of_nodes(), sorted(tuple(sorted(e)) for e in g.edges())


def gaussian_rank(m) -> int:
    """Plain Fraction Gaussian elimination, no pivoting strategy beyond first nonzero."""
    a = [[Fraction(x) for x in row] for row in m]
    r = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, len(a)):
            f = a[i][c] / a[r][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r
