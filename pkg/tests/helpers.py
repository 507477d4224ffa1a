"""Graph generators and shared fixtures data for the test suite."""

from __future__ import annotations

import random
from pathlib import Path

import networkx as nx

from evoalg import graph as G
from evoalg.graph import Graph, parse_graph6

DATA = Path(__file__).parent / "data"
CORPUS = DATA / "connected_n2_7.g6"

FIG1_EDGES = [(1, 5), (1, 8), (1, 10), (2, 5), (2, 6), (2, 9), (3, 6), (3, 7), (3, 9), (4, 7), (4, 8), (4, 10)]
FIG22_EDGES = [
    (1, 2), (1, 5), (1, 6), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5),
    (6, 7), (6, 10), (7, 8), (7, 9), (8, 9), (8, 10), (9, 10),
]  # fmt: skip


def fig1() -> Graph:
    return G.from_one_based(10, FIG1_EDGES, "fig1")


def fig22() -> Graph:
    return G.from_one_based(10, FIG22_EDGES, "fig22")


def corpus(max_n: int = 7) -> list[Graph]:
    out = []
    for line in CORPUS.read_text().split():
        g = parse_graph6(line)
        if g.n <= max_n:
            out.append(g)
    return out


def random_connected(rng: random.Random, n_min: int = 2, n_max: int = 10) -> Graph:
    n = rng.randint(n_min, n_max)
    p = rng.uniform(0.15, 0.9)
    while True:
        h = nx.gnp_random_graph(n, p, seed=rng.randrange(2**31))
        if nx.is_connected(h):
            return Graph.from_edges(n, list(h.edges()))


def random_regular(rng: random.Random, n_max: int = 10) -> Graph:
    while True:
        n = rng.randint(2, n_max)
        d = rng.randint(1, n - 1)
        if n * d % 2:
            continue
        h = nx.random_regular_graph(d, n, seed=rng.randrange(2**31))
        if nx.is_connected(h):
            return Graph.from_edges(n, list(h.edges()))
