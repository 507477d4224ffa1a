"""Homomorphism discovery between A_RW(G) and A(G).

``structural_hom_classify`` is exact and covers non-singular graphs, where
every nonzero homomorphism is monomial. ``numeric_hom_search`` explores the
full quadratic system for any graph by multi-start damped Gauss-Newton and
only ever produces evidence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import config
from .algebra import from_graph, from_random_walk
from .errors import SingularGraph
from .graph import Graph
from .iso import CondPiSolution, monomial_iso_search
from .kernels import jacobian, pair_indices, residuals
from .linalg import solve_linear, transpose
from .treecase import verify_tree_example  # noqa: F401

ZERO_TOL = 1e-6
DEDUP_RADIUS = 1e-4
INIT_RANGE = 2.0
DEFLATION_POWER = 6.0
DEFLATION_SHIFT = 1.0


# ------------------------------------------------------------ structural


@dataclass(frozen=True)
class StructuralResult:
    """``NullOnly`` when ``family`` is empty, otherwise ``MonomialFamily(family)``."""

    family: tuple[CondPiSolution, ...]

    @property
    def null_only(self) -> bool:
        return not self.family

    @property
    def kind(self) -> str:
        return "NullOnly" if self.null_only else "MonomialFamily"


def structural_hom_classify(g: Graph, bound: int | None = -1) -> StructuralResult:
    """All homomorphisms A_RW(G) -> A(G) for a non-singular graph.

    For ``i != j`` the pair equations read ``A^T (t_i1 t_j1, ..., t_in t_jn) = 0``;
    with ``A`` invertible every column of ``T`` has at most one nonzero entry.
    A zero row forces zero rows on all its neighbours (``f(e_m) = 0`` gives
    ``sum_l a_ml f(e_l) = 0`` with disjoint supports), so by connectivity ``f`` is
    null or monomial, and the monomial ones are exactly the solutions of the
    scalar condition.
    """
    config.check_size(g.n, config.exact_bound() if bound == -1 else bound)
    sol = solve_linear(transpose(g.adjacency), [0] * g.n)
    if sol is None or not sol.unique:
        raise SingularGraph(f"{g.label()} has a singular adjacency matrix")
    return StructuralResult(tuple(monomial_iso_search(g, bound)))


# --------------------------------------------------------------- numeric


@dataclass
class HomCandidate:
    T: np.ndarray
    residual: float
    classification: str
    hits: int = field(default=1, compare=False)

    def to_json(self) -> dict:
        return {
            "residual": self.residual,
            "classification": self.classification,
            "hits": self.hits,
            "T": [[float(x) for x in row] for row in self.T],
        }


def classify_matrix(T: np.ndarray, zero_tol: float = ZERO_TOL) -> str:
    nz = np.abs(T) > zero_tol
    if not nz.any():
        return "null"
    if np.all(nz.sum(axis=1) == 1) and np.all(nz.sum(axis=0) == 1):
        return "monomial"
    return "general"


def structure_arrays(g: Graph, direction: str) -> tuple[np.ndarray, np.ndarray]:
    """(source C, target C) as float arrays for ``rw_to_a`` or ``a_to_rw``."""
    a = g.adjacency_array()
    rw = a / a.sum(axis=1)[:, None]
    if direction == "rw_to_a":
        return rw, a
    if direction == "a_to_rw":
        return a, rw
    raise ValueError(f"unknown direction {direction!r}")


def residual_norm(T: np.ndarray, A: np.ndarray, B: np.ndarray) -> float:
    ii, jj = pair_indices(T.shape[0])
    return float(np.max(np.abs(residuals(T, A, B, ii, jj))))


def _levenberg_marquardt(x, fun, jac, max_iter, target, stall_window=10, stall_rtol=1e-9):
    """Generic damped Gauss-Newton on ``fun(x) -> (F, r)``; stops when ``max|r| <= target``.

    Also stops once the cost has improved by less than ``stall_rtol``
    (relative) over ``stall_window`` iterations: a local minimum.

    ``F`` is the vector being minimised and ``r`` the raw homomorphism
    residual (they differ only under deflation). Levenberg damping
    ``(J^T J + lam I) dx = -J^T F``; when damping alone cannot reduce the cost
    a backtracking gradient step is tried before giving up.
    """
    F, r = fun(x)
    cost = float(F @ F)
    lam = 1e-3
    eye = np.eye(x.size)
    history = [cost]
    for _ in range(max_iter):
        if np.max(np.abs(r)) <= target:
            break
        if len(history) > stall_window and history[-stall_window - 1] - cost <= stall_rtol * history[-stall_window - 1]:
            break
        J = jac(x, r)
        grad = J.T @ F
        H = J.T @ J
        accepted = False
        while lam <= 1e10:
            try:
                step = np.linalg.solve(H + lam * eye, -grad)
            except np.linalg.LinAlgError:
                lam *= 4
                continue
            F_new, r_new = fun(x + step)
            cost_new = float(F_new @ F_new)
            if cost_new < cost:
                x, F, r, cost = x + step, F_new, r_new, cost_new
                lam = max(lam / 3, 1e-12)
                accepted = True
                break
            lam *= 4
        if not accepted:
            gnorm2 = float(grad @ grad)
            if not gnorm2 > 0.0:
                break
            t = 1.0
            while t > 1e-12:
                F_new, r_new = fun(x - t * grad)
                cost_new = float(F_new @ F_new)
                if cost_new <= cost - 1e-4 * t * gnorm2:
                    x, F, r, cost = x - t * grad, F_new, r_new, cost_new
                    accepted = True
                    lam = 1e-3
                    break
                t *= 0.5
            if not accepted:
                break
        history.append(cost)
    return x, r


def damped_gauss_newton(
    T0: np.ndarray,
    A: np.ndarray,
    B: np.ndarray,
    max_iter: int = 300,
    target: float = 1e-13,
) -> tuple[np.ndarray, float]:
    """Minimise the squared homomorphism residual from ``T0``; returns (T, max-norm residual)."""
    n = T0.shape[0]
    ii, jj = pair_indices(n)

    def fun(v):
        r = residuals(v.reshape(n, n), A, B, ii, jj)
        return r, r

    def jac(v, r):
        return jacobian(v.reshape(n, n), A, B, ii, jj)

    x, r = _levenberg_marquardt(T0.astype(np.float64).ravel(), fun, jac, max_iter, target)
    return x.reshape(n, n), float(np.max(np.abs(r)))


def deflated_gauss_newton(
    T0: np.ndarray,
    A: np.ndarray,
    B: np.ndarray,
    power: float = DEFLATION_POWER,
    shift: float = DEFLATION_SHIFT,
    max_iter: int = 300,
    target: float = 1e-13,
) -> np.ndarray:
    """Damped Gauss-Newton on ``(|T|^-power + shift) R(T)``.

    The factor blows up at the null map, which is always a solution, so
    iterates are pushed towards nonzero solutions (deflation). Returns the
    final iterate; the caller polishes it on the undeflated system.
    """
    n = T0.shape[0]
    ii, jj = pair_indices(n)

    def fun(v):
        r = residuals(v.reshape(n, n), A, B, ii, jj)
        s = float(v @ v)
        if s == 0.0:
            return np.full_like(r, np.inf), r
        return (s ** (-power / 2) + shift) * r, r

    def jac(v, r):
        s = float(v @ v)
        m = s ** (-power / 2) + shift
        dm = -power * s ** (-power / 2 - 1) * v
        return m * jacobian(v.reshape(n, n), A, B, ii, jj) + np.outer(r, dm)

    x, _ = _levenberg_marquardt(T0.astype(np.float64).ravel(), fun, jac, max_iter, target)
    return x.reshape(n, n)


def numeric_hom_search(
    g: Graph,
    restarts: int = 50,
    tol: float = 1e-9,
    seed: int = 0,
    direction: str = "rw_to_a",
    bound: int | None = -1,
    max_iter: int = 300,
) -> list[HomCandidate]:
    """Multi-start search for homomorphisms; returns deduplicated converged candidates.

    Starts are uniform in ``[-2, 2]`` from ``numpy.random.default_rng(seed)``.
    Each start runs deflated Gauss-Newton (repelled from the null map) and is
    then polished on the plain system; it counts when the polished residual
    is at most ``tol``. The null map is always reported. Output is sorted by
    (residual, entries).
    """
    config.check_size(g.n, config.numeric_bound() if bound == -1 else bound)
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    A, B = structure_arrays(g, direction)
    n = g.n
    rng = np.random.default_rng(seed)
    kept: list[HomCandidate] = [HomCandidate(np.zeros((n, n)), 0.0, "null", hits=0)]
    for _ in range(restarts):
        T0 = rng.uniform(-INIT_RANGE, INIT_RANGE, size=(n, n))
        T = deflated_gauss_newton(T0, A, B, max_iter=max_iter)
        if not np.all(np.isfinite(T)):
            continue
        T, resid = damped_gauss_newton(T, A, B, max_iter=max_iter)
        if not resid <= tol:
            continue
        T = np.where(np.abs(T) <= ZERO_TOL * 1e-3, 0.0, T)
        for c in kept:
            if np.max(np.abs(c.T - T)) < DEDUP_RADIUS:
                c.hits += 1
                break
        else:
            kept.append(HomCandidate(T, resid, classify_matrix(T)))
    kept.sort(key=lambda c: (c.residual, tuple(np.round(c.T, 12).ravel())))
    return kept


def summarize_candidates(candidates: list[HomCandidate], restarts: int, tol: float, seed: int) -> dict:
    nonzero = [c for c in candidates if c.classification != "null"]
    converged = sum(c.hits for c in candidates)
    return {
        "restarts": restarts,
        "tol": tol,
        "seed": seed,
        "converged_runs": converged,
        "candidates": len(candidates),
        "nonzero_candidates": len(nonzero),
        "conclusion": "only the null map found" if not nonzero else "nonzero homomorphism candidates found",
    }


def evidence_json(
    g: Graph, candidates: list[HomCandidate], restarts: int, tol: float, seed: int, direction: str = "rw_to_a"
) -> dict:
    summary = summarize_candidates(candidates, restarts, tol, seed)
    return {
        "graph_id": g.label(),
        "direction": direction,
        "restarts": restarts,
        "tol": tol,
        "seed": seed,
        "converged_runs": summary["converged_runs"],
        "nonzero_candidates": summary["nonzero_candidates"],
        "candidates": [c.to_json() for c in candidates],
        "conclusion": summary["conclusion"],
    }


def distance_to_family(T: np.ndarray, family: list[np.ndarray]) -> float:
    return min(float(np.max(np.abs(T - F))) for F in family)


def orbit_defect(T: np.ndarray, W: np.ndarray, target: np.ndarray, cond_limit: float = 1e8) -> float:
    """How far ``T`` is from ``W`` composed with an automorphism of the target.

    With ``T = W Q`` (rows are images), ``T`` lies in the orbit of the
    isomorphism ``W`` exactly when ``Q = W^-1 T`` is an invertible endomorphism
    of the target algebra. Returns the max-norm homomorphism residual of ``Q``,
    or ``inf`` when ``T`` is numerically singular. Needed where the witness is
    not an isolated solution, e.g. K_{m,n} with a side of size >= 3.
    """
    if np.linalg.cond(T) > cond_limit:
        return float("inf")
    Q = np.linalg.solve(W, T)
    return residual_norm(Q, target, target)


def exact_family_arrays(g: Graph, solutions: list[CondPiSolution]) -> list[np.ndarray]:
    out = []
    for s in solutions:
        M = np.zeros((g.n, g.n))
        for i, (p, a) in enumerate(zip(s.pi, s.alphas)):
            M[i, p] = float(a)
        out.append(M)
    return out


def direction_algebras(g: Graph, direction: str):
    if direction == "rw_to_a":
        return from_random_walk(g), from_graph(g)
    return from_graph(g), from_random_walk(g)

