"""Residual and Jacobian of the homomorphism equations for a float map matrix.

For structure matrices ``A`` (source) and ``B`` (target) and a map matrix
``T`` the unknowns are the ``n*n`` entries of ``T`` (row-major) and the
residuals are indexed by pairs ``p = (i, j)``, ``i <= j``, and a coordinate ``r``:

    R[p, r] = sum_k T[i,k] T[j,k] B[k,r]  -  [i == j] sum_k A[i,k] T[k,r]

The system is quadratic, so the Jacobian is exact:

    dR[p, r] / dT[a, q] = ([a == i] T[j,q] + [a == j] T[i,q]) B[q,r]
                          - [i == j] A[i,a] [q == r]

Two implementations are kept: explicit loops compiled with numba, and a
vectorised numpy version used when the JIT is disabled.
"""

from __future__ import annotations

import numpy as np

from ._jit import JIT_ENABLED, njit


def pair_indices(n: int) -> tuple[np.ndarray, np.ndarray]:
    ii, jj = np.triu_indices(n)
    return ii.astype(np.int64), jj.astype(np.int64)


@njit(cache=True)
def _residuals_loops(T, A, B, ii, jj):
    n = T.shape[0]
    npairs = ii.shape[0]
    out = np.zeros(npairs * n)
    for p in range(npairs):
        i = ii[p]
        j = jj[p]
        for k in range(n):
            w = T[i, k] * T[j, k]
            if w != 0.0:
                for r in range(n):
                    out[p * n + r] += w * B[k, r]
        if i == j:
            for k in range(n):
                a = A[i, k]
                if a != 0.0:
                    for r in range(n):
                        out[p * n + r] -= a * T[k, r]
    return out


@njit(cache=True)
def _jacobian_loops(T, A, B, ii, jj):
    n = T.shape[0]
    npairs = ii.shape[0]
    J = np.zeros((npairs * n, n * n))
    for p in range(npairs):
        i = ii[p]
        j = jj[p]
        for r in range(n):
            row = p * n + r
            for q in range(n):
                b = B[q, r]
                if b != 0.0:
                    J[row, i * n + q] += T[j, q] * b
                    J[row, j * n + q] += T[i, q] * b
            if i == j:
                for a in range(n):
                    J[row, a * n + r] -= A[i, a]
    return J


def _residuals_numpy(T, A, B, ii, jj):
    prods = T[ii] * T[jj]                      # (P, n) over k
    out = prods @ B                            # (P, n) over r
    diag = ii == jj
    out[diag] -= (A @ T)[ii[diag]]
    return out.reshape(-1)


def _jacobian_numpy(T, A, B, ii, jj):
    n = T.shape[0]
    npairs = ii.shape[0]
    J = np.zeros((npairs, n, n, n))            # [p, r, a, q]
    p = np.arange(npairs)
    # (P, q, r) -> (P, r, q)
    J[p, :, ii, :] += np.transpose(T[jj][:, :, None] * B[None, :, :], (0, 2, 1))
    J[p, :, jj, :] += np.transpose(T[ii][:, :, None] * B[None, :, :], (0, 2, 1))
    diag = np.nonzero(ii == jj)[0]
    eye = np.eye(n)
    J[diag] -= np.einsum("pa,qr->praq", A[ii[diag]], eye)
    return J.reshape(npairs * n, n * n)


def _want_jit(use_jit: bool | None) -> bool:
    return JIT_ENABLED and (use_jit is None or use_jit)


def residuals(T, A, B, ii, jj, use_jit: bool | None = None) -> np.ndarray:
    if _want_jit(use_jit):
        return _residuals_loops(T, A, B, ii, jj)
    return _residuals_numpy(T, A, B, ii, jj)


def jacobian(T, A, B, ii, jj, use_jit: bool | None = None) -> np.ndarray:
    if _want_jit(use_jit):
        return _jacobian_loops(T, A, B, ii, jj)
    return _jacobian_numpy(T, A, B, ii, jj)


def finite_difference_jacobian(T, A, B, ii, jj, h: float = 1e-6) -> np.ndarray:
    """Central differences; reference for the analytic Jacobian."""
    n = T.shape[0]
    base = _residuals_numpy(T, A, B, ii, jj)
    J = np.empty((base.size, n * n))
    for idx in range(n * n):
        E = np.zeros(n * n)
        E[idx] = h
        E = E.reshape(n, n)
        J[:, idx] = (_residuals_numpy(T + E, A, B, ii, jj) - _residuals_numpy(T - E, A, B, ii, jj)) / (2 * h)
    return J
