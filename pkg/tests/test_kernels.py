import os
import subprocess
import sys

import numpy as np
import pytest

from evoalg import graph as G
from evoalg._jit import JIT_ENABLED
from evoalg.homsearch import structure_arrays
from evoalg.kernels import finite_difference_jacobian, jacobian, pair_indices, residuals


def _setup(g, seed):
    A, B = structure_arrays(g, "rw_to_a")
    T = np.random.default_rng(seed).uniform(-2, 2, size=(g.n, g.n))
    return T, A, B, *pair_indices(g.n)


def _reference_residuals(T, A, B):
    n = T.shape[0]
    out = []
    for i in range(n):
        for j in range(i, n):
            for r in range(n):
                v = sum(T[i, k] * T[j, k] * B[k, r] for k in range(n))
                if i == j:
                    v -= sum(A[i, k] * T[k, r] for k in range(n))
                out.append(v)
    return np.array(out)


@pytest.mark.parametrize("g", [G.cycle(5), G.friendship(2), G.complete_bipartite(2, 3)])
@pytest.mark.parametrize("use_jit", [False, True])
def test_residuals_match_reference(g, use_jit):
    T, A, B, ii, jj = _setup(g, 1)
    np.testing.assert_allclose(residuals(T, A, B, ii, jj, use_jit=use_jit), _reference_residuals(T, A, B), atol=1e-12)


@pytest.mark.parametrize("g", [G.cycle(5), G.double_star_tree(2, 2)])
def test_jit_and_numpy_agree(g):
    T, A, B, ii, jj = _setup(g, 7)
    np.testing.assert_allclose(residuals(T, A, B, ii, jj, True), residuals(T, A, B, ii, jj, False), atol=1e-12)
    np.testing.assert_allclose(jacobian(T, A, B, ii, jj, True), jacobian(T, A, B, ii, jj, False), atol=1e-12)


@pytest.mark.parametrize("g", [G.cycle(5), G.friendship(2), G.path(4)])
def test_jacobian_matches_finite_differences(g):
    T, A, B, ii, jj = _setup(g, 3)
    np.testing.assert_allclose(jacobian(T, A, B, ii, jj), finite_difference_jacobian(T, A, B, ii, jj), atol=1e-6)


def test_witness_has_zero_residual():
    T, A, B, ii, jj = _setup(G.cycle(5), 0)
    assert np.max(np.abs(residuals(np.eye(5) / 2, A, B, ii, jj))) < 1e-15


def test_disable_flag_in_subprocess():
    code = "from evoalg._jit import JIT_ENABLED; print(JIT_ENABLED)"
    env = dict(os.environ, EVOALG_DISABLE_JIT="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"


def test_jit_enabled_by_default():
    if os.environ.get("EVOALG_DISABLE_JIT"):
        pytest.skip("JIT disabled for this run")
    assert JIT_ENABLED
