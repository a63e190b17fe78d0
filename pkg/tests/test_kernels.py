"""Parity between the compiled kernels and the numpy fallback."""

import numpy as np
import pytest

from fuskit import kernels
from fuskit.families import fib_extension, n_ising, psu2_6
from fuskit.groups import symmetric

BACKENDS = [kernels.get_backend(name) for name in kernels.available_backends()]


def test_fallback_always_available():
    assert "python" in kernels.available_backends()


def test_selected_backend_exports():
    assert callable(kernels.associativity_witness)
    assert callable(kernels.power_iteration)
    assert kernels.BACKEND in ("compiled", "python")


@pytest.mark.parametrize("backend", BACKENDS, ids=kernels.available_backends())
class TestAssociativityWitness:
    def test_valid_rings_have_no_witness(self, backend):
        for ring in (psu2_6(), fib_extension(symmetric(3)), n_ising(3)):
            assert backend.associativity_witness(ring.dense()) is None

    def test_witness_positions_agree(self, backend):
        ring = psu2_6()
        N = ring.dense().copy()
        x = ring.index("X")
        N[x, x, x] = 2
        w = backend.associativity_witness(N)
        assert w == (1, 2, 2, 3)  # first violation in lexicographic order

    def test_empty_matrix(self, backend):
        N = np.zeros((0, 0, 0), dtype=np.int64)
        assert backend.associativity_witness(N) is None


@pytest.mark.parametrize("backend", BACKENDS, ids=kernels.available_backends())
class TestPowerIteration:
    def test_known_eigenvalue(self, backend):
        M = np.array([[0.0, 1.0], [1.0, 1.0]]) + np.eye(2)
        lam, resid, conv = backend.power_iteration(M, 1e-12, 10**6)
        assert conv
        assert abs(lam - (1 + (1 + 5**0.5) / 2)) < 1e-9
        assert resid < 1e-9

    def test_permutation_matrix(self, backend):
        M = np.array([[0.0, 1.0], [1.0, 0.0]]) + np.eye(2)
        lam, _, conv = backend.power_iteration(M, 1e-12, 10**6)
        assert conv and abs(lam - 2.0) < 1e-9

    def test_cap_reported(self, backend):
        # defective dominant eigenvalue: O(1/k) convergence, cap must hit
        M = np.array([[2.0, 0.0], [2.0, 2.0]]) + np.eye(2)
        lam, resid, conv = backend.power_iteration(M, 1e-12, 500)
        assert not conv


def test_backends_agree_on_random_matrices():
    if len(BACKENDS) < 2:
        pytest.skip("compiled backend not built")
    rng = np.random.default_rng(11)
    for _ in range(15):
        n = int(rng.integers(2, 8))
        N = rng.integers(0, 3, size=(n, n, n)).astype(np.int64)
        results = [b.associativity_witness(N) for b in BACKENDS]
        assert results[0] == results[1]


def test_env_override(monkeypatch):
    import importlib

    monkeypatch.setenv("FUSKIT_BACKEND", "python")
    import fuskit.kernels as km

    importlib.reload(km)
    assert km.BACKEND == "python"
    monkeypatch.delenv("FUSKIT_BACKEND")
    importlib.reload(km)
