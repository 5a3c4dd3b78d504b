import numpy as np
import pytest

from conftest import basis_of, complete_graph
from errors import ConvergenceFailure, LengthMismatch, NotSymmetric
from filterbank.kernels import CustomDesign, FilterKernel
from graph.build import build_graph, laplacian
from graph.models import LaplacianKind, LaplacianMatrix
from spectral.basis import apply_diagonal_filter, eigendecompose, gft, igft


def test_two_node_normalized():
    """Test that a single edge attains lambda_max = 2."""
    basis = basis_of(build_graph(2, [(0, 1, 1.0)]), LaplacianKind.NORMALIZED)
    np.testing.assert_allclose(basis.eigenvalues, [0, 2], atol=1e-14)
    np.testing.assert_allclose(basis.eigenvectors[:, 0], [2**-0.5, 2**-0.5])


def test_k3_normalized_eigenvalues():
    """Test the triangle's normalized spectrum {0, 1.5, 1.5}."""
    basis = basis_of(complete_graph(3), LaplacianKind.NORMALIZED)
    np.testing.assert_allclose(basis.eigenvalues, [0, 1.5, 1.5], atol=1e-12)


def test_combinatorial_dc_is_constant(sensor100_basis):
    """Test that u_0 is the normalized constant vector."""
    np.testing.assert_allclose(sensor100_basis.eigenvectors[:, 0], 0.1, atol=1e-10)


def test_basis_invariants(sensor100, sensor100_basis):
    """Test orthonormality, residual, ordering and the sign convention."""
    u = sensor100_basis.eigenvectors
    lam = sensor100_basis.eigenvalues
    lap = laplacian(sensor100, LaplacianKind.COMBINATORIAL).matrix
    scale = max(1.0, sensor100_basis.lambda_max)
    assert np.max(np.abs(u.T @ u - np.eye(100))) <= 1e-9
    assert np.max(np.abs(lap - u @ np.diag(lam) @ u.T)) <= 1e-8 * scale
    assert np.all(np.diff(lam) >= 0)
    first = np.argmax(np.abs(u) > 1e-12, axis=0)
    assert np.all(u[first, np.arange(100)] > 0)


def test_eigendecompose_is_deterministic(sensor100, sensor100_basis):
    """Test that decomposing twice gives bit-identical eigenvectors."""
    again = eigendecompose(laplacian(sensor100, LaplacianKind.COMBINATORIAL))
    np.testing.assert_array_equal(again.eigenvectors, sensor100_basis.eigenvectors)


def test_eigendecompose_rejects_asymmetric():
    """Test NotSymmetric on a perturbed matrix."""
    g = complete_graph(3)
    matrix = laplacian(g, LaplacianKind.COMBINATORIAL).matrix.copy()
    matrix[0, 1] += 1e-6
    with pytest.raises(NotSymmetric):
        eigendecompose(LaplacianMatrix(LaplacianKind.COMBINATORIAL, matrix, g))


def test_eigendecompose_rejects_non_laplacian():
    """Test that a matrix without a zero eigenvalue is refused."""
    g = complete_graph(3)
    matrix = np.eye(3)
    with pytest.raises(ConvergenceFailure):
        eigendecompose(LaplacianMatrix(LaplacianKind.COMBINATORIAL, matrix, g))


def test_gft_of_eigenvector_is_impulse(sensor100_basis):
    """Test that the GFT of u_k is e_k and the IGFT of e_k is u_k."""
    e = np.zeros(100)
    e[7] = 1.0
    u7 = sensor100_basis.eigenvectors[:, 7]
    np.testing.assert_allclose(gft(sensor100_basis, u7), e, atol=1e-12)
    np.testing.assert_allclose(igft(sensor100_basis, e), u7)
    np.testing.assert_array_equal(gft(sensor100_basis, np.zeros(100)), np.zeros(100))


def test_parseval_and_round_trip(sensor100_basis, rng):
    """Test unitarity of the GFT on random signals."""
    for _ in range(50):
        f = rng.standard_normal(100)
        fbar = sensor100_basis.gft(f)
        assert abs(np.linalg.norm(fbar) - np.linalg.norm(f)) <= 1e-10 * np.linalg.norm(f)
        np.testing.assert_allclose(sensor100_basis.igft(fbar), f, rtol=0, atol=1e-10 * np.linalg.norm(f))


def test_gft_length_mismatch(sensor100_basis):
    """Test LengthMismatch on a short signal."""
    with pytest.raises(LengthMismatch):
        gft(sensor100_basis, np.zeros(99))
    with pytest.raises(LengthMismatch):
        igft(sensor100_basis, np.zeros(101))


def test_apply_diagonal_filter():
    """Test the identity, zero and DC-projection kernels."""
    fbar = np.array([3.0, -1.0, 2.0, 0.5])
    ones = FilterKernel(np.ones(4), CustomDesign())
    zeros = FilterKernel(np.zeros(4), CustomDesign())
    dc = FilterKernel([1.0, 0.0, 0.0, 0.0], CustomDesign())
    np.testing.assert_array_equal(apply_diagonal_filter(ones, fbar), fbar)
    np.testing.assert_array_equal(apply_diagonal_filter(zeros, fbar), np.zeros(4))
    np.testing.assert_array_equal(apply_diagonal_filter(dc, fbar), [3.0, 0, 0, 0])
    with pytest.raises(LengthMismatch):
        apply_diagonal_filter(ones, np.zeros(3))
