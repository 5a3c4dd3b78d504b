"""Laplacian eigenbasis and the graph Fourier transform built on it."""

import logging
from typing import TYPE_CHECKING

import numpy as np
import numpy.typing as npt
import scipy.linalg

from errors import ConvergenceFailure, LengthMismatch, NotSymmetric
from graph.models import LaplacianKind, LaplacianMatrix

if TYPE_CHECKING:
    from filterbank.kernels import FilterKernel

logger = logging.getLogger(__name__)

SpectralSignal = npt.NDArray[np.float64]

SYMMETRY_TOL = 1e-12
ORTHONORMALITY_TOL = 1e-9
RESIDUAL_TOL = 1e-8
ZERO_EIGENVALUE_TOL = 1e-10
SIGN_TOL = 1e-12


class SpectralBasis:
    """Ascending eigenvalues and orthonormal eigenvectors (columns) of a Laplacian."""

    def __init__(
        self,
        eigenvalues: npt.ArrayLike,
        eigenvectors: npt.ArrayLike,
        kind: LaplacianKind,
    ):
        self.eigenvalues = np.array(eigenvalues, dtype=np.float64)
        self.eigenvectors = np.array(eigenvectors, dtype=np.float64)
        if self.eigenvectors.shape != (self.eigenvalues.size, self.eigenvalues.size):
            raise ValueError(
                f"Eigenvector matrix shape {self.eigenvectors.shape} does not match "
                f"{self.eigenvalues.size} eigenvalues"
            )
        self.eigenvalues.setflags(write=False)
        self.eigenvectors.setflags(write=False)
        self.kind = LaplacianKind(kind)

    @property
    def n(self) -> int:
        return self.eigenvalues.size

    @property
    def graph_n(self) -> int:
        return self.n

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[-1])

    def gft(self, f: npt.ArrayLike) -> SpectralSignal:
        return gft(self, f)

    def igft(self, fbar: npt.ArrayLike) -> npt.NDArray[np.float64]:
        return igft(self, fbar)

    def __repr__(self) -> str:
        return f"SpectralBasis(kind={self.kind.value}, n={self.n}, lambda_max={self.lambda_max:.6g})"


def _check_length(values: npt.NDArray, n: int, what: str) -> None:
    if values.shape != (n,):
        raise LengthMismatch(f"{what} has shape {values.shape}, expected ({n},)")


def _fix_signs(eigenvectors: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    """Make the first significant entry of every column positive."""
    significant = np.abs(eigenvectors) > SIGN_TOL
    first = np.argmax(significant, axis=0)
    signs = np.sign(eigenvectors[first, np.arange(eigenvectors.shape[1])])
    signs[signs == 0] = 1.0
    return eigenvectors * signs[None, :]


def eigendecompose(lap: LaplacianMatrix) -> SpectralBasis:
    """Full dense symmetric eigendecomposition with a deterministic sign convention.

    Args:
        lap: Laplacian to decompose; must be symmetric within 1e-12.

    Returns:
        The spectral basis, validated for orthonormality and residual.
    """
    matrix = lap.matrix
    asymmetry = float(np.max(np.abs(matrix - matrix.T), initial=0.0))
    if asymmetry > SYMMETRY_TOL:
        raise NotSymmetric(f"Laplacian asymmetry {asymmetry:.3g} exceeds {SYMMETRY_TOL}")

    try:
        eigenvalues, eigenvectors = scipy.linalg.eigh(matrix)
    except (scipy.linalg.LinAlgError, ValueError) as e:
        raise ConvergenceFailure(f"Symmetric eigensolver failed: {e}") from e

    eigenvectors = _fix_signs(eigenvectors)
    scale = max(1.0, float(eigenvalues[-1]))

    orthonormality = np.max(np.abs(eigenvectors.T @ eigenvectors - np.eye(lap.n)))
    residual = np.max(np.abs(matrix @ eigenvectors - eigenvectors * eigenvalues))
    if orthonormality > ORTHONORMALITY_TOL or residual > RESIDUAL_TOL * scale:
        raise ConvergenceFailure(
            f"Eigendecomposition inaccurate: orthonormality {orthonormality:.3g}, residual {residual:.3g}"
        )
    if abs(eigenvalues[0]) > ZERO_EIGENVALUE_TOL * scale:
        raise ConvergenceFailure(
            f"Smallest eigenvalue {eigenvalues[0]:.3g} is not zero; input is not a Laplacian"
        )

    logger.debug(
        f"Decomposed {lap.kind.value} Laplacian of size {lap.n}, "
        f"lambda in [{eigenvalues[0]:.3g}, {eigenvalues[-1]:.6g}]"
    )
    return SpectralBasis(eigenvalues, eigenvectors, lap.kind)


def gft(basis: SpectralBasis, f: npt.ArrayLike) -> SpectralSignal:
    """Graph Fourier transform U^T f."""
    f = np.asarray(f, dtype=np.float64)
    _check_length(f, basis.n, "Vertex signal")
    return basis.eigenvectors.T @ f


def igft(basis: SpectralBasis, fbar: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """Inverse graph Fourier transform U fbar."""
    fbar = np.asarray(fbar, dtype=np.float64)
    _check_length(fbar, basis.n, "Spectral signal")
    return basis.eigenvectors @ fbar


def apply_diagonal_filter(kernel: "FilterKernel", fbar: npt.ArrayLike) -> SpectralSignal:
    """Elementwise product of a kernel response with spectral coefficients."""
    fbar = np.asarray(fbar, dtype=np.float64)
    _check_length(fbar, kernel.values.size, "Spectral signal")
    return kernel.values * fbar
