"""Perfect reconstruction check and the closed-form inverse of the combine matrix.

With psi_n = 2 H_LP(n) - 1 the spectral combine matrix is C = I + J diag(psi),
nonzero only on its main and anti-diagonal. It splits into N/2 independent
2x2 blocks, one per pair (n, N-1-n), so its inverse needs no dense algebra.
"""

import logging
from typing import TYPE_CHECKING

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, Field

from errors import LengthMismatch, OddVertexCount, SingularSynthesis

if TYPE_CHECKING:
    from filterbank.kernels import FilterKernel

logger = logging.getLogger(__name__)

DEFAULT_PR_TOL = 1e-8


class FoldCoefficients:
    """psi_n = 2 H_LP(n) - 1 for every eigenvalue index."""

    def __init__(self, psi: npt.ArrayLike):
        self.psi = np.array(psi, dtype=np.float64)
        if self.psi.ndim != 1:
            raise ValueError(f"Fold coefficients must be a vector, got shape {self.psi.shape}")
        self.psi.setflags(write=False)

    @classmethod
    def from_kernel(cls, kernel: "FilterKernel") -> "FoldCoefficients":
        return cls(2.0 * kernel.values - 1.0)

    @property
    def n(self) -> int:
        return self.psi.size


def fold_coefficients(kernel: "FilterKernel") -> FoldCoefficients:
    return FoldCoefficients.from_kernel(kernel)


def _as_psi(psi: FoldCoefficients | npt.ArrayLike) -> npt.NDArray[np.float64]:
    values = psi.psi if isinstance(psi, FoldCoefficients) else np.asarray(psi, dtype=np.float64)
    if values.size % 2:
        raise OddVertexCount(f"Fold coefficients need an even length, got {values.size}")
    return values


def pair_determinants(psi: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    """1 - psi_n psi_{N-1-n} for n < N/2, the determinants of the 2x2 blocks."""
    half = psi.size // 2
    return 1.0 - psi[:half] * psi[::-1][:half]


class PRReport(BaseModel):
    ok: bool = Field(description="Whether every 2x2 block is invertible")
    margin: float = Field(description="Smallest |1 - psi_n psi_{N-1-n}|")
    worst_pair: int = Field(description="Index n < N/2 attaining the margin")


def pr_check(psi: FoldCoefficients | npt.ArrayLike, tol: float = DEFAULT_PR_TOL) -> PRReport:
    """Check that psi_n != 1 / psi_{N-1-n} holds for every pair, with a margin.

    Args:
        psi: Fold coefficients.
        tol: The margin must exceed this for the bank to count as invertible.
    """
    values = _as_psi(psi)
    if values.size == 0:
        return PRReport(ok=False, margin=0.0, worst_pair=0)
    margins = np.abs(pair_determinants(values))
    worst = int(np.argmin(margins))
    margin = float(margins[worst])
    return PRReport(ok=margin > tol, margin=margin, worst_pair=worst)


class MultiplicationCounter:
    """Counts scalar multiplications performed through ``multiply``."""

    def __init__(self):
        self.count = 0

    def multiply(self, a: npt.NDArray, b: npt.NDArray) -> npt.NDArray:
        product = np.multiply(a, b)
        self.count += product.size
        return product

    def reset(self) -> None:
        self.count = 0


class SynthesisInverse:
    """The inverse of C in closed form, Psi_tilde (I - J Psi).

    Psi_tilde(n) = Psi_tilde(N-1-n) = 1 / (1 - psi_n psi_{N-1-n}).
    """

    def __init__(self, psi: npt.ArrayLike, psi_tilde: npt.ArrayLike):
        self.psi = np.array(psi, dtype=np.float64)
        self.psi_tilde = np.array(psi_tilde, dtype=np.float64)
        if self.psi.shape != self.psi_tilde.shape:
            raise LengthMismatch(
                f"psi {self.psi.shape} and psi_tilde {self.psi_tilde.shape} differ in shape"
            )
        self.psi.setflags(write=False)
        self.psi_tilde.setflags(write=False)

    @classmethod
    def from_fold(
        cls, psi: FoldCoefficients | npt.ArrayLike, tol: float = DEFAULT_PR_TOL
    ) -> "SynthesisInverse":
        values = _as_psi(psi)
        report = pr_check(values, tol)
        if not report.ok:
            raise SingularSynthesis(
                f"Combine matrix is singular: pair {report.worst_pair} has margin "
                f"{report.margin:.3g} <= {tol:g}"
            )
        reciprocals = 1.0 / pair_determinants(values)
        return cls(values, np.concatenate([reciprocals, reciprocals[::-1]]))

    @property
    def n(self) -> int:
        return self.psi.size

    def apply(
        self, y: npt.ArrayLike, counter: MultiplicationCounter | None = None
    ) -> npt.NDArray[np.float64]:
        """z = C^-1 y, two multiplications per output coefficient.

        z(n) = Psi_tilde(n) * (y(n) - psi_{N-1-n} * y(N-1-n))
        """
        y = np.asarray(y, dtype=np.float64)
        if y.shape != (self.n,):
            raise LengthMismatch(f"Combined signal has shape {y.shape}, expected ({self.n},)")
        multiply = counter.multiply if counter is not None else np.multiply
        cross = multiply(self.psi[::-1], y[::-1])
        return multiply(self.psi_tilde, y - cross)


def synthesis_inverse(
    psi: FoldCoefficients | npt.ArrayLike, tol: float = DEFAULT_PR_TOL
) -> SynthesisInverse:
    return SynthesisInverse.from_fold(psi, tol)


def dense_c_matrix(psi: FoldCoefficients | npt.ArrayLike) -> npt.NDArray[np.float64]:
    """Dense C with C(i, i) = 1 and C(i, N-1-i) = psi_{N-1-i}; reference only."""
    values = _as_psi(psi)
    n = values.size
    c = np.eye(n)
    rows = np.arange(n)
    # Middle entries coincide with the diagonal only for odd n, rejected above
    c[rows, n - 1 - rows] = values[::-1]
    return c
