"""Spectral-sampling analysis and synthesis.

Downsampling folds the filtered spectrum with [I J] (low-pass) and [I -J]
(high-pass); upsampling applies the transposes. Both are index arithmetic
on the halves of the spectrum and are never formed as matrices.
"""

import logging

import numpy as np
import numpy.typing as npt

from errors import LengthMismatch, OddVertexCount
from filterbank.kernels import FilterKernel, KernelSpec, highpass_kernel
from filterbank.reconstruction import (
    DEFAULT_PR_TOL,
    FoldCoefficients,
    MultiplicationCounter,
    SynthesisInverse,
)
from graph.build import kron_reduce, select_sampling_set
from graph.models import LaplacianMatrix
from spectral.basis import (
    SpectralBasis,
    apply_diagonal_filter,
    eigendecompose,
    gft,
    igft,
)

logger = logging.getLogger(__name__)


class SubbandCoefficients:
    """N/2 low-pass and N/2 high-pass spectral coefficients."""

    def __init__(self, d_lp: npt.ArrayLike, d_hp: npt.ArrayLike):
        self.d_lp = np.array(d_lp, dtype=np.float64)
        self.d_hp = np.array(d_hp, dtype=np.float64)
        if self.d_lp.ndim != 1 or self.d_lp.shape != self.d_hp.shape:
            raise LengthMismatch(
                f"Subbands must be vectors of equal length, got {self.d_lp.shape} and {self.d_hp.shape}"
            )

    @property
    def n(self) -> int:
        """Total number of coefficients in both channels."""
        return 2 * self.d_lp.size

    def concatenated(self) -> npt.NDArray[np.float64]:
        return np.concatenate([self.d_lp, self.d_hp])

    @classmethod
    def from_concatenated(cls, values: npt.ArrayLike) -> "SubbandCoefficients":
        values = np.asarray(values, dtype=np.float64)
        if values.size % 2:
            raise OddVertexCount(f"Concatenated subbands need even length, got {values.size}")
        half = values.size // 2
        return cls(values[:half], values[half:])

    def __repr__(self) -> str:
        return f"SubbandCoefficients(n={self.n})"


def _check_even(n: int) -> int:
    if n % 2:
        raise OddVertexCount(f"Spectral sampling needs an even vertex count, got {n}")
    return n // 2


def analyze(
    basis0: SpectralBasis, lp: FilterKernel, f: npt.ArrayLike
) -> SubbandCoefficients:
    """Filter in the spectral domain and fold each channel to N/2 coefficients.

    d_lp(k) = H_LP(k) f(k) + H_LP(N-1-k) f(N-1-k)
    d_hp(k) = H_HP(k) f(k) - H_HP(N-1-k) f(N-1-k)

    Args:
        basis0: Basis of the original graph.
        lp: Low-pass kernel on that basis.
        f: Vertex signal.
    """
    half = _check_even(basis0.n)
    if lp.n != basis0.n:
        raise LengthMismatch(f"Kernel of length {lp.n} on a basis of size {basis0.n}")

    fbar = gft(basis0, f)
    low = apply_diagonal_filter(lp, fbar)
    high = apply_diagonal_filter(highpass_kernel(lp), fbar)
    return SubbandCoefficients(
        low[:half] + low[::-1][:half],
        high[:half] - high[::-1][:half],
    )


def combine(sub: SubbandCoefficients) -> npt.NDArray[np.float64]:
    """Upsample both channels and add: y = S_uLP d_lp + S_uHP d_hp."""
    y = np.empty(sub.n)
    half = sub.n // 2
    y[:half] = sub.d_lp + sub.d_hp
    y[half:] = (sub.d_lp - sub.d_hp)[::-1]
    return y


def synthesize(
    basis0: SpectralBasis,
    inv: SynthesisInverse,
    sub: SubbandCoefficients,
    counter: MultiplicationCounter | None = None,
) -> npt.NDArray[np.float64]:
    """Combine the subbands, apply the closed-form inverse, return to vertices.

    Args:
        basis0: Basis of the original graph.
        inv: Closed-form inverse of the combine matrix.
        sub: Subband coefficients.
        counter: Optional counter of the inverse's multiplications.
    """
    if sub.n != basis0.n or inv.n != basis0.n:
        raise LengthMismatch(
            f"Subbands ({sub.n}) and inverse ({inv.n}) must match the basis size {basis0.n}"
        )
    z = inv.apply(combine(sub), counter=counter)
    return igft(basis0, z)


def reduced_basis(lap: LaplacianMatrix, basis0: SpectralBasis) -> SpectralBasis:
    """Basis U_1 of the Kron-reduced graph on the sampling set."""
    keep = select_sampling_set(basis0)
    return eigendecompose(kron_reduce(lap, keep))


def subband_to_reduced_vertex(
    basis1: SpectralBasis, d: npt.ArrayLike
) -> npt.NDArray[np.float64]:
    """View one subband as a vertex signal on the reduced graph, U_1 d."""
    d = np.asarray(d, dtype=np.float64)
    if d.shape != (basis1.n,):
        raise LengthMismatch(f"Subband of shape {d.shape} on a reduced basis of size {basis1.n}")
    return igft(basis1, d)


class SpectralFilterBank:
    """A designed bank: basis, complementary kernels and the synthesis inverse."""

    def __init__(
        self, basis: SpectralBasis, lowpass: FilterKernel, tol: float = DEFAULT_PR_TOL
    ):
        _check_even(basis.n)
        if lowpass.n != basis.n:
            raise LengthMismatch(f"Kernel of length {lowpass.n} on a basis of size {basis.n}")
        self.basis = basis
        self.lowpass = lowpass
        self.highpass = highpass_kernel(lowpass)
        self.fold = FoldCoefficients.from_kernel(lowpass)
        self.inverse = SynthesisInverse.from_fold(self.fold, tol)
        logger.debug(
            f"Designed {lowpass.design.kind} bank on {basis.n} vertices, "
            f"max |Psi_tilde| = {np.max(np.abs(self.inverse.psi_tilde)):.3g}"
        )

    @classmethod
    def from_spec(
        cls, basis: SpectralBasis, spec: KernelSpec, tol: float = DEFAULT_PR_TOL
    ) -> "SpectralFilterBank":
        return cls(basis, spec.realize(basis), tol)

    @property
    def n(self) -> int:
        return self.basis.n

    def analyze(self, f: npt.ArrayLike) -> SubbandCoefficients:
        return analyze(self.basis, self.lowpass, f)

    def synthesize(
        self, sub: SubbandCoefficients, counter: MultiplicationCounter | None = None
    ) -> npt.NDArray[np.float64]:
        return synthesize(self.basis, self.inverse, sub, counter=counter)

    def roundtrip(self, f: npt.ArrayLike) -> npt.NDArray[np.float64]:
        return self.synthesize(self.analyze(f))
