"""Low-pass kernel designs and their serialized specification."""

import logging
from typing import Literal

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, Field

from errors import CutoffOutOfRange, OddVertexCount, PRViolation
from spectral.basis import SpectralBasis

logger = logging.getLogger(__name__)

DEFAULT_EPSILON = 0.1
CUTOFF_SLACK = 1e-12


class IdealDesign(BaseModel):
    kind: Literal["ideal"] = "ideal"
    lambda_cut: float = Field(description="Largest eigenvalue in the passband")
    epsilon: float = Field(description="Stopband value of the low-pass response")


class ButterworthDesign(BaseModel):
    kind: Literal["butterworth"] = "butterworth"
    lambda_cut: float = Field(description="Eigenvalue where the response is 2^-1/2")
    beta: int = Field(ge=1, description="Filter order")


class SplineDesign(BaseModel):
    kind: Literal["spline"] = "spline"
    weights: list[float] = Field(
        description="Polynomial weights w_1..w_J of psi(lambda) = sum w_l (1 - lambda)^l"
    )


class CustomDesign(BaseModel):
    kind: Literal["custom"] = "custom"


KernelDesign = IdealDesign | ButterworthDesign | SplineDesign | CustomDesign


class FilterKernel:
    """Diagonal spectral response, index-aligned with the basis eigenvalues."""

    def __init__(
        self, values: npt.ArrayLike, design: KernelDesign, highpass: bool = False
    ):
        self.values = np.array(values, dtype=np.float64)
        if self.values.ndim != 1:
            raise ValueError(f"Kernel values must be a vector, got shape {self.values.shape}")
        self.values.setflags(write=False)
        self.design = design
        self.highpass = highpass

    @property
    def n(self) -> int:
        return self.values.size

    def __repr__(self) -> str:
        band = "HP" if self.highpass else "LP"
        return f"FilterKernel({band}, {self.design.kind}, n={self.n})"


def half_band_eigenvalue(basis: SpectralBasis) -> float:
    """lambda_{N/2-1}, the default cut-off of every design."""
    if basis.n % 2:
        raise OddVertexCount(f"Two-channel bank needs an even vertex count, got {basis.n}")
    return float(basis.eigenvalues[basis.n // 2 - 1])


def design_ideal_kernel(
    basis: SpectralBasis, lambda_cut: float, epsilon: float = DEFAULT_EPSILON
) -> FilterKernel:
    """Ideal low-pass: 1 on the passband, epsilon elsewhere.

    The passband is {n : lambda_n <= lambda_cut, n < N/2}; the index cap only
    matters when an eigenvalue is repeated across the middle of the spectrum.

    Args:
        basis: Spectral basis of the original graph.
        lambda_cut: Cut-off in (lambda_0, lambda_{N/2-1}].
        epsilon: Stopband value in [0, 1).
    """
    upper = half_band_eigenvalue(basis)
    lower = float(basis.eigenvalues[0])
    if not (lower < lambda_cut <= upper + CUTOFF_SLACK * max(1.0, abs(upper))):
        raise CutoffOutOfRange(
            f"Ideal cut-off {lambda_cut} outside ({lower:.6g}, {upper:.6g}]"
        )
    if not 0 <= epsilon < 1:
        raise ValueError(f"Stopband value must be in [0, 1), got {epsilon}")

    half = basis.n // 2
    passband = (basis.eigenvalues <= lambda_cut + CUTOFF_SLACK) & (
        np.arange(basis.n) < half
    )
    values = np.where(passband, 1.0, epsilon)
    kernel = FilterKernel(
        values, IdealDesign(lambda_cut=float(lambda_cut), epsilon=float(epsilon))
    )

    from filterbank.reconstruction import FoldCoefficients, pr_check

    report = pr_check(FoldCoefficients.from_kernel(kernel))
    if not report.ok:
        raise PRViolation(
            f"Ideal kernel with cut-off {lambda_cut:.6g} and epsilon={epsilon} pairs two "
            f"stopband coefficients at index {report.worst_pair}; use a nonzero epsilon"
        )
    logger.debug(f"Ideal kernel with {int(passband.sum())} passband coefficients")
    return kernel


def design_butterworth_kernel(
    basis: SpectralBasis, lambda_cut: float, beta: int
) -> FilterKernel:
    """Butterworth low-pass (1 + (lambda_n / lambda_cut)^(2 beta))^(-1/2)."""
    if lambda_cut <= 0:
        raise CutoffOutOfRange(f"Butterworth cut-off must be positive, got {lambda_cut}")
    if beta < 1:
        raise ValueError(f"Butterworth order must be at least 1, got {beta}")

    ratio = basis.eigenvalues / lambda_cut
    with np.errstate(over="ignore"):
        values = np.power(1.0 + np.power(ratio, 2 * int(beta)), -0.5)
    return FilterKernel(
        values, ButterworthDesign(lambda_cut=float(lambda_cut), beta=int(beta))
    )


def spline_response(eigenvalues: npt.ArrayLike, weights: list[float]) -> np.ndarray:
    """psi_n = sum_l w_l (1 - lambda_n)^l, the eigenvalue map of sum_l w_l A^l."""
    if len(weights) < 1:
        raise ValueError("Spline design needs at least one weight")
    shifted = 1.0 - np.asarray(eigenvalues, dtype=np.float64)
    return np.polynomial.polynomial.polyval(shifted, [0.0, *weights])


def design_spline_kernel(basis: SpectralBasis, weights: list[float]) -> FilterKernel:
    """Polynomial low-pass 1/2 (1 + psi_n) of the vertex-domain spline bank."""
    values = 0.5 * (1.0 + spline_response(basis.eigenvalues, weights))
    return FilterKernel(values, SplineDesign(weights=[float(w) for w in weights]))


def highpass_kernel(lp: FilterKernel) -> FilterKernel:
    """Complementary high-pass 1 - H_LP."""
    return FilterKernel(1.0 - lp.values, lp.design, highpass=not lp.highpass)


class KernelSpec(BaseModel):
    """Serializable kernel request, resolved against a basis by ``realize``."""

    design: Literal["ideal", "butterworth", "spline", "custom"] = Field(
        description="Kernel family"
    )
    lambda_cut: float | None = Field(
        default=None, description="Cut-off eigenvalue; defaults to lambda_{N/2-1}"
    )
    cut_index: int | None = Field(
        default=None, ge=0, description="Use lambda_{cut_index} as the cut-off"
    )
    epsilon: float | None = Field(default=None, description="Ideal stopband value")
    beta: int | None = Field(default=None, ge=1, description="Butterworth order")
    weights: list[float] | None = Field(default=None, description="Spline weights")
    values: list[float] | None = Field(default=None, description="Custom response")

    @classmethod
    def parse(cls, text: str) -> "KernelSpec":
        """Parse the short CLI form.

        e.g. "ideal" (exact ideal), "ideal:0.1", "butterworth:5",
        "spline:1.5,-0.6,0.1"
        """
        name, _, argument = text.strip().partition(":")
        name = name.lower()
        try:
            if name == "ideal":
                return cls(design="ideal", epsilon=float(argument) if argument else 0.0)
            if name in ("butterworth", "bw"):
                if not argument:
                    raise ValueError("missing order")
                return cls(design="butterworth", beta=int(argument))
            if name == "spline":
                weights = [float(w) for w in argument.split(",") if w.strip()]
                return cls(design="spline", weights=weights)
        except ValueError as e:
            raise ValueError(f"Invalid kernel spec '{text}': {e}")
        raise ValueError(
            f"Unknown kernel spec '{text}'; expected ideal[:eps], butterworth:<order> or spline:<w1,...>"
        )

    @property
    def label(self) -> str:
        """Short name used in result tables, e.g. "I", "B5"."""
        match self.design:
            case "ideal":
                return "I" if not self.epsilon else f"I(eps={self.epsilon:g})"
            case "butterworth":
                return f"B{self.beta}"
            case "spline":
                return f"S{len(self.weights or [])}"
            case _:
                return "C"

    def resolve_cut(self, basis: SpectralBasis) -> float:
        if self.lambda_cut is not None:
            return self.lambda_cut
        if self.cut_index is not None:
            if self.cut_index >= basis.n:
                raise CutoffOutOfRange(
                    f"Cut index {self.cut_index} beyond spectrum of size {basis.n}"
                )
            return float(basis.eigenvalues[self.cut_index])
        return half_band_eigenvalue(basis)

    def realize(self, basis: SpectralBasis) -> FilterKernel:
        """Design the low-pass kernel this spec describes on the given basis."""
        match self.design:
            case "ideal":
                epsilon = 0.0 if self.epsilon is None else self.epsilon
                return design_ideal_kernel(basis, self.resolve_cut(basis), epsilon)
            case "butterworth":
                if self.beta is None:
                    raise ValueError("Butterworth spec needs an order")
                return design_butterworth_kernel(basis, self.resolve_cut(basis), self.beta)
            case "spline":
                return design_spline_kernel(basis, self.weights or [])
            case _:
                if self.values is None:
                    raise ValueError("Custom spec needs explicit values")
                return FilterKernel(self.values, CustomDesign())

    @classmethod
    def from_kernel(cls, kernel: FilterKernel) -> "KernelSpec":
        """Fully resolved spec of an already designed kernel."""
        design = kernel.design
        match design:
            case IdealDesign():
                return cls(design="ideal", lambda_cut=design.lambda_cut, epsilon=design.epsilon)
            case ButterworthDesign():
                return cls(design="butterworth", lambda_cut=design.lambda_cut, beta=design.beta)
            case SplineDesign():
                return cls(design="spline", weights=design.weights)
            case _:
                return cls(design="custom", values=kernel.values.tolist())
