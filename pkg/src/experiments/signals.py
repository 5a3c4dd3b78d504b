"""Test signals defined by their graph spectrum."""

import logging
import math
from typing import Literal

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, Field

from spectral.basis import SpectralBasis, igft

logger = logging.getLogger(__name__)

SMOOTH_DYNAMIC_RANGE = 100.0
DEFAULT_LOCALIZED_WIDTH = 5.0
DEFAULT_PERTURBATION = 0.01


class SmoothSignalSpec(BaseModel):
    kind: Literal["smooth"] = "smooth"
    decay: float | None = Field(
        default=None,
        ge=0,
        description="Rate of exp(-decay * lambda); defaults to a 100:1 drop over the spectrum",
    )

    def resolve_decay(self, basis: SpectralBasis) -> float:
        if self.decay is not None:
            return self.decay
        if basis.lambda_max <= 0:
            return 0.0
        return math.log(SMOOTH_DYNAMIC_RANGE) / basis.lambda_max


class LocalizedSignalSpec(BaseModel):
    kind: Literal["localized"] = "localized"
    center_index: int | None = Field(
        default=None, ge=0, description="Spectral index of the bump; defaults to N/4"
    )
    width: float = Field(
        default=DEFAULT_LOCALIZED_WIDTH, gt=0, description="Bump width in spectral indices"
    )
    perturbation: float = Field(
        default=DEFAULT_PERTURBATION,
        ge=0,
        description="Standard deviation of the seeded perturbation of every coefficient",
    )


SignalSpec = SmoothSignalSpec | LocalizedSignalSpec


class TestSignal:
    """A unit-norm vertex signal and the spec it was generated from."""

    __test__ = False

    def __init__(self, spec: SignalSpec, values: npt.ArrayLike):
        self.spec = spec
        self.values = np.array(values, dtype=np.float64)
        self.values.setflags(write=False)

    @property
    def n(self) -> int:
        return self.values.size

    def __repr__(self) -> str:
        return f"TestSignal(kind={self.spec.kind}, n={self.n})"


def smooth_spectrum(basis: SpectralBasis, spec: SmoothSignalSpec) -> np.ndarray:
    return np.exp(-spec.resolve_decay(basis) * basis.eigenvalues)


def localized_spectrum(
    basis: SpectralBasis, spec: LocalizedSignalSpec, rng: np.random.Generator
) -> np.ndarray:
    center = basis.n // 4 if spec.center_index is None else spec.center_index
    offsets = (np.arange(basis.n) - center) / spec.width
    bump = np.exp(-0.5 * offsets**2)
    return bump + spec.perturbation * rng.standard_normal(basis.n)


def gen_test_signal(basis: SpectralBasis, kind: SignalSpec, seed: int = 0) -> TestSignal:
    """Build a unit-norm vertex signal from a prescribed spectrum.

    Args:
        basis: Spectral basis of the graph the signal lives on.
        kind: Smooth (exponentially decaying) or localized (Gaussian bump) spectrum.
        seed: Seed of the localized perturbation; unused for smooth signals.
    """
    match kind:
        case SmoothSignalSpec():
            fbar = smooth_spectrum(basis, kind)
        case LocalizedSignalSpec():
            fbar = localized_spectrum(basis, kind, np.random.default_rng(seed))
        case _:
            raise ValueError(f"Unknown signal spec {kind!r}")

    f = igft(basis, fbar)
    f /= np.linalg.norm(f)
    logger.debug(f"Generated {kind.kind} test signal on {basis.n} vertices")
    return TestSignal(kind, f)
