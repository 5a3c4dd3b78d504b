"""Vertex-sampling spline bank, kept as the dense-inverse baseline.

H_LP = 1/2 (I + B) with B = sum_l w_l A^l on the normalized adjacency A.
The low-pass channel keeps the samples on the keep set, the high-pass
channel those on its complement, so the combined signal is
y = 1/2 (I + K B) f with K = +1 on kept and -1 on discarded vertices.
"""

import logging

import numpy as np
import numpy.typing as npt
import scipy.linalg

from errors import EmptyKeepSet, LengthMismatch, SingularVertexSynthesis
from graph.build import adjacency_normalized
from graph.models import Graph

logger = logging.getLogger(__name__)

MAX_CONDITION = 1e12

WEIGHT_PRESETS: dict[str, list[float]] = {
    "linear": [1.0],
    "cubic": [1.5, -0.6, 0.1],
}


def polynomial_operator(operator: npt.NDArray[np.float64], weights: list[float]) -> np.ndarray:
    """sum_{l=1..J} w_l X^l by Horner's rule."""
    n = operator.shape[0]
    accumulated = weights[-1] * np.eye(n)
    for w in reversed(weights[:-1]):
        accumulated = w * np.eye(n) + operator @ accumulated
    result = operator @ accumulated
    return (result + result.T) / 2


class VertexBank:
    def __init__(
        self,
        weights: list[float],
        keep_set: npt.NDArray[np.int64],
        b_matrix: npt.NDArray[np.float64],
        max_condition: float = MAX_CONDITION,
    ):
        self.weights = [float(w) for w in weights]
        self.keep_set = np.asarray(keep_set, dtype=np.int64)
        self.b_matrix = np.array(b_matrix, dtype=np.float64)
        self.b_matrix.setflags(write=False)

        n = self.b_matrix.shape[0]
        self.signs = -np.ones(n)
        self.signs[self.keep_set] = 1.0
        self.synthesis_matrix = np.eye(n) + self.signs[:, None] * self.b_matrix
        self.condition = float(np.linalg.cond(self.synthesis_matrix))
        if not np.isfinite(self.condition) or self.condition > max_condition:
            raise SingularVertexSynthesis(
                f"I + K B is numerically singular (cond={self.condition:.3g}); "
                "choose weights that keep it invertible for this keep set"
            )
        if self.condition > 1e6:
            logger.warning(f"Vertex bank is poorly conditioned (cond={self.condition:.3g})")

    @property
    def n(self) -> int:
        return self.b_matrix.shape[0]

    @property
    def lowpass_matrix(self) -> npt.NDArray[np.float64]:
        return 0.5 * (np.eye(self.n) + self.b_matrix)

    @property
    def highpass_matrix(self) -> npt.NDArray[np.float64]:
        return 0.5 * (np.eye(self.n) - self.b_matrix)

    def _check(self, values: npt.ArrayLike) -> npt.NDArray[np.float64]:
        values = np.asarray(values, dtype=np.float64)
        if values.shape != (self.n,):
            raise LengthMismatch(f"Signal of shape {values.shape} on a bank of size {self.n}")
        return values

    def analyze(self, f: npt.ArrayLike) -> npt.NDArray[np.float64]:
        """Upsampled-and-combined channels y = 1/2 (I + K B) f."""
        f = self._check(f)
        kept = self.signs > 0
        y = self.highpass_matrix @ f
        y[kept] = (self.lowpass_matrix @ f)[kept]
        return y

    def synthesize(self, y: npt.ArrayLike) -> npt.NDArray[np.float64]:
        """f = 2 (I + K B)^-1 y by a dense solve."""
        y = self._check(y)
        try:
            return 2.0 * scipy.linalg.solve(self.synthesis_matrix, y)
        except scipy.linalg.LinAlgError as e:
            raise SingularVertexSynthesis(f"Dense vertex synthesis failed: {e}") from e


def vs_build(
    g: Graph,
    weights: list[float],
    keep_set: npt.ArrayLike,
    max_condition: float = MAX_CONDITION,
) -> VertexBank:
    """Build the vertex-sampling bank on the normalized adjacency of ``g``.

    Args:
        g: Graph without isolated vertices.
        weights: w_1..w_J of the polynomial B.
        keep_set: Vertices kept by the low-pass channel.
        max_condition: Largest accepted condition number of I + K B.
    """
    if len(weights) < 1:
        raise ValueError("Vertex bank needs at least one polynomial weight")
    keep = np.unique(np.asarray(keep_set, dtype=np.int64))
    if keep.size == 0:
        raise EmptyKeepSet("Vertex bank needs a nonempty keep set")
    if keep.size >= g.n:
        raise ValueError("Keep set must leave at least one vertex to the high-pass channel")

    b_matrix = polynomial_operator(adjacency_normalized(g), list(weights))
    bank = VertexBank(weights, keep, b_matrix, max_condition=max_condition)
    logger.info(
        f"Vertex bank of order {len(weights)} on {g.n} vertices, "
        f"{keep.size} kept, cond(I + K B) = {bank.condition:.3g}"
    )
    return bank


def vs_roundtrip(bank: VertexBank, f: npt.ArrayLike) -> npt.NDArray[np.float64]:
    return bank.synthesize(bank.analyze(f))
