"""Graph and Laplacian value types."""

from enum import StrEnum

import numpy as np
import numpy.typing as npt

from errors import NegativeWeight, SelfLoop

VertexSet = npt.NDArray[np.int64]


def _frozen(array: npt.ArrayLike) -> npt.NDArray[np.float64]:
    out = np.array(array, dtype=np.float64)
    out.setflags(write=False)
    return out


class LaplacianKind(StrEnum):
    COMBINATORIAL = "combinatorial"
    NORMALIZED = "normalized"


class Graph:
    """Weighted undirected graph without self-loops.

    The adjacency matrix is stored densely and is read-only after construction.
    """

    def __init__(self, adjacency: npt.ArrayLike):
        adjacency = _frozen(adjacency)
        if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
            raise ValueError(f"Adjacency must be square, got shape {adjacency.shape}")
        if not np.array_equal(adjacency, adjacency.T):
            raise ValueError("Adjacency must be exactly symmetric")
        if np.any(np.diag(adjacency) != 0):
            raise SelfLoop("Adjacency has a nonzero diagonal entry")
        if np.any(adjacency < 0):
            raise NegativeWeight("Adjacency has a negative weight")
        self.adjacency = adjacency

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def degrees(self) -> npt.NDArray[np.float64]:
        return self.adjacency.sum(axis=1)

    @property
    def edges(self) -> list[tuple[int, int, float]]:
        """Edges as (u, v, w) with u < v, in row-major order."""
        rows, cols = np.nonzero(np.triu(self.adjacency, k=1))
        return [
            (int(u), int(v), float(self.adjacency[u, v])) for u, v in zip(rows, cols)
        ]

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={len(self.edges)})"


class LaplacianMatrix:
    """A Laplacian of a given kind together with the graph it came from."""

    def __init__(self, kind: LaplacianKind, matrix: npt.ArrayLike, source: Graph):
        self.kind = LaplacianKind(kind)
        self.matrix = _frozen(matrix)
        self.source = source

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def __repr__(self) -> str:
        return f"LaplacianMatrix(kind={self.kind.value}, n={self.n})"
