"""Graph construction, Laplacians, sampling sets and Kron reduction."""

import logging
from typing import TYPE_CHECKING

import numpy as np
import numpy.typing as npt
from scipy.sparse.csgraph import connected_components

from errors import (
    DuplicateEdge,
    EmptyKeepSet,
    IndexOutOfRange,
    NegativeWeight,
    OddVertexCount,
    SelfLoop,
    SingularInteriorBlock,
    ZeroDegreeVertex,
)
from graph.models import Graph, LaplacianKind, LaplacianMatrix, VertexSet

if TYPE_CHECKING:
    from spectral.basis import SpectralBasis

logger = logging.getLogger(__name__)

# Reduced off-diagonals smaller than this are treated as absent edges
STRUCTURE_TOL = 1e-10
MAX_INTERIOR_CONDITION = 1e12


def build_graph(n: int, edges: list[tuple[int, int, float]]) -> Graph:
    """Build a graph from an undirected edge list.

    Args:
        n: Number of vertices.
        edges: (u, v, w) triples, each undirected pair listed once.

    Returns:
        The graph with A(u, v) = A(v, u) = w.
    """
    if n < 1:
        raise ValueError(f"Vertex count must be positive, got {n}")

    adjacency = np.zeros((n, n), dtype=np.float64)
    seen: set[tuple[int, int]] = set()
    for u, v, w in edges:
        u, v, w = int(u), int(v), float(w)
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"Edge ({u}, {v}) outside vertex range 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"Self-loop on vertex {u}")
        if w < 0:
            raise NegativeWeight(f"Edge ({u}, {v}) has negative weight {w}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"Edge {key} listed more than once")
        seen.add(key)
        adjacency[u, v] = adjacency[v, u] = w

    return Graph(adjacency)


def is_connected(g: Graph) -> bool:
    n_components, _ = connected_components(g.adjacency > 0, directed=False)
    return n_components == 1


def _inverse_sqrt_degrees(degrees: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    if np.any(degrees <= 0):
        isolated = np.flatnonzero(degrees <= 0)
        raise ZeroDegreeVertex(
            f"Degree normalization undefined: vertices {isolated.tolist()} have zero degree"
        )
    return 1.0 / np.sqrt(degrees)


def _scale_symmetric(matrix: npt.NDArray[np.float64], degrees) -> np.ndarray:
    """D^-1/2 M D^-1/2, symmetrized."""
    inv_sqrt = _inverse_sqrt_degrees(degrees)
    scaled = inv_sqrt[:, None] * matrix * inv_sqrt[None, :]
    return (scaled + scaled.T) / 2


def laplacian(g: Graph, kind: LaplacianKind) -> LaplacianMatrix:
    """Combinatorial L = D - A or normalized I - D^-1/2 A D^-1/2."""
    kind = LaplacianKind(kind)
    degrees = g.degrees
    # Diagonal is the row sum of A; L @ 1 vanishes up to summation-order rounding
    combinatorial = -g.adjacency.copy()
    combinatorial[np.diag_indices(g.n)] = degrees
    if kind is LaplacianKind.COMBINATORIAL:
        return LaplacianMatrix(kind, combinatorial, g)

    return LaplacianMatrix(kind, _scale_symmetric(combinatorial, degrees), g)


def adjacency_normalized(g: Graph) -> npt.NDArray[np.float64]:
    """Normalized adjacency D^-1/2 A D^-1/2, the shift operator of the vertex bank.

    Scaled from A directly, so the diagonal stays exactly zero.
    """
    return _scale_symmetric(g.adjacency, g.degrees)


def select_sampling_set(basis: "SpectralBasis") -> VertexSet:
    """Pick the n/2 vertices where the highest-frequency eigenvector is largest.

    Ties go to the lower vertex index; the result is sorted ascending.
    """
    n = basis.n
    if n % 2:
        raise OddVertexCount(f"Sampling set needs an even vertex count, got {n}")

    last = basis.eigenvectors[:, -1]
    order = np.argsort(-last, kind="stable")
    return np.sort(order[: n // 2]).astype(np.int64)


def _graph_from_combinatorial(reduced: npt.NDArray[np.float64]) -> Graph:
    adjacency = -reduced.copy()
    np.fill_diagonal(adjacency, 0.0)
    adjacency[np.abs(adjacency) <= STRUCTURE_TOL] = 0.0
    # Fill-in weights are nonnegative in exact arithmetic
    adjacency = np.clip(adjacency, 0.0, None)
    return Graph((adjacency + adjacency.T) / 2)


def kron_reduce(lap: LaplacianMatrix, keep: npt.ArrayLike) -> LaplacianMatrix:
    """Kron-reduce a Laplacian onto the kept vertices.

    The Schur complement L_VV - L_VR L_RR^-1 L_RV is always taken on the
    combinatorial Laplacian of the source graph; a normalized result is
    re-normalized from the reduced degrees.

    Args:
        lap: Laplacian of either kind.
        keep: Vertex indices to keep.

    Returns:
        Laplacian of the same kind on len(keep) vertices.
    """
    keep = np.unique(np.asarray(keep, dtype=np.int64))
    n = lap.n
    if keep.size == 0:
        raise EmptyKeepSet("Kron reduction needs at least one kept vertex")
    if keep[0] < 0 or keep[-1] >= n:
        raise IndexOutOfRange(f"Keep set outside vertex range 0..{n - 1}")

    combinatorial = laplacian(lap.source, LaplacianKind.COMBINATORIAL).matrix
    removed = np.setdiff1d(np.arange(n), keep)

    l_vv = combinatorial[np.ix_(keep, keep)]
    if removed.size == 0:
        reduced = l_vv.copy()
    else:
        l_vr = combinatorial[np.ix_(keep, removed)]
        l_rr = combinatorial[np.ix_(removed, removed)]
        condition = np.linalg.cond(l_rr)
        if not np.isfinite(condition) or condition > MAX_INTERIOR_CONDITION:
            raise SingularInteriorBlock(
                f"Eliminated block of size {removed.size} is singular (cond={condition:.3g}); "
                "some removed vertices are cut off from the keep set"
            )
        reduced = l_vv - l_vr @ np.linalg.solve(l_rr, l_vr.T)

    reduced = (reduced + reduced.T) / 2
    reduced_graph = _graph_from_combinatorial(reduced)
    logger.debug(
        f"Kron reduction {n} -> {keep.size} vertices, {len(reduced_graph.edges)} edges"
    )
    # Rebuild from the reduced graph so rows sum to zero exactly
    return laplacian(reduced_graph, lap.kind)
