"""Seeded random graph generators that retry until the graph is connected."""

import logging
from abc import ABC, abstractmethod
from typing import Literal, override

import numpy as np
from pydantic import BaseModel, Field, model_validator
from scipy.spatial import cKDTree

from errors import ConnectivityFailure
from graph.build import is_connected
from graph.models import Graph

logger = logging.getLogger(__name__)

MAX_GENERATION_ATTEMPTS = 100
DEFAULT_KNN = 6
DEFAULT_P_IN = 0.3
DEFAULT_P_OUT = 0.01


class SensorGraphParams(BaseModel):
    """Parameters of the random geometric (sensor) graph."""

    type: Literal["sensor"] = "sensor"
    n: int = Field(ge=2, description="Number of vertices")
    seed: int = Field(description="Seed of the placement generator")
    knn: int | None = Field(
        default=DEFAULT_KNN,
        ge=1,
        description="Connect each vertex to its k nearest neighbors",
    )
    radius: float | None = Field(
        default=None,
        gt=0,
        description="Connect all pairs closer than this radius instead of k-NN",
    )

    @model_validator(mode="after")
    def _one_rule(self) -> "SensorGraphParams":
        if self.radius is not None:
            self.knn = None
        if self.knn is None and self.radius is None:
            raise ValueError("Either knn or radius must be given")
        return self


class CommunityGraphParams(BaseModel):
    """Parameters of the planted-community graph."""

    type: Literal["community"] = "community"
    n: int = Field(ge=1, description="Number of vertices")
    seed: int = Field(description="Seed of the edge sampler")
    n_communities: int = Field(default=8, ge=1, description="Number of communities")
    p_in: float = Field(
        default=DEFAULT_P_IN, ge=0, le=1, description="Intra-community edge probability"
    )
    p_out: float = Field(
        default=DEFAULT_P_OUT, ge=0, le=1, description="Inter-community edge probability"
    )

    @model_validator(mode="after")
    def _enough_vertices(self) -> "CommunityGraphParams":
        if self.n < self.n_communities:
            raise ValueError(
                f"Need at least one vertex per community: n={self.n}, communities={self.n_communities}"
            )
        return self


class GraphGenerator(ABC):
    """Base class for seeded generators of connected graphs."""

    max_attempts: int = MAX_GENERATION_ATTEMPTS

    @abstractmethod
    def _attempt(self, rng: np.random.Generator) -> Graph:
        """Draw one candidate graph."""
        pass

    def generate(self, seed: int) -> Graph:
        """Draw candidates from a single seeded stream until one is connected.

        Args:
            seed: Seed of the random stream; equal seeds give identical graphs.
        """
        rng = np.random.default_rng(seed)
        for attempt in range(1, self.max_attempts + 1):
            g = self._attempt(rng)
            if is_connected(g):
                logger.info(
                    f"{type(self).__name__} produced a connected graph with {g.n} vertices "
                    f"and {len(g.edges)} edges after {attempt} attempt(s)"
                )
                return g
            logger.debug(f"{type(self).__name__} attempt {attempt} is disconnected")

        raise ConnectivityFailure(
            f"{type(self).__name__} failed to produce a connected graph in {self.max_attempts} attempts"
        )


class SensorGraphGenerator(GraphGenerator):
    """Points uniform in the unit square, Gaussian-weighted neighbor edges.

    Weights are exp(-d^2 / 2 theta^2) with theta the mean edge length.
    """

    def __init__(self, n: int, knn: int | None = DEFAULT_KNN, radius: float | None = None):
        self.n = n
        self.knn = knn
        self.radius = radius

    @override
    def _attempt(self, rng: np.random.Generator) -> Graph:
        coords = rng.random((self.n, 2))
        tree = cKDTree(coords)
        distances = np.zeros((self.n, self.n))

        if self.radius is not None:
            pairs = tree.query_pairs(self.radius, output_type="ndarray")
            if pairs.size:
                rows, cols = pairs[:, 0], pairs[:, 1]
                distances[rows, cols] = np.linalg.norm(coords[rows] - coords[cols], axis=1)
        else:
            k = min(self.knn, self.n - 1)
            nn_dist, nn_idx = tree.query(coords, k=k + 1)
            rows = np.repeat(np.arange(self.n), k)
            cols = nn_idx[:, 1:].ravel()
            distances[rows, cols] = nn_dist[:, 1:].ravel()

        distances = np.maximum(distances, distances.T)
        np.fill_diagonal(distances, 0.0)
        mask = distances > 0
        if not mask.any():
            return Graph(np.zeros((self.n, self.n)))

        theta = distances[mask].mean()
        adjacency = np.where(mask, np.exp(-(distances**2) / (2 * theta**2)), 0.0)
        return Graph(adjacency)


class CommunityGraphGenerator(GraphGenerator):
    """Unit-weight graph with dense communities joined by sparse edges."""

    def __init__(
        self,
        n: int,
        n_communities: int,
        p_in: float = DEFAULT_P_IN,
        p_out: float = DEFAULT_P_OUT,
    ):
        self.n = n
        self.n_communities = n_communities
        self.p_in = p_in
        self.p_out = p_out
        self.labels = np.zeros(n, dtype=np.int64)
        for label, members in enumerate(np.array_split(np.arange(n), n_communities)):
            self.labels[members] = label

    @override
    def _attempt(self, rng: np.random.Generator) -> Graph:
        same = self.labels[:, None] == self.labels[None, :]
        probabilities = np.where(same, self.p_in, self.p_out)
        draws = rng.random((self.n, self.n))
        upper = np.triu(draws < probabilities, k=1)
        return Graph((upper | upper.T).astype(np.float64))


def random_sensor_graph(n: int, seed: int, k_or_radius: int | float = DEFAULT_KNN) -> Graph:
    """Connected random sensor graph.

    Args:
        n: Number of vertices, at least 2.
        seed: Seed of the placement generator.
        k_or_radius: An int selects k-nearest-neighbor edges, a float a
            connection radius.
    """
    if isinstance(k_or_radius, float):
        params = SensorGraphParams(n=n, seed=seed, knn=None, radius=k_or_radius)
    else:
        params = SensorGraphParams(n=n, seed=seed, knn=k_or_radius)
    return generate(params)


def random_community_graph(
    n: int,
    n_communities: int,
    seed: int,
    p_in: float = DEFAULT_P_IN,
    p_out: float = DEFAULT_P_OUT,
) -> Graph:
    """Connected random community graph with unit weights."""
    params = CommunityGraphParams(
        n=n, seed=seed, n_communities=n_communities, p_in=p_in, p_out=p_out
    )
    return generate(params)


def generate(params: SensorGraphParams | CommunityGraphParams) -> Graph:
    """Generate a graph from its serialized parameters."""
    if isinstance(params, SensorGraphParams):
        generator: GraphGenerator = SensorGraphGenerator(
            params.n, knn=params.knn, radius=params.radius
        )
    else:
        generator = CommunityGraphGenerator(
            params.n, params.n_communities, p_in=params.p_in, p_out=params.p_out
        )
    return generator.generate(params.seed)
