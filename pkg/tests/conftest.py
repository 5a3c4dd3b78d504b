import numpy as np
import pytest

from graph.build import build_graph, laplacian
from graph.generators import random_community_graph, random_sensor_graph
from graph.models import Graph, LaplacianKind
from spectral.basis import SpectralBasis, eigendecompose


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1, 1.0) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v, 1.0) for u in range(n) for v in range(u + 1, n)])


def basis_of(g: Graph, kind: LaplacianKind = LaplacianKind.COMBINATORIAL) -> SpectralBasis:
    return eigendecompose(laplacian(g, kind))


@pytest.fixture(scope="session")
def path8() -> Graph:
    return path_graph(8)


@pytest.fixture(scope="session")
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture(scope="session")
def sensor100() -> Graph:
    return random_sensor_graph(100, seed=1)


@pytest.fixture(scope="session")
def community400() -> Graph:
    return random_community_graph(400, 8, seed=1)


@pytest.fixture(scope="session")
def sensor100_basis(sensor100) -> SpectralBasis:
    return basis_of(sensor100)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)
