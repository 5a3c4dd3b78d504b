import numpy as np
import pytest

from conftest import basis_of
from filterbank.bank import SpectralFilterBank
from filterbank.kernels import KernelSpec
from filterbank.reconstruction import fold_coefficients, pr_check
from graph.models import LaplacianKind

GRAPHS = ["path8", "k4", "sensor100", "community400"]
KERNELS = ["ideal", "ideal:0.1@quarter", "butterworth:5", "butterworth:10", "butterworth:20"]


@pytest.fixture(scope="module")
def bases(request):
    cache = {}

    def get(graph_name: str, kind: LaplacianKind):
        if (graph_name, kind) not in cache:
            g = request.getfixturevalue(graph_name)
            cache[graph_name, kind] = basis_of(g, kind)
        return cache[graph_name, kind]

    return get


def make_spec(name: str, n: int) -> KernelSpec:
    text, _, cut = name.partition("@")
    spec = KernelSpec.parse(text)
    if cut == "quarter":
        spec = spec.model_copy(update={"cut_index": n // 4})
    return spec


@pytest.mark.parametrize("kernel", KERNELS)
@pytest.mark.parametrize("kind", list(LaplacianKind))
@pytest.mark.parametrize("graph_name", GRAPHS)
def test_perfect_reconstruction(bases, graph_name, kind, kernel):
    """Test synthesize(analyze(f)) = f on 20 random signals per configuration."""
    basis = bases(graph_name, kind)
    bank = SpectralFilterBank.from_spec(basis, make_spec(kernel, basis.n))
    rng = np.random.default_rng(basis.n)
    for _ in range(20):
        f = rng.standard_normal(basis.n)
        error = np.linalg.norm(bank.roundtrip(f) - f) / np.linalg.norm(f)
        assert error <= 1e-9


@pytest.mark.parametrize("kind", list(LaplacianKind))
@pytest.mark.parametrize("graph_name", GRAPHS)
def test_butterworth_passes_pr_check_at_half_band(bases, graph_name, kind):
    """Test pr_check on Butterworth kernels of every order at the lambda_{N/2-1} cut-off."""
    basis = bases(graph_name, kind)
    for beta in [1, 2, 5, 10, 20]:
        spec = KernelSpec(design="butterworth", beta=beta, cut_index=basis.n // 2 - 1)
        assert pr_check(fold_coefficients(spec.realize(basis))).ok


@pytest.mark.parametrize("kind", list(LaplacianKind))
def test_butterworth_low_cutoff_fails_pr_check(bases, kind):
    """Test that a sharp low cut-off leaves stopband pairs with a collapsed margin."""
    basis = bases("sensor100", kind)
    spec = KernelSpec(design="butterworth", beta=20, cut_index=1)
    report = pr_check(fold_coefficients(spec.realize(basis)))
    assert report.ok is False
    assert report.margin < 1e-6
