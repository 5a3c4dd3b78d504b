import numpy as np
import pytest

from conftest import basis_of, path_graph
from errors import LengthMismatch, OddVertexCount
from filterbank.bank import (
    SpectralFilterBank,
    SubbandCoefficients,
    analyze,
    combine,
    reduced_basis,
    subband_to_reduced_vertex,
    synthesize,
)
from filterbank.kernels import CustomDesign, FilterKernel, KernelSpec
from filterbank.reconstruction import FoldCoefficients, MultiplicationCounter, SynthesisInverse
from graph.build import laplacian
from graph.models import LaplacianKind
from spectral.basis import SpectralBasis


@pytest.fixture
def identity_basis4():
    """A 4-vertex basis whose GFT is the identity, for hand-checked examples."""
    return SpectralBasis([0.0, 1.0, 2.0, 3.0], np.eye(4), LaplacianKind.COMBINATORIAL)


def test_analyze_worked_example(identity_basis4):
    """Test the two-term folds for H_LP = [1, 1, 0, 0] on u = [a, b, c, d]."""
    lp = FilterKernel([1.0, 1.0, 0.0, 0.0], CustomDesign())
    sub = analyze(identity_basis4, lp, [1.0, 2.0, 3.0, 4.0])
    np.testing.assert_array_equal(sub.d_lp, [1.0, 2.0])
    np.testing.assert_array_equal(sub.d_hp, [-4.0, -3.0])
    assert sub.n == 4


def test_synthesize_worked_example(identity_basis4):
    """Test that the N=4 subbands synthesize back to [a, b, c, d]."""
    lp = FilterKernel([1.0, 1.0, 0.0, 0.0], CustomDesign())
    inv = SynthesisInverse.from_fold(FoldCoefficients.from_kernel(lp))
    sub = SubbandCoefficients([1.0, 2.0], [-4.0, -3.0])
    np.testing.assert_allclose(synthesize(identity_basis4, inv, sub), [1, 2, 3, 4])


def test_analyze_general_kernel_folds(identity_basis4):
    """Test the fold formula with a kernel that is neither 0 nor 1."""
    h = np.array([0.9, 0.6, 0.3, 0.2])
    u = np.array([1.0, -2.0, 0.5, 3.0])
    sub = analyze(identity_basis4, FilterKernel(h, CustomDesign()), u)
    np.testing.assert_allclose(sub.d_lp, [h[0] * u[0] + h[3] * u[3], h[1] * u[1] + h[2] * u[2]])
    g = 1 - h
    np.testing.assert_allclose(sub.d_hp, [g[0] * u[0] - g[3] * u[3], g[1] * u[1] - g[2] * u[2]])


def test_combine_places_sum_and_reversed_difference():
    """Test the upsample-and-add step on the halves."""
    y = combine(SubbandCoefficients([1.0, 2.0], [10.0, 20.0]))
    np.testing.assert_array_equal(y, [11.0, 22.0, -18.0, -9.0])


def test_dc_signal_lands_in_lowpass(sensor100_basis):
    """Test that u_0 gives d_lp = e_0 and d_hp = 0 for the exact ideal bank."""
    bank = SpectralFilterBank.from_spec(sensor100_basis, KernelSpec.parse("ideal"))
    sub = bank.analyze(sensor100_basis.eigenvectors[:, 0])
    expected = np.zeros(50)
    expected[0] = 1.0
    np.testing.assert_allclose(sub.d_lp, expected, atol=1e-12)
    np.testing.assert_allclose(sub.d_hp, 0.0, atol=1e-12)


def test_zero_signal(sensor100_basis):
    """Test that zero in gives zero subbands and zero subbands give zero."""
    bank = SpectralFilterBank.from_spec(sensor100_basis, KernelSpec.parse("butterworth:5"))
    sub = bank.analyze(np.zeros(100))
    assert sub.n == 100
    assert not np.any(sub.concatenated())
    assert not np.any(bank.synthesize(SubbandCoefficients(np.zeros(50), np.zeros(50))))


def test_analyze_is_linear(sensor100_basis, rng):
    """Test analyze(a f + b g) = a analyze(f) + b analyze(g)."""
    bank = SpectralFilterBank.from_spec(sensor100_basis, KernelSpec.parse("butterworth:10"))
    f, g = rng.standard_normal(100), rng.standard_normal(100)
    combined = bank.analyze(2.5 * f - 0.75 * g).concatenated()
    separate = 2.5 * bank.analyze(f).concatenated() - 0.75 * bank.analyze(g).concatenated()
    np.testing.assert_allclose(combined, separate, atol=1e-10)


def test_bank_roundtrip_counts_multiplications(sensor100_basis, rng):
    """Test PR and the 2N multiplications of the synthesis inverse."""
    bank = SpectralFilterBank.from_spec(sensor100_basis, KernelSpec.parse("ideal:0.1"))
    f = rng.standard_normal(100)
    counter = MultiplicationCounter()
    out = bank.synthesize(bank.analyze(f), counter=counter)
    assert counter.count == 200
    assert np.linalg.norm(out - f) <= 1e-9 * np.linalg.norm(f)


def test_bank_shape_errors(sensor100_basis):
    """Test odd sizes and mismatched lengths."""
    odd = basis_of(path_graph(5))
    with pytest.raises(OddVertexCount):
        SpectralFilterBank(odd, FilterKernel(np.ones(5), CustomDesign()))
    bank = SpectralFilterBank.from_spec(sensor100_basis, KernelSpec.parse("ideal"))
    with pytest.raises(LengthMismatch):
        bank.analyze(np.zeros(98))
    with pytest.raises(LengthMismatch):
        bank.synthesize(SubbandCoefficients(np.zeros(49), np.zeros(49)))
    with pytest.raises(LengthMismatch):
        SubbandCoefficients(np.zeros(3), np.zeros(4))
    with pytest.raises(OddVertexCount):
        SubbandCoefficients.from_concatenated(np.zeros(7))


def test_reduced_basis_and_vertex_view(sensor100, sensor100_basis, rng):
    """Test U_1 e_0, the U_1^T U_1 d round trip and zero."""
    lap = laplacian(sensor100, LaplacianKind.COMBINATORIAL)
    basis1 = reduced_basis(lap, sensor100_basis)
    assert basis1.n == 50

    e0 = np.zeros(50)
    e0[0] = 1.0
    np.testing.assert_allclose(subband_to_reduced_vertex(basis1, e0), basis1.eigenvectors[:, 0])

    d = rng.standard_normal(50)
    np.testing.assert_allclose(basis1.gft(subband_to_reduced_vertex(basis1, d)), d, atol=1e-10)
    assert not np.any(subband_to_reduced_vertex(basis1, np.zeros(50)))
    with pytest.raises(LengthMismatch):
        subband_to_reduced_vertex(basis1, np.zeros(49))
