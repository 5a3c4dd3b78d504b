"""Eigendecomposition, graph Fourier transform and diagonal spectral filtering."""
