"""Nonlinear approximation and Monte-Carlo denoising on the spectral filter bank."""
