"""Two-channel spline graph filter bank with spectral sampling."""
