import datetime
import hashlib
import logging

import numpy as np
from diskcache import Cache

from graph.models import LaplacianMatrix
from spectral.basis import SpectralBasis, eigendecompose

logger = logging.getLogger(__name__)

DEFAULT_CACHE_TTL: int = int(datetime.timedelta(days=30).total_seconds())


class CachedEigensolver:
    """Wraps eigendecompose with an on-disk cache keyed by the Laplacian contents."""

    def __init__(self, cache: Cache, ttl: int = DEFAULT_CACHE_TTL):
        """
        Args:
            cache: The diskcache.Cache instance to store bases in.
            ttl: Seconds before a cached basis expires.
        """
        self.cache = cache
        self.ttl = ttl

    @staticmethod
    def cache_key(lap: LaplacianMatrix) -> str:
        matrix = np.ascontiguousarray(lap.matrix, dtype=np.float64)
        digest = hashlib.sha256(matrix.tobytes()).hexdigest()
        return f"eigh:{lap.kind.value}:{lap.n}:{digest}"

    def __call__(self, lap: LaplacianMatrix) -> SpectralBasis:
        """Return the cached basis for this Laplacian, computing it on a miss."""
        key = self.cache_key(lap)
        cached = self.cache.get(key, default=None)
        if cached is not None:
            logger.info(f"Cache HIT for eigendecomposition of size {lap.n}")
            eigenvalues, eigenvectors = cached
            return SpectralBasis(eigenvalues, eigenvectors, lap.kind)

        logger.info(f"Cache MISS for eigendecomposition of size {lap.n}")
        basis = eigendecompose(lap)
        self.cache.set(
            key,
            (np.array(basis.eigenvalues), np.array(basis.eigenvectors)),
            expire=self.ttl,
        )
        return basis
