import logging
import os

import numpy as np

from spectral.basis import SpectralBasis
from utils import FLOAT_FORMAT

logger = logging.getLogger(__name__)


def export_basis(basis: SpectralBasis, directory: str) -> list[str]:
    """Dump eigenvalues and eigenvectors as CSV for inspection.

    Returns:
        Paths of the written files.
    """
    os.makedirs(directory, exist_ok=True)
    values_path = os.path.join(directory, "eigenvalues.csv")
    vectors_path = os.path.join(directory, "eigenvectors.csv")
    fmt = f"%{FLOAT_FORMAT}"
    np.savetxt(values_path, basis.eigenvalues, fmt=fmt, header="lambda", comments="")
    # Column j is eigenvector j
    np.savetxt(vectors_path, basis.eigenvectors, fmt=fmt, delimiter=",")
    logger.info(f"Exported {basis.kind.value} basis of size {basis.n} to {directory}")
    return [values_path, vectors_path]
