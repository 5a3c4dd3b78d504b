import logging

import numpy as np

from filterbank.bank import SubbandCoefficients
from filterbank.kernels import KernelSpec
from utils import format_float

logger = logging.getLogger(__name__)


def write_subbands(path: str, sub: SubbandCoefficients) -> None:
    """Two columns d_lp, d_hp with N/2 rows."""
    with open(path, "w") as f:
        f.write("d_lp,d_hp\n")
        for lp, hp in zip(sub.d_lp, sub.d_hp):
            f.write(f"{format_float(lp)},{format_float(hp)}\n")
    logger.info(f"Wrote {sub.n} subband coefficients to {path}")


def read_subbands(path: str) -> SubbandCoefficients:
    table = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return SubbandCoefficients(table[:, 0], table[:, 1])


def write_kernel_spec(path: str, spec: KernelSpec) -> None:
    with open(path, "w") as f:
        f.write(spec.model_dump_json(indent=2, exclude_none=True))


def read_kernel_spec(path: str) -> KernelSpec:
    with open(path) as f:
        return KernelSpec.model_validate_json(f.read())
