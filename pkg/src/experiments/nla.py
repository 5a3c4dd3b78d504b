"""SNR of the bank when only the largest subband coefficients are kept."""

import logging

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, Field, model_validator

from experiments.metrics import nla_keep_fraction, snr_db
from experiments.signals import TestSignal
from filterbank.bank import SpectralFilterBank

logger = logging.getLogger(__name__)

MONOTONE_SLACK_DB = 1e-9


class NlaCurve(BaseModel):
    fractions: list[float] = Field(description="Fractions of coefficients kept, increasing")
    snr_db: list[float] = Field(description="Reconstruction SNR at each fraction")
    method: str = Field(default="", description="Kernel label of the bank")

    @model_validator(mode="after")
    def _check_axes(self) -> "NlaCurve":
        if len(self.fractions) != len(self.snr_db):
            raise ValueError("fractions and snr_db must have the same length")
        if any(not 0 < f <= 1 for f in self.fractions):
            raise ValueError("fractions must lie in (0, 1]")
        if any(b <= a for a, b in zip(self.fractions, self.fractions[1:])):
            raise ValueError("fractions must be strictly increasing")
        return self

    def is_monotone(self, slack: float = MONOTONE_SLACK_DB) -> bool:
        return all(b >= a - slack for a, b in zip(self.snr_db, self.snr_db[1:]))


def _values(f: TestSignal | npt.ArrayLike) -> np.ndarray:
    if isinstance(f, TestSignal):
        return f.values
    return np.asarray(f, dtype=np.float64)


def run_nla(
    bank: SpectralFilterBank,
    f: TestSignal | npt.ArrayLike,
    fractions: list[float],
    method: str = "",
) -> NlaCurve:
    """Analyze once, then keep each fraction of the coefficients and synthesize.

    Args:
        bank: PR-valid spectral filter bank.
        f: Signal to approximate.
        fractions: Strictly increasing fractions in (0, 1].
        method: Label stored on the curve.
    """
    if not fractions:
        raise ValueError("NLA needs at least one fraction")
    values = _values(f)
    sub = bank.analyze(values)
    snrs = []
    for fraction in fractions:
        approximation = bank.synthesize(nla_keep_fraction(sub, fraction))
        snrs.append(snr_db(values, approximation))

    curve = NlaCurve(fractions=list(fractions), snr_db=snrs, method=method)
    if not curve.is_monotone():
        logger.warning(f"NLA curve of {method or 'bank'} is not monotone in the kept fraction")
    logger.info(
        f"NLA {method or 'bank'}: {len(fractions)} fractions, "
        f"SNR {snrs[0]:.2f} .. {snrs[-1]:.2f} dB"
    )
    return curve
