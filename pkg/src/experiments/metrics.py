import numpy as np
import numpy.typing as npt

from errors import FractionOutOfRange, LengthMismatch, ZeroReference
from filterbank.bank import SubbandCoefficients

SNR_CAP_DB = 300.0


def _ratio_db(signal_energy: float, error_energy: float) -> float:
    if error_energy == 0:
        return SNR_CAP_DB
    return min(SNR_CAP_DB, 10.0 * np.log10(signal_energy / error_energy))


def snr_db(reference: npt.ArrayLike, estimate: npt.ArrayLike) -> float:
    """10 log10(||f||^2 / ||f - f_hat||^2), capped at SNR_CAP_DB."""
    reference = np.asarray(reference, dtype=np.float64)
    estimate = np.asarray(estimate, dtype=np.float64)
    if reference.shape != estimate.shape:
        raise LengthMismatch(
            f"Reference of shape {reference.shape} against estimate of shape {estimate.shape}"
        )
    signal_energy = float(np.dot(reference, reference))
    if signal_energy == 0:
        raise ZeroReference("SNR is undefined for an all-zero reference signal")
    error = reference - estimate
    return _ratio_db(signal_energy, float(np.dot(error, error)))


def denoising_gain_db(
    noise: npt.ArrayLike, clean: npt.ArrayLike, denoised: npt.ArrayLike
) -> float:
    """SNR improvement 10 log10(||xi||^2 / ||f_denoised - f||^2)."""
    noise = np.asarray(noise, dtype=np.float64)
    error = np.asarray(denoised, dtype=np.float64) - np.asarray(clean, dtype=np.float64)
    if noise.shape != error.shape:
        raise LengthMismatch(f"Noise of shape {noise.shape} against signal of shape {error.shape}")
    return _ratio_db(float(np.dot(noise, noise)), float(np.dot(error, error)))


def hard_threshold(sub: SubbandCoefficients, t: float) -> SubbandCoefficients:
    """Keep a coefficient iff |c| > t, in both channels independently."""
    if t < 0:
        raise ValueError(f"Threshold must be nonnegative, got {t}")
    return SubbandCoefficients(
        np.where(np.abs(sub.d_lp) > t, sub.d_lp, 0.0),
        np.where(np.abs(sub.d_hp) > t, sub.d_hp, 0.0),
    )


def keep_count(fraction: float, n: int) -> int:
    if not 0 < fraction <= 1:
        raise FractionOutOfRange(f"Fraction must be in (0, 1], got {fraction}")
    return int(np.floor(fraction * n + 0.5))


def nla_keep_fraction(sub: SubbandCoefficients, fraction: float) -> SubbandCoefficients:
    """Keep the round(fraction * N) largest coefficients across both channels.

    Ties go to the lower index of the concatenation [d_lp, d_hp].
    """
    k = keep_count(fraction, sub.n)
    joint = sub.concatenated()
    order = np.argsort(-np.abs(joint), kind="stable")
    kept = np.zeros_like(joint)
    kept[order[:k]] = joint[order[:k]]
    return SubbandCoefficients.from_concatenated(kept)
