"""Monte-Carlo hard-thresholding denoising in the subband domain."""

import asyncio
import logging
import math

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, Field, model_validator

from experiments.metrics import denoising_gain_db, hard_threshold
from experiments.signals import TestSignal
from filterbank.bank import SpectralFilterBank

logger = logging.getLogger(__name__)

THRESHOLD_FACTOR = 3.0
DEFAULT_SIGNAL_RMS = 0.25
MEAN_TOL = 1e-12


class DenoiseConfig(BaseModel):
    sigma: float = Field(gt=0, description="Standard deviation of the additive noise")
    threshold: float | None = Field(
        default=None, ge=0, description="Hard threshold T; defaults to 3 sigma"
    )
    runs: int = Field(default=1000, ge=1, description="Number of Monte-Carlo runs")
    seed: int = Field(default=0, description="Master seed of the noise draws")
    threads: int = Field(default=1, ge=1, description="Worker threads for the runs")
    signal_rms: float | None = Field(
        default=DEFAULT_SIGNAL_RMS,
        gt=0,
        description="Per-vertex RMS the clean signal is scaled to; None keeps it as given",
    )

    @property
    def effective_threshold(self) -> float:
        if self.threshold is None:
            return THRESHOLD_FACTOR * self.sigma
        return self.threshold


class DenoiseResult(BaseModel):
    delta_snr_db: float = Field(description="Mean SNR improvement over the runs")
    per_run: list[float] = Field(description="SNR improvement of each run, in run order")
    config: DenoiseConfig
    method: str = Field(default="", description="Kernel label of the bank")
    graph: str = Field(default="", description="Graph the experiment ran on")

    @model_validator(mode="after")
    def _check_mean(self) -> "DenoiseResult":
        if len(self.per_run) != self.config.runs:
            raise ValueError(f"Expected {self.config.runs} runs, got {len(self.per_run)}")
        if abs(self.delta_snr_db - math.fsum(self.per_run) / len(self.per_run)) > MEAN_TOL:
            raise ValueError("delta_snr_db must be the mean of per_run")
        return self


def run_noise(seed: int, run: int, n: int, sigma: float) -> np.ndarray:
    """Noise of one run, seeded by (seed, run) so runs are order-independent."""
    rng = np.random.default_rng(np.random.SeedSequence([seed, run]))
    return sigma * rng.standard_normal(n)


def scale_signal(f: npt.ArrayLike, signal_rms: float | None) -> np.ndarray:
    f = np.asarray(f, dtype=np.float64)
    if signal_rms is None:
        return f.copy()
    return f * (signal_rms * math.sqrt(f.size) / np.linalg.norm(f))


def denoise_once(
    bank: SpectralFilterBank, clean: np.ndarray, cfg: DenoiseConfig, run: int
) -> float:
    noise = run_noise(cfg.seed, run, clean.size, cfg.sigma)
    sub = hard_threshold(bank.analyze(clean + noise), cfg.effective_threshold)
    return denoising_gain_db(noise, clean, bank.synthesize(sub))


async def run_denoise_async(
    bank: SpectralFilterBank,
    f: TestSignal | npt.ArrayLike,
    cfg: DenoiseConfig,
    method: str = "",
    graph: str = "",
) -> DenoiseResult:
    """Run the Monte-Carlo experiment on up to ``cfg.threads`` worker threads.

    Results are gathered in run order, so per_run does not depend on the
    thread count.
    """
    values = f.values if isinstance(f, TestSignal) else f
    clean = scale_signal(values, cfg.signal_rms)
    semaphore = asyncio.Semaphore(cfg.threads)

    async def semaphore_wrapper(run: int) -> float:
        async with semaphore:
            return await asyncio.to_thread(denoise_once, bank, clean, cfg, run)

    logger.info(
        f"Denoising {method or 'bank'} with sigma={cfg.sigma:g}, "
        f"T={cfg.effective_threshold:g}, {cfg.runs} runs on {cfg.threads} thread(s)"
    )
    per_run = await asyncio.gather(*[semaphore_wrapper(run) for run in range(cfg.runs)])
    per_run = [float(value) for value in per_run]
    mean = math.fsum(per_run) / len(per_run)
    logger.info(f"Denoising {method or 'bank'}: mean gain {mean:.3f} dB")
    return DenoiseResult(
        delta_snr_db=mean, per_run=per_run, config=cfg, method=method, graph=graph
    )


def run_denoise(
    bank: SpectralFilterBank,
    f: TestSignal | npt.ArrayLike,
    cfg: DenoiseConfig,
    method: str = "",
    graph: str = "",
) -> DenoiseResult:
    return asyncio.run(run_denoise_async(bank, f, cfg, method=method, graph=graph))
