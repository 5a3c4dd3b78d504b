import logging
import os
import re

import numpy as np
from pydantic import BaseModel, Field

from experiments.denoise import DenoiseResult
from experiments.nla import NlaCurve
from utils import format_float

logger = logging.getLogger(__name__)


def slugify(label: str) -> str:
    """File-name safe form of a kernel label, e.g. "I(eps=0.1)" -> "I_eps_0.1"."""
    return re.sub(r"[^A-Za-z0-9.]+", "_", label).strip("_") or "bank"


def write_nla_csv(path: str, curve: NlaCurve) -> None:
    with open(path, "w") as f:
        f.write("fraction,snr_db\n")
        for fraction, snr in zip(curve.fractions, curve.snr_db):
            f.write(f"{format_float(fraction)},{format_float(snr)}\n")
    logger.info(f"Wrote NLA curve with {len(curve.fractions)} points to {path}")


def read_nla_csv(path: str, method: str = "") -> NlaCurve:
    table = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return NlaCurve(
        fractions=table[:, 0].tolist(), snr_db=table[:, 1].tolist(), method=method
    )


class DenoiseSummary(BaseModel):
    """The JSON summary written next to the per-run CSV of a denoising run."""

    method: str = Field(description="Kernel label of the bank")
    graph: str = Field(description="Graph the experiment ran on")
    sigma: float = Field(description="Noise standard deviation")
    threshold: float = Field(description="Hard threshold actually applied")
    runs: int = Field(description="Number of Monte-Carlo runs")
    seed: int = Field(description="Base seed of the noise draws")
    signal_rms: float | None = Field(description="RMS the clean signal was scaled to")
    delta_snr_db: float = Field(description="Mean SNR improvement over the runs")
    per_run_path: str = Field(description="Per-run CSV, relative to the summary")


def write_denoise_result(directory: str, result: DenoiseResult) -> list[str]:
    """Write the per-run gains as CSV and a JSON summary pointing at them.

    Returns:
        The paths written, summary first.
    """
    stem = f"denoise_{slugify(result.method)}"
    per_run_path = os.path.join(directory, f"{stem}_per_run.csv")
    with open(per_run_path, "w") as f:
        f.write("run,delta_snr_db\n")
        for run, value in enumerate(result.per_run):
            f.write(f"{run},{format_float(value)}\n")

    summary = DenoiseSummary(
        method=result.method,
        graph=result.graph,
        sigma=result.config.sigma,
        threshold=result.config.effective_threshold,
        runs=result.config.runs,
        seed=result.config.seed,
        signal_rms=result.config.signal_rms,
        delta_snr_db=result.delta_snr_db,
        per_run_path=os.path.basename(per_run_path),
    )
    summary_path = os.path.join(directory, f"{stem}.json")
    with open(summary_path, "w") as f:
        f.write(summary.model_dump_json(indent=2))
    logger.info(f"Wrote denoising result of {result.method or 'bank'} to {summary_path}")
    return [summary_path, per_run_path]


def read_per_run(path: str) -> list[float]:
    table = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return table[:, 1].tolist()


def read_denoise_summary(path: str) -> DenoiseSummary:
    with open(path) as f:
        return DenoiseSummary.model_validate_json(f.read())
