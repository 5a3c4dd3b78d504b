"""CLI commands for the nonlinear approximation and denoising experiments."""

import logging
import os

import click
from rich.console import Console
from rich.table import Table

from cli.commons import (
    RunManifest,
    graph_options,
    load_problem,
    load_signal,
    parse_kernel,
    signal_options,
    write_manifest,
)
from experiments.denoise import DEFAULT_SIGNAL_RMS, DenoiseConfig, run_denoise
from experiments.io import slugify, write_denoise_result, write_nla_csv
from experiments.nla import run_nla
from filterbank.bank import SpectralFilterBank
from utils import parse_fraction_range

logger = logging.getLogger(__name__)

console = Console()


def kernels_option(*defaults: str):
    return click.option(
        "--kernel",
        "-k",
        "kernels",
        multiple=True,
        default=defaults,
        show_default=True,
        help="Low-pass kernel; repeat to compare several (ideal[:eps], butterworth:<order>, spline:<w1,...>)",
    )


def output_dir_option(func):
    return click.option(
        "--out-dir", "-o", required=True, type=click.Path(file_okay=False), help="Output directory"
    )(func)


@click.command()
@graph_options
@signal_options
@kernels_option("ideal")
@click.option("--cut-index", type=click.IntRange(min=0), default=None, help="Cut-off index for every kernel")
@click.option(
    "--fractions",
    default="0.05:0.05:0.5",
    show_default=True,
    help="Kept fractions as start:step:stop or a comma list",
)
@output_dir_option
def nla(
    graph_source, laplacian_kind, seed, cache_dir, signal_path, signal_kind,
    kernels, cut_index, fractions, out_dir,
):
    """SNR versus the fraction of largest subband coefficients kept"""
    try:
        fraction_values = parse_fraction_range(fractions)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--fractions")
    specs = [parse_kernel(kernel, cut_index) for kernel in kernels]
    _, _, basis = load_problem(graph_source, laplacian_kind, seed, cache_dir)
    f = load_signal(signal_path, signal_kind, basis, seed)
    os.makedirs(out_dir, exist_ok=True)

    outputs = []
    table = Table(title="Nonlinear approximation SNR (dB)")
    table.add_column("fraction")
    try:
        curves = []
        for spec in specs:
            bank = SpectralFilterBank.from_spec(basis, spec)
            curve = run_nla(bank, f, fraction_values, method=spec.label)
            path = os.path.join(out_dir, f"nla_{slugify(spec.label)}.csv")
            write_nla_csv(path, curve)
            outputs.append(os.path.basename(path))
            curves.append(curve)
            table.add_column(spec.label)
    except Exception as e:
        logger.error(f"NLA experiment failed with an exception: {e}")
        click.echo(f"An error occurred during the NLA experiment: {e}", err=True)
        raise e

    for i, fraction in enumerate(fraction_values):
        table.add_row(f"{fraction:g}", *[f"{curve.snr_db[i]:.2f}" for curve in curves])
    console.print(table)

    write_manifest(
        out_dir,
        RunManifest(
            command="nla",
            graph_source=graph_source,
            laplacian=laplacian_kind,
            kernel=list(kernels),
            seed=seed,
            options={
                "cut_index": cut_index,
                "fractions": fractions,
                "signal": signal_path,
                "signal_kind": signal_kind,
            },
            outputs=outputs,
        ),
    )
    click.echo(f"NLA curves saved to: {out_dir}")


@click.command()
@graph_options
@signal_options
@kernels_option("ideal", "butterworth:5")
@click.option("--cut-index", type=click.IntRange(min=0), default=None, help="Cut-off index for every kernel")
@click.option("--sigma", type=click.FloatRange(min=0, min_open=True), required=True, help="Noise standard deviation")
@click.option("--threshold", type=click.FloatRange(min=0), default=None, help="Hard threshold (default: 3 sigma)")
@click.option("--runs", type=click.IntRange(min=1), default=1000, show_default=True, help="Monte-Carlo runs")
@click.option("--threads", type=click.IntRange(min=1), default=1, show_default=True, help="Worker threads")
@click.option(
    "--signal-rms",
    type=click.FloatRange(min=0, min_open=True),
    default=DEFAULT_SIGNAL_RMS,
    show_default=True,
    help="Per-vertex RMS the clean signal is scaled to",
)
@output_dir_option
def denoise(
    graph_source, laplacian_kind, seed, cache_dir, signal_path, signal_kind,
    kernels, cut_index, sigma, threshold, runs, threads, signal_rms, out_dir,
):
    """Average SNR gain of hard-thresholding the subbands of noisy signals"""
    specs = [parse_kernel(kernel, cut_index) for kernel in kernels]
    _, _, basis = load_problem(graph_source, laplacian_kind, seed, cache_dir)
    f = load_signal(signal_path, signal_kind, basis, seed)
    cfg = DenoiseConfig(
        sigma=sigma,
        threshold=threshold,
        runs=runs,
        seed=seed,
        threads=threads,
        signal_rms=signal_rms,
    )
    os.makedirs(out_dir, exist_ok=True)

    outputs = []
    table = Table(title=f"Denoising, sigma={sigma:g}, {runs} runs")
    table.add_column("kernel")
    table.add_column("mean gain (dB)")
    try:
        for spec in specs:
            bank = SpectralFilterBank.from_spec(basis, spec)
            result = run_denoise(bank, f, cfg, method=spec.label, graph=graph_source)
            paths = write_denoise_result(out_dir, result)
            outputs.extend(os.path.basename(path) for path in paths)
            table.add_row(spec.label, f"{result.delta_snr_db:.2f}")
            click.echo(f"{spec.label}: mean SNR gain {result.delta_snr_db:.4f} dB")
    except Exception as e:
        logger.error(f"Denoising experiment failed with an exception: {e}")
        click.echo(f"An error occurred during the denoising experiment: {e}", err=True)
        raise e
    console.print(table)

    write_manifest(
        out_dir,
        RunManifest(
            command="denoise",
            graph_source=graph_source,
            laplacian=laplacian_kind,
            kernel=list(kernels),
            seed=seed,
            options=cfg.model_dump(exclude={"seed"}) | {
                "cut_index": cut_index,
                "signal": signal_path,
                "signal_kind": signal_kind,
            },
            outputs=outputs,
        ),
    )
    click.echo(f"Denoising results saved to: {out_dir}")
