"""CLI commands that design a bank and check or apply it to one signal."""

import logging
import os
import sys

import click
import numpy as np

from cli.commons import (
    RunManifest,
    graph_options,
    load_problem,
    load_signal,
    parse_kernel,
    signal_options,
)
from errors import PRViolation
from filterbank.bank import SpectralFilterBank, reduced_basis, subband_to_reduced_vertex
from filterbank.io import write_subbands
from filterbank.reconstruction import DEFAULT_PR_TOL, fold_coefficients, pr_check
from filterbank.vertex import WEIGHT_PRESETS, vs_build, vs_roundtrip
from graph.build import select_sampling_set
from spectral.io import export_basis
from utils import format_float

logger = logging.getLogger(__name__)

SPECTRAL_ROUNDTRIP_TOL = 1e-9
VERTEX_ROUNDTRIP_TOL = 1e-8


def kernel_option(default: str = "ideal"):
    return click.option(
        "--kernel",
        "-k",
        default=default,
        show_default=True,
        help="Low-pass kernel: ideal[:eps], butterworth:<order>, spline:<w1,...> or a JSON file",
    )


cut_index_option = click.option(
    "--cut-index",
    type=click.IntRange(min=0),
    default=None,
    help="Use lambda_<index> as the cut-off instead of lambda_{N/2-1}",
)


def parse_weights(text: str) -> list[float]:
    if text in WEIGHT_PRESETS:
        return WEIGHT_PRESETS[text]
    try:
        return [float(w) for w in text.split(",") if w.strip()]
    except ValueError:
        raise click.BadParameter(
            f"'{text}' is neither a preset ({', '.join(WEIGHT_PRESETS)}) nor a weight list",
            param_hint="--weights",
        )


@click.command()
@graph_options
@kernel_option()
@cut_index_option
@click.option("--tol", type=float, default=DEFAULT_PR_TOL, show_default=True, help="PR margin tolerance")
def prcheck(graph_source, laplacian_kind, seed, cache_dir, kernel, cut_index, tol):
    """Check that the bank's synthesis is invertible (exit 1 if not)"""
    spec = parse_kernel(kernel, cut_index)
    try:
        _, _, basis = load_problem(graph_source, laplacian_kind, seed, cache_dir)
        lowpass = spec.realize(basis)
        report = pr_check(fold_coefficients(lowpass), tol)
    except PRViolation as e:
        logger.error(f"Perfect reconstruction fails for {spec.label}: {e}")
        click.echo(f"fail: {e}")
        sys.exit(1)
    except Exception as e:
        logger.error(f"PR check failed with an exception: {e}")
        click.echo(f"An error occurred during the PR check: {e}", err=True)
        raise e

    click.echo(f"margin: {format_float(report.margin)}")
    click.echo(f"worst pair: {report.worst_pair}")
    click.echo("ok" if report.ok else "fail")
    if not report.ok:
        sys.exit(1)


@click.command()
@graph_options
@signal_options
@kernel_option()
@cut_index_option
@click.option(
    "--baseline",
    type=click.Choice(["spectral", "vertex"]),
    default="spectral",
    show_default=True,
    help="Spectral-sampling bank or the vertex-sampling baseline",
)
@click.option(
    "--weights",
    default="linear",
    show_default=True,
    help="Vertex baseline polynomial weights: a preset (linear, cubic) or w1,w2,...",
)
def roundtrip(
    graph_source, laplacian_kind, seed, cache_dir, signal_path, signal_kind,
    kernel, cut_index, baseline, weights,
):
    """Analyze and synthesize a signal and report the reconstruction error"""
    spec = parse_kernel(kernel, cut_index)
    vertex_weights = parse_weights(weights)
    g, _, basis = load_problem(graph_source, laplacian_kind, seed, cache_dir)
    f = load_signal(signal_path, signal_kind, basis, seed)

    try:
        if baseline == "vertex":
            bank = vs_build(g, vertex_weights, select_sampling_set(basis))
            reconstructed = vs_roundtrip(bank, f)
            tol = VERTEX_ROUNDTRIP_TOL
        else:
            reconstructed = SpectralFilterBank.from_spec(basis, spec).roundtrip(f)
            tol = SPECTRAL_ROUNDTRIP_TOL
    except Exception as e:
        logger.error(f"Round trip failed with an exception: {e}")
        click.echo(f"An error occurred during the round trip: {e}", err=True)
        raise e

    error = float(np.linalg.norm(reconstructed - f) / np.linalg.norm(f))
    click.echo(f"relative error: {format_float(error)}")
    if error > tol:
        logger.error(f"Reconstruction error {error:.3g} exceeds {tol:g}")
        click.echo("fail")
        sys.exit(1)
    click.echo("ok")


@click.command()
@graph_options
@signal_options
@kernel_option()
@cut_index_option
@click.option("--output", "-o", required=True, help="Subband CSV output path")
@click.option(
    "--reduced",
    is_flag=True,
    help="Also write both subbands as vertex signals on the Kron-reduced graph",
)
@click.option(
    "--export-basis",
    "basis_dir",
    type=click.Path(file_okay=False),
    default=None,
    help="Also write the eigenvalues and eigenvectors to this directory",
)
def analyze(
    graph_source, laplacian_kind, seed, cache_dir, signal_path, signal_kind,
    kernel, cut_index, output, reduced, basis_dir,
):
    """Dump the low-pass and high-pass subband coefficients of a signal"""
    spec = parse_kernel(kernel, cut_index)
    _, lap, basis = load_problem(graph_source, laplacian_kind, seed, cache_dir)
    f = load_signal(signal_path, signal_kind, basis, seed)

    outputs = [output]
    try:
        sub = SpectralFilterBank.from_spec(basis, spec).analyze(f)
        write_subbands(output, sub)

        if reduced:
            basis1 = reduced_basis(lap, basis)
            reduced_path = f"{os.path.splitext(output)[0]}_reduced.csv"
            table = np.column_stack([
                subband_to_reduced_vertex(basis1, sub.d_lp),
                subband_to_reduced_vertex(basis1, sub.d_hp),
            ])
            np.savetxt(reduced_path, table, fmt="%.17g", delimiter=",", header="lp,hp", comments="")
            outputs.append(reduced_path)

        if basis_dir is not None:
            outputs.extend(export_basis(basis, basis_dir))
    except Exception as e:
        logger.error(f"Analysis failed with an exception: {e}")
        click.echo(f"An error occurred during analysis: {e}", err=True)
        raise e

    manifest = RunManifest(
        command="analyze",
        graph_source=graph_source,
        laplacian=laplacian_kind,
        kernel=[kernel],
        seed=seed,
        options={"cut_index": cut_index, "signal": signal_path, "signal_kind": signal_kind},
        outputs=[os.path.basename(path) for path in outputs],
    )
    manifest_path = f"{os.path.splitext(output)[0]}.manifest.json"
    with open(manifest_path, "w") as f_manifest:
        f_manifest.write(manifest.model_dump_json(indent=2))
    click.echo(f"Wrote {sub.n} subband coefficients to {output}")
