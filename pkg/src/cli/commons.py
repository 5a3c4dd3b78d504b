"""Shared options, input resolution and run manifests for the CLI commands."""

import json
import logging
import os
import re
from typing import Any

import click
import numpy as np
from diskcache import Cache
from pydantic import BaseModel, Field

from experiments.signals import (
    LocalizedSignalSpec,
    SmoothSignalSpec,
    gen_test_signal,
)
from filterbank.io import read_kernel_spec
from filterbank.kernels import KernelSpec
from graph.build import laplacian
from graph.generators import CommunityGraphParams, SensorGraphParams, generate
from graph.io import read_edge_list
from graph.models import Graph, LaplacianKind, LaplacianMatrix
from spectral.basis import SpectralBasis, eigendecompose
from spectral.cache import CachedEigensolver
from utils import read_signal

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"

_GENERATOR_SOURCE = re.compile(r"^(sensor|community):(\d+)(?::(-?\d+))?$")


class RunManifest(BaseModel):
    """Everything needed to re-run a command and reproduce its outputs."""

    command: str = Field(description="Subcommand that produced the outputs")
    graph_source: str = Field(description="Edge-list path or generator spec")
    laplacian: LaplacianKind = Field(description="Laplacian the basis was computed from")
    kernel: list[str] = Field(default_factory=list, description="Kernel specs, in order")
    seed: int = Field(description="Seed of every random draw in the run")
    options: dict[str, Any] = Field(
        default_factory=dict, description="Remaining command options"
    )
    outputs: list[str] = Field(
        default_factory=list, description="Files written, relative to the manifest"
    )


def write_manifest(directory: str, manifest: RunManifest) -> str:
    path = os.path.join(directory, MANIFEST_NAME)
    with open(path, "w") as f:
        f.write(manifest.model_dump_json(indent=2))
    return path


def read_manifest(path: str) -> RunManifest:
    with open(path) as f:
        return RunManifest.model_validate(json.load(f))


def graph_options(func):
    """--graph, --laplacian, --seed and --cache-dir, shared by every graph command."""
    func = click.option(
        "--cache-dir",
        envvar="SGFB_CACHE_DIR",
        default=None,
        type=click.Path(file_okay=False),
        help="Cache eigendecompositions in this directory (env: SGFB_CACHE_DIR)",
    )(func)
    func = click.option(
        "--seed",
        envvar="SGFB_SEED",
        default=0,
        show_default=True,
        type=int,
        help="Seed of generated graphs, signals and noise (env: SGFB_SEED)",
    )(func)
    func = click.option(
        "--laplacian",
        "laplacian_kind",
        type=click.Choice([kind.value for kind in LaplacianKind]),
        default=LaplacianKind.COMBINATORIAL.value,
        show_default=True,
        help="Variation operator the spectrum is taken from",
    )(func)
    func = click.option(
        "--graph",
        "-g",
        "graph_source",
        required=True,
        help="Edge-list file, or a generator spec such as sensor:100:1 or community:400:1",
    )(func)
    return func


def signal_options(func):
    func = click.option(
        "--signal-kind",
        type=click.Choice(["smooth", "localized"]),
        default="smooth",
        show_default=True,
        help="Test signal to generate when --signal is not given",
    )(func)
    func = click.option(
        "--signal",
        "-s",
        "signal_path",
        type=click.Path(exists=True, dir_okay=False),
        default=None,
        help="Signal file, one value per line",
    )(func)
    return func


def load_graph(source: str, seed: int) -> Graph:
    """Read an edge list, or generate the graph a ``type:n[:seed]`` spec names."""
    if os.path.exists(source):
        logger.info(f"Reading graph from {source}")
        return read_edge_list(source)

    match = _GENERATOR_SOURCE.match(source.strip())
    if match is None:
        raise click.BadParameter(
            f"'{source}' is neither an existing file nor a generator spec "
            "like sensor:100:1",
            param_hint="--graph",
        )
    kind, n, spec_seed = match.groups()
    seed = seed if spec_seed is None else int(spec_seed)
    if kind == "sensor":
        params = SensorGraphParams(n=int(n), seed=seed)
    else:
        params = CommunityGraphParams(n=int(n), seed=seed)
    return generate(params)


def load_basis(lap: LaplacianMatrix, cache_dir: str | None) -> SpectralBasis:
    if cache_dir is None:
        return eigendecompose(lap)
    with Cache(cache_dir) as cache:
        return CachedEigensolver(cache)(lap)


def load_problem(
    graph_source: str,
    laplacian_kind: str,
    seed: int,
    cache_dir: str | None,
    require_even: bool = True,
) -> tuple[Graph, LaplacianMatrix, SpectralBasis]:
    """Load the graph, its Laplacian and the spectral basis a command works on.

    Args:
        require_even: Reject odd vertex counts, which no two-channel bank accepts.
    """
    g = load_graph(graph_source, seed)
    if require_even and g.n % 2:
        raise click.BadParameter(
            f"OddVertexCount: the two-channel bank needs an even vertex count, got {g.n}",
            param_hint="--graph",
        )
    lap = laplacian(g, LaplacianKind(laplacian_kind))
    basis = load_basis(lap, cache_dir)
    logger.info(f"Loaded {g!r} with {lap.kind.value} spectrum up to {basis.lambda_max:.6g}")
    return g, lap, basis


def parse_kernel(text: str, cut_index: int | None = None) -> KernelSpec:
    """A KernelSpec from a JSON file or a short form like butterworth:5."""
    try:
        if text.endswith(".json") and os.path.exists(text):
            spec = read_kernel_spec(text)
        else:
            spec = KernelSpec.parse(text)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--kernel")
    if cut_index is not None:
        spec = spec.model_copy(update={"cut_index": cut_index, "lambda_cut": None})
    return spec


def load_signal(
    signal_path: str | None, signal_kind: str, basis: SpectralBasis, seed: int
) -> np.ndarray:
    if signal_path is None:
        spec = SmoothSignalSpec() if signal_kind == "smooth" else LocalizedSignalSpec()
        return np.array(gen_test_signal(basis, spec, seed).values)

    values = read_signal(signal_path)
    if values.size != basis.n:
        raise click.BadParameter(
            f"LengthMismatch: signal has {values.size} values but the graph has "
            f"{basis.n} vertices",
            param_hint="--signal",
        )
    return values
