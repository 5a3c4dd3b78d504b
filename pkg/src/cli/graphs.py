"""CLI commands that generate graphs and test signals."""

import logging

import click

from cli.commons import graph_options, load_problem
from experiments.signals import LocalizedSignalSpec, SmoothSignalSpec, gen_test_signal
from graph.generators import CommunityGraphParams, SensorGraphParams, generate
from graph.io import write_edge_list
from utils import write_signal

logger = logging.getLogger(__name__)


@click.command()
@click.option(
    "--type",
    "graph_type",
    type=click.Choice(["sensor", "community"]),
    required=True,
    help="Random graph model",
)
@click.option("--n", type=int, required=True, help="Number of vertices, must be even")
@click.option(
    "--seed", envvar="SGFB_SEED", default=0, show_default=True, type=int, help="Generator seed"
)
@click.option("--knn", type=int, default=None, help="Sensor graph: k nearest neighbors (default: 6)")
@click.option("--radius", type=float, default=None, help="Sensor graph: connection radius")
@click.option("--communities", type=int, default=None, help="Community graph: number of communities")
@click.option("--p-in", type=float, default=None, help="Community graph: intra-community edge probability")
@click.option("--p-out", type=float, default=None, help="Community graph: inter-community edge probability")
@click.option("--output", "-o", required=True, help="Edge-list output path")
def gen_graph(graph_type, n, seed, knn, radius, communities, p_in, p_out, output):
    """Generate a connected random graph and write it as an edge list"""
    if n % 2:
        raise click.UsageError(
            f"OddVertexCount: the two-channel bank needs an even vertex count, got --n {n}"
        )

    overrides = {}
    if graph_type == "sensor":
        if knn is not None:
            overrides["knn"] = knn
        if radius is not None:
            overrides["radius"] = radius
        params_type = SensorGraphParams
    else:
        for name, value in (("n_communities", communities), ("p_in", p_in), ("p_out", p_out)):
            if value is not None:
                overrides[name] = value
        params_type = CommunityGraphParams
    try:
        params = params_type(n=n, seed=seed, **overrides)
    except ValueError as e:
        raise click.UsageError(str(e))

    logger.info(f"CLI invoked to generate a {graph_type} graph with {n} vertices, seed {seed}")
    try:
        g = generate(params)
        write_edge_list(g, output)
        sidecar = f"{output}.json"
        with open(sidecar, "w") as f:
            f.write(params.model_dump_json(indent=2))
        click.echo(f"Wrote {len(g.edges)} edges on {g.n} vertices to {output}")
        click.echo(f"Generator parameters saved to: {sidecar}")
    except Exception as e:
        logger.error(f"Graph generation failed: {e}")
        click.echo(f"An error occurred while generating the graph: {e}", err=True)
        raise e


@click.command()
@graph_options
@click.option(
    "--kind",
    type=click.Choice(["smooth", "localized"]),
    default="smooth",
    show_default=True,
    help="Shape of the signal's spectrum",
)
@click.option("--decay", type=float, default=None, help="Smooth: spectral decay rate")
@click.option("--center", type=int, default=None, help="Localized: center spectral index (default: N/4)")
@click.option("--width", type=float, default=5.0, show_default=True, help="Localized: width in indices")
@click.option("--output", "-o", required=True, help="Signal output path")
def gen_signal(graph_source, laplacian_kind, seed, cache_dir, kind, decay, center, width, output):
    """Generate a unit-norm test signal with a prescribed spectrum"""
    if kind == "smooth":
        spec = SmoothSignalSpec(decay=decay)
    else:
        spec = LocalizedSignalSpec(center_index=center, width=width)

    try:
        _, _, basis = load_problem(
            graph_source, laplacian_kind, seed, cache_dir, require_even=False
        )
        signal = gen_test_signal(basis, spec, seed)
        write_signal(output, signal.values)
        click.echo(f"Wrote {kind} signal on {signal.n} vertices to {output}")
    except click.ClickException:
        raise
    except Exception as e:
        logger.error(f"Signal generation failed: {e}")
        click.echo(f"An error occurred while generating the signal: {e}", err=True)
        raise e
