"""CLI command group for the spline graph filter bank."""

import logging
import sys

import click
from dotenv import load_dotenv
from rich.logging import RichHandler

from cli.banks import analyze, prcheck, roundtrip
from cli.graphs import gen_graph, gen_signal
from cli.runs import denoise, nla

logger = logging.getLogger(__name__)

load_dotenv()

logging.basicConfig(
    level=logging.INFO,
    format="%(message)s",
    handlers=[
        RichHandler(
            level=logging.INFO,
            omit_repeated_times=False,
        )
    ],
)


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Log per-run and per-attempt details")
def cli(verbose: bool):
    """Spline graph filter bank - two-channel analysis and synthesis with spectral sampling"""
    if verbose:
        root = logging.getLogger()
        root.setLevel(logging.DEBUG)
        for handler in root.handlers:
            handler.setLevel(logging.DEBUG)


cli.add_command(gen_graph, name="gen-graph")
cli.add_command(gen_signal, name="gen-signal")
cli.add_command(prcheck, name="prcheck")
cli.add_command(roundtrip, name="roundtrip")
cli.add_command(analyze, name="analyze")
cli.add_command(nla, name="nla")
cli.add_command(denoise, name="denoise")


def run_cli():
    """Run the CLI application."""
    try:
        cli()
    except Exception as e:
        logger.exception(f"Unhandled error at top level: {e}")
        sys.exit(1)
