#!/usr/bin/env python
"""Entry point for the splinegfb CLI tool."""

from cli import run_cli

if __name__ == "__main__":
    run_cli()
