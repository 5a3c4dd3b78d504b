"""Whitespace-separated edge-list files: one ``u v w`` triple per line."""

import logging
import re

from graph.build import build_graph
from graph.models import Graph
from utils import format_float

logger = logging.getLogger(__name__)

_VERTICES_HEADER = re.compile(r"^#\s*vertices\s*:\s*(\d+)\s*$")


def write_edge_list(g: Graph, path: str) -> None:
    """Write each undirected edge once, preceded by a vertex-count comment."""
    with open(path, "w") as f:
        f.write(f"# vertices: {g.n}\n")
        for u, v, w in g.edges:
            f.write(f"{u} {v} {format_float(w)}\n")
    logger.info(f"Wrote {len(g.edges)} edges to {path}")


def read_edge_list(path: str, n: int | None = None) -> Graph:
    """Read an edge-list file.

    The vertex count comes from ``n``, else the ``# vertices: n`` header,
    else one more than the largest index seen.
    """
    edges: list[tuple[int, int, float]] = []
    header_n = None
    with open(path) as f:
        for line_number, raw in enumerate(f, start=1):
            stripped = raw.strip()
            header = _VERTICES_HEADER.match(stripped)
            if header:
                header_n = int(header.group(1))
                continue
            content = stripped.split("#", 1)[0].strip()
            if not content:
                continue
            parts = content.split()
            if len(parts) != 3:
                raise ValueError(
                    f"{path}:{line_number}: expected 'u v w', got '{content}'"
                )
            edges.append((int(parts[0]), int(parts[1]), float(parts[2])))

    if n is None:
        n = header_n
    if n is None:
        n = 1 + max((max(u, v) for u, v, _ in edges), default=-1)

    logger.debug(f"Read {len(edges)} edges on {n} vertices from {path}")
    return build_graph(n, edges)
