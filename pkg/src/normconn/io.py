"""Plain-text formats for graphs, placements and polyhedral norms.

All formats are whitespace separated ASCII with ``#`` comment lines.

graph
    ``n m`` on the first line, then ``m`` lines ``u v`` with ``0 <= u < v < n``.
placement
    one line ``v x_1 ... x_d`` per vertex, each vertex exactly once.
polyhedral norm
    ``d m`` on the first line, then ``m`` lines of ``d`` facet coordinates.

Space descriptors are ``lp:<p>:<d>`` (``p`` a decimal or ``inf``),
``linf:<d>`` and ``poly:<path>``.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np

from . import norms
from .errors import ParseError
from .graphs import Graph


def _lines(text):
    """Yield ``(line_number, fields)`` for non-blank, non-comment lines."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line.split()


def _int(tok, no, path, what):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got {tok!r}", no, path) from None


def _float(tok, no, path):
    try:
        val = float(tok)
    except ValueError:
        raise ParseError(f"expected a number, got {tok!r}", no, path) from None
    if not np.isfinite(val):
        raise ParseError(f"non-finite coordinate {tok!r}", no, path)
    return val


def parse_graph(text, path=None):
    rows = list(_lines(text))
    if not rows:
        raise ParseError("empty graph file", None, path)
    no, head = rows[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", no, path)
    n, m = _int(head[0], no, path, "n"), _int(head[1], no, path, "m")
    if n < 1 or m < 0:
        raise ParseError("need n >= 1 and m >= 0", no, path)
    edges = []
    seen = set()
    for no, fields in rows[1:]:
        if len(fields) != 2:
            raise ParseError("edge line must be 'u v'", no, path)
        u, v = _int(fields[0], no, path, "vertex"), _int(fields[1], no, path, "vertex")
        if not 0 <= u < v < n:
            raise ParseError(f"edge ({u}, {v}) must satisfy 0 <= u < v < {n}", no, path)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge ({u}, {v})", no, path)
        seen.add((u, v))
        edges.append((u, v))
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}", None, path)
    return Graph(n, edges)


def format_graph(g):
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_placement(text, n=None, d=None, path=None):
    """Placement as an ``(n, d)`` array; ``n`` and ``d`` are inferred when omitted."""
    rows = {}
    for no, fields in _lines(text):
        v = _int(fields[0], no, path, "vertex")
        coords = [_float(t, no, path) for t in fields[1:]]
        if d is None:
            d = len(coords)
        if len(coords) != d or d < 1:
            raise ParseError(f"vertex {v} has {len(coords)} coordinates, expected {d}", no, path)
        if v in rows:
            raise ParseError(f"vertex {v} appears twice", no, path)
        if v < 0 or (n is not None and v >= n):
            raise ParseError(f"vertex {v} out of range", no, path)
        rows[v] = coords
    if n is None:
        n = len(rows)
    missing = sorted(set(range(n)) - set(rows))
    if missing:
        raise ParseError(f"missing vertices {missing}", None, path)
    if len(rows) != n:
        raise ParseError(f"expected {n} vertices, found {len(rows)}", None, path)
    return np.array([rows[v] for v in range(n)], dtype=float)


def format_placement(P):
    P = np.asarray(P, dtype=float)
    return "".join(f"{v} " + " ".join(repr(float(x)) for x in row) + "\n"
                   for v, row in enumerate(P))


def parse_polyhedral(text, path=None):
    rows = list(_lines(text))
    if not rows:
        raise ParseError("empty polyhedral norm file", None, path)
    no, head = rows[0]
    if len(head) != 2:
        raise ParseError("header must be 'd m'", no, path)
    d, m = _int(head[0], no, path, "d"), _int(head[1], no, path, "m")
    facets = []
    for no, fields in rows[1:]:
        if len(fields) != d:
            raise ParseError(f"facet line needs {d} coordinates", no, path)
        facets.append([_float(t, no, path) for t in fields])
    if len(facets) != m or m < 1:
        raise ParseError(f"header announces {m} facets, found {len(facets)}", None, path)
    try:
        return norms.polyhedral(facets)
    except ValueError as exc:
        raise ParseError(str(exc), None, path) from None


def parse_space(desc):
    """Build a :class:`NormedSpace` from a descriptor string."""
    parts = desc.split(":")
    try:
        if parts[0] == "linf" and len(parts) == 2:
            return norms.linf(int(parts[1]))
        if parts[0] == "lp" and len(parts) == 3:
            p = parts[1]
            return norms.lp("inf" if p.lower() == "inf" else float(p), int(parts[2]))
        if parts[0] == "poly" and len(parts) >= 2:
            path = ":".join(parts[1:])
            return parse_polyhedral(Path(path).read_text(), path=path)
    except ParseError:
        raise
    except (ValueError, OSError) as exc:
        raise ParseError(f"bad space descriptor {desc!r}: {exc}") from None
    raise ParseError(f"bad space descriptor {desc!r}; use lp:<p>:<d>, linf:<d> or poly:<path>")


def read_graph(path):
    return parse_graph(Path(path).read_text(), path=str(path))


def read_placement(path, n=None, d=None):
    return parse_placement(Path(path).read_text(), n, d, path=str(path))
