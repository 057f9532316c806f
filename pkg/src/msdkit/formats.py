"""Flat-file graph formats: edge-list files, one-line records, DOT export.

The edge-list file starts with a header line "n m" followed by m lines
"u v" (0-based).  Lines starting with '#' and blank lines are ignored.
Serialization writes arcs in sorted order, so parse(serialize(d)) == d
bit for bit.
"""

from __future__ import annotations

from .digraph import Digraph, GraphError


class FormatError(GraphError):
    """The text does not describe a valid graph file."""


def _data_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def _ints(line: str, expected: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != expected:
        raise FormatError(f"{what} must have {expected} fields, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"{what} must be integers, got {line!r}") from None


def parse_graph(text: str) -> Digraph:
    """Parse an edge-list file body into a validated digraph."""
    lines = _data_lines(text)
    if not lines:
        raise FormatError("empty graph file")
    n, m = _ints(lines[0], 2, "header")
    if len(lines) - 1 != m:
        raise FormatError(f"header promises {m} arcs but file has {len(lines) - 1}")
    arcs = [tuple(_ints(line, 2, "arc line")) for line in lines[1:]]
    try:
        return Digraph(n, arcs)
    except FormatError:
        raise
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def format_graph(d: Digraph) -> str:
    """Serialize to the edge-list format with sorted arcs."""
    lines = [f"{d.n} {d.m}"]
    lines.extend(f"{u} {v}" for u, v in d.arcs)
    return "\n".join(lines) + "\n"


def graph_record(d: Digraph) -> str:
    """One-line record "n m u v u v ..." for streamed output."""
    flat = " ".join(f"{u} {v}" for u, v in d.arcs)
    return f"{d.n} {d.m} {flat}".rstrip()


def parse_record(line: str) -> Digraph:
    """Inverse of graph_record."""
    parts = _ints(line.strip(), len(line.split()), "record")
    if len(parts) < 2:
        raise FormatError(f"record too short: {line!r}")
    n, m = parts[0], parts[1]
    rest = parts[2:]
    if len(rest) != 2 * m:
        raise FormatError(f"record promises {m} arcs but carries {len(rest) // 2}")
    arcs = [(rest[2 * i], rest[2 * i + 1]) for i in range(m)]
    try:
        return Digraph(n, arcs)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def to_dot(d: Digraph) -> str:
    """DOT text with one edge statement per arc (plus bare nodes for
    isolated vertices, so the vertex set survives a round trip)."""
    lines = ["digraph {"]
    for v in d.vertices():
        if d.degrees(v) == (0, 0):
            lines.append(f"  {v};")
    for u, v in d.arcs:
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
