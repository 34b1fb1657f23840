"""Text file formats: SNAP-style edge lists and serialized cut trees."""

from __future__ import annotations

import io
from typing import Iterable, TextIO

from .graph import VertexMapping
from .tree import CutTree, tree_from_edges


class InputFormatError(ValueError):
    """Malformed input file; carries the offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


def read_edge_list(source: str | TextIO) -> list[tuple[int, int]]:
    """Parse "u v" lines; blank lines and lines starting with '#' are skipped."""
    close = False
    if isinstance(source, str):
        source = open(source, "r", encoding="ascii")
        close = True
    try:
        edges = []
        for line_no, raw in enumerate(source, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise InputFormatError(
                    f"expected two vertex labels, got {len(parts)} fields", line_no
                )
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise InputFormatError(f"non-integer vertex label in {line!r}", line_no)
            if u < 0 or v < 0:
                raise InputFormatError("vertex labels must be non-negative", line_no)
            edges.append((u, v))
        return edges
    finally:
        if close:
            source.close()


def write_edge_list(edges: Iterable[tuple[int, int]], sink: str | TextIO) -> None:
    close = False
    if isinstance(sink, str):
        sink = open(sink, "w", encoding="ascii")
        close = True
    try:
        for u, v in edges:
            sink.write(f"{u} {v}\n")
    finally:
        if close:
            sink.close()


def format_cut_tree(tree: CutTree, mapping: VertexMapping) -> str:
    """Serialize a cut tree: header "cuttree n", then "u v w" per non-root
    vertex in ascending external-label order."""
    lines = [f"cuttree {tree.n}"]
    rows = [
        (mapping.external(child), mapping.external(parent), w)
        for child, parent, w in tree.edges()
    ]
    rows.sort()
    lines.extend(f"{u} {v} {w}" for u, v, w in rows)
    return "\n".join(lines) + "\n"


def write_cut_tree(tree: CutTree, mapping: VertexMapping, sink: str | TextIO) -> None:
    text = format_cut_tree(tree, mapping)
    if isinstance(sink, str):
        with open(sink, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sink.write(text)


def read_cut_tree(source: str | TextIO) -> tuple[CutTree, VertexMapping]:
    """Load a serialized cut tree; labels densify in ascending order.

    The root is the one label that never appears as a child.  Note that the
    format cannot carry the label of a single-vertex tree (it has no edge
    lines), so such a file round-trips only vacuously.
    """
    close = False
    if isinstance(source, str):
        source = open(source, "r", encoding="ascii")
        close = True
    try:
        header = source.readline()
        parts = header.split()
        if len(parts) != 2 or parts[0] != "cuttree":
            raise InputFormatError("expected header 'cuttree <n>'", 1)
        try:
            n = int(parts[1])
        except ValueError:
            raise InputFormatError(f"bad vertex count {parts[1]!r}", 1)
        rows = []
        for line_no, raw in enumerate(source, start=2):
            line = raw.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise InputFormatError("expected 'u v w'", line_no)
            try:
                u, v, w = int(parts[0]), int(parts[1]), int(parts[2])
            except ValueError:
                raise InputFormatError(f"non-integer field in {line!r}", line_no)
            if w < 0:
                raise InputFormatError("negative edge weight", line_no)
            rows.append((u, v, w))
        if n and len(rows) != n - 1:
            raise InputFormatError(
                f"expected {n - 1} edge lines for {n} vertices, found {len(rows)}"
            )
        labels = sorted({u for u, _, _ in rows} | {v for _, v, _ in rows})
        if n and len(labels) not in (0, n):
            raise InputFormatError(f"found {len(labels)} labels, header says {n}")
        mapping = VertexMapping()
        for label in labels:
            mapping.intern(label)
        edges = [
            (mapping.internal(u), mapping.internal(v), w) for u, v, w in rows
        ]
        children = {u for u, _, _ in edges}
        root = 0
        for v in range(len(labels)):
            if v not in children:
                root = v
                break
        return tree_from_edges(len(labels), edges, root), mapping
    finally:
        if close:
            source.close()


def parse_edge_text(text: str) -> list[tuple[int, int]]:
    return read_edge_list(io.StringIO(text))
