"""Plain-text edge lists.

.. code-block:: text

    # optional comments start with '#'
    3 5        <- header: vertex count, arc count
    0 1        <- one arc per line, 0-based ids
    ...

Blank lines are ignored. Every error carries the 1-based ``line`` it was raised on.
"""

from __future__ import annotations

import logging
import sys
from typing import Iterator, List, Tuple

from ecci_digraph.digraph import Arc, Digraph
from ecci_digraph.errors import (
    EdgeListSyntaxError,
    HeaderMismatchError,
    InvalidDigraphError,
)

logger = logging.getLogger(__name__)


def _content_lines(text: str) -> Iterator[Tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _int_pair(lineno: int, line: str) -> Tuple[int, int]:
    fields = line.split()
    if len(fields) != 2:
        raise EdgeListSyntaxError(
            f"line {lineno}: expected two integers, got {line!r}", line=lineno
        )
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise EdgeListSyntaxError(
            f"line {lineno}: expected two integers, got {line!r}", line=lineno
        )


def parse_edge_list(text: str) -> Digraph:
    """Parse edge-list text into a validated :class:`Digraph`.

    Raises:
        EdgeListSyntaxError: missing header or a line that is not two integers.
        HeaderMismatchError: the header's arc count differs from the arc lines.
        InvalidDigraphError: any digraph validation error, with ``line`` set.
    """
    lines = _content_lines(text)
    try:
        header_line, header = next(lines)
    except StopIteration:
        raise EdgeListSyntaxError("missing header line 'n m'", line=None)
    n, m = _int_pair(header_line, header)
    if m < 0:
        raise EdgeListSyntaxError(
            f"line {header_line}: arc count must be non-negative", line=header_line
        )

    arc_lines: List[Tuple[int, Arc]] = [
        (lineno, _int_pair(lineno, line)) for lineno, line in lines
    ]
    if len(arc_lines) != m:
        last = arc_lines[-1][0] if arc_lines else header_line
        raise HeaderMismatchError(
            f"header declares {m} arcs but {len(arc_lines)} arc lines follow",
            line=last,
        )

    current = [header_line]

    def tracked() -> Iterator[Arc]:
        for lineno, arc in arc_lines:
            current[0] = lineno
            yield arc

    try:
        d = Digraph.from_arcs(n, tracked())
    except InvalidDigraphError as err:
        raise type(err)(f"line {current[0]}: {err}", line=current[0]) from err
    logger.debug("Parsed edge list with n=%s, m=%s", n, m)
    return d


def serialize_edge_list(d: Digraph) -> str:
    """Header plus the arcs in ascending ``(u, v)`` order, newline-terminated."""
    body = "".join(f"{u} {v}\n" for u, v in d.arcs())
    return f"{d.n} {d.arc_count}\n{body}"


def read_edge_list(path: str) -> Digraph:
    """Parse the edge list at ``path``; ``"-"`` reads standard input."""
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    with open(path, encoding="utf-8") as handle:
        return parse_edge_list(handle.read())


def write_edge_list(d: Digraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(serialize_edge_list(d))
