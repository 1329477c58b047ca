"""Fixed-order bitmask encodings of arc sets and the bit-parallel kernels the
exhaustive searches run on.

Arc sets of order ``n`` are integers over the ``n(n-1)`` ordered pairs taken
row-major with the diagonal skipped, so the pair ``(u, v)`` owns bit
``u*(n-1) + (v if v < u else v-1)`` and the out-row of ``u`` is a contiguous
``n-1`` bit field. Tournaments use the ``n(n-1)/2`` unordered pairs ``i < j``
in lexicographic order; a set bit means ``i -> j``.
"""

from __future__ import annotations

import logging
import re
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from ecci_digraph.digraph import Digraph
from ecci_digraph.errors import EdgeListSyntaxError

_WITNESS_RE = re.compile(r"^n=(\d+):([0-9a-f]+)$")

TABLE_MAX_ORDER = 8
"""Largest order whose row and field lookup tables are built; above it rows are
converted bit by bit."""

logger = logging.getLogger(__name__)


def pair_bit(n: int, u: int, v: int) -> int:
    return u * (n - 1) + (v if v < u else v - 1)


@lru_cache(maxsize=None)
def row_tables(n: int) -> Tuple[Tuple[int, ...], ...]:
    """``row_tables(n)[u][field]`` is the out-neighbour mask of ``u`` encoded by
    the ``n-1`` bit field ``field``."""
    tables = []
    width = n - 1
    for u in range(n):
        table = []
        for field in range(1 << width):
            mask = 0
            for b in range(width):
                if field >> b & 1:
                    mask |= 1 << (b if b < u else b + 1)
            table.append(mask)
        tables.append(tuple(table))
    return tuple(tables)


@lru_cache(maxsize=None)
def field_tables(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Inverse of :func:`row_tables`: out-neighbour mask back to its bit field,
    indexed by vertex then by mask."""
    return tuple(
        tuple(_compress(u, mask) for mask in range(1 << n)) for u in range(n)
    )


def _compress(u: int, mask: int) -> int:
    low = mask & ((1 << u) - 1)
    high = mask >> (u + 1)
    return low | (high << u)


def _expand(u: int, field: int) -> int:
    low = field & ((1 << u) - 1)
    high = field >> u
    return low | (high << (u + 1))


@lru_cache(maxsize=None)
def tournament_pairs(n: int) -> Tuple[Tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def decode_rows(mask: int, n: int) -> List[int]:
    width = n - 1
    field = (1 << width) - 1
    if n > TABLE_MAX_ORDER:
        return [_expand(u, (mask >> (u * width)) & field) for u in range(n)]
    tables = row_tables(n)
    return [tables[u][(mask >> (u * width)) & field] for u in range(n)]


def encode_rows(rows: Sequence[int], n: int) -> int:
    width = n - 1
    code = 0
    if n > TABLE_MAX_ORDER:
        for u, row in enumerate(rows):
            code |= _compress(u, row) << (u * width)
        return code
    fields = field_tables(n)
    for u, row in enumerate(rows):
        code |= fields[u][row] << (u * width)
    return code


def decode_tournament_rows(mask: int, n: int) -> List[int]:
    rows = [0] * n
    for k, (i, j) in enumerate(tournament_pairs(n)):
        if mask >> k & 1:
            rows[i] |= 1 << j
        else:
            rows[j] |= 1 << i
    return rows


def transpose(rows: Sequence[int], n: int) -> List[int]:
    cols = [0] * n
    for u, row in enumerate(rows):
        bit = 1 << u
        while row:
            low = row & -row
            cols[low.bit_length() - 1] |= bit
            row ^= low
    return cols


def reaches_all(rows: Sequence[int], full: int) -> bool:
    """Whether vertex 0 reaches every vertex along ``rows``."""
    seen = frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def eccentricity(rows: Sequence[int], source: int, full: int) -> Optional[int]:
    """BFS depth from ``source``, or ``None`` when some vertex is unreachable."""
    seen = frontier = 1 << source
    level = 0
    while seen != full:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        if not frontier:
            return None
        seen |= frontier
        level += 1
    return level


def evaluate(rows: Sequence[int], n: int) -> Optional[Tuple[int, int, int, int]]:
    """Index data of the digraph with out-rows ``rows``.

    Returns:
        ``(xi_doubled, arc_count, mrad, mdiam)``, or ``None`` when the digraph
        is not strongly connected
    """
    full = (1 << n) - 1
    cols = transpose(rows, n)
    if not (reaches_all(rows, full) and reaches_all(cols, full)):
        return None
    xi_doubled = 0
    arc_count = 0
    mrad = n
    mdiam = 0
    for v in range(n):
        mecc = max(eccentricity(rows, v, full), eccentricity(cols, v, full))
        out_degree = rows[v].bit_count()
        xi_doubled += (out_degree + cols[v].bit_count()) * mecc
        arc_count += out_degree
        if mecc < mrad:
            mrad = mecc
        if mecc > mdiam:
            mdiam = mecc
    return xi_doubled, arc_count, mrad, mdiam


def digraph_to_mask(d: Digraph) -> int:
    return encode_rows(d.out_masks(), d.n)


def mask_to_digraph(mask: int, n: int) -> Digraph:
    return Digraph.from_out_masks(decode_rows(mask, n))


def tournament_mask_to_digraph(mask: int, n: int) -> Digraph:
    return Digraph.from_out_masks(decode_tournament_rows(mask, n))


def encode_witness(mask: int, n: int) -> str:
    """``"n=<n>:<lowercase hex>"`` of an ordered-pair arc mask."""
    return f"n={n}:{mask:x}"


def decode_witness(text: str) -> Digraph:
    match = _WITNESS_RE.match(text.strip())
    if not match:
        raise EdgeListSyntaxError(f"Malformed witness encoding {text!r}")
    n = int(match.group(1))
    mask = int(match.group(2), 16)
    if mask >> (n * (n - 1)):
        raise EdgeListSyntaxError(f"Witness {text!r} has bits beyond n(n-1)")
    return mask_to_digraph(mask, n)
