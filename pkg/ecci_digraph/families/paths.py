"""Bidirected paths with extra arcs that leave every m-eccentricity unchanged."""

from __future__ import annotations

import logging
from typing import List

from ecci_digraph.digraph import Digraph
from ecci_digraph.errors import InvalidFamilyParameterError, OrderTooSmallError

DIRECTIONS = ("forward", "backward")

logger = logging.getLogger(__name__)


def _bidirected_path_rows(n: int) -> List[List[int]]:
    rows: List[List[int]] = [[] for _ in range(n)]
    for i in range(n - 1):
        rows[i].append(i + 1)
        rows[i + 1].append(i)
    return rows


def gen_pn_star(n: int, direction: str = "forward") -> Digraph:
    """Bidirected ``P_n`` plus one closing arc, ``0 -> n-1`` (forward) or
    ``n-1 -> 0`` (backward)."""
    if n < 3:
        raise OrderTooSmallError(f"P_n* needs n >= 3. Got n={n}")
    if direction not in DIRECTIONS:
        raise InvalidFamilyParameterError(
            f"direction must be one of {DIRECTIONS}. Got {direction!r}"
        )
    rows = _bidirected_path_rows(n)
    if direction == "forward":
        rows[0].append(n - 1)
    else:
        rows[n - 1].insert(0, 0)
    return Digraph(n, [sorted(row) for row in rows])


def gen_pn_plus(n: int) -> Digraph:
    """Bidirected ``P_n`` plus every forward skip arc ``(i, j)`` with ``j >= i + 2``."""
    if n < 3:
        raise OrderTooSmallError(f"P_n+ needs n >= 3. Got n={n}")
    rows = _bidirected_path_rows(n)
    for i in range(n):
        rows[i].extend(range(i + 2, n))
    return Digraph(n, [sorted(row) for row in rows])
