"""Directed cycles, circulants and the index-minimal orientation of ``K_n``."""

from __future__ import annotations

import logging
from typing import Iterable, List

from ecci_digraph.digraph import Digraph, is_strongly_connected
from ecci_digraph.errors import (
    InvalidFamilyParameterError,
    NotStronglyConnectedError,
    OrderTooSmallError,
)

logger = logging.getLogger(__name__)


def gen_directed_cycle(n: int) -> Digraph:
    """``0 -> 1 -> ... -> n-1 -> 0``."""
    if n < 3:
        raise OrderTooSmallError(f"A directed cycle needs n >= 3. Got n={n}")
    return Digraph(n, [[(i + 1) % n] for i in range(n)])


def gen_circulant(n: int, connection_set: Iterable[int]) -> Digraph:
    """Arcs ``(i, i + s mod n)`` for every vertex ``i`` and every ``s`` in the set.

    Strong connectivity is checked after construction.

    Raises:
        InvalidFamilyParameterError: empty set or an element outside ``1..n-1``.
        NotStronglyConnectedError: the circulant splits into several components.
    """
    steps = sorted(set(connection_set))
    if n < 2:
        raise OrderTooSmallError(f"A circulant needs n >= 2. Got n={n}")
    if not steps:
        raise InvalidFamilyParameterError("Connection set must not be empty")
    if steps[0] < 1 or steps[-1] > n - 1:
        raise InvalidFamilyParameterError(
            f"Connection set must be a subset of 1..{n - 1}. Got {steps}"
        )
    d = Digraph(n, [sorted((i + s) % n for s in steps) for i in range(n)])
    if not is_strongly_connected(d):
        raise NotStronglyConnectedError(
            f"Circulant n={n} with connection set {steps} is not strongly connected"
        )
    return d


def gen_kn_orientation(n: int) -> Digraph:
    """An orientation of ``K_n`` in which every vertex reaches every other within
    two arcs (from ``n = 5`` on).

    Odd ``n``: the circulant with connection set ``1..(n-1)/2``. Even ``n``: the
    odd construction on ``0..n-2`` plus vertex ``n-1``, which sends arcs to the
    even ids ``0, 2, ..., n-2`` and receives arcs from the odd ids
    ``1, 3, ..., n-3`` (the 1-based parity rule shifted to 0-based ids).
    At ``n = 4`` the base is a directed triangle and vertices 2 and 3 end up
    with m-eccentricity 3.
    """
    if n < 3:
        raise OrderTooSmallError(f"An orientation of K_n needs n >= 3. Got n={n}")
    if n % 2 == 1:
        return gen_circulant(n, range(1, (n - 1) // 2 + 1))
    base = gen_kn_orientation(n - 1)
    hub = n - 1
    rows: List[List[int]] = [list(row) for row in base.out_adj]
    for v in range(1, n - 1, 2):
        rows[v].append(hub)
    rows.append(list(range(0, n - 1, 2)))
    logger.debug("Augmented K_%s orientation with hub %s", n - 1, hub)
    return Digraph(n, rows)
