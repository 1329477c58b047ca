"""Seeded random digraphs and graphs for the randomized checks and the benchmark.

Both generators draw from ``numpy.random.default_rng(seed)`` in a fixed order,
so a given ``(n, p, seed, method)`` always yields the same instance.

``rejection``: every vertex ``u`` draws ``k ~ Binomial(n-1, p)`` and then ``k``
distinct out-neighbours uniformly; the whole digraph is redrawn from the same
stream until it is strongly connected.

``cycle``: a uniformly random Hamiltonian cycle is laid down first, then the
per-vertex Bernoulli arcs are added on top; the result is strong by
construction, which keeps sparse benchmark instances cheap to produce.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Set

import numpy as np

from ecci_digraph.config import Settings, get_settings
from ecci_digraph.digraph import Digraph, UndirectedGraph, is_strongly_connected
from ecci_digraph.errors import PreconditionViolatedError, RetriesExhaustedError

METHODS = ("rejection", "cycle")

logger = logging.getLogger(__name__)


def _bernoulli_rows(rng: np.random.Generator, n: int, p: float) -> List[Set[int]]:
    rows: List[Set[int]] = []
    for u in range(n):
        k = int(rng.binomial(n - 1, p))
        picks = rng.choice(n - 1, size=k, replace=False) if k else ()
        rows.append({int(x) + (1 if x >= u else 0) for x in picks})
    return rows


def random_strong_digraph(
    n: int,
    arc_probability: float,
    seed: int,
    *,
    method: str = "rejection",
    max_retries: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> Digraph:
    """Draw a strongly connected digraph.

    Args:
        n: order, at least one
        arc_probability: probability of each ordered pair, strictly between 0 and 1
        seed: seed of the numpy generator
        method: ``"rejection"`` or ``"cycle"``
        max_retries: rejection budget; defaults to ``settings.max_retries``

    Raises:
        RetriesExhaustedError: no strong draw within the retry budget.
    """
    if not 0.0 < arc_probability < 1.0:
        raise PreconditionViolatedError(
            f"arc_probability must lie strictly between 0 and 1. Got {arc_probability}"
        )
    if n < 1:
        raise PreconditionViolatedError(f"n must be positive. Got {n}")
    if method not in METHODS:
        raise PreconditionViolatedError(f"method must be one of {METHODS}. Got {method!r}")
    settings = settings or get_settings()
    retries = max_retries if max_retries is not None else settings.max_retries
    rng = np.random.default_rng(seed)

    if method == "cycle":
        order = rng.permutation(n).tolist()
        rows = _bernoulli_rows(rng, n, arc_probability)
        if n > 1:
            for i in range(n):
                rows[order[i]].add(order[(i + 1) % n])
        return Digraph(n, [sorted(row) for row in rows])

    for attempt in range(retries):
        d = Digraph(n, [sorted(row) for row in _bernoulli_rows(rng, n, arc_probability)])
        if is_strongly_connected(d):
            logger.debug("Strong digraph n=%s seed=%s after %s draws", n, seed, attempt + 1)
            return d
    raise RetriesExhaustedError(
        f"No strongly connected draw for n={n}, p={arc_probability}, seed={seed} "
        f"within {retries} attempts"
    )


def random_connected_graph(n: int, edge_probability: float, seed: int) -> UndirectedGraph:
    """Random spanning tree (each vertex attaches to an earlier one of a random
    order) plus every remaining pair independently with ``edge_probability``."""
    if n < 1:
        raise PreconditionViolatedError(f"n must be positive. Got {n}")
    rng = np.random.default_rng(seed)
    order = rng.permutation(n).tolist()
    edges = set()
    for i in range(1, n):
        j = int(rng.integers(0, i))
        a, b = order[i], order[j]
        edges.add((min(a, b), max(a, b)))
    extra = rng.random((n, n))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and extra[u, v] < edge_probability:
                edges.add((u, v))
    return UndirectedGraph.from_edges(n, sorted(edges))
