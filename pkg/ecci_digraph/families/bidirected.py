"""Complete biorientations of the undirected families the theorems use."""

from __future__ import annotations

import logging
from typing import List, Tuple

from ecci_digraph.digraph import Digraph, UndirectedGraph, biorient
from ecci_digraph.errors import InvalidFamilyParameterError, OrderTooSmallError

BIDIRECTED_KINDS = ("path", "star", "cycle", "complete")

_MIN_ORDER = {"path": 1, "star": 2, "cycle": 3, "complete": 1}

logger = logging.getLogger(__name__)


def _edges(kind: str, n: int) -> List[Tuple[int, int]]:
    if kind == "path":
        return [(i, i + 1) for i in range(n - 1)]
    if kind == "star":
        return [(0, i) for i in range(1, n)]
    if kind == "cycle":
        return [(i, (i + 1) % n) for i in range(n)]
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def undirected_family(kind: str, n: int) -> UndirectedGraph:
    """Path ``P_n``, star ``S_n`` (centre 0), cycle ``C_n`` or complete ``K_n``."""
    if kind not in _MIN_ORDER:
        raise InvalidFamilyParameterError(
            f"Unknown bidirected family {kind!r}; expected one of {BIDIRECTED_KINDS}"
        )
    if n < _MIN_ORDER[kind]:
        raise OrderTooSmallError(
            f"{kind} needs n >= {_MIN_ORDER[kind]}. Got n={n}"
        )
    return UndirectedGraph.from_edges(n, _edges(kind, n))


def gen_bidirected_family(kind: str, n: int) -> Digraph:
    return biorient(undirected_family(kind, n))
