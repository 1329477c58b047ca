"""Immutable digraphs and undirected graphs plus the structural transformations
(reverse, complement, biorientation) the index theorems quantify over.

Vertices are the integers ``0..n-1``. Adjacency lists are kept sorted, so every
traversal below visits neighbours in ascending id order and outputs do not
depend on the order arcs were supplied in.
"""

from __future__ import annotations

import logging
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ecci_digraph.errors import (
    DuplicateArcError,
    EmptyVertexSetError,
    InvalidDigraphError,
    LoopArcError,
    VertexOutOfRangeError,
)

Arc = Tuple[int, int]

logger = logging.getLogger(__name__)


def _check_order(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidDigraphError(f"Vertex count must be an integer. Got {n!r}")
    if n <= 0:
        raise EmptyVertexSetError(f"A digraph needs at least one vertex. Got n={n}")


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise VertexOutOfRangeError(f"Vertex {v} is outside 0..{n - 1}")


class Digraph:
    """A loop-free digraph without parallel arcs.

    Instances are immutable and hashable; build them with :meth:`from_arcs`
    (validating) or with the transformations in this module.

    Example:

        .. code-block:: python

            from ecci_digraph.digraph import Digraph

            d = Digraph.from_arcs(3, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2)])
            d.degree_pair(0)  # (2, 1)
    """

    __slots__ = ("_n", "_out_adj", "_in_adj", "_arc_count")

    def __init__(self, n: int, out_adj: Sequence[Sequence[int]]) -> None:
        # Trusted constructor: out_adj must already be sorted, loop-free and
        # duplicate-free. Public callers go through from_arcs.
        self._n = n
        self._out_adj: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(row) for row in out_adj
        )
        in_adj: List[List[int]] = [[] for _ in range(n)]
        for u, row in enumerate(self._out_adj):
            for v in row:
                in_adj[v].append(u)
        self._in_adj: Tuple[Tuple[int, ...], ...] = tuple(tuple(r) for r in in_adj)
        self._arc_count = sum(len(row) for row in self._out_adj)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Arc]) -> Digraph:
        """Validate ``arcs`` and build the digraph.

        Args:
            n: number of vertices, at least one
            arcs: ordered pairs ``(u, v)`` with ``0 <= u, v < n``

        Returns:
            Digraph instance

        Raises:
            EmptyVertexSetError: ``n`` is zero or negative.
            VertexOutOfRangeError: an endpoint is not a vertex.
            LoopArcError: an arc ``(v, v)``.
            DuplicateArcError: the same ordered pair twice.
        """
        _check_order(n)
        out_sets: List[set] = [set() for _ in range(n)]
        for arc in arcs:
            u, v = arc
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise LoopArcError(f"Loop arc ({u}, {v}) is not allowed")
            if v in out_sets[u]:
                raise DuplicateArcError(f"Arc ({u}, {v}) given more than once")
            out_sets[u].add(v)
        return cls(n, [sorted(row) for row in out_sets])

    @classmethod
    def from_out_masks(cls, masks: Sequence[int]) -> Digraph:
        """Build from per-vertex out-neighbour bitmasks (bit ``v`` of ``masks[u]``)."""
        n = len(masks)
        _check_order(n)
        rows = []
        for u, mask in enumerate(masks):
            if mask >> u & 1:
                raise LoopArcError(f"Loop arc ({u}, {u}) is not allowed")
            if mask >> n:
                raise VertexOutOfRangeError(f"Mask of vertex {u} names vertices >= {n}")
            rows.append([v for v in range(n) if mask >> v & 1])
        return cls(n, rows)

    @property
    def n(self) -> int:
        return self._n

    @property
    def out_adj(self) -> Tuple[Tuple[int, ...], ...]:
        return self._out_adj

    @property
    def in_adj(self) -> Tuple[Tuple[int, ...], ...]:
        return self._in_adj

    @property
    def arc_count(self) -> int:
        return self._arc_count

    def arcs(self) -> Iterator[Arc]:
        """Yield arcs sorted by ``(tail, head)``."""
        for u, row in enumerate(self._out_adj):
            for v in row:
                yield (u, v)

    def has_arc(self, u: int, v: int) -> bool:
        row = self._out_adj[u]
        # rows are short at desk scale; bisect is not worth it
        return v in row

    def out_degree(self, v: int) -> int:
        _check_vertex(self._n, v)
        return len(self._out_adj[v])

    def in_degree(self, v: int) -> int:
        _check_vertex(self._n, v)
        return len(self._in_adj[v])

    def degree_pair(self, v: int) -> Tuple[int, int]:
        """Return ``(out-degree, in-degree)`` of ``v``."""
        _check_vertex(self._n, v)
        return len(self._out_adj[v]), len(self._in_adj[v])

    def degree_sums(self) -> List[int]:
        return [
            len(out) + len(inn) for out, inn in zip(self._out_adj, self._in_adj)
        ]

    def out_masks(self) -> List[int]:
        masks = []
        for row in self._out_adj:
            mask = 0
            for v in row:
                mask |= 1 << v
            masks.append(mask)
        return masks

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._n == other._n and self._out_adj == other._out_adj

    def __hash__(self) -> int:
        return hash((self._n, self._out_adj))

    def __repr__(self) -> str:
        return f"Digraph(n={self._n}, arcs={list(self.arcs())})"


class UndirectedGraph:
    """A simple undirected graph on ``0..n-1`` with symmetric sorted adjacency."""

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]) -> None:
        self._n = n
        self._adj: Tuple[Tuple[int, ...], ...] = tuple(tuple(row) for row in adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Arc]) -> UndirectedGraph:
        _check_order(n)
        adj: List[set] = [set() for _ in range(n)]
        for edge in edges:
            u, v = edge
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise LoopArcError(f"Loop edge ({u}, {v}) is not allowed")
            if v in adj[u]:
                raise DuplicateArcError(f"Edge ({u}, {v}) given more than once")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, [sorted(row) for row in adj])

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> Tuple[Tuple[int, ...], ...]:
        return self._adj

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self._adj) // 2

    def degree(self, v: int) -> int:
        _check_vertex(self._n, v)
        return len(self._adj[v])

    def edges(self) -> Iterator[Arc]:
        for u, row in enumerate(self._adj):
            for v in row:
                if u < v:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self._n}, edges={list(self.edges())})"


def new_digraph(n: int, arcs: Iterable[Arc]) -> Digraph:
    return Digraph.from_arcs(n, arcs)


def reverse(d: Digraph) -> Digraph:
    """Flip the orientation of every arc."""
    return Digraph(d.n, d.in_adj)


def complement(d: Digraph) -> Digraph:
    """Arcs over all ordered pairs ``u != v`` that are absent from ``d``."""
    rows = []
    for u, row in enumerate(d.out_adj):
        present = set(row)
        rows.append([v for v in range(d.n) if v != u and v not in present])
    return Digraph(d.n, rows)


def biorient(g: UndirectedGraph) -> Digraph:
    """Replace each edge by the two opposite arcs."""
    return Digraph(g.n, g.adj)


def _reaches_all(adj: Sequence[Sequence[int]], n: int) -> bool:
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == n


def is_strongly_connected(d: Digraph) -> bool:
    """Forward and backward search from vertex 0; true for ``n == 1``."""
    return _reaches_all(d.out_adj, d.n) and _reaches_all(d.in_adj, d.n)


def is_connected(g: UndirectedGraph) -> bool:
    return _reaches_all(g.adj, g.n)


def is_symmetric(d: Digraph) -> bool:
    return d.out_adj == d.in_adj


def degree_pair(d: Digraph, v: int) -> Tuple[int, int]:
    return d.degree_pair(v)


def regularity(d: Digraph) -> Optional[int]:
    """Return ``r`` when every vertex has out- and in-degree ``r``, else ``None``."""
    r = len(d.out_adj[0])
    for out, inn in zip(d.out_adj, d.in_adj):
        if len(out) != r or len(inn) != r:
            return None
    return r
