"""Directed distances, the maximum-distance (md) metric and m-eccentricities."""

from __future__ import annotations

import logging
from functools import cached_property
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, model_validator
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from ecci_digraph.config import Settings, get_settings
from ecci_digraph.digraph import (
    Digraph,
    UndirectedGraph,
    is_connected,
    is_strongly_connected,
)
from ecci_digraph.errors import (
    MatrixTooLargeError,
    NotConnectedError,
    NotStronglyConnectedError,
)

UNREACHABLE = np.iinfo(np.uint32).max
"""Sentinel stored in distance matrices for pairs without a directed path."""

logger = logging.getLogger(__name__)


def _adjacency_matrix(n: int, rows) -> csr_matrix:
    indptr = np.zeros(n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(row) for row in rows])
    indices = np.fromiter(
        (v for row in rows for v in row), dtype=np.int32, count=int(indptr[-1])
    )
    data = np.ones(len(indices), dtype=np.float64)
    return csr_matrix((data, indices, indptr), shape=(n, n))


def _bfs_block(adjacency: csr_matrix, sources, directed: bool = True) -> np.ndarray:
    return shortest_path(
        adjacency,
        method="D",
        directed=directed,
        unweighted=True,
        indices=sources,
    )


def _to_uint32(raw: np.ndarray) -> np.ndarray:
    out = np.full(raw.shape, UNREACHABLE, dtype=np.uint32)
    finite = np.isfinite(raw)
    out[finite] = raw[finite].astype(np.uint32)
    return out


class DistanceData(BaseModel):
    """All-pairs directed distances and the symmetric md matrix derived from them."""

    n: int
    dist: np.ndarray
    """n x n ``uint32`` matrix; ``UNREACHABLE`` marks pairs without a path."""

    class Config:
        """Configuration for this pydantic object."""

        arbitrary_types_allowed = True

    @cached_property
    def md(self) -> np.ndarray:
        """``md[u][v] = max(dist[u][v], dist[v][u])``, computed on first access."""
        return np.maximum(self.dist, self.dist.T)

    @property
    def strongly_connected(self) -> bool:
        return not bool((self.dist == UNREACHABLE).any())

    def distance(self, u: int, v: int) -> Optional[int]:
        value = int(self.dist[u, v])
        return None if value == UNREACHABLE else value


class EccProfile(BaseModel):
    """Per-vertex out/in/m-eccentricities with m-radius and m-diameter."""

    ecc_out: List[int]
    ecc_in: List[int]
    mecc: List[int]
    mrad: int
    mdiam: int
    self_centered: bool

    @model_validator(mode="after")
    def _consistent(self) -> EccProfile:
        if self.mecc != [max(o, i) for o, i in zip(self.ecc_out, self.ecc_in)]:
            raise ValueError("mecc must be the pointwise max of ecc_out and ecc_in")
        if self.mrad > self.mdiam:
            raise ValueError(f"mrad {self.mrad} exceeds mdiam {self.mdiam}")
        if self.self_centered != (self.mrad == self.mdiam):
            raise ValueError("self_centered must equal mrad == mdiam")
        return self

    @classmethod
    def from_eccentricities(cls, ecc_out: List[int], ecc_in: List[int]) -> EccProfile:
        mecc = [max(o, i) for o, i in zip(ecc_out, ecc_in)]
        mrad, mdiam = min(mecc), max(mecc)
        return cls(
            ecc_out=ecc_out,
            ecc_in=ecc_in,
            mecc=mecc,
            mrad=mrad,
            mdiam=mdiam,
            self_centered=mrad == mdiam,
        )


def all_pairs_distances(
    d: Digraph, *, settings: Optional[Settings] = None, force: bool = False
) -> DistanceData:
    """One breadth-first search per source over ``d``.

    Args:
        d: any digraph, strongly connected or not
        settings: supplies the materialization threshold
        force: build the matrix even above the threshold

    Returns:
        DistanceData with ``UNREACHABLE`` entries for missing paths
    """
    settings = settings or get_settings()
    if d.n > settings.matrix_threshold and not force:
        raise MatrixTooLargeError(
            f"Refusing to materialize a {d.n}x{d.n} distance matrix "
            f"(threshold {settings.matrix_threshold}); use ecc_profile instead"
        )
    adjacency = _adjacency_matrix(d.n, d.out_adj)
    dist = _to_uint32(_bfs_block(adjacency, None))
    return DistanceData(n=d.n, dist=dist)


def _streamed_eccentricities(d: Digraph, chunk_rows: int):
    adjacency = _adjacency_matrix(d.n, d.out_adj)
    ecc_out = np.zeros(d.n, dtype=np.int64)
    ecc_in = np.zeros(d.n, dtype=np.int64)
    for start in range(0, d.n, chunk_rows):
        sources = np.arange(start, min(start + chunk_rows, d.n))
        block = _bfs_block(adjacency, sources)
        if not np.isfinite(block).all():
            raise NotStronglyConnectedError(
                "Digraph is not strongly connected; md is infinite for some pair"
            )
        ecc_out[sources] = block.max(axis=1).astype(np.int64)
        np.maximum(ecc_in, block.max(axis=0).astype(np.int64), out=ecc_in)
    return ecc_out.tolist(), ecc_in.tolist()


def ecc_profile(d: Digraph, *, settings: Optional[Settings] = None) -> EccProfile:
    """Out-, in- and m-eccentricity of every vertex.

    Sources are processed in blocks of ``settings.bfs_chunk_rows`` and only two
    running maxima are kept, so the n x n matrix is never held in memory.

    Raises:
        NotStronglyConnectedError: some md entry is infinite.
    """
    settings = settings or get_settings()
    if not is_strongly_connected(d):
        raise NotStronglyConnectedError(
            "Digraph is not strongly connected; md is infinite for some pair"
        )
    if d.n == 1:
        return EccProfile.from_eccentricities([0], [0])
    ecc_out, ecc_in = _streamed_eccentricities(d, settings.bfs_chunk_rows)
    logger.debug("Eccentricities computed for n=%s a=%s", d.n, d.arc_count)
    return EccProfile.from_eccentricities(ecc_out, ecc_in)


def graph_eccentricities(g: UndirectedGraph) -> List[int]:
    """Undirected eccentricity of every vertex of a connected graph."""
    if not is_connected(g):
        raise NotConnectedError("Graph is not connected; eccentricity is infinite")
    if g.n == 1:
        return [0]
    adjacency = _adjacency_matrix(g.n, g.adj)
    block = _bfs_block(adjacency, None, directed=False)
    return block.max(axis=1).astype(np.int64).tolist()
