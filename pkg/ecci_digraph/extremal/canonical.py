"""Brute-force canonical forms for small digraphs."""

from __future__ import annotations

import logging
from itertools import permutations
from typing import Dict, Iterable, List, Optional, Set, Tuple

from ecci_digraph.config import CANONICAL_CAP
from ecci_digraph.digraph import Digraph
from ecci_digraph.errors import CapExceededError
from ecci_digraph.extremal.bitmask import decode_rows, encode_rows

logger = logging.getLogger(__name__)


def _relabel(rows: List[int], perm: Tuple[int, ...]) -> List[int]:
    out = [0] * len(rows)
    for u, row in enumerate(rows):
        image = 0
        while row:
            low = row & -row
            image |= 1 << perm[low.bit_length() - 1]
            row ^= low
        out[perm[u]] = image
    return out


def orbit(mask: int, n: int) -> Set[int]:
    """Every labeled arc mask isomorphic to ``mask``."""
    rows = decode_rows(mask, n)
    return {encode_rows(_relabel(rows, perm), n) for perm in permutations(range(n))}


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceededError(
            f"Brute-force canonical forms are limited to n <= {cap}. Got n={n}"
        )


def canonical_mask(mask: int, n: int, cap: int = CANONICAL_CAP) -> int:
    """Smallest arc mask over all ``n!`` relabelings."""
    _check_cap(n, cap)
    return min(orbit(mask, n))


def canonical_form(d: Digraph, cap: int = CANONICAL_CAP) -> bytes:
    """Big-endian bytes of the minimal arc mask; equal bytes mean isomorphic.

    Example:

        .. code-block:: python

            from ecci_digraph.digraph import Digraph
            from ecci_digraph.extremal.canonical import canonical_form

            a = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
            b = Digraph.from_arcs(3, [(0, 2), (2, 1), (1, 0)])
            assert canonical_form(a) == canonical_form(b)
    """
    _check_cap(d.n, cap)
    width = max(1, (d.n * (d.n - 1) + 7) // 8)
    return canonical_mask(encode_rows(d.out_masks(), d.n), d.n, cap).to_bytes(
        width, "big"
    )


def deduplicate(
    masks: Iterable[int], n: int, cap: int = CANONICAL_CAP
) -> Optional[List[int]]:
    """Canonical masks of the isomorphism classes among ``masks``, sorted.

    Each class is canonicalized once; later members are recognised through the
    orbit of the first. Returns ``None`` above ``cap``.
    """
    if n > cap:
        return None
    covered: Set[int] = set()
    classes: Dict[int, None] = {}
    for mask in masks:
        if mask in covered:
            continue
        members = orbit(mask, n)
        covered |= members
        classes[min(members)] = None
    return sorted(classes)
