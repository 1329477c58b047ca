"""Exhaustive extremal searches over tournaments and strong digraphs.

The mask space is cut into a fixed number of contiguous ranges that depends
only on its size. Ranges are evaluated independently, optionally in a process
pool, and their partial results are merged with an associative and commutative
reduction, so a report never depends on the worker count.
"""

from __future__ import annotations

import logging
import multiprocessing as mp
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, computed_field
from tqdm.auto import tqdm

from ecci_digraph.config import Settings, get_settings
from ecci_digraph.errors import CapExceededError, OrderTooSmallError
from ecci_digraph.extremal.bitmask import (
    decode_rows,
    decode_tournament_rows,
    encode_rows,
    encode_witness,
    evaluate,
)
from ecci_digraph.extremal.canonical import deduplicate
from ecci_digraph.indices import format_xi

MAX_PARTITIONS = 64

logger = logging.getLogger(__name__)


class SearchClass(str, Enum):
    tournaments = "tournaments"
    strong_digraphs = "strong_digraphs"


class Objective(str, Enum):
    min = "min"
    max = "max"


class ExtremalReport(BaseModel):
    """Outcome of one exhaustive search.

    ``extremal_value`` is doubled like every index value in this package.
    ``witnesses`` hold one canonical encoding per isomorphism class when
    ``deduplicated`` is true, otherwise the labeled encodings.
    """

    search_class: SearchClass
    n: int
    objective: Objective
    extremal_value: Optional[int]
    witnesses: List[str]
    deduplicated: bool
    labeled_count: int
    strong_count: int
    witness_count_labeled: int
    bound_violations: int
    partitions: int

    @computed_field
    @property
    def extremal_display(self) -> Optional[str]:
        if self.extremal_value is None:
            return None
        return format_xi(self.extremal_value)


Partial = Tuple[Optional[int], List[int], int, int, int]
"""``(best, labeled witness masks, labeled, strong, bound violations)``."""


def _search_range(
    search_class: str, n: int, minimize: bool, start: int, stop: int
) -> Partial:
    tournament = search_class != SearchClass.strong_digraphs.value
    best: Optional[int] = None
    witnesses: List[int] = []
    strong = 0
    violations = 0
    for mask in range(start, stop):
        rows = decode_tournament_rows(mask, n) if tournament else decode_rows(mask, n)
        data = evaluate(rows, n)
        if data is None:
            continue
        strong += 1
        xi_doubled, arc_count, mrad, mdiam = data
        if not 2 * arc_count * mrad <= xi_doubled <= 2 * arc_count * mdiam:
            violations += 1
        if best is None or (xi_doubled < best if minimize else xi_doubled > best):
            best = xi_doubled
            witnesses = []
        if xi_doubled == best:
            witnesses.append(encode_rows(rows, n) if tournament else mask)
    return best, witnesses, stop - start, strong, violations


def _search_range_star(args) -> Partial:
    return _search_range(*args)


def merge(a: Partial, b: Partial, minimize: bool) -> Partial:
    best_a, wit_a, lab_a, strong_a, vio_a = a
    best_b, wit_b, lab_b, strong_b, vio_b = b
    counts = (lab_a + lab_b, strong_a + strong_b, vio_a + vio_b)
    if best_a is None:
        best, witnesses = best_b, list(wit_b)
    elif best_b is None or best_a == best_b:
        best = best_a
        witnesses = list(wit_a) + (list(wit_b) if best_b == best_a else [])
    elif (best_a < best_b) == minimize:
        best, witnesses = best_a, list(wit_a)
    else:
        best, witnesses = best_b, list(wit_b)
    return (best, sorted(set(witnesses))) + counts


def _partition(bits: int) -> List[Tuple[int, int]]:
    total = 1 << bits
    parts = min(MAX_PARTITIONS, total)
    step = total // parts
    return [(k * step, (k + 1) * step) for k in range(parts)]


def _run(
    search_class: SearchClass,
    n: int,
    objective: Objective,
    bits: int,
    settings: Settings,
) -> ExtremalReport:
    minimize = objective is Objective.min
    ranges = _partition(bits)
    args = [(search_class.value, n, minimize, start, stop) for start, stop in ranges]
    logger.info(
        "Searching %s n=%s (%s masks) in %s ranges with %s workers",
        search_class.value,
        n,
        1 << bits,
        len(ranges),
        settings.threads,
    )
    if settings.threads > 1:
        with mp.Pool(processes=settings.threads) as pool:
            partials = list(
                tqdm(
                    pool.imap(_search_range_star, args),
                    total=len(args),
                    disable=not settings.show_progress,
                )
            )
    else:
        partials = [
            _search_range(*a)
            for a in tqdm(args, disable=not settings.show_progress)
        ]

    result: Partial = (None, [], 0, 0, 0)
    for partial in partials:
        result = merge(result, partial, minimize)
    best, labeled_witnesses, labeled, strong, violations = result
    if violations:
        logger.error("%s instances violate their own bound envelope", violations)

    classes = deduplicate(labeled_witnesses, n, settings.canonical_cap)
    deduplicated = classes is not None
    witnesses = classes if deduplicated else labeled_witnesses
    return ExtremalReport(
        search_class=search_class,
        n=n,
        objective=objective,
        extremal_value=best,
        witnesses=[encode_witness(mask, n) for mask in witnesses],
        deduplicated=deduplicated,
        labeled_count=labeled,
        strong_count=strong,
        witness_count_labeled=len(labeled_witnesses),
        bound_violations=violations,
        partitions=len(ranges),
    )


def _check_order(n: int, cap: int, allow_large: bool, what: str) -> None:
    if n < 3:
        raise OrderTooSmallError(f"{what} search needs n >= 3. Got n={n}")
    if n > cap and not allow_large:
        raise CapExceededError(
            f"{what} search is capped at n <= {cap}; got n={n} (pass allow_large)"
        )


def enumerate_tournaments(
    n: int,
    objective: str = "min",
    *,
    allow_large: bool = False,
    settings: Optional[Settings] = None,
) -> ExtremalReport:
    """Extremize the index over every labeled tournament of order ``n``.

    All ``2^(n(n-1)/2)`` orientations of ``K_n`` are visited; non-strong ones
    are counted in ``labeled_count`` only.
    """
    settings = settings or get_settings()
    _check_order(n, settings.tournament_cap, allow_large, "Tournament")
    return _run(
        SearchClass.tournaments,
        n,
        Objective(objective),
        n * (n - 1) // 2,
        settings,
    )


def enumerate_strong_digraphs(
    n: int,
    objective: str = "min",
    *,
    allow_large: bool = False,
    settings: Optional[Settings] = None,
) -> ExtremalReport:
    """Extremize the index over every labeled strong digraph of order ``n``.

    Visits all ``2^(n(n-1))`` arc subsets, so ``n = 5`` means about a million
    instances.
    """
    settings = settings or get_settings()
    _check_order(n, settings.strong_digraph_cap, allow_large, "Strong digraph")
    return _run(
        SearchClass.strong_digraphs,
        n,
        Objective(objective),
        n * (n - 1),
        settings,
    )
