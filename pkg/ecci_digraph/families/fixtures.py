"""Digraphs transcribed from the figures, with the index values their captions state.

Figure labels ``v1..vn`` (or ``u1..un``) are mapped to ids ``0..n-1``.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel

from ecci_digraph.digraph import Digraph
from ecci_digraph.errors import InvalidFamilyParameterError
from ecci_digraph.indices import IndexReport, format_xi, index_report

logger = logging.getLogger(__name__)

_ARCS: Dict[str, Tuple[int, List[Tuple[int, int]]]] = {
    # Example digraph: u1 <-> u2 <-> u3 and u1 -> u3.
    "fig1": (3, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2)]),
    # Orientations of K5, left panel.
    "t1": (
        5,
        [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 0), (4, 0), (4, 1)],
    ),
    # Orientations of K5, right panel.
    "t2": (
        5,
        [(0, 1), (0, 2), (0, 3), (4, 0), (1, 2), (1, 4), (3, 1), (2, 3), (2, 4), (3, 4)],
    ),
    # K7 orientation: steps +1, +2, +3 around the 7-cycle.
    "fig3_left": (7, [(i, (i + s) % 7) for i in range(7) for s in (1, 2, 3)]),
    # K8 orientation: the K7 above plus v8 -> v1, v3, v5, v7 and v2, v4, v6 -> v8.
    "fig3": (
        8,
        [(i, (i + s) % 7) for i in range(7) for s in (1, 2, 3)]
        + [(7, a) for a in (0, 2, 4, 6)]
        + [(b, 7) for b in (1, 3, 5)],
    ),
}

FIXTURE_IDS = tuple(_ARCS)

CAPTION_VALUES: Dict[str, int] = {"fig1": 8, "t1": 20, "t2": 24}
"""Index values printed next to the figures (not doubled)."""


def fixture(fixture_id: str) -> Digraph:
    try:
        n, arcs = _ARCS[fixture_id]
    except KeyError:
        raise InvalidFamilyParameterError(
            f"Unknown fixture {fixture_id!r}; expected one of {FIXTURE_IDS}"
        )
    return Digraph.from_arcs(n, arcs)


class FixtureAudit(BaseModel):
    """Computed index of a figure digraph next to the value its caption prints."""

    fixture_id: str
    computed_doubled: int
    computed_display: str
    caption_value: Optional[int]
    discrepancy: bool
    report: IndexReport

    @property
    def consistent(self) -> bool:
        """The headline value is re-derivable from the per-vertex breakdown."""
        return self.report.recomputed_doubled() == self.computed_doubled


def audit_fixture(fixture_id: str) -> FixtureAudit:
    report = index_report(fixture(fixture_id))
    caption = CAPTION_VALUES.get(fixture_id)
    discrepancy = caption is not None and 2 * caption != report.xi_doubled
    if discrepancy:
        logger.warning(
            "Fixture %s: computed xi=%s but the caption states %s",
            fixture_id,
            format_xi(report.xi_doubled),
            caption,
        )
    return FixtureAudit(
        fixture_id=fixture_id,
        computed_doubled=report.xi_doubled,
        computed_display=format_xi(report.xi_doubled),
        caption_value=caption,
        discrepancy=discrepancy,
        report=report,
    )


if __name__ == "__main__":

    for fid in FIXTURE_IDS:
        audit = audit_fixture(fid)
        print(fid, audit.computed_display, audit.caption_value, audit.discrepancy)
