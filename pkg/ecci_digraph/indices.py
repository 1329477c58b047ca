"""Eccentric connectivity index of digraphs and graphs, and the checkers for
the inequalities it satisfies.

The index carries a factor one half, so it is stored doubled: ``xi_doubled`` is
always the exact integer ``sum((d+ + d-) * mecc)`` and no floating point is
involved anywhere in this module.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, computed_field

from ecci_digraph.config import Settings
from ecci_digraph.digraph import (
    Digraph,
    UndirectedGraph,
    complement,
    is_strongly_connected,
    regularity,
)
from ecci_digraph.errors import (
    NotRegularError,
    NotStronglyConnectedError,
    PreconditionViolatedError,
)
from ecci_digraph.metrics import EccProfile, ecc_profile, graph_eccentricities

logger = logging.getLogger(__name__)


def format_xi(xi_doubled: int) -> str:
    """Render ``xi_doubled / 2`` as ``"8"`` or ``"8.5"``."""
    whole, half = divmod(xi_doubled, 2)
    return f"{whole}.5" if half else str(whole)


class XiValue(BaseModel):
    """Serialized form of an index value: exact doubled integer plus display text."""

    doubled: int

    @computed_field
    @property
    def display(self) -> str:
        return format_xi(self.doubled)

    @property
    def value(self) -> Fraction:
        return Fraction(self.doubled, 2)


class VertexContribution(BaseModel):
    vertex: int
    degree_sum: int
    mecc: int
    contribution: int


class IndexReport(BaseModel):
    """Index value with its per-vertex breakdown and bound envelope.

    ``lower_bound`` and ``upper_bound`` are ``a * mrad`` and ``a * mdiam`` in
    index units (not doubled).
    """

    n: int
    xi_doubled: int
    per_vertex: List[VertexContribution]
    arc_count: int
    mrad: int
    mdiam: int
    lower_bound: int
    upper_bound: int
    self_centered: bool

    @property
    def xi(self) -> Fraction:
        return Fraction(self.xi_doubled, 2)

    @property
    def bounds_hold(self) -> bool:
        return 2 * self.lower_bound <= self.xi_doubled <= 2 * self.upper_bound

    @property
    def equality(self) -> bool:
        """Both bounds are attained."""
        return 2 * self.lower_bound == self.xi_doubled == 2 * self.upper_bound

    @property
    def corollary_consistent(self) -> bool:
        """Equality on both sides exactly when the digraph is self-centered."""
        return self.equality == self.self_centered

    def recomputed_doubled(self) -> int:
        return sum(row.contribution for row in self.per_vertex)


def index_report(
    d: Digraph,
    *,
    profile: Optional[EccProfile] = None,
    settings: Optional[Settings] = None,
) -> IndexReport:
    """Full index report for a strongly connected digraph.

    Args:
        d: strongly connected digraph
        profile: eccentricity profile of ``d`` when the caller already has one
        settings: forwarded to :func:`ecc_profile`

    Returns:
        IndexReport
    """
    if profile is None:
        profile = ecc_profile(d, settings=settings)
    rows = []
    for v, (degree_sum, mecc) in enumerate(zip(d.degree_sums(), profile.mecc)):
        rows.append(
            VertexContribution(
                vertex=v,
                degree_sum=degree_sum,
                mecc=mecc,
                contribution=degree_sum * mecc,
            )
        )
    report = IndexReport(
        n=d.n,
        xi_doubled=sum(row.contribution for row in rows),
        per_vertex=rows,
        arc_count=d.arc_count,
        mrad=profile.mrad,
        mdiam=profile.mdiam,
        lower_bound=d.arc_count * profile.mrad,
        upper_bound=d.arc_count * profile.mdiam,
        self_centered=profile.self_centered,
    )
    return report


def ecci_digraph_doubled(d: Digraph, *, settings: Optional[Settings] = None) -> int:
    profile = ecc_profile(d, settings=settings)
    return sum(s * m for s, m in zip(d.degree_sums(), profile.mecc))


def ecci_digraph(d: Digraph, *, settings: Optional[Settings] = None) -> Fraction:
    """Eccentric connectivity index ``1/2 * sum((d+ + d-) * mecc)`` as an exact value.

    Raises:
        NotStronglyConnectedError: ``d`` is not strongly connected.
    """
    return Fraction(ecci_digraph_doubled(d, settings=settings), 2)


def ecci_graph(g: UndirectedGraph) -> int:
    """``sum(deg(u) * ecc(u))`` over a connected undirected graph.

    Raises:
        NotConnectedError: ``g`` is not connected.
    """
    ecc = graph_eccentricities(g)
    return sum(len(row) * e for row, e in zip(g.adj, ecc))


def check_bound_theorem(
    d: Digraph, *, settings: Optional[Settings] = None
) -> IndexReport:
    """Evaluate ``a*mrad <= xi <= a*mdiam`` and the self-centered equality case."""
    report = index_report(d, settings=settings)
    if not report.bounds_hold or not report.corollary_consistent:
        logger.error(
            "Bound envelope violated: xi_doubled=%s bounds=[%s, %s] self_centered=%s",
            report.xi_doubled,
            report.lower_bound,
            report.upper_bound,
            report.self_centered,
        )
    return report


class ComplementSumReport(BaseModel):
    n: int
    xi_d: XiValue
    xi_complement: XiValue
    sum: XiValue
    bound_2n_n_minus_1: int
    holds: bool
    equality: bool
    both_self_centered_radius_two: bool

    @property
    def equality_consistent(self) -> bool:
        return self.equality == self.both_self_centered_radius_two


def check_complement_sum(
    d: Digraph, *, settings: Optional[Settings] = None
) -> ComplementSumReport:
    """Evaluate ``xi(D) + xi(complement D) >= 2n(n-1)``.

    Raises:
        PreconditionViolatedError: ``n < 4`` or either side not strongly connected.
    """
    if d.n < 4:
        raise PreconditionViolatedError(
            f"The complement inequality needs n >= 4. Got n={d.n}"
        )
    d_bar = complement(d)
    if not is_strongly_connected(d):
        raise PreconditionViolatedError("Digraph is not strongly connected")
    if not is_strongly_connected(d_bar):
        raise PreconditionViolatedError("Complement is not strongly connected")
    profile = ecc_profile(d, settings=settings)
    profile_bar = ecc_profile(d_bar, settings=settings)
    report = index_report(d, profile=profile)
    report_bar = index_report(d_bar, profile=profile_bar)
    total = report.xi_doubled + report_bar.xi_doubled
    bound = 2 * d.n * (d.n - 1)
    radius_two = (
        profile.self_centered
        and profile_bar.self_centered
        and profile.mrad == 2
        and profile_bar.mrad == 2
    )
    return ComplementSumReport(
        n=d.n,
        xi_d=XiValue(doubled=report.xi_doubled),
        xi_complement=XiValue(doubled=report_bar.xi_doubled),
        sum=XiValue(doubled=total),
        bound_2n_n_minus_1=bound,
        holds=total >= 2 * bound,
        equality=total == 2 * bound,
        both_self_centered_radius_two=radius_two,
    )


class RegularBoundsReport(BaseModel):
    n: int
    r: int
    lower: int
    upper: int
    xi: XiValue
    holds: bool
    attains_upper: bool


def check_regular_bounds(
    d: Digraph, *, settings: Optional[Settings] = None
) -> RegularBoundsReport:
    """Evaluate ``2nr <= xi <= nr(n-r)`` for an r-regular strong digraph.

    When ``r = n - 1`` the digraph is the complete symmetric digraph, every mecc
    is one and both bounds collapse to ``n(n-1)``.

    Raises:
        NotRegularError: in- and out-degrees are not all equal to one ``r``.
        NotStronglyConnectedError: ``d`` is not strongly connected.
    """
    r = regularity(d)
    if r is None:
        raise NotRegularError("Digraph is not regular")
    if not is_strongly_connected(d):
        raise NotStronglyConnectedError("Digraph is not strongly connected")
    n = d.n
    if r == n - 1:
        lower = upper = n * (n - 1)
    else:
        lower, upper = 2 * n * r, n * r * (n - r)
    xi_doubled = ecci_digraph_doubled(d, settings=settings)
    return RegularBoundsReport(
        n=n,
        r=r,
        lower=lower,
        upper=upper,
        xi=XiValue(doubled=xi_doubled),
        holds=2 * lower <= xi_doubled <= 2 * upper,
        attains_upper=xi_doubled == 2 * upper,
    )
