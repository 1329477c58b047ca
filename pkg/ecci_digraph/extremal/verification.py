"""Executable checks of every index theorem, exhaustive where the universe is
small enough and seeded-random otherwise.

Each check returns a :class:`VerificationReport`; counterexamples are recorded
as ``"n=<n>:<hex>"`` arc-mask encodings that :func:`decode_witness` turns back
into digraphs. Audits (``pn_plus_delta``, ``fixture_captions``) compare engine
values with printed values and only fail when the engine disagrees with itself.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, computed_field
from tqdm.auto import tqdm

from ecci_digraph.config import Settings, get_settings
from ecci_digraph.digraph import (
    Digraph,
    biorient,
    complement,
    is_strongly_connected,
    reverse,
)
from ecci_digraph.errors import (
    NotStronglyConnectedError,
    PreconditionViolatedError,
    UnknownTheoremError,
)
from ecci_digraph.extremal.bitmask import digraph_to_mask, encode_witness
from ecci_digraph.extremal.canonical import canonical_mask
from ecci_digraph.extremal.sampling import random_connected_graph, random_strong_digraph
from ecci_digraph.extremal.search import enumerate_strong_digraphs, enumerate_tournaments
from ecci_digraph.families.bidirected import gen_bidirected_family
from ecci_digraph.families.fixtures import CAPTION_VALUES, audit_fixture, fixture
from ecci_digraph.families.orientations import (
    gen_circulant,
    gen_directed_cycle,
    gen_kn_orientation,
)
from ecci_digraph.families.paths import DIRECTIONS, gen_pn_plus, gen_pn_star
from ecci_digraph.families.registry import all_families
from ecci_digraph.indices import (
    check_bound_theorem,
    check_complement_sum,
    check_regular_bounds,
    ecci_digraph_doubled,
    ecci_graph,
    format_xi,
    index_report,
)
from ecci_digraph.metrics import all_pairs_distances, ecc_profile

AUDIT_ONLY_FIXTURES = ("t2",)

logger = logging.getLogger(__name__)


class VerifyParams(BaseModel):
    n_range: Optional[Tuple[int, int]] = None
    samples: Optional[int] = None
    seed: Optional[int] = None
    allow_large: bool = False


class VerificationReport(BaseModel):
    theorem_id: str
    parameter_range: str
    instances_checked: int
    failures: List[str]
    notes: List[str] = []
    seed: Optional[int] = None
    samples: Optional[int] = None
    audit: bool = False
    table: List[Dict[str, Any]] = []

    @computed_field
    @property
    def verdict(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures


def _encode(d: Digraph) -> str:
    return encode_witness(digraph_to_mask(d), d.n)


def _range_text(lo: int, hi: int) -> str:
    return f"n={lo}" if lo == hi else f"n in [{lo},{hi}]"


def _sample_plan(
    samples: int, lo: int, hi: int, seed: int
) -> Iterator[Tuple[int, float, int]]:
    """``(n, p, sub_seed)`` triples drawn from one master generator."""
    master = np.random.default_rng(seed)
    for _ in range(samples):
        n = int(master.integers(lo, hi + 1))
        p = float(master.uniform(0.3, 0.8))
        yield n, p, int(master.integers(0, 2**32))


def _random_strong_corpus(
    samples: int, lo: int, hi: int, seed: int, settings: Settings
) -> Iterator[Digraph]:
    plan = _sample_plan(samples, lo, hi, seed)
    for n, p, sub_seed in tqdm(plan, total=samples, disable=not settings.show_progress):
        yield random_strong_digraph(n, p, sub_seed, settings=settings)


def _check_sameecc(params: VerifyParams, settings: Settings) -> VerificationReport:
    lo, hi = params.n_range or (2, 12)
    samples = params.samples or settings.samples
    seed = settings.seed if params.seed is None else params.seed
    failures = []
    for n, p, sub_seed in _sample_plan(samples, lo, hi, seed):
        g = random_connected_graph(n, p, sub_seed)
        d = biorient(g)
        if 2 * ecci_graph(g) != ecci_digraph_doubled(d, settings=settings):
            failures.append(_encode(d))
    return VerificationReport(
        theorem_id="sameecc",
        parameter_range=_range_text(lo, hi),
        instances_checked=samples,
        failures=failures,
        seed=seed,
        samples=samples,
    )


def _check_reverse(params: VerifyParams, settings: Settings) -> VerificationReport:
    lo, hi = params.n_range or (3, 12)
    samples = params.samples or settings.samples
    seed = settings.seed if params.seed is None else params.seed
    failures = []
    for d in _random_strong_corpus(samples, lo, hi, seed, settings):
        d_rev = reverse(d)
        profile = ecc_profile(d, settings=settings)
        profile_rev = ecc_profile(d_rev, settings=settings)
        same_index = index_report(d, profile=profile).xi_doubled == index_report(
            d_rev, profile=profile_rev
        ).xi_doubled
        dual = profile.ecc_out == profile_rev.ecc_in and profile.mecc == profile_rev.mecc
        if not (same_index and dual):
            failures.append(_encode(d))
    return VerificationReport(
        theorem_id="reverse",
        parameter_range=_range_text(lo, hi),
        instances_checked=samples,
        failures=failures,
        seed=seed,
        samples=samples,
    )


def _bound_corpus(
    params: VerifyParams, settings: Settings
) -> Tuple[List[Digraph], str, int, int]:
    lo, hi = params.n_range or (3, 12)
    samples = params.samples or settings.samples
    seed = settings.seed if params.seed is None else params.seed
    corpus = list(_random_strong_corpus(samples, lo, hi, seed, settings))
    for n in range(3, 31):
        corpus.extend(spec.build() for spec in all_families(n))
    text = f"{_range_text(lo, hi)} random; families n in [3,30]"
    return corpus, text, seed, samples


def _check_bounds(params: VerifyParams, settings: Settings) -> VerificationReport:
    corpus, text, seed, samples = _bound_corpus(params, settings)
    failures = [
        _encode(d)
        for d in corpus
        if not check_bound_theorem(d, settings=settings).bounds_hold
    ]
    return VerificationReport(
        theorem_id="bounds",
        parameter_range=text,
        instances_checked=len(corpus),
        failures=failures,
        seed=seed,
        samples=samples,
    )


def _check_self_centered_equality(
    params: VerifyParams, settings: Settings
) -> VerificationReport:
    corpus, text, seed, samples = _bound_corpus(params, settings)
    failures = []
    self_centered = 0
    for d in corpus:
        report = check_bound_theorem(d, settings=settings)
        self_centered += report.self_centered
        if not report.corollary_consistent:
            failures.append(_encode(d))
    return VerificationReport(
        theorem_id="self_centered_equality",
        parameter_range=text,
        instances_checked=len(corpus),
        failures=failures,
        notes=[f"{self_centered} self-centered instances"],
        seed=seed,
        samples=samples,
    )


def _check_complement_sum(params: VerifyParams, settings: Settings) -> VerificationReport:
    lo, hi = params.n_range or (5, 10)
    if lo < 4:
        raise PreconditionViolatedError("complement_sum needs n >= 4")
    samples = params.samples or 200
    seed = settings.seed if params.seed is None else params.seed
    master = np.random.default_rng(seed)
    failures = []
    checked = skipped = 0
    equalities = 0
    while checked < samples:
        if skipped > 50 * samples:
            raise PreconditionViolatedError(
                "Could not draw enough pairs with both sides strongly connected"
            )
        n = int(master.integers(lo, hi + 1))
        p = float(master.uniform(0.35, 0.65))
        d = random_strong_digraph(n, p, int(master.integers(0, 2**32)), settings=settings)
        if not is_strongly_connected(complement(d)):
            skipped += 1
            continue
        checked += 1
        report = check_complement_sum(d, settings=settings)
        equalities += report.equality
        if not (report.holds and report.equality_consistent):
            failures.append(_encode(d))
    return VerificationReport(
        theorem_id="complement_sum",
        parameter_range=_range_text(lo, hi),
        instances_checked=checked,
        failures=failures,
        notes=[
            f"{skipped} draws skipped (complement not strong)",
            f"{equalities} pairs attain equality",
        ],
        seed=seed,
        samples=samples,
    )


def _valid_circulants(n: int) -> Iterator[Digraph]:
    for size in range(1, n):
        for steps in combinations(range(1, n), size):
            try:
                yield gen_circulant(n, steps)
            except NotStronglyConnectedError:
                continue


def _check_regular_bounds(params: VerifyParams, settings: Settings) -> VerificationReport:
    lo, hi = params.n_range or (3, 30)
    failures = []
    checked = 0
    cycle_lo = max(lo, 3)
    for n in range(cycle_lo, hi + 1):
        cycle = gen_directed_cycle(n)
        report = check_regular_bounds(cycle, settings=settings)
        checked += 1
        if not (report.holds and report.attains_upper):
            failures.append(_encode(cycle))
    circulant_lo, circulant_hi = max(lo, 2), min(hi, 12)
    for n in range(circulant_lo, circulant_hi + 1):
        for d in _valid_circulants(n):
            checked += 1
            if not check_regular_bounds(d, settings=settings).holds:
                failures.append(_encode(d))
    ranges = []
    if cycle_lo <= hi:
        ranges.append(f"cycles {_range_text(cycle_lo, hi)}")
    if circulant_lo <= circulant_hi:
        ranges.append(f"circulants {_range_text(circulant_lo, circulant_hi)}")
    return VerificationReport(
        theorem_id="regular_bounds",
        parameter_range="; ".join(ranges),
        instances_checked=checked,
        failures=failures,
    )


def _check_kn_min(params: VerifyParams, settings: Settings) -> VerificationReport:
    lo, hi = params.n_range or (3, 6)
    failures, notes, table = [], [], []
    checked = 0
    for n in range(lo, hi + 1):
        report = enumerate_tournaments(
            n, "min", allow_large=params.allow_large, settings=settings
        )
        checked += report.labeled_count
        floor = 2 * n * (n - 1)
        if report.extremal_value is None or report.extremal_value < floor:
            failures.extend(report.witnesses)
        elif report.extremal_value > floor:
            notes.append(
                f"n={n}: minimum {report.extremal_display} exceeds n(n-1)={n * (n - 1)}"
            )
        table.append(
            {
                "n": n,
                "minimum": report.extremal_display,
                "n(n-1)": n * (n - 1),
                "strong_count": report.strong_count,
                "classes": len(report.witnesses),
            }
        )
    return VerificationReport(
        theorem_id="kn_min",
        parameter_range=_range_text(lo, hi),
        instances_checked=checked,
        failures=failures,
        notes=notes,
        table=table,
    )


def _is_orientation_of_complete(d: Digraph) -> bool:
    for u in range(d.n):
        for v in range(u + 1, d.n):
            if d.has_arc(u, v) == d.has_arc(v, u):
                return False
    return True


def _check_kn_construction(params: VerifyParams, settings: Settings) -> VerificationReport:
    lo, hi = params.n_range or (5, 12)
    orders = list(range(lo, hi + 1))
    if params.n_range is None:
        orders.insert(0, 3)
    failures = []
    checked = 0
    for n in orders:
        d = gen_kn_orientation(n)
        checked += 1
        ok = _is_orientation_of_complete(d) and is_strongly_connected(d)
        if ok:
            profile = ecc_profile(d, settings=settings)
            report = index_report(d, profile=profile)
            ok = report.xi_doubled == 2 * n * (n - 1)
            if n >= 4:
                ok = ok and all(m == 2 for m in profile.mecc)
        if not ok:
            failures.append(_encode(d))
    for n in range(3, 51):
        checked += 1
        if ecci_digraph_doubled(gen_directed_cycle(n), settings=settings) != 2 * n * (n - 1):
            failures.append(_encode(gen_directed_cycle(n)))
    return VerificationReport(
        theorem_id="kn_construction",
        parameter_range=f"n in {orders}; directed cycles n in [3,50]",
        instances_checked=checked,
        failures=failures,
    )


def _check_star_min(params: VerifyParams, settings: Settings) -> VerificationReport:
    lo, hi = params.n_range or (4, 4)
    if lo < 4:
        raise PreconditionViolatedError("star_min needs n >= 4")
    failures, notes, table = [], [], []
    checked = 0
    for n in range(lo, hi + 1):
        report = enumerate_strong_digraphs(
            n, "min", allow_large=params.allow_large, settings=settings
        )
        checked += report.labeled_count
        star = gen_bidirected_family("star", n)
        star_code = encode_witness(
            canonical_mask(digraph_to_mask(star), n, settings.canonical_cap), n
        )
        if report.extremal_value != 2 * 3 * (n - 1):
            failures.extend(report.witnesses)
        elif report.witness_count_labeled != n or report.witnesses != [star_code]:
            failures.extend(w for w in report.witnesses if w != star_code)
        else:
            notes.append(
                f"n={n}: min={report.extremal_display}, witnesses: bidirected star"
            )
        table.append(
            {
                "n": n,
                "minimum": report.extremal_display,
                "3(n-1)": 3 * (n - 1),
                "witness_count_labeled": report.witness_count_labeled,
                "witnesses": report.witnesses,
            }
        )
    return VerificationReport(
        theorem_id="star_min",
        parameter_range=_range_text(lo, hi),
        instances_checked=checked,
        failures=failures,
        notes=notes,
        table=table,
    )


def _check_pn_star_delta(params: VerifyParams, settings: Settings) -> VerificationReport:
    lo, hi = params.n_range or (3, 50)
    failures = []
    checked = 0
    for n in range(lo, hi + 1):
        base = ecci_digraph_doubled(gen_bidirected_family("path", n), settings=settings)
        for direction in DIRECTIONS:
            d = gen_pn_star(n, direction)
            checked += 1
            if ecci_digraph_doubled(d, settings=settings) - base != 2 * (n - 1):
                failures.append(_encode(d))
    return VerificationReport(
        theorem_id="pn_star_delta",
        parameter_range=_range_text(lo, hi),
        instances_checked=checked,
        failures=failures,
    )


def _brute_force_doubled(d: Digraph) -> int:
    md = all_pairs_distances(d, force=True).md
    mecc = md.max(axis=1)
    return int(sum(s * int(m) for s, m in zip(d.degree_sums(), mecc)))


def construction_delta_doubled(n: int) -> int:
    """Added degree times bidirected-path eccentricity, summed over the vertices."""
    total = 0
    for i in range(n):
        added = max(0, n - 2 - i) + max(0, i - 1)
        total += added * max(i, n - 1 - i)
    return total


def printed_delta(n: int) -> Fraction:
    if n % 2:
        return Fraction(n**3 - 4 * n**2 + 6 * n - 3, 4)
    return Fraction(3 * n**3 - 5 * n**2 - 12 * n + 16, 8)


def _check_pn_plus_delta(params: VerifyParams, settings: Settings) -> VerificationReport:
    lo, hi = params.n_range or (3, 12)
    failures, table = [], []
    agreements = 0
    for n in range(lo, hi + 1):
        path = gen_bidirected_family("path", n)
        plus = gen_pn_plus(n)
        engine = ecci_digraph_doubled(plus, settings=settings) - ecci_digraph_doubled(
            path, settings=settings
        )
        brute = _brute_force_doubled(plus) - _brute_force_doubled(path)
        printed = printed_delta(n)
        matches = Fraction(engine, 2) == printed
        agreements += matches
        if engine != brute:
            failures.append(_encode(plus))
        table.append(
            {
                "n": n,
                "engine_delta": format_xi(engine),
                "brute_force_delta": format_xi(brute),
                "construction_delta": format_xi(construction_delta_doubled(n)),
                "printed_formula": "odd" if n % 2 else "even",
                "printed_value": str(printed),
                "matches_printed": matches,
            }
        )
    return VerificationReport(
        theorem_id="pn_plus_delta",
        parameter_range=_range_text(lo, hi),
        instances_checked=hi - lo + 1,
        failures=failures,
        notes=[
            f"printed closed forms agree with the engine at {agreements} "
            f"of {hi - lo + 1} orders"
        ],
        audit=True,
        table=table,
    )


def _check_fixture_captions(params: VerifyParams, settings: Settings) -> VerificationReport:
    failures, notes, table = [], [], []
    for fixture_id in CAPTION_VALUES:
        audit = audit_fixture(fixture_id)
        encoded = _encode(fixture(fixture_id))
        if not audit.consistent:
            failures.append(encoded)
        elif audit.discrepancy:
            if fixture_id in AUDIT_ONLY_FIXTURES:
                notes.append(
                    f"{fixture_id}: computed {audit.computed_display}, "
                    f"caption states {audit.caption_value}"
                )
            else:
                failures.append(encoded)
        table.append(
            {
                "fixture": fixture_id,
                "computed": audit.computed_display,
                "caption": audit.caption_value,
                "discrepancy": audit.discrepancy,
            }
        )
    return VerificationReport(
        theorem_id="fixture_captions",
        parameter_range="fig1, t1, t2",
        instances_checked=len(CAPTION_VALUES),
        failures=failures,
        notes=notes,
        audit=True,
        table=table,
    )


def _check_monotone_arc_addition(
    params: VerifyParams, settings: Settings
) -> VerificationReport:
    lo, hi = params.n_range or (3, 10)
    samples = params.samples or 100
    seed = settings.seed if params.seed is None else params.seed
    failures = []
    checked = 0
    for d in _random_strong_corpus(samples, lo, hi, seed, settings):
        profile = ecc_profile(d, settings=settings)
        base = index_report(d, profile=profile).xi_doubled
        for u in range(d.n):
            for v in range(d.n):
                if u == v or d.has_arc(u, v):
                    continue
                bigger = Digraph.from_arcs(d.n, list(d.arcs()) + [(u, v)])
                bigger_profile = ecc_profile(bigger, settings=settings)
                if bigger_profile.mecc != profile.mecc:
                    continue
                checked += 1
                gained = index_report(bigger, profile=bigger_profile).xi_doubled - base
                if gained != profile.mecc[u] + profile.mecc[v]:
                    failures.append(_encode(bigger))
    return VerificationReport(
        theorem_id="monotone_arc_addition",
        parameter_range=_range_text(lo, hi),
        instances_checked=checked,
        failures=failures,
        seed=seed,
        samples=samples,
    )


CHECKS: Dict[str, Callable[[VerifyParams, Settings], VerificationReport]] = {
    "sameecc": _check_sameecc,
    "reverse": _check_reverse,
    "bounds": _check_bounds,
    "self_centered_equality": _check_self_centered_equality,
    "complement_sum": _check_complement_sum,
    "regular_bounds": _check_regular_bounds,
    "kn_min": _check_kn_min,
    "kn_construction": _check_kn_construction,
    "star_min": _check_star_min,
    "pn_star_delta": _check_pn_star_delta,
    "pn_plus_delta": _check_pn_plus_delta,
    "fixture_captions": _check_fixture_captions,
    "monotone_arc_addition": _check_monotone_arc_addition,
}

THEOREM_IDS = tuple(CHECKS)


def verify_theorem(
    theorem_id: str,
    params: Optional[VerifyParams] = None,
    *,
    settings: Optional[Settings] = None,
) -> VerificationReport:
    """Run the check registered under ``theorem_id``.

    Raises:
        UnknownTheoremError: no such check.
        CapExceededError: an exhaustive check was asked beyond its cap.
    """
    try:
        check = CHECKS[theorem_id]
    except KeyError:
        raise UnknownTheoremError(
            f"Unknown theorem id {theorem_id!r}; expected one of {THEOREM_IDS}"
        )
    params = params or VerifyParams()
    settings = settings or get_settings()
    if params.n_range is not None and params.n_range[0] > params.n_range[1]:
        raise PreconditionViolatedError(f"Empty n range {params.n_range}")
    logger.info("Verifying %s with %s", theorem_id, params.model_dump())
    report = check(params, settings)
    if report.failures:
        logger.warning(
            "%s: %s counterexample(s) among %s instances",
            theorem_id,
            len(report.failures),
            report.instances_checked,
        )
    return report


__all__ = [
    "THEOREM_IDS",
    "VerificationReport",
    "VerifyParams",
    "verify_theorem",
]
