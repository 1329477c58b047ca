import time

import networkx as nx
import pytest

from ecci_digraph.config import Settings
from ecci_digraph.digraph import is_connected, is_strongly_connected, new_digraph
from ecci_digraph.errors import (
    CapExceededError,
    EdgeListSyntaxError,
    OrderTooSmallError,
    PreconditionViolatedError,
    RetriesExhaustedError,
)
from ecci_digraph.extremal.bitmask import (
    TABLE_MAX_ORDER,
    decode_witness,
    digraph_to_mask,
    encode_witness,
    evaluate,
    field_tables,
    mask_to_digraph,
    pair_bit,
    row_tables,
    tournament_mask_to_digraph,
)
from ecci_digraph.extremal.canonical import canonical_form, deduplicate, orbit
from ecci_digraph.extremal.sampling import random_connected_graph, random_strong_digraph
from ecci_digraph.extremal.search import (
    enumerate_strong_digraphs,
    enumerate_tournaments,
    merge,
)
from ecci_digraph.families.bidirected import gen_bidirected_family
from ecci_digraph.families.orientations import gen_directed_cycle, gen_kn_orientation
from ecci_digraph.indices import index_report
from ecci_digraph.metrics import ecc_profile
from tests.oracles import to_networkx


@pytest.fixture
def quiet():
    return Settings(threads=1, show_progress=False)


class Test_bitmask:
    def test_directed_triangle_witness(self):
        c3 = gen_directed_cycle(3)
        assert encode_witness(digraph_to_mask(c3), 3) == "n=3:19"
        assert decode_witness("n=3:19") == c3

    def test_mask_round_trip(self):
        for seed in range(10):
            d = random_strong_digraph(6, 0.4, seed)
            assert mask_to_digraph(digraph_to_mask(d), d.n) == d

    def test_tournament_masks(self):
        assert tournament_mask_to_digraph(0b101, 3) == new_digraph(
            3, [(0, 1), (2, 0), (1, 2)]
        )

    @pytest.mark.parametrize("n", [9, 30, 50])
    def test_large_order_witness(self, n):
        cycle = gen_directed_cycle(n)
        mask = digraph_to_mask(cycle)
        assert mask == sum(1 << pair_bit(n, i, (i + 1) % n) for i in range(n))
        assert decode_witness(encode_witness(mask, n)) == cycle

    def test_large_order_skips_lookup_tables(self):
        row_tables.cache_clear()
        field_tables.cache_clear()
        empty = decode_witness("n=40:0")
        assert (empty.n, empty.arc_count) == (40, 0)
        digraph_to_mask(gen_directed_cycle(40))
        assert row_tables.cache_info().currsize == 0
        assert field_tables.cache_info().currsize == 0

    def test_table_and_bitwise_paths_agree(self):
        d = random_strong_digraph(TABLE_MAX_ORDER, 0.4, 5)
        n = d.n
        expected = sum(1 << pair_bit(n, u, v) for u, v in d.arcs())
        assert digraph_to_mask(d) == expected
        assert mask_to_digraph(expected, n) == d

    @pytest.mark.parametrize("text", ["n=3:zz", "3:19", "n=3:", "n=2:ff"])
    def test_bad_witness(self, text):
        with pytest.raises(EdgeListSyntaxError):
            decode_witness(text)

    @pytest.mark.parametrize("seed", range(10))
    def test_evaluate_agrees_with_index_report(self, seed):
        d = random_strong_digraph(6, 0.35, seed)
        report = index_report(d)
        assert evaluate(d.out_masks(), d.n) == (
            report.xi_doubled,
            report.arc_count,
            report.mrad,
            report.mdiam,
        )

    def test_evaluate_rejects_non_strong(self):
        assert evaluate(new_digraph(3, [(0, 1), (1, 2)]).out_masks(), 3) is None


class Test_canonical:
    def test_relabelled_triangles(self):
        a = new_digraph(3, [(0, 1), (1, 2), (2, 0)])
        b = new_digraph(3, [(0, 2), (2, 1), (1, 0)])
        assert canonical_form(a) == canonical_form(b)
        assert canonical_form(a) == (25).to_bytes(1, "big")

    def test_orbit_of_star(self):
        star = gen_bidirected_family("star", 4)
        assert len(orbit(digraph_to_mask(star), 4)) == 4

    @pytest.mark.parametrize("seed", range(12))
    def test_agrees_with_networkx_isomorphism(self, seed):
        a = random_strong_digraph(5, 0.4, seed)
        b = random_strong_digraph(5, 0.4, seed + 100)
        same = canonical_form(a) == canonical_form(b)
        assert same == nx.is_isomorphic(to_networkx(a), to_networkx(b))

    def test_cap(self):
        with pytest.raises(CapExceededError):
            canonical_form(gen_directed_cycle(9))
        assert deduplicate([0], 9) is None

    def test_deduplicate(self):
        c3 = digraph_to_mask(gen_directed_cycle(3))
        other = digraph_to_mask(new_digraph(3, [(0, 2), (2, 1), (1, 0)]))
        assert deduplicate([c3, other], 3) == [25]


class Test_search:
    def test_tournaments_three(self, quiet):
        report = enumerate_tournaments(3, "min", settings=quiet)
        assert report.labeled_count == 8
        assert report.strong_count == 2
        assert report.extremal_display == "6"
        assert report.witnesses == ["n=3:19"]
        assert report.witness_count_labeled == 2
        assert report.bound_violations == 0

    def test_tournaments_four(self, quiet):
        report = enumerate_tournaments(4, "min", settings=quiet)
        assert report.strong_count == 24
        assert report.extremal_value == 30
        assert len(report.witnesses) == 1
        assert decode_witness(report.witnesses[0]) is not None

    def test_tournaments_five(self, quiet):
        report = enumerate_tournaments(5, "min", settings=quiet)
        assert report.strong_count == 544
        assert report.extremal_display == "20"
        rebuilt = [decode_witness(w) for w in report.witnesses]
        assert all(index_report(d).xi_doubled == 40 for d in rebuilt)
        assert canonical_form(gen_kn_orientation(5)) in {
            canonical_form(d) for d in rebuilt
        }

    def test_strong_digraphs_three(self, quiet):
        report = enumerate_strong_digraphs(3, "min", settings=quiet)
        assert report.labeled_count == 64
        assert report.strong_count == 18
        assert report.extremal_display == "6"
        # directed triangles, bidirected paths and the complete symmetric digraph
        assert report.witness_count_labeled == 6
        assert len(report.witnesses) == 3

    def test_strong_digraphs_four(self, quiet):
        report = enumerate_strong_digraphs(4, "min", settings=quiet)
        assert report.strong_count == 1606
        assert report.extremal_display == "9"
        assert report.witness_count_labeled == 4
        assert report.witnesses == ["n=4:24f"]
        assert decode_witness(report.witnesses[0]) == gen_bidirected_family("star", 4)

    def test_max_objective(self, quiet):
        report = enumerate_tournaments(4, "max", settings=quiet)
        assert report.extremal_value == 30

    def test_worker_count_does_not_change_the_report(self):
        serial = enumerate_tournaments(5, "min", settings=Settings(threads=1))
        parallel = enumerate_tournaments(5, "min", settings=Settings(threads=3))
        assert serial.model_dump() == parallel.model_dump()

    def test_caps(self, quiet):
        with pytest.raises(CapExceededError):
            enumerate_tournaments(8, settings=quiet)
        with pytest.raises(CapExceededError):
            enumerate_strong_digraphs(6, settings=quiet)
        with pytest.raises(OrderTooSmallError):
            enumerate_tournaments(2, settings=quiet)

    def test_merge_is_associative(self):
        a = (10, [1, 2], 4, 2, 0)
        b = (8, [5], 4, 1, 0)
        c = (8, [3], 4, 3, 1)
        left = merge(merge(a, b, True), c, True)
        right = merge(a, merge(b, c, True), True)
        assert left == right == (8, [3, 5], 12, 6, 1)
        assert merge(a, (None, [], 4, 0, 0), True) == (10, [1, 2], 8, 2, 0)

    @pytest.mark.slow
    def test_strong_digraphs_five(self):
        report = enumerate_strong_digraphs(5, "min", settings=Settings(threads=4))
        assert report.strong_count == 565080
        assert report.extremal_display == "12"
        assert report.witness_count_labeled == 5
        assert decode_witness(report.witnesses[0]) == gen_bidirected_family("star", 5)

    @pytest.mark.slow
    def test_tournaments_seven(self):
        report = enumerate_tournaments(7, "min", settings=Settings(threads=4))
        assert report.extremal_display == "42"
        assert report.bound_violations == 0

    @pytest.mark.slow
    def test_strong_digraphs_five_independent_of_worker_count(self, monkeypatch):
        reports = []
        for threads in ("1", "2", "8"):
            monkeypatch.setenv("ECCI_THREADS", threads)
            settings = Settings.from_env()
            assert settings.threads == int(threads)
            reports.append(enumerate_strong_digraphs(5, "min", settings=settings))
        assert reports[0].witnesses == ["n=5:1111f"]
        assert all(r.model_dump() == reports[0].model_dump() for r in reports[1:])


class Test_sampling:
    def test_seeded(self):
        assert random_strong_digraph(8, 0.3, 42) == random_strong_digraph(8, 0.3, 42)

    @pytest.mark.parametrize("method", ["rejection", "cycle"])
    def test_strong(self, method):
        for seed in range(10):
            d = random_strong_digraph(10, 0.2, seed, method=method)
            assert is_strongly_connected(d)

    def test_sparse_cycle_method(self):
        d = random_strong_digraph(500, 0.001, 3, method="cycle")
        assert is_strongly_connected(d)
        assert d.arc_count >= 500

    def test_bad_parameters(self):
        with pytest.raises(PreconditionViolatedError):
            random_strong_digraph(5, 1.0, 0)
        with pytest.raises(PreconditionViolatedError):
            random_strong_digraph(5, 0.5, 0, method="tree")

    def test_retries_exhausted(self):
        with pytest.raises(RetriesExhaustedError):
            random_strong_digraph(12, 0.01, 0, max_retries=3)

    def test_connected_graph(self):
        for seed in range(10):
            g = random_connected_graph(15, 0.05, seed)
            assert is_connected(g)
            assert g.edge_count >= 14


@pytest.mark.slow
def test_sparse_large_instance_is_fast():
    n = 5000
    d = random_strong_digraph(n, 3 / (n - 1), 1, method="cycle")
    assert 3.5 < d.arc_count / n < 4.5
    start = time.perf_counter()
    report = index_report(d, profile=ecc_profile(d))
    elapsed = time.perf_counter() - start
    assert report.n == n
    assert elapsed < 10.0
