import pytest

from ecci_digraph.digraph import is_strongly_connected, is_symmetric
from ecci_digraph.errors import (
    InvalidFamilyParameterError,
    NotStronglyConnectedError,
    OrderTooSmallError,
)
from ecci_digraph.families.bidirected import (
    BIDIRECTED_KINDS,
    gen_bidirected_family,
    undirected_family,
)
from ecci_digraph.families.fixtures import (
    CAPTION_VALUES,
    FIXTURE_IDS,
    audit_fixture,
    fixture,
)
from ecci_digraph.families.orientations import (
    gen_circulant,
    gen_directed_cycle,
    gen_kn_orientation,
)
from ecci_digraph.families.paths import gen_pn_plus, gen_pn_star
from ecci_digraph.families.registry import Family, FamilySpec, all_families
from ecci_digraph.indices import ecci_digraph, ecci_digraph_doubled
from ecci_digraph.metrics import ecc_profile


def _is_tournament(d):
    return all(
        d.has_arc(u, v) != d.has_arc(v, u)
        for u in range(d.n)
        for v in range(u + 1, d.n)
    )


class Test_bidirected:
    @pytest.mark.parametrize("kind", ["path", "star", "cycle", "complete"])
    def test_symmetric_and_strong(self, kind):
        d = gen_bidirected_family(kind, 6)
        assert is_symmetric(d)
        assert is_strongly_connected(d)
        assert d.arc_count == 2 * undirected_family(kind, 6).edge_count

    def test_order_too_small(self):
        with pytest.raises(OrderTooSmallError):
            gen_bidirected_family("cycle", 2)

    def test_unknown_kind(self):
        with pytest.raises(InvalidFamilyParameterError):
            gen_bidirected_family("wheel", 5)


class Test_orientations:
    def test_directed_cycle(self):
        d = gen_directed_cycle(4)
        assert list(d.arcs()) == [(0, 1), (1, 2), (2, 3), (3, 0)]
        with pytest.raises(OrderTooSmallError):
            gen_directed_cycle(2)

    def test_circulant_is_t1(self):
        assert gen_circulant(5, [1, 2]) == fixture("t1")

    def test_circulant_rejects_bad_sets(self):
        with pytest.raises(InvalidFamilyParameterError):
            gen_circulant(5, [])
        with pytest.raises(InvalidFamilyParameterError):
            gen_circulant(5, [0, 1])
        with pytest.raises(InvalidFamilyParameterError):
            gen_circulant(5, [5])
        with pytest.raises(NotStronglyConnectedError):
            gen_circulant(6, [2, 4])

    @pytest.mark.parametrize("n", range(5, 13))
    def test_kn_orientation_is_index_minimal(self, n):
        d = gen_kn_orientation(n)
        assert _is_tournament(d)
        assert ecc_profile(d).mecc == [2] * n
        assert ecci_digraph(d) == n * (n - 1)

    def test_kn_orientation_small_orders(self):
        assert gen_kn_orientation(3) == gen_directed_cycle(3)
        assert ecci_digraph(gen_kn_orientation(3)) == 6
        four = gen_kn_orientation(4)
        assert _is_tournament(four)
        assert ecc_profile(four).mecc == [2, 2, 3, 3]
        assert ecci_digraph(four) == 15

    def test_kn8_matches_figure(self):
        assert gen_kn_orientation(8) == fixture("fig3")
        assert gen_kn_orientation(7) == fixture("fig3_left")
        assert ecci_digraph(fixture("fig3")) == 56


class Test_paths:
    @pytest.mark.parametrize("n", [3, 4, 7, 12])
    @pytest.mark.parametrize("direction", ["forward", "backward"])
    def test_pn_star_adds_n_minus_one(self, n, direction):
        base = ecci_digraph_doubled(gen_bidirected_family("path", n))
        assert ecci_digraph_doubled(gen_pn_star(n, direction)) - base == 2 * (n - 1)

    def test_pn_star_direction(self):
        assert gen_pn_star(4, "forward").has_arc(0, 3)
        assert gen_pn_star(4, "backward").has_arc(3, 0)
        with pytest.raises(InvalidFamilyParameterError):
            gen_pn_star(4, "sideways")

    @pytest.mark.parametrize("n", [3, 5, 8])
    def test_pn_plus_keeps_path_eccentricities(self, n):
        path = gen_bidirected_family("path", n)
        plus = gen_pn_plus(n)
        assert plus.arc_count == path.arc_count + (n - 1) * (n - 2) // 2
        assert ecc_profile(plus).mecc == ecc_profile(path).mecc


class Test_fixtures:
    def test_fig1(self):
        assert ecci_digraph(fixture("fig1")) == 8

    def test_t1_and_t2_are_tournaments(self):
        assert _is_tournament(fixture("t1"))
        assert _is_tournament(fixture("t2"))

    def test_unknown(self):
        with pytest.raises(InvalidFamilyParameterError):
            fixture("fig9")

    def test_audit(self):
        assert not audit_fixture("fig1").discrepancy
        assert not audit_fixture("t1").discrepancy
        t2 = audit_fixture("t2")
        assert t2.discrepancy
        assert t2.computed_display == "20"
        assert t2.caption_value == 24
        assert t2.consistent

    def test_every_fixture_is_strong(self):
        for fixture_id in FIXTURE_IDS:
            assert is_strongly_connected(fixture(fixture_id))
        assert set(CAPTION_VALUES) <= set(FIXTURE_IDS)


class Test_registry:
    def test_dashed_names(self):
        spec = FamilySpec(family="kn-orientation", n=5)
        assert spec.family is Family.kn_orientation
        assert spec.build() == fixture("t1")

    def test_fixture_ignores_order(self):
        assert FamilySpec(family="fixture_t2").build() == fixture("t2")

    def test_missing_order(self):
        with pytest.raises(InvalidFamilyParameterError):
            FamilySpec(family="pn_plus").build()

    def test_circulant_needs_set(self):
        with pytest.raises(InvalidFamilyParameterError):
            FamilySpec(family="circulant", n=5).build()

    @pytest.mark.parametrize("n", [3, 4, 9])
    def test_all_families_are_strong(self, n):
        specs = all_families(n)
        assert len(specs) == 10
        for spec in specs:
            assert is_strongly_connected(spec.build())

    def test_generators_are_deterministic(self):
        for spec in all_families(6):
            assert spec.build() == spec.build()


def test_bidirected_kinds():
    assert BIDIRECTED_KINDS == ("path", "star", "cycle", "complete")
    with pytest.raises(InvalidFamilyParameterError):
        gen_bidirected_family("hypercube", 8)
