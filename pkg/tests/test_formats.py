import io

import jsonschema
import orjson
import pytest

from ecci_digraph.errors import (
    DuplicateArcError,
    EdgeListSyntaxError,
    EmptyVertexSetError,
    HeaderMismatchError,
    LoopArcError,
    VertexOutOfRangeError,
)
from ecci_digraph.extremal.search import enumerate_tournaments
from ecci_digraph.extremal.verification import VerifyParams, verify_theorem
from ecci_digraph.families.registry import all_families
from ecci_digraph.formats.edgelist import (
    parse_edge_list,
    read_edge_list,
    serialize_edge_list,
    write_edge_list,
)
from ecci_digraph.formats.reports import (
    SCHEMA_VERSION,
    JsonReport,
    ReportKind,
    enumerate_payload,
    generate_payload,
    index_payload,
    load_schema,
    profile_payload,
    verify_payload,
)
from ecci_digraph.indices import index_report
from ecci_digraph.metrics import all_pairs_distances, ecc_profile


class Test_parse_edge_list:
    def test_fig1(self, fig1):
        assert parse_edge_list("3 5\n0 1\n1 0\n1 2\n2 1\n0 2") == fig1

    def test_comments_and_blank_lines(self, fig1):
        text = "# example\n\n3 5\n0 1\n# reverse\n1 0\n1 2\n2 1\n0 2\n\n"
        assert parse_edge_list(text) == fig1

    def test_single_vertex(self):
        d = parse_edge_list("# comment\n1 0\n")
        assert d.n == 1
        assert d.arc_count == 0

    @pytest.mark.parametrize(
        "text, error, line",
        [
            ("2 1\n0 0", LoopArcError, 2),
            ("3 2\n0 1\n0 1\n", DuplicateArcError, 3),
            ("# c\n2 1\n0 5\n", VertexOutOfRangeError, 3),
            ("0 0\n", EmptyVertexSetError, 1),
            ("3 1\n0 x\n", EdgeListSyntaxError, 2),
            ("3 1\n0 1 2\n", EdgeListSyntaxError, 2),
            ("3\n", EdgeListSyntaxError, 1),
            ("3 2\n0 1\n", HeaderMismatchError, 2),
        ],
    )
    def test_errors_carry_lines(self, text, error, line):
        with pytest.raises(error) as info:
            parse_edge_list(text)
        assert info.value.line == line

    def test_empty(self):
        with pytest.raises(EdgeListSyntaxError):
            parse_edge_list("# nothing here\n")


class Test_serialize_edge_list:
    def test_fig1(self, fig1):
        assert serialize_edge_list(fig1) == "3 5\n0 1\n0 2\n1 0\n1 2\n2 1\n"

    def test_single_vertex(self):
        assert serialize_edge_list(parse_edge_list("1 0\n")) == "1 0\n"

    def test_families_survive(self):
        for spec in all_families(7):
            d = spec.build()
            assert parse_edge_list(serialize_edge_list(d)) == d


class Test_edge_list_files:
    def test_write_then_read(self, tmp_path, fig1):
        path = tmp_path / "fig1.txt"
        write_edge_list(fig1, str(path))
        assert path.read_text() == serialize_edge_list(fig1)
        assert read_edge_list(str(path)) == fig1

    def test_dash_reads_standard_input(self, monkeypatch, fig1):
        monkeypatch.setattr("sys.stdin", io.StringIO(serialize_edge_list(fig1)))
        assert read_edge_list("-") == fig1


class Test_json_reports:
    def test_index_payload(self, fig1):
        profile = ecc_profile(fig1)
        payload = index_payload(index_report(fig1, profile=profile), profile)
        assert payload["xi"] == {"doubled": 16, "display": "8"}
        assert payload["profile"]["mecc"] == [2, 1, 2]
        assert "xi_doubled" not in payload
        assert "md_matrix" not in payload

    def test_md_matrix(self, fig1):
        profile = ecc_profile(fig1)
        payload = index_payload(
            index_report(fig1, profile=profile), profile, all_pairs_distances(fig1)
        )
        assert payload["md_matrix"] == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]

    def test_keys_are_sorted_and_output_is_stable(self, fig1):
        profile = ecc_profile(fig1)
        doc = JsonReport(kind="index", payload=index_payload(index_report(fig1), profile))
        first = doc.to_json()
        assert first == doc.to_json()
        assert first.endswith(b"\n")
        keys = list(orjson.loads(first))
        assert keys == sorted(keys)
        assert JsonReport.from_json(first) == doc

    def test_enumerate_payload(self):
        payload = enumerate_payload(enumerate_tournaments(3))
        assert payload["extremal"] == {"doubled": 12, "display": "6"}
        assert "extremal_value" not in payload

    def test_generate_payload(self, fig1):
        payload = generate_payload("fixture_fig1", fig1, {})
        assert payload["edge_list"] == serialize_edge_list(fig1)
        assert payload["arc_count"] == 5


class Test_schema:
    def test_kinds_match(self):
        schema = load_schema()
        assert schema["properties"]["kind"]["enum"] == [k.value for k in ReportKind]
        assert schema["properties"]["schema_version"]["const"] == SCHEMA_VERSION

    def _validate(self, kind, payload):
        document = orjson.loads(JsonReport(kind=kind, payload=payload).to_json())
        jsonschema.validate(instance=document, schema=load_schema())

    def test_index_and_profile(self, fig1):
        profile = ecc_profile(fig1)
        self._validate(
            "index",
            index_payload(index_report(fig1), profile, all_pairs_distances(fig1)),
        )
        self._validate("index", index_payload(index_report(fig1), profile))
        self._validate("profile", profile_payload(profile))

    def test_enumerate(self):
        self._validate("enumerate", enumerate_payload(enumerate_tournaments(4)))

    @pytest.mark.parametrize(
        "theorem_id, n_range",
        [
            ("pn_plus_delta", (3, 6)),
            ("kn_construction", (4, 4)),
            ("star_min", (4, 4)),
            ("fixture_captions", None),
        ],
    )
    def test_verify(self, theorem_id, n_range):
        report = verify_theorem(theorem_id, VerifyParams(n_range=n_range))
        self._validate("verify", verify_payload(report))

    def test_generate(self, fig1):
        self._validate("generate", generate_payload("fixture_fig1", fig1, {}))

    def test_wrong_payload_is_rejected(self, fig1):
        payload = index_payload(index_report(fig1), ecc_profile(fig1))
        payload["xi"]["display"] = "8.25"
        with pytest.raises(jsonschema.ValidationError):
            self._validate("index", payload)
        with pytest.raises(jsonschema.ValidationError):
            self._validate("profile", {"mecc": [1]})
