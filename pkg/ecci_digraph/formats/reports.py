"""Versioned JSON envelopes around the library's report models.

Every index value leaves the package as ``{"doubled": int, "display": str}``,
keys are sorted and indentation is fixed, so equal inputs give byte-equal
documents. The payload layouts are described by ``report.schema.json`` next to
this module.
"""

from __future__ import annotations

import logging
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional, Union

import orjson
from pydantic import BaseModel

from ecci_digraph.digraph import Digraph
from ecci_digraph.extremal.search import ExtremalReport
from ecci_digraph.extremal.verification import VerificationReport
from ecci_digraph.formats.edgelist import serialize_edge_list
from ecci_digraph.indices import IndexReport, format_xi
from ecci_digraph.metrics import DistanceData, EccProfile

SCHEMA_VERSION = "1.0"
SCHEMA_PATH = Path(__file__).with_name("report.schema.json")
JSON_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE

logger = logging.getLogger(__name__)


class ReportKind(str, Enum):
    index = "index"
    profile = "profile"
    verify = "verify"
    enumerate = "enumerate"
    generate = "generate"


class JsonReport(BaseModel):
    """Envelope written by ``ecci ... --json``.

    Example:

        .. code-block:: python

            from ecci_digraph.families.fixtures import fixture
            from ecci_digraph.formats.reports import JsonReport, index_payload
            from ecci_digraph.indices import index_report
            from ecci_digraph.metrics import ecc_profile

            d = fixture("fig1")
            profile = ecc_profile(d)
            doc = JsonReport(kind="index", payload=index_payload(index_report(d), profile))
            doc.to_json()
    """

    schema_version: str = SCHEMA_VERSION
    kind: ReportKind
    payload: Dict[str, Any]

    def to_json(self) -> bytes:
        return orjson.dumps(self.model_dump(mode="json"), option=JSON_OPTIONS)

    @classmethod
    def from_json(cls, data: Union[bytes, str]) -> JsonReport:
        return cls.model_validate(orjson.loads(data))


def load_schema() -> Dict[str, Any]:
    return orjson.loads(SCHEMA_PATH.read_bytes())


def xi_field(doubled: Optional[int]) -> Optional[Dict[str, Any]]:
    if doubled is None:
        return None
    return {"doubled": doubled, "display": format_xi(doubled)}


def profile_payload(profile: EccProfile) -> Dict[str, Any]:
    return profile.model_dump(mode="json")


def index_payload(
    report: IndexReport,
    profile: EccProfile,
    distances: Optional[DistanceData] = None,
) -> Dict[str, Any]:
    """``IndexReport`` fields with ``xi_doubled`` replaced by ``xi``, the
    profile nested under ``profile`` and, when given, the md matrix."""
    payload = report.model_dump(mode="json")
    payload["xi"] = xi_field(payload.pop("xi_doubled"))
    payload["profile"] = profile_payload(profile)
    if distances is not None:
        payload["md_matrix"] = distances.md.tolist()
    return payload


def verify_payload(report: VerificationReport) -> Dict[str, Any]:
    return report.model_dump(mode="json")


def enumerate_payload(report: ExtremalReport) -> Dict[str, Any]:
    payload = report.model_dump(mode="json")
    payload.pop("extremal_display")
    payload["extremal"] = xi_field(payload.pop("extremal_value"))
    return payload


def generate_payload(family: str, d: Digraph, params: Dict[str, Any]) -> Dict[str, Any]:
    return {
        "family": family,
        "n": d.n,
        "arc_count": d.arc_count,
        "params": params,
        "edge_list": serialize_edge_list(d),
    }
