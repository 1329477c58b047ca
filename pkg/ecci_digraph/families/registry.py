"""Name-based access to every generator, used by the CLI and the checks."""

from __future__ import annotations

import logging
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, field_validator

from ecci_digraph.digraph import Digraph
from ecci_digraph.errors import InvalidFamilyParameterError
from ecci_digraph.families.bidirected import gen_bidirected_family
from ecci_digraph.families.fixtures import fixture
from ecci_digraph.families.orientations import (
    gen_circulant,
    gen_directed_cycle,
    gen_kn_orientation,
)
from ecci_digraph.families.paths import gen_pn_plus, gen_pn_star

logger = logging.getLogger(__name__)


class Family(str, Enum):
    directed_cycle = "directed_cycle"
    bidirected_path = "bidirected_path"
    bidirected_star = "bidirected_star"
    bidirected_cycle = "bidirected_cycle"
    bidirected_complete = "bidirected_complete"
    kn_orientation = "kn_orientation"
    circulant = "circulant"
    pn_star = "pn_star"
    pn_plus = "pn_plus"
    fixture_fig1 = "fixture_fig1"
    fixture_t1 = "fixture_t1"
    fixture_t2 = "fixture_t2"
    fixture_fig3 = "fixture_fig3"
    fixture_fig3_left = "fixture_fig3_left"

    @property
    def is_fixture(self) -> bool:
        return self.value.startswith("fixture_")


class FamilySpec(BaseModel):
    """A family name, an order and the family-specific parameters.

    ``n`` is ignored for fixtures, whose order is fixed by the figure.
    """

    family: Family
    n: Optional[int] = None
    connection_set: Optional[List[int]] = None
    """Steps of a circulant."""

    direction: str = "forward"
    """Closing-arc direction of ``pn_star``."""

    @field_validator("family", mode="before")
    @classmethod
    def _normalize(cls, value):
        if isinstance(value, str):
            return value.replace("-", "_")
        return value

    def build(self) -> Digraph:
        return generate(self)


def generate(spec: FamilySpec) -> Digraph:
    family = spec.family
    if family.is_fixture:
        return fixture(family.value[len("fixture_"):])
    if spec.n is None:
        raise InvalidFamilyParameterError(f"Family {family.value} needs an order n")
    n = spec.n
    if family is Family.directed_cycle:
        return gen_directed_cycle(n)
    if family.value.startswith("bidirected_"):
        return gen_bidirected_family(family.value[len("bidirected_"):], n)
    if family is Family.kn_orientation:
        return gen_kn_orientation(n)
    if family is Family.circulant:
        if not spec.connection_set:
            raise InvalidFamilyParameterError("circulant needs a connection set")
        return gen_circulant(n, spec.connection_set)
    if family is Family.pn_star:
        return gen_pn_star(n, spec.direction)
    return gen_pn_plus(n)


def all_families(n: int) -> List[FamilySpec]:
    """One spec per non-fixture family at order ``n >= 3``."""
    specs = []
    for family in Family:
        if family.is_fixture:
            continue
        if family is Family.circulant:
            specs.append(
                FamilySpec(family=family, n=n, connection_set=list(range(1, n // 2 + 1)))
            )
        elif family is Family.pn_star:
            specs.append(FamilySpec(family=family, n=n, direction="forward"))
            specs.append(FamilySpec(family=family, n=n, direction="backward"))
        else:
            specs.append(FamilySpec(family=family, n=n))
    return specs
