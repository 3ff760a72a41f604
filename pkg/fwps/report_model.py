from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from .intlat import AbelianGroupInvariants
from .quotients import DiagonalAction, ProductQuotientPresentation


class GroupReport(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    descriptor: str = Field(..., min_length=1)
    torsion: list[int]
    free_rank: int = Field(..., ge=0)

    @classmethod
    def from_invariants(cls, group: AbelianGroupInvariants) -> "GroupReport":
        return cls(
            descriptor=group.describe(), torsion=list(group.torsion), free_rank=group.free_rank
        )


class CoverReport(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    weights: list[int]
    deck_group: GroupReport
    index: int = Field(..., ge=1)
    sublattice_basis: list[list[int]]


class ActionReport(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    r: int = Field(..., ge=1)
    exponents: list[int]

    @classmethod
    def from_action(cls, action: DiagonalAction) -> "ActionReport":
        return cls(r=action.r, exponents=list(action.exponents))


class PnQuotientReport(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    group_orders: list[int]
    order: int = Field(..., ge=1)
    descriptor: str

    @classmethod
    def from_presentation(cls, presentation: ProductQuotientPresentation) -> "PnQuotientReport":
        return cls(
            group_orders=list(presentation.group_orders),
            order=presentation.order,
            descriptor=presentation.describe(),
        )


class P2Classification(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    r: int = Field(..., ge=1)
    a: int


class P2ClassificationSkipped(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    reason: str = Field(..., min_length=1)


class AnalysisReport(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    valid: bool = True
    dim: int = Field(..., ge=1)
    rays: list[list[int]]
    weights: list[int]
    well_formed: bool
    max_cones: list[list[int]]
    pi11: GroupReport
    is_wps: bool
    cover: CoverReport
    picard_rank: int = Field(..., ge=0)
    deck_action: ActionReport | None
    pn_quotient: PnQuotientReport
    p2_classification: P2Classification | P2ClassificationSkipped


class FanPayload(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    rays: list[list[int]]


class FromWeightsReport(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    fan: FanPayload
    analysis: AnalysisReport


class NormalFormReport(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    r: int = Field(..., ge=1)
    a: int


class EnumerationRecord(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    r: int = Field(..., ge=1)
    a: int
    rays: list[list[int]]
    index: int = Field(..., ge=1)
