"""Report builders behind the ``fwps`` command line.

Each function takes already-parsed input, runs the library operations and
returns a payload model; parsing and output formatting stay in :mod:`fwps.cli`.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from .errors import ActionError, CoverNotP2Error, InvalidModulusError, NonCyclicDeckGroupError
from .intlat import check_width
from .pi11 import is_wps, pi11_of_fan, universal_cover
from .quotients import (
    P2ActionNormalForm,
    classify_p2_quotient,
    cyclic_deck_action,
    fwps_from_p2_action,
    normalize_p2_action,
    p2_parameters,
    wps_as_pn_quotient,
)
from .report_model import (
    ActionReport,
    AnalysisReport,
    CoverReport,
    EnumerationRecord,
    FanPayload,
    FromWeightsReport,
    GroupReport,
    NormalFormReport,
    P2Classification,
    P2ClassificationSkipped,
    PnQuotientReport,
)
from .toric import FwpsFan, fan_from_weights, is_well_formed, picard_rank, validate_fwps

logger = logging.getLogger(__name__)

__all__ = [
    "analyze_fan",
    "analyze_rays",
    "enumerate_p2_quotients",
    "from_weights",
    "normalize_action",
]


def _p2_classification(fan: FwpsFan) -> P2Classification | P2ClassificationSkipped:
    if fan.dim != 2:
        return P2ClassificationSkipped(reason=f"classification needs dimension 2, got {fan.dim}")
    try:
        normal_form = classify_p2_quotient(fan)
    except CoverNotP2Error as error:
        return P2ClassificationSkipped(reason=error.message)
    return P2Classification(r=normal_form.r, a=normal_form.a)


def analyze_fan(fan: FwpsFan) -> AnalysisReport:
    cover = universal_cover(fan)
    try:
        deck_action = ActionReport.from_action(cyclic_deck_action(fan))
    except NonCyclicDeckGroupError:
        deck_action = None
    return AnalysisReport(
        dim=fan.dim,
        rays=[list(vector) for vector in fan.ray_vectors],
        weights=list(fan.weights.weights),
        well_formed=is_well_formed(fan.weights),
        max_cones=[list(cone) for cone in fan.max_cones],
        pi11=GroupReport.from_invariants(pi11_of_fan(fan)),
        is_wps=is_wps(fan),
        cover=CoverReport(
            weights=list(cover.cover_weights.weights),
            deck_group=GroupReport.from_invariants(cover.deck_group),
            index=cover.index,
            sublattice_basis=cover.sublattice_basis.tolist(),
        ),
        picard_rank=picard_rank(fan),
        deck_action=deck_action,
        pn_quotient=PnQuotientReport.from_presentation(wps_as_pn_quotient(cover.cover_weights)),
        p2_classification=_p2_classification(fan),
    )


def analyze_rays(rays: Sequence[Sequence[int]]) -> AnalysisReport:
    return analyze_fan(validate_fwps(rays))


def from_weights(weights: Sequence[int]) -> FromWeightsReport:
    fan = fan_from_weights(weights)
    return FromWeightsReport(
        fan=FanPayload(rays=[list(vector) for vector in fan.ray_vectors]),
        analysis=analyze_fan(fan),
    )


def normalize_action(r: int, exponents: Sequence[int]) -> NormalFormReport:
    check_width([r, *exponents], context="action")
    normal_form = normalize_p2_action(r, exponents)
    return NormalFormReport(r=normal_form.r, a=normal_form.a)


def _enumeration_record(parameters: tuple[int, int]) -> EnumerationRecord:
    r, a = parameters
    normal_form = P2ActionNormalForm(r=r, a=a)
    fan = fwps_from_p2_action(normal_form)
    recovered = classify_p2_quotient(fan)
    if recovered != normal_form:
        raise ActionError(
            f"classification of ({r}, {a}) returned ({recovered.r}, {recovered.a})",
            {"r": r, "a": a},
        )
    return EnumerationRecord(
        r=r,
        a=a,
        rays=[list(vector) for vector in fan.ray_vectors],
        index=universal_cover(fan).index,
    )


def enumerate_p2_quotients(max_r: int) -> list[EnumerationRecord]:
    """Every normal form with ``r <= max_r``, ordered by ``(r, a)`` and round-trip checked."""

    if isinstance(max_r, bool) or not isinstance(max_r, int) or max_r < 1:
        raise InvalidModulusError(f"max_r must be a positive integer, got {max_r!r}")
    parameters = [(r, a) for r in range(1, max_r + 1) for a in p2_parameters(r)]
    logger.debug("enumerating %d normal forms up to r = %d", len(parameters), max_r)
    return [_enumeration_record(pair) for pair in parameters]
