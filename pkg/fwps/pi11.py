"""Fundamental group in codimension 1 and universal covers of fwps.

For a toric variety with fan in ``N``, pi_1 in codimension 1 is ``N / N'``
where ``N'`` is the sublattice generated by the rays. The same fan read in
``N'`` is a weighted projective space with the same weights, and the
covering map is the identity on ray lists.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .intlat import (
    AbelianGroupInvariants,
    IntMatrix,
    column_span_basis,
    quotient_invariants,
)
from .toric import Fan, FwpsFan, WeightVector

logger = logging.getLogger(__name__)

__all__ = ["CoverDescription", "is_wps", "pi11_of_fan", "universal_cover"]


@dataclass(frozen=True)
class CoverDescription:
    cover_weights: WeightVector
    deck_group: AbelianGroupInvariants
    sublattice_basis: IntMatrix
    index: int


def pi11_of_fan(fan: Fan) -> AbelianGroupInvariants:
    """Invariants of ``Z^dim`` modulo the ray span. Maximal cones are ignored."""

    matrix = fan.ray_matrix()
    if matrix is None:
        return AbelianGroupInvariants(free_rank=fan.dim)
    return quotient_invariants(matrix)


def is_wps(fan: Fan) -> bool:
    return pi11_of_fan(fan).is_trivial


def universal_cover(fan: FwpsFan) -> CoverDescription:
    matrix = fan.ray_matrix()
    deck_group = quotient_invariants(matrix)
    basis = column_span_basis(matrix)
    # fwps rays span, so the deck group is finite and the basis exists
    index = deck_group.order
    logger.debug("universal cover of %s: deck group %s", fan.ray_vectors, deck_group.describe())
    return CoverDescription(
        cover_weights=fan.weights,
        deck_group=deck_group,
        sublattice_basis=basis,
        index=int(index),
    )
