"""Finite diagonal actions on projective space.

An fwps is the quotient of its weighted projective cover by the deck group,
and a weighted projective space is itself a quotient of ``P^n`` by a product
of cyclic groups. In dimension 2 with cover ``P^2`` the deck group is cyclic
of order ``r`` and, after renaming the generator and the coordinates, acts as
``(z0 : e^(a+1) z1 : e^a z2)``; the pair ``(r, a)`` classifies the surface.

An action ``x_i -> e^(k_i) x_i`` of ``Z/r`` corresponds to the lattice
extension ``Z^(n+1) + Z * k / r``, which is why actions are also built from
and converted to extension numerators here.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import (
    ActionError,
    CoverNotP2Error,
    DegenerateExtensionError,
    DimensionMismatchError,
    InvalidModulusError,
    NonCyclicDeckGroupError,
    NotFreeInCodim1Error,
    NotPrimitiveRayError,
)
from .intlat import (
    IntMatrix,
    Vector,
    extended_gcd,
    gcd_vector,
    invariants_from_snf,
    smith_normal_form,
)
from .pi11 import universal_cover
from .toric import FwpsFan, WeightVector, validate_fwps

logger = logging.getLogger(__name__)

__all__ = [
    "DiagonalAction",
    "P2ActionNormalForm",
    "ProductQuotientPresentation",
    "action_from_extension",
    "classify_p2_quotient",
    "cyclic_deck_action",
    "extension_from_action",
    "fwps_from_p2_action",
    "normal_form_from_pair",
    "normalize_p2_action",
    "p2_parameters",
    "same_extension",
    "wps_as_pn_quotient",
]


def _require_modulus(r: int) -> int:
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise InvalidModulusError(f"the group order must be a positive integer, got {r!r}")
    return r


class DiagonalAction(BaseModel):
    """``Z/r`` acting by ``x_i -> e^(exponents[i]) x_i``; exponents kept as residues mod ``r``."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    r: int = Field(..., ge=1)
    exponents: tuple[int, ...] = Field(..., min_length=1)

    @model_validator(mode="before")
    @classmethod
    def _reduce_exponents(cls, data: object) -> object:
        if not isinstance(data, dict):
            return data
        r, exponents = data.get("r"), data.get("exponents")
        if isinstance(r, int) and not isinstance(r, bool) and r >= 1 and exponents is not None:
            data = {**data, "exponents": tuple(int(value) % r for value in exponents)}
        return data


class P2ActionNormalForm(BaseModel):
    """The action ``(z0 : e^(a+1) z1 : e^a z2)`` of ``Z/r`` on ``P^2``."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    r: int = Field(..., ge=1)
    a: int

    @model_validator(mode="after")
    def _validate_parameter(self) -> "P2ActionNormalForm":
        if self.r == 1:
            if self.a != 1:
                raise ValueError("the trivial action is recorded with a = 1")
            return self
        if not 0 <= self.a < self.r:
            raise ValueError(f"a must be a residue modulo {self.r}")
        if math.gcd(self.a, self.r) != 1 or math.gcd(self.a + 1, self.r) != 1:
            raise ValueError(f"a and a + 1 must be units modulo {self.r}")
        return self

    @property
    def exponents(self) -> Vector:
        return (0, (self.a + 1) % self.r, self.a % self.r)

    def as_action(self) -> DiagonalAction:
        return DiagonalAction(r=self.r, exponents=self.exponents)


class ProductQuotientPresentation(BaseModel):
    """``P(a) = P^n / (Z/a_0 x ... x Z/a_n)`` with factor ``i`` scaling coordinate ``i``."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    group_orders: tuple[int, ...] = Field(..., min_length=2)

    @model_validator(mode="after")
    def _validate_orders(self) -> "ProductQuotientPresentation":
        if any(order < 1 for order in self.group_orders):
            raise ValueError("group orders must be positive")
        return self

    @property
    def order(self) -> int:
        return math.prod(self.group_orders)

    def generator_actions(self) -> list[DiagonalAction]:
        size = len(self.group_orders)
        return [
            DiagonalAction(r=order, exponents=tuple(int(j == i) for j in range(size)))
            for i, order in enumerate(self.group_orders)
        ]

    def describe(self) -> str:
        factors = [f"Z/{order}" for order in self.group_orders if order > 1]
        return " x ".join(factors) if factors else "trivial"


def wps_as_pn_quotient(weights: WeightVector | Sequence[int]) -> ProductQuotientPresentation:
    if not isinstance(weights, WeightVector):
        weights = WeightVector.normalized(weights)
    return ProductQuotientPresentation(group_orders=weights.weights)


def action_from_extension(r: int, numerators: Sequence[int]) -> DiagonalAction:
    """Action of ``Z/r`` for the extension ``Z^(n+1) + Z * numerators / r``."""

    _require_modulus(r)
    values = tuple(int(value) for value in numerators)
    if not values:
        raise ActionError("an extension needs at least one numerator")
    if math.gcd(*values, r) != 1:
        raise DegenerateExtensionError(
            f"numerators {list(values)} share a factor with {r}; the extension has lower order"
        )
    return DiagonalAction(r=r, exponents=values)


def extension_from_action(action: DiagonalAction) -> tuple[int, Vector]:
    if math.gcd(*action.exponents, action.r) != 1:
        raise DegenerateExtensionError(
            f"action exponents {list(action.exponents)} do not generate Z/{action.r}"
        )
    return action.r, action.exponents


def _is_multiple(target: Sequence[int], source: Sequence[int], r: int) -> bool:
    return any(
        all((k * s - t) % r == 0 for s, t in zip(source, target)) for k in range(r)
    )


def same_extension(r: int, first: Sequence[int], second: Sequence[int]) -> bool:
    """Whether ``first / r`` and ``second / r`` extend ``Z^(n+1)`` to the same lattice."""

    _require_modulus(r)
    if len(first) != len(second):
        raise DimensionMismatchError("numerator vectors must have the same length")
    return _is_multiple(first, second, r) and _is_multiple(second, first, r)


def normalize_p2_action(r: int, exponents: Sequence[int]) -> P2ActionNormalForm:
    """Normal form of a ``Z/r`` action on ``P^2`` free in codimension 1.

    Multiplying the exponents by a unit ``m`` (a new generator) and adding a
    shift ``c`` (rescaling homogeneous coordinates) must send them to
    ``(0, a+1, a)``. Comparing the last two entries forces
    ``m = (e1 - e2)^-1``, and then ``c = -m * e0``, so the normal form is
    unique and no tie-break is needed.
    """

    _require_modulus(r)
    values = tuple(int(value) for value in exponents)
    if len(values) != 3:
        raise DimensionMismatchError(f"an action on P^2 has three exponents, got {len(values)}")
    if r == 1:
        return P2ActionNormalForm(r=1, a=1)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if math.gcd(values[i] - values[j], r) != 1:
            raise NotFreeInCodim1Error(
                f"exponents {i} and {j} differ by a non-unit modulo {r}; "
                "the action has fixed curves",
                {"pair": [i, j]},
            )
    e0, e1, e2 = values
    unit = pow(e1 - e2, -1, r)
    return P2ActionNormalForm(r=r, a=unit * (e2 - e0) % r)


def normal_form_from_pair(r: int, b: int, c: int) -> P2ActionNormalForm:
    """Normal form of ``(x0 : x1 : x2) -> (e^b x0 : e^c x1 : x2)``: ``a * c = -b`` mod ``r``."""

    _require_modulus(r)
    if r == 1:
        return P2ActionNormalForm(r=1, a=1)
    for value in (b, c, b - c):
        if math.gcd(value, r) != 1:
            raise NotFreeInCodim1Error(f"b, c and b - c must be units modulo {r}")
    return P2ActionNormalForm(r=r, a=-b * pow(c, -1, r) % r)


def p2_parameters(r: int) -> list[int]:
    """All normal-form parameters ``a`` for modulus ``r``, increasing."""

    _require_modulus(r)
    if r == 1:
        return [1]
    return [a for a in range(r) if math.gcd(a, r) == 1 and math.gcd(a + 1, r) == 1]


def fwps_from_p2_action(normal_form: P2ActionNormalForm) -> FwpsFan:
    """Fan with rays ``(1, 0), (a, r), (-1 - a, -r)`` realising ``P^2`` modulo the action."""

    r, a = normal_form.r, normal_form.a
    rays = [(1, 0), (a, r), (-1 - a, -r)]
    for index, ray in enumerate(rays):
        if gcd_vector(ray) != 1:
            raise NotPrimitiveRayError(f"ray {list(ray)} is not primitive", {"index": index})
    return validate_fwps(rays)


def classify_p2_quotient(fan: FwpsFan) -> P2ActionNormalForm:
    """Recognise a surface fwps covered by ``P^2`` as ``P^2`` modulo a normal-form action.

    A unimodular change of basis sends the first ray to ``(1, 0)``; a
    reflection makes the second coordinate of the second ray positive, which
    is then ``r``, and its first coordinate read modulo ``r`` is ``a``.
    """

    if fan.dim != 2:
        raise DimensionMismatchError(f"classification needs a surface, got dimension {fan.dim}")
    cover = universal_cover(fan)
    if cover.cover_weights.weights != (1, 1, 1):
        raise CoverNotP2Error(
            f"the cover has weights {list(cover.cover_weights.weights)}, not (1, 1, 1)",
            {"weights": list(cover.cover_weights.weights)},
        )
    (p, q), second = fan.rays[0].vector, fan.rays[1].vector
    _, x, y = extended_gcd(p, q)
    transform = IntMatrix.from_rows([(x, y), (-q, p)])
    shift, height = transform.apply(second)
    r = abs(height)
    logger.debug("second ray moves to (%d, %d); deck group order %d", shift, height, r)
    if r == 1:
        return P2ActionNormalForm(r=1, a=1)
    return P2ActionNormalForm(r=r, a=shift % r)


def cyclic_deck_action(fan: FwpsFan) -> DiagonalAction:
    """Deck group action on the homogeneous coordinates of the cover, when it is cyclic.

    With ``U @ M @ V = D`` for the ray matrix ``M`` and invariant factors
    ``(1, ..., 1, r)``, the last SNF coordinate generates ``N / N'`` and ``r``
    times it equals ``M`` applied to the matching column of ``V``; that
    column, read modulo ``r``, gives the exponents.
    """

    snf = smith_normal_form(fan.ray_matrix())
    deck_group = invariants_from_snf(snf, fan.dim)
    if not deck_group.is_cyclic:
        raise NonCyclicDeckGroupError(
            f"the deck group {deck_group.describe()} is not cyclic",
            {"torsion": list(deck_group.torsion)},
        )
    if deck_group.is_trivial:
        return DiagonalAction(r=1, exponents=(0,) * len(fan.rays))
    return DiagonalAction(r=deck_group.torsion[0], exponents=snf.right.column(fan.dim - 1))
