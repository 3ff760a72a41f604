"""Rays, fans and the fake weighted projective space shape.

A fake weighted projective space of dimension ``n`` is given by ``n + 1``
primitive rays spanning ``R^n`` with a strictly positive linear relation
``sum(a_i * v_i) = 0``; the primitive such ``a`` are its weights.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import (
    DimensionMismatchError,
    InvalidWeightsError,
    NoPositiveRelationError,
    NotPrimitiveError,
    NotSpanningError,
    UnderflowError,
    WrongCountError,
)
from .intlat import IntMatrix, Vector, gcd_vector, kernel_from_snf, primitivize, smith_normal_form

logger = logging.getLogger(__name__)

__all__ = [
    "Fan",
    "FwpsFan",
    "Ray",
    "WeightVector",
    "fan_from_weights",
    "implied_cones",
    "is_well_formed",
    "picard_rank",
    "validate_fwps",
    "weights_from_rays",
    "wellform_weights",
]


class Ray(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    vector: tuple[int, ...] = Field(..., min_length=1)

    @model_validator(mode="after")
    def _validate_primitive(self) -> "Ray":
        if gcd_vector(self.vector) != 1:
            raise ValueError(f"ray {list(self.vector)} is not primitive")
        return self

    @property
    def dim(self) -> int:
        return len(self.vector)


def implied_cones(ray_count: int) -> tuple[tuple[int, ...], ...]:
    """Maximal cones of an fwps fan: every set of rays omitting exactly one."""

    return tuple(
        tuple(j for j in range(ray_count) if j != omitted) for omitted in range(ray_count)
    )


class Fan(BaseModel):
    """Ordered rays in ``Z^dim`` with optional maximal cones given as ray indices."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    dim: int = Field(..., ge=1)
    rays: tuple[Ray, ...] = ()
    max_cones: tuple[tuple[int, ...], ...] | None = None

    @model_validator(mode="after")
    def _validate_rays(self) -> "Fan":
        vectors = self.ray_vectors
        if any(len(vector) != self.dim for vector in vectors):
            raise ValueError(f"every ray must have length {self.dim}")
        if len(set(vectors)) != len(vectors):
            raise ValueError("rays must be distinct")
        for cone in self.max_cones or ():
            if any(index < 0 or index >= len(vectors) for index in cone):
                raise ValueError(f"cone {list(cone)} refers to a missing ray")
        return self

    @classmethod
    def from_vectors(
        cls,
        vectors: Sequence[Sequence[int]],
        *,
        dim: int | None = None,
        max_cones: Sequence[Sequence[int]] | None = None,
    ) -> "Fan":
        if dim is None:
            if not vectors:
                raise DimensionMismatchError("dimension is required for a fan without rays")
            dim = len(vectors[0])
        cones = None if max_cones is None else tuple(tuple(cone) for cone in max_cones)
        return cls(
            dim=dim, rays=tuple(Ray(vector=tuple(vector)) for vector in vectors), max_cones=cones
        )

    @property
    def ray_vectors(self) -> list[Vector]:
        return [ray.vector for ray in self.rays]

    def ray_matrix(self) -> IntMatrix | None:
        """Rays as the columns of a ``dim x len(rays)`` matrix; ``None`` without rays."""

        if not self.rays:
            return None
        return IntMatrix.from_columns(self.ray_vectors)


class WeightVector(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    weights: tuple[int, ...] = Field(..., min_length=2)

    @model_validator(mode="after")
    def _validate_weights(self) -> "WeightVector":
        if any(value < 1 for value in self.weights):
            raise ValueError("weights must be positive")
        if math.gcd(*self.weights) != 1:
            raise ValueError("weights must have gcd 1")
        return self

    @classmethod
    def normalized(cls, values: Sequence[int]) -> "WeightVector":
        """Build a weight vector from any positive integers, dividing out their gcd."""

        values = tuple(values)
        if len(values) < 2:
            raise InvalidWeightsError(f"need at least two weights, got {list(values)}")
        if any(isinstance(value, bool) or not isinstance(value, int) for value in values):
            raise TypeError("weights must be integers")
        if any(value <= 0 for value in values):
            raise InvalidWeightsError(f"weights must be positive, got {list(values)}")
        divisor = math.gcd(*values)
        return cls(weights=tuple(value // divisor for value in values))

    @property
    def dim(self) -> int:
        return len(self.weights) - 1


class FwpsFan(Fan):
    """Fan of a fake weighted projective space; cones are always the implied ones."""

    weights: WeightVector

    @model_validator(mode="before")
    @classmethod
    def _default_cones(cls, data: object) -> object:
        if isinstance(data, dict) and data.get("max_cones") is None:
            data = {**data, "max_cones": implied_cones(len(data.get("rays", ())))}
        return data

    @model_validator(mode="after")
    def _validate_fwps_shape(self) -> "FwpsFan":
        if len(self.rays) != self.dim + 1:
            raise ValueError(f"an fwps fan of dimension {self.dim} has {self.dim + 1} rays")
        if len(self.weights.weights) != len(self.rays):
            raise ValueError("one weight per ray is required")
        if self.max_cones != implied_cones(len(self.rays)):
            raise ValueError("fwps maximal cones are determined by the rays")
        for k in range(self.dim):
            if sum(w * ray.vector[k] for w, ray in zip(self.weights.weights, self.rays)):
                raise ValueError("weights must be a relation among the rays")
        return self


def validate_fwps(rays: Sequence[Sequence[int]]) -> FwpsFan:
    """Check that ``rays`` define a fake weighted projective space and attach its weights.

    Checks run in order: consistent dimension, primitivity of each ray, ray
    count, spanning, and a strictly positive relation.
    """

    vectors = [tuple(ray) for ray in rays]
    if not vectors or not vectors[0]:
        raise DimensionMismatchError("need at least one ray of positive dimension")
    dim = len(vectors[0])
    if any(len(vector) != dim for vector in vectors):
        raise DimensionMismatchError(f"all rays must have dimension {dim}")
    matrix = IntMatrix.from_columns(vectors)
    columns = matrix.columns()
    for index, vector in enumerate(columns):
        if gcd_vector(vector) != 1:
            raise NotPrimitiveError.for_ray(index, vector)
    if len(columns) != dim + 1:
        raise WrongCountError(
            f"expected {dim + 1} rays in dimension {dim}, got {len(columns)}",
            {"expected": dim + 1, "actual": len(columns)},
        )
    snf = smith_normal_form(matrix)
    if snf.rank < dim:
        raise NotSpanningError(f"rays span a space of rank {snf.rank} < {dim}")
    (relation,) = kernel_from_snf(snf)
    if any(value <= 0 for value in relation):
        raise NoPositiveRelationError(
            f"the relation {list(relation)} among the rays is not strictly positive"
        )
    logger.debug("fwps fan %s has weights %s", columns, relation)
    return FwpsFan(
        dim=dim,
        rays=tuple(Ray(vector=vector) for vector in columns),
        weights=WeightVector(weights=relation),
    )


def weights_from_rays(fan: FwpsFan) -> WeightVector:
    return fan.weights


def fan_from_weights(weights: WeightVector | Sequence[int]) -> FwpsFan:
    """Standard fwps fan with weights ``weights`` whose rays generate ``Z^n``.

    A unimodular ``W`` with ``W @ a = e_0`` comes from the Smith normal form
    of ``a`` as a column; the rays are the columns of ``W`` with its first row
    removed, made primitive.
    """

    if not isinstance(weights, WeightVector):
        weights = WeightVector.normalized(weights)
    size = len(weights.weights)
    snf = smith_normal_form(IntMatrix.from_columns([weights.weights]))
    sign = snf.right.entries[0][0]
    transform = [[sign * value for value in row] for row in snf.left.entries]
    rays = [primitivize([transform[r][i] for r in range(1, size)]) for i in range(size)]
    return validate_fwps(rays)


def wellform_weights(values: Sequence[int]) -> WeightVector:
    """Weights of the well-formed weighted projective space isomorphic to ``P(values)``."""

    return weights_from_rays(fan_from_weights(WeightVector.normalized(values)))


def is_well_formed(weights: WeightVector | Sequence[int]) -> bool:
    values = weights.weights if isinstance(weights, WeightVector) else tuple(weights)
    return all(
        math.gcd(*(value for j, value in enumerate(values) if j != i)) == 1
        for i in range(len(values))
    )


def picard_rank(fan: Fan) -> int:
    """Rank of the Picard group of a complete simplicial toric variety: rays minus dimension."""

    if len(fan.rays) < fan.dim:
        raise UnderflowError(f"{len(fan.rays)} rays cannot span dimension {fan.dim}")
    return len(fan.rays) - fan.dim
