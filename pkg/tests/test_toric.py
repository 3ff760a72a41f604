from __future__ import annotations

import pytest

from fwps.errors import (
    DimensionMismatchError,
    InvalidWeightsError,
    NoPositiveRelationError,
    NotPrimitiveError,
    NotSpanningError,
    UnderflowError,
    WrongCountError,
)
from fwps.intlat import sublattice_index
from fwps.toric import (
    Fan,
    FwpsFan,
    Ray,
    WeightVector,
    fan_from_weights,
    implied_cones,
    is_well_formed,
    picard_rank,
    validate_fwps,
    weights_from_rays,
    wellform_weights,
)


@pytest.mark.parametrize(
    ("rays", "weights"),
    [
        ([(1, 0), (0, 1), (-1, -1)], (1, 1, 1)),
        ([(1, -1), (1, 2), (-2, -1)], (1, 1, 1)),
        ([(1, 0), (0, 1), (-1, -2)], (1, 2, 1)),
        ([(1, -1), (1, 2), (-2, 1)], (5, 1, 3)),
        ([(1,), (-1,)], (1, 1)),
        ([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)], (1, 1, 1, 1)),
    ],
)
def test_validate_fwps_attaches_weights(rays, weights) -> None:
    fan = validate_fwps(rays)
    assert weights_from_rays(fan).weights == weights
    assert fan.dim == len(rays[0])
    assert fan.ray_vectors == [tuple(ray) for ray in rays]


@pytest.mark.parametrize(
    ("rays", "error", "code"),
    [
        ([], DimensionMismatchError, "DimensionMismatch"),
        ([(1, 0), (1,)], DimensionMismatchError, "DimensionMismatch"),
        ([(2, 0), (0, 1), (-1, -1)], NotPrimitiveError, "NotPrimitive"),
        ([(0, 0), (0, 1), (-1, -1)], NotPrimitiveError, "NotPrimitive"),
        ([(1, 0), (0, 1)], WrongCountError, "WrongCount"),
        ([(1, 0), (0, 1), (-1, 0), (0, -1)], WrongCountError, "WrongCount"),
        ([(1, 0), (-1, 0), (1, 0)], NotSpanningError, "NotSpanning"),
        ([(1, 0), (0, 1), (-1, 0)], NoPositiveRelationError, "NoPositiveRelation"),
        ([(1, 0), (0, 1), (1, 1)], NoPositiveRelationError, "NoPositiveRelation"),
    ],
)
def test_validate_fwps_rejects(rays, error, code) -> None:
    with pytest.raises(error) as exc:
        validate_fwps(rays)
    assert exc.value.code == code


def test_not_primitive_reports_index() -> None:
    with pytest.raises(NotPrimitiveError) as exc:
        validate_fwps([(1, 0), (0, 3), (-1, -1)])
    assert exc.value.details == {"index": 1}


def test_fwps_fan_has_implied_cones() -> None:
    fan = validate_fwps([(1, 0), (0, 1), (-1, -1)])
    assert fan.max_cones == ((1, 2), (0, 2), (0, 1))
    assert implied_cones(4) == ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2))


def test_fwps_fan_model_rejects_wrong_relation() -> None:
    with pytest.raises(ValueError):
        FwpsFan(
            dim=2,
            rays=(Ray(vector=(1, 0)), Ray(vector=(0, 1)), Ray(vector=(-1, -1))),
            weights=WeightVector(weights=(1, 2, 1)),
        )


def test_fan_model_validation() -> None:
    with pytest.raises(ValueError):
        Fan.from_vectors([(1, 0), (1, 0)])
    with pytest.raises(ValueError):
        Fan.from_vectors([(1, 0), (0, 1)], max_cones=[(0, 2)])
    with pytest.raises(ValueError):
        Ray(vector=(2, 4))
    assert Fan(dim=3).rays == ()


@pytest.mark.parametrize(
    ("weights", "rays"),
    [
        ((1, 1, 1), [(-1, -1), (1, 0), (0, 1)]),
        ((2, 2, 2), [(-1, -1), (1, 0), (0, 1)]),
        ((1, 1, 2), [(-1, -2), (1, 0), (0, 1)]),
        ((1, 2, 2), [(-1, -1), (1, 0), (0, 1)]),
        ((1, 1), [(-1,), (1,)]),
    ],
)
def test_fan_from_weights(weights, rays) -> None:
    assert fan_from_weights(weights).ray_vectors == rays


def test_fan_from_weights_accepts_weight_vector() -> None:
    fan = fan_from_weights(WeightVector(weights=(2, 3, 5)))
    assert fan.weights.weights == (2, 3, 5)
    assert sublattice_index(fan.ray_matrix()) == 1


@pytest.mark.parametrize(
    "weights",
    [(1, 1, 1), (1, 1, 2), (1, 2, 3), (2, 3, 5), (1, 1, 1, 1), (1, 1, 2, 3), (3, 4, 5, 6)],
)
def test_round_trip_for_well_formed_weights(weights) -> None:
    assert is_well_formed(weights)
    fan = fan_from_weights(weights)
    assert weights_from_rays(fan).weights == weights
    assert sublattice_index(fan.ray_matrix()) == 1


@pytest.mark.parametrize(
    ("weights", "expected"),
    [
        ((2, 2, 2), (1, 1, 1)),
        ((1, 1, 1), (1, 1, 1)),
        ((1, 2, 2), (1, 1, 1)),
        ((6, 10, 15), (1, 1, 1)),
        ((1, 2), (1, 1)),
        ((1, 1, 2), (1, 1, 2)),
        ((2, 4, 3), (1, 2, 3)),
    ],
)
def test_wellform_weights(weights, expected) -> None:
    assert wellform_weights(weights).weights == expected


@pytest.mark.parametrize("weights", [(1, 0, 2), (1, -1, 1), (3,)])
def test_wellform_rejects_invalid_weights(weights) -> None:
    with pytest.raises(InvalidWeightsError):
        wellform_weights(weights)


@pytest.mark.parametrize(
    ("weights", "expected"),
    [((1, 1, 2), True), ((1, 2, 2), False), ((6, 10, 15), False), ((1, 2), False)],
)
def test_is_well_formed(weights, expected) -> None:
    assert is_well_formed(weights) is expected


def test_picard_rank() -> None:
    assert picard_rank(validate_fwps([(1, 0), (0, 1), (-1, -1)])) == 1
    assert picard_rank(Fan.from_vectors([(1, 0), (1, 1), (0, 1), (-1, 0), (0, -1)])) == 3
    with pytest.raises(UnderflowError):
        picard_rank(Fan.from_vectors([(1, 0)]))
