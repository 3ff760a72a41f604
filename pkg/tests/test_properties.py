"""Seeded randomized checks tying the elimination code to the brute-force oracles."""

from __future__ import annotations

import itertools
import math

import sympy

from fwps.errors import FanValidationError
from fwps.intlat import (
    IntMatrix,
    hermite_normal_form,
    integer_kernel,
    quotient_invariants,
    smith_normal_form,
    sublattice_index,
)
from fwps.oracle import (
    Inconclusive,
    action_equivalence_search,
    coset_enumeration,
    fletcher_wellform,
    kernel_by_elimination,
)
from fwps.pi11 import is_wps, pi11_of_fan, universal_cover
from fwps.quotients import (
    P2ActionNormalForm,
    classify_p2_quotient,
    cyclic_deck_action,
    fwps_from_p2_action,
    normal_form_from_pair,
    normalize_p2_action,
    p2_parameters,
    same_extension,
)
from fwps.toric import (
    fan_from_weights,
    is_well_formed,
    picard_rank,
    validate_fwps,
    wellform_weights,
)


def _random_fwps(rng, dim: int, bound: int = 9):
    while True:
        rays = [tuple(rng.randint(-bound, bound) for _ in range(dim)) for _ in range(dim + 1)]
        try:
            return validate_fwps(rays)
        except FanValidationError:
            continue


def _lattice(vectors):
    if not vectors:
        return []
    hnf = hermite_normal_form(IntMatrix.from_rows(vectors))
    return [row for row in hnf.entries if any(row)]


def test_triangle_with_corrected_signs() -> None:
    fan = validate_fwps([(1, -1), (1, 2), (-2, -1)])
    cover = universal_cover(fan)
    assert sublattice_index(fan.ray_matrix()) == 3
    assert pi11_of_fan(fan).describe() == "Z/3"
    assert cover.cover_weights.weights == (1, 1, 1)
    assert cover.deck_group.torsion == (3,)
    assert action_equivalence_search(3, cyclic_deck_action(fan).exponents, (0, 1, 2))


def test_triangle_with_flipped_third_ray() -> None:
    """(-2, 1) instead of (-2, -1) gives P(5, 1, 3), a weighted projective plane.

    Only the sign of the last coordinate of the third ray separates the two
    fans; the Z/3 quotient of P^2 needs (-2, -1).
    """

    fan = validate_fwps([(1, -1), (1, 2), (-2, 1)])
    assert sublattice_index(fan.ray_matrix()) == 1
    assert fan.weights.weights == (5, 1, 3)
    assert is_wps(fan)


def test_standard_fans_are_simply_connected(rng) -> None:
    for _ in range(200):
        size = rng.randint(2, 5)
        weights = [rng.randint(1, 30) for _ in range(size)]
        fan = fan_from_weights(weights)
        assert pi11_of_fan(fan).is_trivial
        assert universal_cover(fan).index == 1
        assert is_well_formed(fan.weights)


def test_random_fwps_invariants(rng) -> None:
    for trial in range(200):
        fan = _random_fwps(rng, dim=2 + trial % 2)
        weights = fan.weights.weights
        cover = universal_cover(fan)
        assert sublattice_index(fan.ray_matrix()) == cover.index == cover.deck_group.order
        assert math.gcd(*weights) == 1
        assert all(value > 0 for value in weights)
        for k in range(fan.dim):
            assert sum(w * ray[k] for w, ray in zip(weights, fan.ray_vectors)) == 0


def test_random_surfaces_have_picard_rank_one(rng) -> None:
    for _ in range(50):
        assert picard_rank(_random_fwps(rng, dim=2)) == 1


def test_wide_fans_in_higher_dimensions(rng) -> None:
    for trial in range(18):
        fan = _random_fwps(rng, dim=4 + trial % 3, bound=20)
        weights = fan.weights.weights
        cover = universal_cover(fan)
        assert sublattice_index(fan.ray_matrix()) == cover.index == cover.deck_group.order
        assert all(value > 0 for value in weights)
        for k in range(fan.dim):
            assert sum(w * ray[k] for w, ray in zip(weights, fan.ray_vectors)) == 0


def test_p2_quotients_round_trip() -> None:
    for r in range(1, 31):
        for a in p2_parameters(r):
            normal_form = P2ActionNormalForm(r=r, a=a)
            fan = fwps_from_p2_action(normal_form)
            cover = universal_cover(fan)
            assert cover.cover_weights.weights == (1, 1, 1)
            assert cover.index == r
            assert classify_p2_quotient(fan) == normal_form
            action = cyclic_deck_action(fan)
            assert normalize_p2_action(action.r, action.exponents) == normal_form


def test_deck_action_matches_classification_for_random_p2_covers(rng) -> None:
    checked = 0
    while checked < 100:
        first = (rng.randint(-9, 9), rng.randint(-9, 9))
        second = (rng.randint(-9, 9), rng.randint(-9, 9))
        third = (-first[0] - second[0], -first[1] - second[1])
        try:
            fan = validate_fwps([first, second, third])
        except FanValidationError:
            continue
        action = cyclic_deck_action(fan)
        assert normalize_p2_action(action.r, action.exponents) == classify_p2_quotient(fan)
        checked += 1


def test_substituting_a_new_root_of_unity() -> None:
    # squaring the generator turns (0, 5, 6) into (0, 10, 12) = (0, 3, 5) mod 7
    assert same_extension(7, (0, 10, 12), (0, 3, 5))
    assert same_extension(7, (0, 5, 6), (0, 3, 5))
    assert action_equivalence_search(7, (0, 3, 5), (0, 5, 6))
    assert normalize_p2_action(7, (0, 3, 5)) == normalize_p2_action(7, (0, 5, 6))


def test_pair_relation_for_every_small_modulus() -> None:
    for r in range(2, 31):
        for b, c in itertools.product(range(1, r), repeat=2):
            if math.gcd(b, r) != 1 or math.gcd(c, r) != 1 or math.gcd(b - c, r) != 1:
                continue
            normal_form = normal_form_from_pair(r, b, c)
            assert normal_form.a * c % r == -b % r
            if r <= 11:
                assert action_equivalence_search(r, (b, c, 0), normal_form.exponents)


def test_quotient_invariants_match_coset_enumeration(rng) -> None:
    compared = large_three_dimensional = 0
    for trial in range(500):
        rows = 2 if trial % 4 else 3
        count = rng.randint(rows, rows + 1)
        columns = [tuple(rng.randint(-6, 6) for _ in range(rows)) for _ in range(count)]
        generators = IntMatrix.from_columns(columns)
        expected = quotient_invariants(generators)
        observed = coset_enumeration(generators, bound=60)
        if isinstance(observed, Inconclusive):
            assert not expected.is_finite or expected.order > 60
            continue
        assert observed == expected
        compared += 1
        if rows == 3 and expected.order > 12:
            large_three_dimensional += 1
    assert compared >= 200
    assert large_three_dimensional >= 5


def test_kernels_match_rational_elimination(rng) -> None:
    for trial in range(200):
        rows, cols = (2, 3) if trial % 2 else (3, 4)
        matrix = IntMatrix.from_rows(
            [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        )
        assert _lattice(integer_kernel(matrix)) == _lattice(kernel_by_elimination(matrix))


def test_smith_normal_form_contract(rng) -> None:
    for _ in range(1000):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        matrix = IntMatrix.from_rows(
            [[rng.randint(-20, 20) for _ in range(cols)] for _ in range(rows)]
        )
        snf = smith_normal_form(matrix)
        assert snf.left @ matrix @ snf.right == snf.diagonal
        assert snf.diagonal.is_diagonal()
        assert abs(sympy.Matrix(snf.left.entries).det()) == 1
        assert abs(sympy.Matrix(snf.right.entries).det()) == 1
        factors = [value for value in snf.invariant_factors if value]
        assert list(snf.invariant_factors[: len(factors)]) == factors
        assert all(value > 0 for value in factors)
        assert all(later % earlier == 0 for earlier, later in zip(factors, factors[1:]))
        assert len(factors) == snf.rank == sympy.Matrix(matrix.entries).rank()
        if factors:
            assert factors[0] == math.gcd(*(value for row in matrix.entries for value in row))
        if rows == cols == len(factors):
            assert math.prod(factors) == abs(sympy.Matrix(matrix.entries).det())


def test_fletcher_agrees_with_standard_fan() -> None:
    for weights in itertools.product(range(1, 21), repeat=3):
        if weights[0] > weights[1] or weights[1] > weights[2]:
            continue
        assert fletcher_wellform(weights) == wellform_weights(weights)
