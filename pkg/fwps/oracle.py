"""Brute-force verifiers for the lattice and action computations.

Nothing here uses the elimination code in ``intlat``: indices come from sympy
determinants, kernels from sympy's rational nullspace, and groups from
explicit enumeration of cosets. Only the shared value types are imported.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import sympy

from .config import get_settings
from .errors import InvalidWeightsError
from .intlat import AbelianGroupInvariants, IntMatrix, Vector
from .toric import WeightVector

logger = logging.getLogger(__name__)

MAX_COSET_RANK = 3

__all__ = [
    "Inconclusive",
    "action_equivalence_search",
    "coset_enumeration",
    "fletcher_wellform",
    "kernel_by_elimination",
]


@dataclass(frozen=True)
class Inconclusive:
    reason: str


def _maximal_minor_gcd(columns: Sequence[Sequence[int]], size: int) -> int:
    """gcd of the ``size x size`` minors of the matrix with the given columns."""

    if len(columns) < size:
        return 0
    result = 0
    for subset in itertools.combinations(columns, size):
        result = math.gcd(result, int(sympy.Matrix(subset).det()))
    return result


def _closure(generators: Sequence[Vector], modulus: int, rank: int) -> frozenset[Vector]:
    zero = (0,) * rank
    seen = {zero}
    frontier = [zero]
    while frontier:
        discovered = []
        for element in frontier:
            for generator in generators:
                candidate = tuple((a + b) % modulus for a, b in zip(element, generator))
                if candidate not in seen:
                    seen.add(candidate)
                    discovered.append(candidate)
        frontier = discovered
    return frozenset(seen)


def _coset_representatives(subgroup: frozenset[Vector], modulus: int, rank: int) -> list[Vector]:
    labelled: set[Vector] = set()
    representatives = []
    for point in itertools.product(range(modulus), repeat=rank):
        if point in labelled:
            continue
        representatives.append(point)
        for member in subgroup:
            labelled.add(tuple((a + b) % modulus for a, b in zip(point, member)))
    return representatives


def _invariant_chains(total: int, previous: int, slots: int) -> Iterator[tuple[int, ...]]:
    if total == 1:
        yield ()
        return
    if slots == 0:
        return
    for divisor in sympy.divisors(total):
        if divisor >= 2 and divisor % previous == 0:
            for rest in _invariant_chains(total // divisor, divisor, slots - 1):
                yield (divisor, *rest)


def coset_enumeration(
    generators: IntMatrix, bound: int | None = None
) -> AbelianGroupInvariants | Inconclusive:
    """Identify ``Z^n`` modulo the column span by listing its cosets.

    The index ``h`` is the gcd of maximal minors. Every coset meets
    ``{0..h-1}^n``, so the group is read off from ``(Z/h)^n`` modulo the image
    of the generators, and its invariant factors are the unique divisor chain
    whose ``d``-torsion counts match the enumerated ones for every ``d | h``.
    """

    if bound is None:
        bound = get_settings().coset_bound
    rank = generators.rows
    if rank > MAX_COSET_RANK:
        return Inconclusive(f"ambient rank {rank} exceeds {MAX_COSET_RANK}")
    columns = generators.columns()
    index = _maximal_minor_gcd(columns, rank)
    if index == 0:
        return Inconclusive("the generators do not span a full-rank sublattice")
    if index > bound:
        return Inconclusive(f"index {index} exceeds the enumeration bound {bound}")

    subgroup = _closure([tuple(x % index for x in column) for column in columns], index, rank)
    cosets = _coset_representatives(subgroup, index, rank)
    if len(cosets) != index:
        raise RuntimeError(f"enumerated {len(cosets)} cosets for a sublattice of index {index}")
    torsion_counts = {
        d: sum(1 for point in cosets if tuple(d * x % index for x in point) in subgroup)
        for d in sympy.divisors(index)
    }
    for chain in _invariant_chains(index, 1, rank):
        expected = {d: math.prod(math.gcd(d, t) for t in chain) for d in torsion_counts}
        if expected == torsion_counts:
            logger.debug("coset enumeration: index %d, invariant factors %s", index, chain)
            return AbelianGroupInvariants(torsion=chain)
    raise RuntimeError(f"no abelian group of order {index} matches the enumerated cosets")


def _find_relation(basis: Sequence[Vector], prime: int) -> tuple[int, ...]:
    for combination in itertools.product(range(prime), repeat=len(basis)):
        if not any(combination):
            continue
        residues = (
            sum(c * vector[t] for c, vector in zip(combination, basis)) % prime
            for t in range(len(basis[0]))
        )
        if not any(residues):
            lead = next(c for c in combination if c)
            inverse = pow(lead, -1, prime)
            return tuple(c * inverse % prime for c in combination)
    raise RuntimeError(f"no relation modulo {prime} although {prime} divides the index")


def _saturate(basis: list[Vector]) -> list[Vector]:
    """Enlarge ``basis`` to a basis of its saturation, one prime at a time."""

    while basis:
        index = _maximal_minor_gcd(list(zip(*basis)), len(basis))
        if index == 1:
            break
        prime = min(sympy.primefactors(index))
        combination = _find_relation(basis, prime)
        position = combination.index(1)
        enlarged = tuple(
            sum(c * vector[t] for c, vector in zip(combination, basis)) // prime
            for t in range(len(basis[0]))
        )
        basis = [*basis[:position], enlarged, *basis[position + 1 :]]
    return basis


def _sign_normalized(vector: Vector) -> Vector:
    lead = next(value for value in vector if value)
    return vector if lead > 0 else tuple(-value for value in vector)


def kernel_by_elimination(matrix: IntMatrix) -> list[Vector]:
    """Integer kernel from the exact rational nullspace, saturated to the full lattice."""

    basis = []
    for vector in sympy.Matrix(matrix.entries).nullspace():
        scale = math.lcm(*(int(sympy.Rational(entry).q) for entry in vector))
        integral = tuple(int(entry * scale) for entry in vector)
        divisor = math.gcd(*integral)
        basis.append(tuple(value // divisor for value in integral))
    return sorted(_sign_normalized(vector) for vector in _saturate(basis))


def action_equivalence_search(r: int, first: Sequence[int], second: Sequence[int]) -> bool:
    """Whether ``m * first + c`` is a permutation of ``second`` modulo ``r`` for a unit ``m``."""

    if len(first) != len(second):
        return False
    targets = {tuple(x % r for x in perm) for perm in itertools.permutations(second)}
    for unit in (m for m in range(r) if math.gcd(m, r) == 1):
        for shift in range(r):
            if tuple((unit * x + shift) % r for x in first) in targets:
                return True
    return False


def fletcher_wellform(values: Sequence[int]) -> WeightVector:
    """Reduce weights to well-formed ones by repeatedly dividing out common factors."""

    current = [int(value) for value in values]
    if len(current) < 2 or any(value <= 0 for value in current):
        raise InvalidWeightsError(f"weights must be at least two positive integers: {current}")
    divisor = math.gcd(*current)
    current = [value // divisor for value in current]
    changed = True
    while changed:
        changed = False
        for i in range(len(current)):
            common = math.gcd(*(value for j, value in enumerate(current) if j != i))
            if common > 1 and math.gcd(common, current[i]) == 1:
                current = [value if j == i else value // common for j, value in enumerate(current)]
                changed = True
    return WeightVector(weights=tuple(current))
