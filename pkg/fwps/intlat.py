"""Exact integer linear algebra.

Matrices are stored as tuples of Python integers and converted to numpy
``dtype=object`` arrays for elimination, so arithmetic never wraps. The signed
width configured in ``config.yaml`` (``arithmetic_bits``) is enforced on every
entry and intermediate instead; leaving it raises :class:`LatticeOverflowError`.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .config import get_settings
from .errors import LatticeError, LatticeOverflowError, ZeroVectorError

logger = logging.getLogger(__name__)

Vector = tuple[int, ...]

INFINITE_INDEX = math.inf

__all__ = [
    "INFINITE_INDEX",
    "AbelianGroupInvariants",
    "IntMatrix",
    "SnfDecomposition",
    "Vector",
    "check_width",
    "column_span_basis",
    "extended_gcd",
    "gcd_vector",
    "hermite_normal_form",
    "integer_kernel",
    "invariants_from_snf",
    "kernel_from_snf",
    "matrix_rank",
    "primitivize",
    "quotient_invariants",
    "smith_normal_form",
    "sublattice_index",
]


def _as_int(value: Any) -> int:
    if isinstance(value, bool):
        raise TypeError("lattice entries must be integers, not booleans")
    if isinstance(value, (int, np.integer)):
        return int(value)
    raise TypeError(f"lattice entries must be integers, got {type(value).__name__}")


def check_width(values: Iterable[int], *, context: str) -> None:
    """Raise :class:`LatticeOverflowError` if any value leaves the width contract."""

    settings = get_settings()
    limit = settings.max_entry
    for value in values:
        if abs(value) > limit:
            raise LatticeOverflowError(
                f"{context}: entry {value} exceeds the {settings.arithmetic_bits}-bit width",
                {"bits": settings.arithmetic_bits},
            )


def _check_arrays(context: str, *arrays: np.ndarray) -> None:
    for array in arrays:
        if array.size:
            check_width(array.flat, context=context)


def _identity_array(size: int) -> np.ndarray:
    return np.array([[int(i == j) for j in range(size)] for i in range(size)], dtype=object)


@dataclass(frozen=True)
class IntMatrix:
    """Immutable row-major integer matrix with at least one row and column."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(_as_int(value) for value in row) for row in self.entries)
        if not rows or not rows[0]:
            raise ValueError("IntMatrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("IntMatrix rows must all have the same length")
        check_width((value for row in rows for value in row), context="matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable[int]]) -> "IntMatrix":
        cols = [tuple(column) for column in columns]
        if not cols:
            raise ValueError("IntMatrix needs at least one column")
        if any(len(column) != len(cols[0]) for column in cols):
            raise ValueError("IntMatrix columns must all have the same length")
        return cls(tuple(zip(*cols)))

    @classmethod
    def from_array(cls, array: np.ndarray) -> "IntMatrix":
        return cls(tuple(tuple(int(value) for value in row) for row in array))

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls.from_array(_identity_array(size))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=object)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def row(self, index: int) -> Vector:
        return self.entries[index]

    def column(self, index: int) -> Vector:
        return tuple(row[index] for row in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_columns(self.entries)

    def apply(self, vector: Sequence[int]) -> Vector:
        if len(vector) != self.cols:
            raise ValueError(f"expected a vector of length {self.cols}, got {len(vector)}")
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self.entries)

    def is_diagonal(self) -> bool:
        return all(
            value == 0
            for i, row in enumerate(self.entries)
            for j, value in enumerate(row)
            if i != j
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return IntMatrix.from_array(self.to_array() @ other.to_array())


@dataclass(frozen=True)
class SnfDecomposition:
    """``left @ matrix @ right == diagonal`` with unimodular ``left`` and ``right``."""

    left: IntMatrix
    diagonal: IntMatrix
    right: IntMatrix

    @property
    def invariant_factors(self) -> Vector:
        size = min(self.diagonal.shape)
        return tuple(self.diagonal.entries[i][i] for i in range(size))

    @property
    def rank(self) -> int:
        return sum(1 for value in self.invariant_factors if value)


class AbelianGroupInvariants(BaseModel):
    """Finitely generated abelian group ``Z/t_1 x ... x Z/t_k x Z^free_rank``."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    torsion: tuple[int, ...] = ()
    free_rank: int = Field(0, ge=0)

    @model_validator(mode="after")
    def _validate_chain(self) -> "AbelianGroupInvariants":
        if any(value < 2 for value in self.torsion):
            raise ValueError("torsion coefficients must be at least 2")
        for lower, upper in zip(self.torsion, self.torsion[1:]):
            if upper % lower:
                raise ValueError("each torsion coefficient must divide the next")
        return self

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | float:
        if self.free_rank:
            return INFINITE_INDEX
        return math.prod(self.torsion)

    @property
    def is_cyclic(self) -> bool:
        return self.free_rank == 0 and len(self.torsion) <= 1

    def describe(self) -> str:
        parts = [f"Z/{value}" for value in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "trivial"


def gcd_vector(vector: Sequence[int]) -> int:
    values = [_as_int(value) for value in vector]
    if not values:
        raise LatticeError("gcd of an empty vector is undefined")
    return math.gcd(*values)


def primitivize(vector: Sequence[int]) -> Vector:
    """Divide ``vector`` by the gcd of its entries."""

    divisor = gcd_vector(vector)
    if divisor == 0:
        raise ZeroVectorError("cannot primitivize the zero vector")
    return tuple(int(value) // divisor for value in vector)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = x*a + y*b = gcd(a, b) >= 0``."""

    old_r, r = _as_int(a), _as_int(b)
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_x, x = x, old_x - quotient * x
        old_y, y = y, old_y - quotient * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _min_nonzero(d: np.ndarray, t: int) -> tuple[int, int] | None:
    # smallest |entry| in the active block, ties to the smallest (row, col)
    best: tuple[int, int, int] | None = None
    rows, cols = d.shape
    for i in range(t, rows):
        for j in range(t, cols):
            value = d[i, j]
            if value and (best is None or abs(value) < best[0]):
                best = (abs(value), i, j)
    return None if best is None else (best[1], best[2])


def _move_to_pivot(
    d: np.ndarray, left: np.ndarray, right: np.ndarray, position: tuple[int, int], t: int
) -> None:
    i, j = position
    if i != t:
        d[[t, i], :] = d[[i, t], :]
        left[[t, i], :] = left[[i, t], :]
    if j != t:
        d[:, [t, j]] = d[:, [j, t]]
        right[:, [t, j]] = right[:, [j, t]]


def _gcd_step(a: int, b: int) -> tuple[int, int, int, int]:
    """Determinant-one ``[[x, y], [u, v]]`` taking ``(a, b)`` to ``(g, 0)``.

    When ``a`` divides ``b`` the step is a plain elimination and ``a`` is kept.
    """

    if b % a == 0:
        return 1, 0, -(b // a), 1
    g, x, y = extended_gcd(a, b)
    return x, y, -(b // g), a // g


def _mix_rows(arrays: Sequence[np.ndarray], first: int, second: int, step: Sequence[int]) -> None:
    x, y, u, v = step
    for array in arrays:
        top, bottom = array[first, :].copy(), array[second, :].copy()
        array[first, :] = x * top + y * bottom
        array[second, :] = u * top + v * bottom


def _mix_columns(
    arrays: Sequence[np.ndarray], first: int, second: int, step: Sequence[int]
) -> None:
    x, y, u, v = step
    for array in arrays:
        head, tail = array[:, first].copy(), array[:, second].copy()
        array[:, first] = x * head + y * tail
        array[:, second] = u * head + v * tail


def _clear_column(d: np.ndarray, left: np.ndarray, t: int) -> bool:
    """Row steps putting the gcd of column ``t`` on the pivot; False if it was already clear."""

    changed = False
    for i in range(t + 1, d.shape[0]):
        if d[i, t]:
            _mix_rows((d, left), t, i, _gcd_step(d[t, t], d[i, t]))
            changed = True
    if changed:
        _check_arrays("smith normal form", d, left)
    return changed


def _clear_row(d: np.ndarray, right: np.ndarray, t: int) -> bool:
    changed = False
    for j in range(t + 1, d.shape[1]):
        if d[t, j]:
            _mix_columns((d, right), t, j, _gcd_step(d[t, t], d[t, j]))
            changed = True
    if changed:
        _check_arrays("smith normal form", d, right)
    return changed


def _non_divisible_row(d: np.ndarray, t: int) -> int | None:
    rows, cols = d.shape
    pivot = d[t, t]
    for i in range(t + 1, rows):
        for j in range(t + 1, cols):
            if d[i, j] % pivot:
                return i
    return None


def smith_normal_form(matrix: IntMatrix) -> SnfDecomposition:
    """Smith normal form with unimodular transforms.

    The pivot of each step is the nonzero entry of minimal absolute value in
    the active block (ties to the smallest row, then column), so the result is
    a deterministic function of ``matrix``. Row and column ``t`` are then
    cleared by two-by-two extended gcd steps between the pivot line and one
    other line at a time. Diagonal entries are nonnegative, each divides the
    next and zeros come last.
    """

    d = matrix.to_array()
    rows, cols = d.shape
    left = _identity_array(rows)
    right = _identity_array(cols)
    for t in range(min(rows, cols)):
        position = _min_nonzero(d, t)
        if position is None:
            break
        _move_to_pivot(d, left, right, position, t)
        while True:
            _clear_column(d, left, t)
            while _clear_row(d, right, t) and _clear_column(d, left, t):
                pass
            offender = _non_divisible_row(d, t)
            if offender is None:
                break
            d[t, :] += d[offender, :]
            left[t, :] += left[offender, :]
            _check_arrays("smith normal form", d, left)
        if d[t, t] < 0:
            d[t, :] = -d[t, :]
            left[t, :] = -left[t, :]
    decomposition = SnfDecomposition(
        left=IntMatrix.from_array(left),
        diagonal=IntMatrix.from_array(d),
        right=IntMatrix.from_array(right),
    )
    logger.debug(
        "smith normal form of %dx%d matrix: invariant factors %s",
        rows,
        cols,
        decomposition.invariant_factors,
    )
    return decomposition


def hermite_normal_form(matrix: IntMatrix) -> IntMatrix:
    """Row-style Hermite normal form.

    Pivots are positive and move strictly right, entries above a pivot lie in
    ``[0, pivot)`` and zero rows come last. The nonzero rows are a canonical
    basis of the row lattice of ``matrix``.
    """

    h = matrix.to_array()
    rows, cols = h.shape
    row = 0
    for col in range(cols):
        if row == rows:
            break
        while True:
            candidates = [i for i in range(row, rows) if h[i, col]]
            if not candidates:
                break
            pivot = min(candidates, key=lambda i: (abs(h[i, col]), i))
            if pivot != row:
                h[[row, pivot], :] = h[[pivot, row], :]
            for i in range(row + 1, rows):
                quotient = h[i, col] // h[row, col]
                if quotient:
                    h[i, :] -= quotient * h[row, :]
            _check_arrays("hermite normal form", h)
            if not any(h[i, col] for i in range(row + 1, rows)):
                break
        if h[row, col] == 0:
            continue
        if h[row, col] < 0:
            h[row, :] = -h[row, :]
        for i in range(row):
            quotient = h[i, col] // h[row, col]
            if quotient:
                h[i, :] -= quotient * h[row, :]
        _check_arrays("hermite normal form", h)
        row += 1
    return IntMatrix.from_array(h)


def column_span_basis(generators: IntMatrix) -> IntMatrix | None:
    """Canonical basis (as columns) of the lattice spanned by the columns of ``generators``."""

    hnf = hermite_normal_form(generators.transpose())
    basis = [row for row in hnf.entries if any(row)]
    if not basis:
        return None
    return IntMatrix.from_columns(basis)


def matrix_rank(matrix: IntMatrix) -> int:
    return smith_normal_form(matrix).rank


def invariants_from_snf(snf: SnfDecomposition, ambient_rank: int) -> AbelianGroupInvariants:
    nonzero = [value for value in snf.invariant_factors if value]
    return AbelianGroupInvariants(
        torsion=tuple(value for value in nonzero if value > 1),
        free_rank=ambient_rank - len(nonzero),
    )


def quotient_invariants(generators: IntMatrix) -> AbelianGroupInvariants:
    """Invariants of ``Z^rows`` modulo the span of the columns of ``generators``."""

    return invariants_from_snf(smith_normal_form(generators), generators.rows)


def kernel_from_snf(snf: SnfDecomposition) -> list[Vector]:
    """Integer kernel basis read off the trailing columns of the right transform."""

    columns = snf.right.columns()[snf.rank :]
    if not columns:
        return []
    hnf = hermite_normal_form(IntMatrix.from_rows(columns))
    return sorted(row for row in hnf.entries if any(row))


def integer_kernel(matrix: IntMatrix) -> list[Vector]:
    """Basis of ``{x in Z^cols : matrix @ x = 0}``.

    Vectors are primitive with a positive leading entry and sorted
    lexicographically; an injective matrix yields an empty list.
    """

    return kernel_from_snf(smith_normal_form(matrix))


def sublattice_index(generators: IntMatrix) -> int | float:
    """Index of the column span in ``Z^rows``, or ``INFINITE_INDEX`` when it is not full rank."""

    snf = smith_normal_form(generators)
    if snf.rank < generators.rows:
        return INFINITE_INDEX
    return math.prod(snf.invariant_factors[: generators.rows])
