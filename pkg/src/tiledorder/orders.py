"""Exponent matrices of tiled orders, with exact integer arithmetic.

A tiled order over a discrete valuation ring is recorded by its n x n integer
exponent matrix m with zero diagonal and the triangle inequality
m(i,j) + m(j,k) >= m(i,k).  Everything downstream (Gorenstein detection,
conjugation, tilting posets) works on these values; no floats anywhere.
Indices are 0-based throughout.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    DimensionMismatchError,
    NonSquareError,
    NonzeroDiagonalError,
    NotBijectiveError,
    TriangleViolationError,
)

Vector = tuple[int, ...]
Rows = tuple[Vector, ...]


def freeze_vector(values: Iterable[int]) -> Vector:
    return tuple(operator.index(x) for x in values)


def freeze_rows(rows: Iterable[Sequence[int]]) -> Rows:
    return tuple(freeze_vector(row) for row in rows)


def check_square(rows: Rows) -> int:
    n = len(rows)
    if n == 0:
        raise NonSquareError("matrix must be non-empty and square")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise NonSquareError(
                f"row {i} has length {len(row)}, expected {n}", witness=i
            )
    return n


def first_triangle_violation(rows: Rows) -> Optional[tuple[int, int, int]]:
    """First (i, j, k) with m(i,j) + m(j,k) < m(i,k), scanning lexicographically."""
    n = len(rows)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if rows[i][j] + rows[j][k] < rows[i][k]:
                    return (i, j, k)
    return None


@dataclass(frozen=True)
class OrderReport:
    """Outcome of validating a candidate exponent matrix."""

    triangle_ok: bool
    basic: bool
    n_graded: bool
    first_violation: Optional[tuple[int, int, int]] = None

    @property
    def fully_valid(self) -> bool:
        return self.triangle_ok and self.basic and self.n_graded


def validate_order(rows: Iterable[Sequence[int]]) -> OrderReport:
    """Validate a square zero-diagonal integer matrix as a tiled-order matrix.

    Raises NonSquareError / NonzeroDiagonalError for structural defects; the
    triangle inequality, basicness (m(i,j) + m(j,i) > 0 off the diagonal) and
    N-gradedness (all entries >= 0) are reported, not raised.
    """
    frozen = freeze_rows(rows)
    n = check_square(frozen)
    for i in range(n):
        if frozen[i][i] != 0:
            raise NonzeroDiagonalError(
                f"diagonal entry ({i},{i}) is {frozen[i][i]}, expected 0", witness=i
            )
    violation = first_triangle_violation(frozen)
    basic = all(
        frozen[i][j] + frozen[j][i] > 0
        for i in range(n)
        for j in range(i + 1, n)
    )
    n_graded = all(x >= 0 for row in frozen for x in row)
    return OrderReport(
        triangle_ok=violation is None,
        basic=basic,
        n_graded=n_graded,
        first_violation=violation,
    )


@dataclass(frozen=True)
class ExponentMatrix:
    """A validated exponent matrix: square, zero diagonal, triangle inequality."""

    rows: Rows

    def __post_init__(self):
        n = check_square(self.rows)
        for i in range(n):
            if self.rows[i][i] != 0:
                raise NonzeroDiagonalError(
                    f"diagonal entry ({i},{i}) is {self.rows[i][i]}, expected 0",
                    witness=i,
                )
        violation = first_triangle_violation(self.rows)
        if violation is not None:
            i, j, k = violation
            raise TriangleViolationError(
                f"m({i},{j}) + m({j},{k}) < m({i},{k})", witness=violation
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "ExponentMatrix":
        return cls(freeze_rows(rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def transpose(self) -> Rows:
        return tuple(zip(*self.rows))

    @property
    def is_basic(self) -> bool:
        n = self.n
        return all(
            self.rows[i][j] + self.rows[j][i] > 0
            for i in range(n)
            for j in range(i + 1, n)
        )

    @property
    def is_n_graded(self) -> bool:
        return all(x >= 0 for row in self.rows for x in row)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {0, ..., n-1}, stored by its tuple of images."""

    images: Vector

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise NotBijectiveError(
                "images do not form a bijection of the index set",
                witness=list(self.images),
            )

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Permutation":
        """The n-cycle i -> i+1 (mod n)."""
        return cls(tuple((i + 1) % n for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def power_images(self, k: int) -> Vector:
        """Images of the k-th power (k >= 0)."""
        out = list(range(self.n))
        for _ in range(k):
            out = [self.images[i] for i in out]
        return tuple(out)

    def orbits(self) -> tuple[Vector, ...]:
        """Orbits, each listed from its smallest element following the permutation."""
        seen = [False] * self.n
        result = []
        for start in range(self.n):
            if seen[start]:
                continue
            orbit = []
            i = start
            while not seen[i]:
                seen[i] = True
                orbit.append(i)
                i = self.images[i]
            result.append(tuple(orbit))
        return tuple(result)

    @property
    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images))


def check_shift(s: Sequence[int], n: int) -> Vector:
    shift = freeze_vector(s)
    if len(shift) != n:
        raise DimensionMismatchError(
            f"shift vector has length {len(shift)}, expected {n}"
        )
    return shift


def morita_shift(m: ExponentMatrix, s: Sequence[int]) -> ExponentMatrix:
    """Conjugate the exponent matrix: m'(i,j) = m(i,j) + s(i) - s(j).

    The zero diagonal, the triangle inequality, basicness and every cycle sum
    are preserved; N-gradedness may change and should be re-checked by callers
    that rely on it.
    """
    shift = check_shift(s, m.n)
    shifted = ExponentMatrix(
        tuple(
            tuple(m.entry(i, j) + shift[i] - shift[j] for j in range(m.n))
            for i in range(m.n)
        )
    )
    assert shifted.is_basic == m.is_basic
    return shifted
