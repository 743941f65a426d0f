"""Gorenstein detection and graded parameters for tiled orders.

A basic tiled order is graded Gorenstein exactly when there is a (unique)
permutation nu and integers ell_i with

    m(nu(i), j) + m(j, i) = ell_i   for all j.

The Gorenstein parameters are p_i = 1 - ell_i; their mean p_av is an exact
rational and is invariant under conjugation by shift vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    AmbiguousNakayamaError,
    NonConstantOrbitAverageError,
    NotGorensteinError,
    ZeroWeightsError,
)
from .orders import ExponentMatrix, Permutation, Vector, check_shift, freeze_vector


@dataclass(frozen=True)
class GorensteinData:
    """Permutation nu, the constants ell, the parameters p = 1 - ell, and their mean."""

    nu: Permutation
    ell: Vector
    p: Vector
    p_av: Fraction

    @property
    def n(self) -> int:
        return self.nu.n


def detect_gorenstein(m: ExponentMatrix) -> GorensteinData:
    """Find the unique (nu, ell) certifying the Gorenstein condition.

    Raises NotGorensteinError(i) when no candidate row works for index i, and
    AmbiguousNakayamaError(i) when several do (which cannot happen for basic
    input, but is checked defensively).
    """
    n = m.n
    images = []
    ells = []
    for i in range(n):
        candidates = []
        for u in range(n):
            sums = {m.entry(u, j) + m.entry(j, i) for j in range(n)}
            if len(sums) == 1:
                candidates.append((u, sums.pop()))
        if not candidates:
            raise NotGorensteinError(
                f"no row is constant against column {i}", witness=i
            )
        if len(candidates) > 1:
            raise AmbiguousNakayamaError(
                f"several rows are constant against column {i}",
                witness=(i, [u for u, _ in candidates]),
            )
        u, ell = candidates[0]
        images.append(u)
        ells.append(ell)
    nu = Permutation(tuple(images))  # raises NotBijectiveError if degenerate
    ell = tuple(ells)
    p = tuple(1 - e for e in ell)
    p_av = Fraction(sum(p), n)

    # ell_i = m(nu(i), i), and equivariance m(nu i, nu j) = m(i,j) + p_j - p_i,
    # both forced by the defining relation.
    assert all(ell[i] == m.entry(nu(i), i) for i in range(n))
    assert all(
        m.entry(nu(i), nu(j)) == m.entry(i, j) + p[j] - p[i]
        for i in range(n)
        for j in range(n)
    )

    for orbit in nu.orbits():
        avg = Fraction(sum(p[i] for i in orbit), len(orbit))
        if avg != p_av:
            raise NonConstantOrbitAverageError(
                "parameter average differs between orbits "
                "(input represents a decomposable ring)",
                witness=list(orbit),
            )
    return GorensteinData(nu=nu, ell=ell, p=p, p_av=p_av)


def shifted_parameters(g: GorensteinData, s: Sequence[int]) -> Vector:
    """Parameters after conjugating with shift s: p'_i = p_i - s(i) + s(nu(i)).

    This is the transform matching ``morita_shift(m, [-x for x in s])``; the
    two sign conventions are exercised against each other in the tests.
    """
    shift = check_shift(s, g.n)
    return tuple(g.p[i] - shift[i] + shift[g.nu(i)] for i in range(g.n))


def cyclic_order(weights: Sequence[int]) -> tuple[ExponentMatrix, GorensteinData]:
    """The cyclic tiled order attached to non-negative weights w_0..w_{n-1}.

    m(i,j) is the weight of the forward path i -> i+1 -> ... -> j around the
    cycle; nu is i -> i+1 (mod n) and p_i = 1 + w_i - sum(w).  Requires
    sum(w) >= 1 (ZeroWeightsError otherwise).
    """
    w = freeze_vector(weights)
    if any(x < 0 for x in w):
        raise ValueError("weights must be non-negative")
    n = len(w)
    if n == 0:
        raise ValueError("weights must be non-empty")
    total = sum(w)
    if total == 0:
        raise ZeroWeightsError("weights must not all be zero")

    def path_weight(i: int, j: int) -> int:
        if i == j:
            return 0
        if i < j:
            return sum(w[i:j])
        return sum(w[i:]) + sum(w[:j])

    m = ExponentMatrix(
        tuple(tuple(path_weight(i, j) for j in range(n)) for i in range(n))
    )
    nu = Permutation.cycle(n)
    ell = tuple(total - w[i] for i in range(n))
    p = tuple(1 + w[i] - total for i in range(n))
    g = GorensteinData(nu=nu, ell=ell, p=p, p_av=Fraction(sum(p), n))
    return m, g
