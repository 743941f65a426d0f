"""Cycle-sum tests and equivariant conjugation of integer matrices.

This module works with plain square integer matrices (no zero-diagonal or
triangle requirements).  Conjugating by a shift vector s sends m(i,j) to
m(i,j) + s(i) - s(j); all cycle sums are invariant, and a matrix admits a
non-negative conjugate exactly when every directed cycle sum is >= 0.  On top
of that sit the permutation-equivariant data (matrix, twist, perm) and the
normalization pipeline that conjugates such data into floor-aligned,
entrywise non-negative position.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations as iter_permutations
from typing import Optional, Sequence

from .errors import (
    DimensionMismatchError,
    EquivarianceViolationError,
    IndexOutOfRangeError,
    NegativeCycleError,
    NegativeDiagonalError,
    NotFloorTypeError,
    NotIntegralSumError,
    NotMinCycleError,
    OrbitAverageMismatchError,
    PeriodicityViolationError,
    TooLargeError,
)
from .gorenstein import GorensteinData
from .orders import ExponentMatrix, Permutation, Rows, Vector, check_shift, freeze_rows

BRUTEFORCE_LIMIT = 8
MIN_CYCLE_LIMIT = 10


def _square(matrix: Sequence[Sequence[int]]) -> Rows:
    rows = freeze_rows(matrix)
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise DimensionMismatchError("matrix must be non-empty and square")
    return rows


def cycle_sum(matrix: Sequence[Sequence[int]], seq: Sequence[int]) -> int:
    """Sum of m(i_k, i_{k+1}) around the cyclic sequence seq (indices may repeat)."""
    rows = _square(matrix)
    n = len(rows)
    idx = tuple(seq)
    if len(idx) == 0:
        raise IndexOutOfRangeError("cycle sequence must be non-empty")
    for i in idx:
        if not 0 <= i < n:
            raise IndexOutOfRangeError(f"index {i} out of range for n={n}", witness=i)
    return sum(rows[idx[k]][idx[(k + 1) % len(idx)]] for k in range(len(idx)))


def is_cycle_nonneg_bruteforce(matrix: Sequence[Sequence[int]]) -> bool:
    """Exhaustive oracle: every permutation trace sum(m(i, sigma(i))) is >= 0.

    For zero-diagonal matrices this is equivalent to all directed cycle sums
    being non-negative (permutations decompose into disjoint cycles and fixed
    points contribute nothing).  Factorial cost; rejected above n = 8.
    """
    rows = _square(matrix)
    n = len(rows)
    if n > BRUTEFORCE_LIMIT:
        raise TooLargeError(f"n={n} exceeds brute-force limit {BRUTEFORCE_LIMIT}")
    return all(
        sum(rows[i][sigma[i]] for i in range(n)) >= 0
        for sigma in iter_permutations(range(n))
    )


def _extract_negative_cycle(rows: Rows) -> tuple[int, ...]:
    """A simple negative cycle, found by DP over exact walk lengths.

    W_k(i,j) = minimum weight of a walk i -> j with exactly k edges.  The
    smallest k with W_k(i,i) < 0 yields a closed walk that must be simple
    (a repeated vertex would split it into two shorter closed walks, one of
    them negative).  Smallest (k, i) and smallest predecessor at every
    backward step keep the witness deterministic.  Only called once a
    negative cycle is known to exist.
    """
    n = len(rows)
    inf = float("inf")
    walks = [None, [[rows[i][j] if i != j else inf for j in range(n)] for i in range(n)]]
    hit = None
    for k in range(1, n + 1):
        if k > 1:
            prev = walks[k - 1]
            walks.append(
                [
                    [
                        min(
                            (prev[i][t] + rows[t][j] for t in range(n) if t != j),
                            default=inf,
                        )
                        for j in range(n)
                    ]
                    for i in range(n)
                ]
            )
        for i in range(n):
            if walks[k][i][i] < 0:
                hit = (k, i)
                break
        if hit:
            break
    assert hit is not None
    k, i = hit
    verts = [i]  # v_k = i; fill v_{k-1}, ..., v_1 walking backwards
    j = i
    for step in range(k, 1, -1):
        for t in range(n):
            if t != j and walks[step - 1][i][t] + rows[t][j] == walks[step][i][j]:
                verts.append(t)
                j = t
                break
    verts.reverse()  # (v_1, ..., v_k = i); cycle starts at i
    cycle = tuple([i] + verts[:-1])
    assert len(set(cycle)) == len(cycle)
    start = cycle.index(min(cycle))
    cycle = cycle[start:] + cycle[:start]
    assert cycle_sum(rows, cycle) < 0
    return cycle


def _bellman_ford(rows: Rows) -> tuple[list[int], Optional[tuple[int, ...]]]:
    """Shortest-path potentials from a virtual zero-weight source.

    Returns (dist, None) when no negative cycle exists, in which case
    m(i,j) + dist(i) - dist(j) >= 0 for all i != j.  Otherwise returns
    (_, cycle) with a witness cycle of negative sum, rotated so its smallest
    index comes first.  Negative diagonal entries are reported as singleton
    cycles before any relaxation.
    """
    n = len(rows)
    for i in range(n):
        if rows[i][i] < 0:
            return [], (i,)
    dist = [0] * n
    for _ in range(n + 1):
        changed = False
        for i in range(n):
            di = dist[i]
            row = rows[i]
            for j in range(n):
                if i != j and di + row[j] < dist[j]:
                    dist[j] = di + row[j]
                    changed = True
        if not changed:
            return dist, None
    return [], _extract_negative_cycle(rows)


def find_negative_cycle(
    matrix: Sequence[Sequence[int]],
) -> Optional[tuple[int, ...]]:
    """A directed cycle with negative sum, or None.  Singletons cover the diagonal."""
    rows = _square(matrix)
    _, cycle = _bellman_ford(rows)
    return cycle


def is_cycle_nonneg(matrix: Sequence[Sequence[int]]) -> bool:
    """True when every directed cycle sum (diagonal included) is non-negative."""
    return find_negative_cycle(matrix) is None


def min_cycle(matrix: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], int]:
    """Minimum cycle sum over multiplicity-free cycles of length >= 2.

    Ties are broken by shortest length, then lexicographically on the cycle
    written from its smallest index.  Exhaustive; rejected above n = 10.
    """
    rows = _square(matrix)
    n = len(rows)
    if n > MIN_CYCLE_LIMIT:
        raise TooLargeError(f"n={n} exceeds min-cycle limit {MIN_CYCLE_LIMIT}")
    if n < 2:
        raise TooLargeError("min_cycle needs at least two indices")
    best: Optional[tuple[int, int, tuple[int, ...]]] = None
    for k in range(2, n + 1):
        for subset in combinations(range(n), k):
            first = subset[0]
            for rest in iter_permutations(subset[1:]):
                seq = (first,) + rest
                value = sum(rows[seq[t]][seq[(t + 1) % k]] for t in range(k))
                key = (value, k, seq)
                if best is None or key < best:
                    best = key
    value, _, seq = best
    return seq, value


def conjugate_matrix(matrix: Sequence[Sequence[int]], s: Sequence[int]) -> Rows:
    rows = _square(matrix)
    shift = check_shift(s, len(rows))
    n = len(rows)
    return tuple(
        tuple(rows[i][j] + shift[i] - shift[j] for j in range(n)) for i in range(n)
    )


def nonneg_conjugate(matrix: Sequence[Sequence[int]]) -> Vector:
    """A shift s with m(i,j) + s(i) - s(j) >= 0 everywhere, when one exists.

    s is the vector of shortest-path potentials from a virtual source with
    zero-weight edges to every vertex, so the result is deterministic.  Raises
    NegativeDiagonalError(i) when some m(i,i) < 0 (no conjugate can fix the
    diagonal) and NegativeCycleError with a witness cycle when the cycle test
    fails.
    """
    rows = _square(matrix)
    n = len(rows)
    for i in range(n):
        if rows[i][i] < 0:
            raise NegativeDiagonalError(
                f"diagonal entry ({i},{i}) is negative", witness=i
            )
    dist, cycle = _bellman_ford(rows)
    if cycle is not None:
        raise NegativeCycleError(
            f"negative cycle {cycle} with sum {cycle_sum(rows, cycle)}",
            witness=cycle,
        )
    s = tuple(dist)
    assert all(
        rows[i][j] + s[i] - s[j] >= 0 for i in range(n) for j in range(n)
    )
    return s


def normalized_cycle_conjugate(
    matrix: Sequence[Sequence[int]], cycle: Sequence[int]
) -> Vector:
    """Shift that zeroes a minimum cycle except for its closing edge.

    Given a multiplicity-free cycle attaining the minimum cycle sum of the
    restriction of m to its support, returns s (zero off the cycle) with
    (sm)(c_k, c_{k+1}) = 0 for k < last, (sm)(c_last, c_0) equal to that
    minimum, and (sm) non-negative on the cycle's support.  Raises
    NotMinCycleError when the given cycle fails any of this.
    """
    rows = _square(matrix)
    n = len(rows)
    idx = tuple(cycle)
    if len(idx) < 2 or len(set(idx)) != len(idx):
        raise NotMinCycleError(
            "cycle must be multiplicity-free with length >= 2", witness=idx
        )
    for i in idx:
        if not 0 <= i < n:
            raise IndexOutOfRangeError(f"index {i} out of range for n={n}", witness=i)

    s = [0] * n
    run = 0
    for k in range(1, len(idx)):
        run += rows[idx[k - 1]][idx[k]]
        s[idx[k]] = run

    sub = tuple(tuple(rows[a][b] for b in idx) for a in idx)
    _, sub_min = min_cycle(sub)
    conj = conjugate_matrix(rows, s)
    closing = conj[idx[-1]][idx[0]]
    ok = (
        closing == sub_min
        and all(conj[idx[k]][idx[k + 1]] == 0 for k in range(len(idx) - 1))
        and all(conj[a][b] >= 0 for a in idx for b in idx)
    )
    if not ok:
        raise NotMinCycleError(
            "cycle does not attain the minimum cycle sum of its restriction",
            witness=idx,
        )
    return tuple(s)


def floor_profile(r: int, g: int, n: int) -> Vector:
    """The difference sequence floor((i+1)r/g) - floor(ir/g) for i = 0..n-1.

    Floors are toward minus infinity.  The sum telescopes to n*r/g, so g must
    divide r*n (NotIntegralSumError otherwise).  All values lie in {c, c+1}
    where c = floor(r/g).
    """
    if g < 1 or n < 1:
        raise ValueError("need g >= 1 and n >= 1")
    if (r * n) % g != 0:
        raise NotIntegralSumError(f"g={g} does not divide r*n={r * n}")
    return tuple((i + 1) * r // g - i * r // g for i in range(n))


@dataclass(frozen=True)
class EquivariantData:
    """A square integer matrix with permutation-equivariance data.

    The twist vector controls how the matrix changes along the permutation:
    matrix(perm(i), perm(j)) = matrix(i,j) - twist(i) + twist(j).  Every orbit
    of the permutation has the same average twist (twist_avg, exact rational).
    Construct through equivariant_data(), which checks both conditions.
    """

    matrix: Rows
    twist: Vector
    perm: Permutation
    twist_avg: Fraction
    orbits: tuple[Vector, ...]

    @property
    def n(self) -> int:
        return len(self.twist)

    @property
    def period(self) -> int:
        """Denominator g of the average twist; divides every orbit length."""
        return self.twist_avg.denominator


def equivariant_data(
    matrix: Sequence[Sequence[int]],
    twist: Sequence[int],
    perm: Permutation,
) -> EquivariantData:
    """Validate and package (matrix, twist, perm) as equivariant data."""
    rows = _square(matrix)
    n = len(rows)
    tw = check_shift(twist, n)
    if perm.n != n:
        raise DimensionMismatchError(
            f"permutation acts on {perm.n} indices, matrix has {n}"
        )
    for i in range(n):
        for j in range(n):
            if rows[perm(i)][perm(j)] != rows[i][j] - tw[i] + tw[j]:
                raise EquivarianceViolationError(
                    f"matrix(perm({i}), perm({j})) != matrix({i},{j}) "
                    f"- twist({i}) + twist({j})",
                    witness=(i, j),
                )
    orbits = perm.orbits()
    averages = [Fraction(sum(tw[i] for i in orbit), len(orbit)) for orbit in orbits]
    for x in range(1, len(averages)):
        if averages[x] != averages[0]:
            raise OrbitAverageMismatchError(
                f"orbit {x} has twist average {averages[x]}, "
                f"orbit 0 has {averages[0]}",
                witness=(0, x),
            )
    avg = averages[0]
    # g | orbit length: orbit sums are integers and num/den is reduced.
    assert all(len(orbit) % avg.denominator == 0 for orbit in orbits)
    return EquivariantData(
        matrix=rows, twist=tw, perm=perm, twist_avg=avg, orbits=orbits
    )


def conjugate_data(ed: EquivariantData, s: Sequence[int]) -> EquivariantData:
    """Conjugate matrix and twist by s; equivariance and average are preserved."""
    shift = check_shift(s, ed.n)
    new_matrix = conjugate_matrix(ed.matrix, shift)
    new_twist = tuple(
        ed.twist[i] + shift[i] - shift[ed.perm(i)] for i in range(ed.n)
    )
    out = equivariant_data(new_matrix, new_twist, ed.perm)
    assert out.twist_avg == ed.twist_avg
    return out


def order_equivariant_data(m: ExponentMatrix, g: GorensteinData) -> EquivariantData:
    """Equivariant data of a Gorenstein tiled order.

    The equivariance relation holds for the transposed exponent matrix (entry
    (i,j) records degrees of maps from projective j into projective i) with
    twist = -p; conjugating here by s matches morita_shift(m, -s) on the order
    side.
    """
    return equivariant_data(
        m.transpose(), tuple(-x for x in g.p), g.nu
    )


def floor_align(ed: EquivariantData) -> Vector:
    """Shift making each orbit's twist equal the floor profile of the average.

    Walking an orbit (base point first), s(i) = (partial twist sum up to i)
    - floor(position * twist_avg); the conjugated twist then equals
    floor_profile(r, g, orbit length) exactly, starting at the base point.
    """
    r = ed.twist_avg.numerator
    g = ed.twist_avg.denominator
    s = [0] * ed.n
    for orbit in ed.orbits:
        run = 0
        for pos, i in enumerate(orbit):
            s[i] = run - (pos * r) // g
            run += ed.twist[i]
    return tuple(s)


def is_floor_aligned(ed: EquivariantData) -> bool:
    """True when every orbit's twist is a rotation of its floor profile.

    Rotations must be allowed: each orbit may be identified with Z/n_x from
    any of its points, not only the smallest one.
    """
    r = ed.twist_avg.numerator
    g = ed.twist_avg.denominator
    for orbit in ed.orbits:
        nx = len(orbit)
        profile = tuple(ed.twist[i] for i in orbit)
        target = floor_profile(r, g, nx)
        if not any(
            profile == tuple(target[(k + t) % nx] for k in range(nx))
            for t in range(nx)
        ):
            return False
    return True


@dataclass(frozen=True)
class OrbitFold:
    """Result of summing an equivariant matrix over permutation powers.

    summed(i,j) collects the g = period translates m(perm^k(i), perm^k(j));
    block_min is the orbit-by-orbit minimum of summed, indexed by orbits in
    base-point order; orbit_of maps each index to its orbit position.
    """

    period: int
    summed: Rows
    block_min: Rows
    orbit_of: Vector


def fold_orbits(ed: EquivariantData) -> OrbitFold:
    """Fold floor-aligned data over perm powers and minimize over orbit blocks."""
    if not is_floor_aligned(ed):
        raise NotFloorTypeError("twist is not a rotation of its floor profile")
    n = ed.n
    g = ed.period
    power_g = ed.perm.power_images(g)
    for i in range(n):
        for j in range(n):
            if ed.matrix[power_g[i]][power_g[j]] != ed.matrix[i][j]:
                raise PeriodicityViolationError(
                    f"matrix not invariant under perm^{g} at ({i},{j})",
                    witness=(i, j),
                )
    powers = [ed.perm.power_images(k) for k in range(g)]
    summed = tuple(
        tuple(
            sum(ed.matrix[powers[k][i]][powers[k][j]] for k in range(g))
            for j in range(n)
        )
        for i in range(n)
    )
    # summed is invariant under (i,j) -> (perm(i), perm(j)) by construction.
    assert all(
        summed[ed.perm(i)][ed.perm(j)] == summed[i][j]
        for i in range(n)
        for j in range(n)
    )
    orbit_of = [0] * n
    for x, orbit in enumerate(ed.orbits):
        for i in orbit:
            orbit_of[i] = x
    block_min = tuple(
        tuple(
            min(summed[i][j] for i in ox for j in oy)
            for oy in ed.orbits
        )
        for ox in ed.orbits
    )
    return OrbitFold(
        period=g, summed=summed, block_min=block_min, orbit_of=tuple(orbit_of)
    )


def normalize_equivariant(ed: EquivariantData) -> Vector:
    """Total shift conjugating the data into normalized position.

    After conjugation the twist is floor-aligned (each orbit a rotation of its
    floor profile, hence within 1 of the average) and the matrix is entrywise
    non-negative.  Pipeline: floor-align, fold orbits, find a non-negative
    conjugate of the folded block minima, and lift that shift back through the
    floor identification.  Requires every cycle sum of the matrix to be
    non-negative (NegativeCycleError with a witness on the original indices
    otherwise; a negative diagonal entry appears as a singleton cycle).
    """
    witness = find_negative_cycle(ed.matrix)
    if witness is not None:
        raise NegativeCycleError(
            f"matrix has negative cycle {witness}", witness=witness
        )
    s1 = floor_align(ed)
    aligned = conjugate_data(ed, s1)
    fold = fold_orbits(aligned)
    sbar = nonneg_conjugate(fold.block_min)
    r = ed.twist_avg.numerator
    g = ed.twist_avg.denominator
    s2 = [0] * ed.n
    for x, orbit in enumerate(ed.orbits):
        for pos, i in enumerate(orbit):
            s2[i] = (pos * r) // g - (pos * r - sbar[x]) // g
    total = tuple(s1[i] + s2[i] for i in range(ed.n))
    out = conjugate_data(ed, total)
    assert is_floor_aligned(out)
    assert all(abs(Fraction(t) - out.twist_avg) < 1 for t in out.twist)
    assert all(x >= 0 for row in out.matrix for x in row)
    return total
