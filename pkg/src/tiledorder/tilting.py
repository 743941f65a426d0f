"""Rank-one lattices, the tilting poset, and its Hasse quiver.

A rank-one lattice over a tiled order is recorded by its exponent vector v,
valid when v(j) <= min_i (v(i) + m(i,j)).  For a Gorenstein order with all
parameters p_i <= 0, truncating the shifted projectives gives the finite
poset of basic tilting summands: the vectors truncate_shift(row nu(i), j) for
1 <= j <= -p_i together with the zero vector, ordered componentwise.  The
Hasse quiver points from larger to smaller, so the zero vector is the unique
sink.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    InvalidLatticeError,
    PositiveParameterError,
)
from .gorenstein import GorensteinData, cyclic_order
from .orders import ExponentMatrix, Vector, freeze_vector


def is_lattice_vector(m: ExponentMatrix, v: Sequence[int]) -> bool:
    """Whether v is the exponent vector of a rank-one lattice over m."""
    vec = freeze_vector(v)
    if len(vec) != m.n:
        raise DimensionMismatchError(
            f"vector has length {len(vec)}, expected {m.n}"
        )
    return all(
        vec[j] <= min(vec[i] + m.entry(i, j) for i in range(m.n))
        for j in range(m.n)
    )


def truncate_shift(v: Sequence[int], j: int) -> Vector:
    """Shift down by j and truncate at zero: max(v_i - j, 0) componentwise."""
    return tuple(max(x - j, 0) for x in freeze_vector(v))


def hom_dim(m: ExponentMatrix, v: Sequence[int], w: Sequence[int], t: int) -> int:
    """dim Hom in degree t between the lattices of v and w: 1 iff t >= max(w - v)."""
    for vec in (v, w):
        if not is_lattice_vector(m, vec):
            raise InvalidLatticeError(
                "vector is not a valid rank-one lattice", witness=list(vec)
            )
    vv = freeze_vector(v)
    ww = freeze_vector(w)
    return 1 if t >= max(ww[i] - vv[i] for i in range(m.n)) else 0


def _check_nonpositive(g: GorensteinData) -> None:
    for i, pi in enumerate(g.p):
        if pi > 0:
            raise PositiveParameterError(
                f"parameter p_{i} = {pi} > 0; the tilting poset is infinite",
                witness=i,
            )


def tilting_summands(
    m: ExponentMatrix, g: GorensteinData
) -> list[tuple[tuple[tuple[int, int], ...], Vector]]:
    """Distinct tilting summand vectors with their (i, j) labels.

    Enumerates truncate_shift(row nu(i), j) for 1 <= j <= -p_i + 1 in label
    order; j = -p_i + 1 is the first truncation that collapses to zero, so the
    zero vector appears once, carrying one label per index.  Nonzero vectors
    are pairwise distinct (asserted) and each carries a single label.
    """
    _check_nonpositive(g)
    n = m.n
    found: dict[Vector, list[tuple[int, int]]] = {}
    order: list[Vector] = []
    zero = (0,) * n
    for s in range(n):
        row = m.row(g.nu(s))
        for j in range(1, -g.p[s] + 2):
            vec = truncate_shift(row, j)
            if j == -g.p[s] + 1:
                assert vec == zero  # row maximum is m(nu(s), s) = 1 - p_s
            if vec not in found:
                found[vec] = []
                order.append(vec)
            found[vec].append((s, j))
    nonzero = [vec for vec in order if vec != zero]
    assert len(nonzero) == sum(-pi for pi in g.p)  # distinctness of nonzero summands
    assert all(is_lattice_vector(m, vec) for vec in order)
    return [(tuple(found[vec]), vec) for vec in order]


def leq(v: Vector, w: Vector) -> bool:
    """Componentwise order on exponent vectors."""
    return all(a <= b for a, b in zip(v, w))


@dataclass(frozen=True, eq=True)
class TiltingPoset:
    """The tilting summand vectors under the componentwise order."""

    elements: tuple[Vector, ...]  # sorted lexicographically, zero first
    labels: Mapping[Vector, tuple[tuple[int, int], ...]]

    @property
    def n(self) -> int:
        return len(self.elements[0])

    @property
    def zero(self) -> Vector:
        return (0,) * self.n


def tilting_poset(m: ExponentMatrix, g: GorensteinData) -> TiltingPoset:
    """Build the finite tilting poset; requires all p_i <= 0."""
    summands = tilting_summands(m, g)
    elements = tuple(sorted(vec for _, vec in summands))
    labels = {vec: labs for labs, vec in summands}
    poset = TiltingPoset(elements=elements, labels=labels)
    zero = poset.zero
    assert all(leq(zero, v) for v in elements)  # zero is the unique minimum
    assert len(elements) == 1 - sum(g.p)
    return poset


@dataclass(frozen=True)
class Quiver:
    """A finite quiver with sorted vertex and arrow tuples and no repeated arrows."""

    vertices: tuple
    arrows: tuple

    def __post_init__(self):
        assert len(set(self.arrows)) == len(self.arrows)
        vertex_set = set(self.vertices)
        assert all(a in vertex_set and b in vertex_set for a, b in self.arrows)


def hasse_quiver(poset: TiltingPoset) -> Quiver:
    """Cover arrows of the poset, drawn from larger to smaller element."""
    els = poset.elements
    k = len(els)
    below = [0] * k  # bit j set when els[j] < els[i]
    for i in range(k):
        for j in range(k):
            if i != j and leq(els[j], els[i]):
                below[i] |= 1 << j
    above = [0] * k
    for i in range(k):
        mask = below[i]
        while mask:
            j = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            above[j] |= 1 << i
    arrows = []
    for i in range(k):
        mask = below[i]
        while mask:
            j = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            if not below[i] & above[j]:  # nothing strictly between
                arrows.append((els[i], els[j]))
    return Quiver(vertices=els, arrows=tuple(sorted(arrows)))


def grothendieck_rank(g: GorensteinData) -> int:
    """Number of tilting summands, 1 - sum(p); requires all p_i <= 0."""
    _check_nonpositive(g)
    return 1 - sum(g.p)


def tilde_index_sets(
    g: GorensteinData,
) -> tuple[frozenset[tuple[int, int]], frozenset[tuple[int, int]]]:
    """Index pairs of the endomorphism blocks: proper truncations and zero slots."""
    proper = frozenset(
        (s, i) for s in range(g.n) for i in range(1, -g.p[s] + 1)
    )
    zero_slots = frozenset((s, -g.p[s] + 1) for s in range(g.n))
    return proper, zero_slots


def endo_block_dim(
    m: ExponentMatrix,
    g: GorensteinData,
    source: tuple[int, int],
    target: tuple[int, int],
) -> int:
    """Dimension of the endomorphism-algebra block between two summand slots.

    For slots (s,i) and (t,j) of proper truncations the dimension is
    [j - i >= m(nu(t), nu(s))]; maps out of a zero slot into a proper one
    vanish; maps into a zero slot are one-dimensional.  Cross-checked against
    hom_dim of the truncated vectors.
    """
    _check_nonpositive(g)
    proper, zero_slots = tilde_index_sets(g)
    for slot in (source, target):
        if slot not in proper and slot not in zero_slots:
            raise IndexOutOfRangeError(
                f"slot {slot} is outside the summand index set", witness=list(slot)
            )
    s, i = source
    t, j = target
    if target in zero_slots:
        dim = 1
    elif source in zero_slots:
        dim = 0
    else:
        dim = 1 if j - i >= m.entry(g.nu(t), g.nu(s)) else 0
    assert dim == hom_dim(
        m,
        truncate_shift(m.row(g.nu(s)), i),
        truncate_shift(m.row(g.nu(t)), j),
        0,
    )
    return dim


ORACLE_ZERO: tuple = ()


def _oracle_structure(
    weights: Sequence[int],
) -> tuple[list[tuple], dict[str, list[tuple]]]:
    """Vertices and rule-tagged arrows of the cyclic Hasse description.

    Vertices are (row, j) pairs plus the empty tuple for the zero vertex.  The
    line at row rho holds -p[(rho-1) mod n] vertices.  Arrows:
      (a) (rho, j) -> (rho, j+1) when the target exists;
      (b) (rho, j) -> ((rho-1) mod n, j + w[(rho-1) mod n]) for
          1 <= j <= -p[(rho-2) mod n] - w[(rho-1) mod n];
      (c) the last vertex of each line points to zero.
    """
    _, g = cyclic_order(weights)
    w = tuple(weights)
    n = len(w)
    p = g.p
    _check_nonpositive(g)
    vertices: list[tuple] = [ORACLE_ZERO]
    for rho in range(n):
        line_len = -p[(rho - 1) % n]
        vertices.extend((rho, j) for j in range(1, line_len + 1))
    arrows: dict[str, list[tuple]] = {"a": [], "b": [], "c": []}
    for rho in range(n):
        line_len = -p[(rho - 1) % n]
        for j in range(1, line_len + 1):
            if j + 1 <= line_len:
                arrows["a"].append(((rho, j), (rho, j + 1)))
            w_prev = w[(rho - 1) % n]
            if 1 <= j <= -p[(rho - 2) % n] - w_prev:
                arrows["b"].append(((rho, j), ((rho - 1) % n, j + w_prev)))
            if j == line_len:
                arrows["c"].append(((rho, j), ORACLE_ZERO))
    return vertices, arrows


def cyclic_hasse_oracle(weights: Sequence[int]) -> Quiver:
    """The Hasse quiver of a cyclic order, built from the closed-form rules.

    Independent of the cover computation: vertices and arrows come from the
    line description above and are only then translated to exponent vectors
    via truncate_shift.
    """
    m, _ = cyclic_order(weights)
    vertices, arrows = _oracle_structure(weights)
    n = m.n

    def translate(vertex: tuple) -> Vector:
        if vertex == ORACLE_ZERO:
            return (0,) * n
        rho, j = vertex
        return truncate_shift(m.row(rho), j)

    translated = sorted(translate(v) for v in vertices)
    assert len(set(translated)) == len(translated)
    arrow_list = sorted(
        (translate(a), translate(b))
        for rule in ("a", "b", "c")
        for a, b in arrows[rule]
    )
    return Quiver(vertices=tuple(translated), arrows=tuple(arrow_list))
