from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tiledorder import (
    AmbiguousNakayamaError,
    ExponentMatrix,
    NotGorensteinError,
    Permutation,
    cyclic_order,
    detect_gorenstein,
    morita_shift,
    shifted_parameters,
)

from test_orders import CYCLIC_1111, shifted_cyclic


class TestDetect:
    def test_cyclic_unit_weights(self):
        m = ExponentMatrix.from_rows(CYCLIC_1111)
        g = detect_gorenstein(m)
        assert g.nu.images == (1, 2, 3, 0)
        assert g.ell == (3, 3, 3, 3)
        assert g.p == (-2, -2, -2, -2)
        assert g.p_av == Fraction(-2)

    def test_point(self):
        g = detect_gorenstein(ExponentMatrix.from_rows([[0]]))
        assert g.nu.images == (0,)
        assert g.ell == (0,)
        assert g.p == (1,)
        assert g.p_av == Fraction(1)

    def test_symmetric_three_by_three_fails(self):
        m = ExponentMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
        with pytest.raises(NotGorensteinError) as ei:
            detect_gorenstein(m)
        assert ei.value.witness == 0

    def test_non_basic_is_ambiguous(self):
        m = ExponentMatrix.from_rows([[0, 0], [0, 0]])
        with pytest.raises(AmbiguousNakayamaError) as ei:
            detect_gorenstein(m)
        assert ei.value.witness == (0, [0, 1])

    def test_fractional_average(self):
        _, g = cyclic_order((1, 0))
        assert g.p == (1, 0)
        assert g.p_av == Fraction(1, 2)

    @given(st.integers(0, 5), st.integers(0, 5))
    def test_basic_two_by_two_always_gorenstein(self, a, b):
        if a + b == 0:
            return
        m = ExponentMatrix.from_rows([[0, a], [b, 0]])
        g = detect_gorenstein(m)
        assert g.nu.images == (1, 0)
        assert g.p == (1 - b, 1 - a)

    @given(shifted_cyclic())
    def test_shift_preserves_nu(self, m):
        g = detect_gorenstein(m)
        assert g.nu.images == Permutation.cycle(m.n).images
        assert g.p_av == Fraction(sum(g.p), m.n)


class TestShiftedParameters:
    def test_worked_example(self):
        _, g = cyclic_order((1, 1, 1, 1))
        assert shifted_parameters(g, (0, 1, 0, 1)) == (-1, -3, -1, -3)

    def test_zero_shift(self):
        _, g = cyclic_order((2, 1, 1, 1))
        assert shifted_parameters(g, (0, 0, 0, 0)) == g.p

    def test_point(self):
        # a single-point cyclic order has m = [[0]] whatever the weight
        _, g = cyclic_order((3,))
        assert shifted_parameters(g, (7,)) == (1,) == g.p

    @given(shifted_cyclic(), st.lists(st.integers(-4, 4), min_size=6, max_size=6))
    def test_matches_matrix_route(self, m, raw):
        """The closed formula must agree with conjugating the matrix.

        ``shifted_parameters(g, s)`` is the parameter transform matching
        ``morita_shift(m, [-x for x in s])``; both routes are computed
        independently here.
        """
        s = tuple(raw[: m.n]) + (0,) * max(0, m.n - len(raw))
        g = detect_gorenstein(m)
        direct = shifted_parameters(g, s)
        via_matrix = detect_gorenstein(
            morita_shift(m, tuple(-x for x in s))
        ).p
        assert direct == via_matrix

    @given(shifted_cyclic(), st.lists(st.integers(-4, 4), min_size=6, max_size=6))
    def test_average_invariant(self, m, raw):
        s = tuple(raw[: m.n]) + (0,) * max(0, m.n - len(raw))
        g = detect_gorenstein(m)
        q = shifted_parameters(g, s)
        assert Fraction(sum(q), m.n) == g.p_av
