import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from ifnrank import ORIGIN, EndpointPair, TrifnError, interval_distance, lp_line_norm, trifn_distance, va_index
from ifnrank.oracle import lp_by_quadrature

from conftest import trifns

real = st.floats(-5, 5, allow_nan=False)
exponent = st.floats(1.01, 6)


def scipy_lp(p, e0, e1):
    pts = [-e0 / (e1 - e0)] if e0 * e1 < 0 else None
    val, _ = quad(lambda x: abs((e1 - e0) * x + e0) ** p, 0, 1, points=pts, epsabs=1e-14, epsrel=1e-13)
    return val ** (1 / p)


def prop3(a, b, c, d):
    return math.sqrt(((a - c) ** 2 + (b - d) ** 2 + (a - c) * (b - d)) / 3)


def prop6(a, b, c, d):
    x, y = a - c, b - d
    return abs((x**3 + y**3 + x * x * y + x * y * y) / 4) ** (1 / 3)


class TestIntervalDistance:
    def test_prop5_example(self):
        d = interval_distance(2, EndpointPair(0.525, 0.099), EndpointPair(0, 0))
        assert d == pytest.approx(0.33536099952141, abs=1e-12)
        assert d == pytest.approx(math.sqrt((0.525**2 + 0.099**2 + 0.525 * 0.099) / 3))

    def test_identical(self):
        assert interval_distance(3.7, EndpointPair(1, 2), EndpointPair(1, 2)) == 0.0

    def test_sign_change(self):
        d = lp_line_norm(2, 0.0583, -0.2975)
        assert d == pytest.approx(0.157650340944763, abs=1e-12)
        assert d == pytest.approx(scipy_lp(2, 0.0583, -0.2975), abs=1e-10)

    def test_p_validation(self):
        with pytest.raises(TrifnError):
            interval_distance(1.0, EndpointPair(0, 1), EndpointPair(1, 0))
        with pytest.raises(TrifnError):
            lp_line_norm(math.inf, 1, 2)

    @given(exponent, real, real)
    def test_against_scipy(self, p, e0, e1):
        assert lp_line_norm(p, e0, e1) == pytest.approx(scipy_lp(p, e0, e1), abs=1e-9, rel=1e-9)

    @given(exponent, real, st.floats(-1e-9, 1e-9))
    def test_near_equal_ends(self, p, e0, eps):
        # cancellation-prone region: the scaled form must stay close to |e0|
        d = lp_line_norm(p, e0, e0 + eps)
        assert d == pytest.approx(abs(e0), abs=2e-9)

    @given(real, real, real, real)
    def test_prop3_4_5(self, a, b, c, d):
        assert interval_distance(2, EndpointPair(a, b), EndpointPair(c, d)) == pytest.approx(prop3(a, b, c, d), abs=1e-12)
        assert interval_distance(2, EndpointPair(a, b), EndpointPair(c, c)) == pytest.approx(prop3(a, b, c, c), abs=1e-12)
        assert interval_distance(2, EndpointPair(a, b), EndpointPair(0, 0)) == pytest.approx(prop3(a, b, 0, 0), abs=1e-12)

    @given(real, real, real, real)
    def test_prop6_same_sign(self, a, b, c, d):
        if (a - c) * (b - d) >= 0:
            assert interval_distance(3, EndpointPair(a, b), EndpointPair(c, d)) == pytest.approx(prop6(a, b, c, d), abs=1e-12)

    def test_prop6_fails_across_sign_change(self):
        # the printed p=3 formula drops the absolute value
        a, b = -1.0, 0.5
        exact = interval_distance(3, EndpointPair(a, b), EndpointPair(0, 0))
        assert exact == pytest.approx(scipy_lp(3, b, a), abs=1e-12)
        assert abs(exact - prop6(a, b, 0, 0)) > 1e-2

    @given(exponent, real, real, real, real, real)
    def test_translation(self, p, a, b, c, d, t):
        base = interval_distance(p, EndpointPair(a, b), EndpointPair(c, d))
        moved = interval_distance(p, EndpointPair(a + t, b + t), EndpointPair(c + t, d + t))
        assert moved == pytest.approx(base, abs=1e-12 * (1 + abs(t)) * 10)

    @given(exponent, real, real, real, real, real)
    def test_homogeneity(self, p, a, b, c, d, k):
        base = interval_distance(p, EndpointPair(a, b), EndpointPair(c, d))
        scaled = interval_distance(p, EndpointPair(k * a, k * b), EndpointPair(k * c, k * d))
        assert scaled == pytest.approx(abs(k) * base, abs=1e-11, rel=1e-12)

    @given(exponent, real, real, real, real, real, real)
    def test_axioms(self, p, a, b, c, d, e, z):
        x, y, m = EndpointPair(a, b), EndpointPair(c, d), EndpointPair(e, z)
        dxy = interval_distance(p, x, y)
        assert dxy >= 0
        assert dxy == pytest.approx(interval_distance(p, y, x), abs=1e-12)
        assert interval_distance(p, x, m) + interval_distance(p, m, y) - dxy >= -1e-12


class TestTrifnDistance:
    def test_set1_pair(self, set1):
        d = trifn_distance(2, set1["a"], set1["b"])
        assert d == pytest.approx(0.218574929943944, abs=1e-12)
        assert d == pytest.approx(lp_by_quadrature(2, 0.345, 0.06), abs=1e-10)

    def test_to_origin(self, set1_a):
        assert trifn_distance(2, set1_a, ORIGIN) == pytest.approx(0.335720617974728, abs=1e-12)

    @given(trifns(), st.floats(1.5, 5))
    def test_self(self, n, p):
        assert trifn_distance(p, n, n) == 0.0

    @given(trifns(), trifns(), st.floats(1.1, 5), st.floats(0, 1))
    def test_symmetric_and_branch_free(self, x, y, p, lam):
        ix, iy = va_index(x, lam), va_index(y, lam)
        by_av = interval_distance(p, EndpointPair(ix.ambiguity, ix.value), EndpointPair(iy.ambiguity, iy.value))
        by_va = interval_distance(p, EndpointPair(ix.value, ix.ambiguity), EndpointPair(iy.value, iy.ambiguity))
        assert by_av == by_va
        assert trifn_distance(p, x, y, lam) == trifn_distance(p, y, x, lam)
