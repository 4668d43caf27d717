import pytest
from hypothesis import given
from hypothesis import strategies as st

from ifnrank import ORIGIN, Trifn
from ifnrank.oracle import (
    QuadratureError,
    QuadratureSpec,
    ambiguity_by_quadrature,
    composite_simpson,
    integrate,
    lp_by_quadrature,
    value_by_quadrature,
)

from conftest import trifns


def test_value_examples(set1_a):
    assert value_by_quadrature(set1_a, "membership") == pytest.approx(0.49, abs=1e-12)
    assert value_by_quadrature(ORIGIN, "membership") == 0.0
    assert value_by_quadrature(Trifn(0.12, 0.2, 0.23, 0.28, 0.8, 0.1), "nonmembership") == pytest.approx(0.189, abs=1e-12)


def test_ambiguity_examples(set1_a):
    assert ambiguity_by_quadrature(set1_a, "membership") == pytest.approx(0.28 / 3, abs=1e-12)
    assert ambiguity_by_quadrature(ORIGIN, "membership") == 0.0
    assert ambiguity_by_quadrature(ORIGIN, "nonmembership") == 0.0
    c = Trifn(0.2, 0.4, 0.5, 0.9, 0.5, 0.3)
    assert ambiguity_by_quadrature(c, "nonmembership") == pytest.approx(0.21, abs=1e-12)


def test_bad_side(set1_a):
    with pytest.raises(ValueError):
        value_by_quadrature(set1_a, "both")


def test_lp_examples():
    assert lp_by_quadrature(2, 0.18, 0.18) == pytest.approx(0.18, abs=1e-14)
    assert lp_by_quadrature(2, 0.0583, -0.2975) == pytest.approx(0.157650340944763, abs=1e-10)
    assert lp_by_quadrature(3, 0.099, 0.525) == pytest.approx(0.35443726489135, abs=1e-10)
    assert lp_by_quadrature(2.5, 0.0, 0.0) == 0.0


@pytest.mark.parametrize("panels", [2, 4, 10])
def test_simpson_exact_on_quadratics(panels):
    f = lambda x: 3 * x * x - 2 * x + 0.5
    assert composite_simpson(f, -1.0, 2.0, panels) == pytest.approx(9 - 3 + 1.5, abs=1e-12)


@given(trifns())
def test_simpson_exact_for_cut_integrands(n):
    coarse = QuadratureSpec("composite-simpson", abs_tol=1e-3, max_depth=1)
    fine = QuadratureSpec("adaptive-bisection", abs_tol=1e-13)
    for side in ("membership", "nonmembership"):
        assert value_by_quadrature(n, side, coarse) == pytest.approx(value_by_quadrature(n, side, fine), abs=1e-12)


def test_non_convergence():
    spec = QuadratureSpec("adaptive-bisection", abs_tol=1e-15, max_depth=2)
    with pytest.raises(QuadratureError):
        integrate(lambda x: abs(x - 0.3) ** 0.5, 0.0, 1.0, spec)
    spec = QuadratureSpec("composite-simpson", abs_tol=1e-15, max_depth=2)
    with pytest.raises(QuadratureError):
        integrate(lambda x: abs(x - 0.3) ** 0.5, 0.0, 1.0, spec)


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec("trapezoid")
    with pytest.raises(ValueError):
        QuadratureSpec(abs_tol=0)
    with pytest.raises(ValueError):
        QuadratureSpec(max_depth=0)
