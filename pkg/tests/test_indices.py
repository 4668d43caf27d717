import pytest
from hypothesis import given
from hypothesis import strategies as st

from ifnrank import ORIGIN, Trifn, TrifnError, add, components, scale, va_index
from ifnrank.oracle import ambiguity_by_quadrature, value_by_quadrature

from conftest import trifns


def test_set1_a_components(set1_a):
    c = components(set1_a)
    assert c.v_mu == pytest.approx(0.49)
    assert c.v_nu == pytest.approx(0.56)
    assert c.a_mu == pytest.approx(0.28 / 3)
    assert c.a_nu == pytest.approx(0.32 / 3)
    assert c.v_mu == pytest.approx(value_by_quadrature(set1_a, "membership"), abs=1e-12)


def test_origin_components():
    c = components(ORIGIN)
    assert (c.v_mu, c.v_nu, c.a_mu, c.a_nu) == (0.0, 0.0, 0.0, 0.0)


def test_set2_a():
    c = components(Trifn(0.10, 0.19, 0.25, 0.30, 0.7, 0.2))
    assert c.v_mu == pytest.approx(0.149333333333, abs=1e-10)
    assert c.v_nu == pytest.approx(0.170666666667, abs=1e-10)
    assert (c.v_mu + c.v_nu) / 2 == pytest.approx(0.1599, abs=2e-3)


def test_table_values(set1):
    a = va_index(set1["a"])
    assert a.value == pytest.approx(0.5250)
    assert a.ambiguity == pytest.approx(0.1000)
    b = va_index(set1["b"], 0.5)
    assert (b.value, b.ambiguity) == pytest.approx((0.1800, 0.0400))


@given(trifns())
def test_lambda_endpoints(n):
    c = components(n)
    assert (va_index(n, 0).value, va_index(n, 0).ambiguity) == (c.v_mu, c.a_nu)
    lo, hi = va_index(n, 1), c
    assert lo.value == pytest.approx(hi.v_nu, abs=1e-12)
    assert lo.ambiguity == pytest.approx(hi.a_mu, abs=1e-12)


@pytest.mark.parametrize("lam", [-0.1, 1.5])
def test_lambda_range(set1_a, lam):
    with pytest.raises(TrifnError):
        va_index(set1_a, lam)


@given(trifns(), st.floats(0, 1), st.floats(0, 1))
def test_lambda_monotone(n, s, t):
    lo, hi = sorted((s, t))
    # V moves toward v_nu, which lies above v_mu only for a non-negative location
    direction = 1 if components(n).v_nu >= components(n).v_mu else -1
    assert direction * (va_index(n, hi).value - va_index(n, lo).value) >= -1e-12
    assert va_index(n, lo).ambiguity >= va_index(n, hi).ambiguity - 1e-12


@given(trifns())
def test_component_order(n):
    c = components(n)
    assert c.a_mu >= 0
    assert c.a_mu <= c.a_nu + 1e-12
    # v_mu <= v_nu only when the location term is non-negative
    loc = (n.a1 + n.a4 + 2 * (n.a2 + n.a3)) / 6
    if loc >= 0:
        assert c.v_mu <= c.v_nu + 1e-12


@given(trifns(), st.floats(-5, 5))
def test_translation(n, t):
    shifted = add(n, Trifn.crisp(t, n.w, n.u))
    expected = va_index(n).value + t * (n.w + 1 - n.u) / 2
    assert va_index(shifted).value == pytest.approx(expected, abs=1e-9)
    assert va_index(shifted).ambiguity == pytest.approx(va_index(n).ambiguity, abs=1e-9)


@given(trifns(), st.floats(0.01, 50))
def test_homogeneity(n, k):
    c, ck = components(n), components(scale(k, n))
    for x, y in zip((c.v_mu, c.v_nu, c.a_mu, c.a_nu), (ck.v_mu, ck.v_nu, ck.a_mu, ck.a_nu)):
        assert y == pytest.approx(k * x, abs=1e-9, rel=1e-12)


@given(trifns(), st.floats(0, 1))
def test_negation(n, lam):
    pos, neg = va_index(n, lam), va_index(scale(-1, n), lam)
    assert neg.value == pytest.approx(-pos.value, abs=1e-12)
    assert neg.ambiguity == pytest.approx(pos.ambiguity, abs=1e-12)


@given(trifns())
def test_matches_quadrature(n):
    c = components(n)
    assert c.v_mu == pytest.approx(value_by_quadrature(n, "membership"), abs=1e-9)
    assert c.v_nu == pytest.approx(value_by_quadrature(n, "nonmembership"), abs=1e-9)
    assert c.a_mu == pytest.approx(ambiguity_by_quadrature(n, "membership"), abs=1e-9)
    assert c.a_nu == pytest.approx(ambiguity_by_quadrature(n, "nonmembership"), abs=1e-9)
