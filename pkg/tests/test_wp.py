from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

import pytest
from freediv.poly import MultiPoly
from freediv.wp import W_TABLE, WElement, cubic, d_dz, formal_suite, w_arith, wp_derivative

mono = st.tuples(st.integers(0, 3), st.integers(0, 2), st.integers(0, 1))
coef = st.integers(-5, 5)
part = st.lists(st.tuples(mono, coef), max_size=3).map(lambda items: MultiPoly.from_terms(W_TABLE, items))
elements = st.builds(WElement, part, part)


@settings(max_examples=1000, deadline=None)
@given(elements, elements)
def test_d_dz_is_a_derivation(e1, e2):
    assert d_dz(e1 * e2) == d_dz(e1) * e2 + e1 * d_dz(e2)
    assert d_dz(e1 + e2) == d_dz(e1) + d_dz(e2)


@settings(max_examples=200, deadline=None)
@given(elements, elements, elements)
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert w_arith(a, b, "mul") == b * a


def test_wp1_squared_reduces():
    assert WElement.wp1() ** 2 == WElement(cubic())
    assert WElement.parse("wp1^3") == WElement(0, cubic())


def test_printed_derivatives():
    assert wp_derivative(2) == WElement.parse("6*wp^2 - 1/2*g2")
    assert wp_derivative(3) == WElement.parse("12*wp*wp1")


def test_weights():
    for k in range(8):
        assert wp_derivative(k).weight() == k + 2
    assert WElement.parse("wp + g2").weight() is None


def test_errors():
    with pytest.raises(ValueError):
        wp_derivative(-1)
    with pytest.raises(ValueError):
        w_arith(WElement(1), WElement(2), "div")
    with pytest.raises(ValueError):
        WElement.wp() ** -1


def test_formal_suite():
    rep = formal_suite()
    assert rep.passed, rep.summary()
    assert len(rep.checks) == 10


def test_scale():
    assert WElement.wp().scale(mpq(1, 2)) == WElement.parse("1/2*wp")
