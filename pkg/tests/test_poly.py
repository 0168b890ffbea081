import sympy
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

import pytest
from freediv.poly import (
    MultiPoly,
    PolyParseError,
    TableMismatchError,
    TermBudgetExceeded,
    UnknownVariableError,
    divide_exact,
    parse_poly,
    probably_squarefree,
    substitute,
    sylvester_resultant,
    term_budget,
    weighted_degree,
)

T = ("x", "y", "z")
SX, SY, SZ = sympy.symbols("x y z")


def to_sympy(p: MultiPoly):
    return sympy.parse_expr(str(p).replace("^", "**"), {"x": SX, "y": SY, "z": SZ})


monomial = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
coeff = st.fractions(min_value=-20, max_value=20, max_denominator=7)
polys = st.lists(st.tuples(monomial, coeff), max_size=6).map(
    lambda items: MultiPoly.from_terms(T, [(e, mpq(c.numerator, c.denominator)) for e, c in items]))


@settings(max_examples=150, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == MultiPoly.zero(T)


@settings(max_examples=150, deadline=None)
@given(polys, polys)
def test_product_matches_sympy(p, q):
    assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0


@settings(max_examples=150, deadline=None)
@given(polys)
def test_print_parse_roundtrip(p):
    assert parse_poly(str(p), T) == p


@settings(max_examples=100, deadline=None)
@given(polys, polys)
def test_leibniz(p, q):
    for v in T:
        assert (p * q).derivative(v) == p.derivative(v) * q + p * q.derivative(v)


@settings(max_examples=100, deadline=None)
@given(polys, polys)
def test_exact_division_recovers_factor(p, q):
    if q.is_zero():
        return
    assert divide_exact(p * q, q) == p


def test_parse_and_print():
    p = parse_poly("3*x^2*y - 1/2*z + x^2*y", T)
    assert str(p) == "4*x^2*y - 1/2*z"
    assert parse_poly("-x", T) == -MultiPoly.var("x", T)


@pytest.mark.parametrize("text", ["x*+", "x^", "2**x", "x y", "(x)", ""])
def test_parse_errors(text):
    with pytest.raises(PolyParseError):
        parse_poly(text, T)


def test_unknown_variable_and_table_mismatch():
    with pytest.raises(PolyParseError, match="unknown variable"):
        parse_poly("w", T)
    with pytest.raises(UnknownVariableError):
        MultiPoly.var("w", T)
    with pytest.raises(TableMismatchError):
        MultiPoly.var("x", ("x",)) + MultiPoly.var("y", ("y",))


def test_division_failure_returns_none():
    assert divide_exact(parse_poly("x^2 + 1", T), parse_poly("x + 1", T)) is None


def test_substitute_and_weights():
    p = parse_poly("x^2*y + z", T)
    q = substitute(p, {"x": parse_poly("y + z", T)}, T)
    assert q == parse_poly("y^3 + 2*y^2*z + y*z^2 + z", T)
    assert weighted_degree(parse_poly("x^2*y", T), {"x": 2, "y": 3, "z": 1}) == 7
    assert weighted_degree(parse_poly("x + y", T), {"x": 2, "y": 3, "z": 1}) is None


def test_resultant_quadratic():
    t = ("x", "a", "b", "c")
    f = parse_poly("a*x^2 + b*x + c", t)
    res = sylvester_resultant(f, f.derivative("x"), "x")
    assert res == parse_poly("4*a^2*c - a*b^2", t)


def test_squarefree_monte_carlo():
    assert probably_squarefree(parse_poly("x*y*z + x^3 + y^2", T), seed=1)
    assert not probably_squarefree(parse_poly("x^2*y + 2*x*y^2 + y^3", T), seed=1)


def test_term_budget():
    p = parse_poly("x + y + z + 1", T)
    with pytest.raises(TermBudgetExceeded):
        with term_budget(10):
            p ** 6
