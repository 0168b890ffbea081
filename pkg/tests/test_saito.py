import json

from freediv.bezout import modified_bezout_matrix, specialize, s_vars
from freediv.polmat import PolyMatrix, determinant
from freediv.poly import MultiPoly, parse_poly
from freediv.saito import FAILED, check_discriminant_matrix, check_logarithmic_field, fixture_suite

T = ("x", "y")


def test_fixtures():
    rep = fixture_suite(seed=3)
    assert rep.passed, rep.summary()


def test_cusp_discriminant_matrix():
    # the A2 discriminant 4a^3 + 27b^2 with its standard logarithmic fields
    t = ("a", "b")
    f = parse_poly("4*a^3 + 27*b^2", t)
    a = PolyMatrix([[parse_poly("2*a", t), parse_poly("-9*b", t)],
                    [parse_poly("3*b", t), parse_poly("2*a^2", t)]], t)
    r = check_discriminant_matrix(f, a)
    assert r.certified, r


def test_wrong_determinant_fails():
    f = parse_poly("x*y", T)
    a = PolyMatrix.diagonal([MultiPoly.var("x", T), MultiPoly.var("x", T)])
    r = check_discriminant_matrix(f, a)
    assert r.overall == FAILED and not r.det_matches


def test_nonreduced_divisor_fails_squarefree():
    f = parse_poly("x^2*y", T)
    a = PolyMatrix.diagonal([parse_poly("x^2", T), MultiPoly.var("y", T)])
    r = check_discriminant_matrix(f, a, seed=0)
    assert r.squarefree_verdict == "false" and r.overall == FAILED


def test_skip_squarefree_is_inconclusive():
    f = parse_poly("x*y", T)
    r = check_discriminant_matrix(f, PolyMatrix.diagonal([MultiPoly.var("x", T), MultiPoly.var("y", T)]),
                                  check_squarefree=False)
    assert r.overall == "inconclusive"
    assert json.loads(r.to_json())["det_matches"] is True


def test_logarithmic_field():
    f = parse_poly("x*y", T)
    assert check_logarithmic_field(f, [MultiPoly.var("x", T), 0])
    assert not check_logarithmic_field(f, [1, 0])


def test_bezout_prime_is_discriminant_matrix():
    for n in (2, 3):
        rest = s_vars(n, 1)
        bp = specialize(modified_bezout_matrix(n), {"s0": 1}, rest)
        assert check_discriminant_matrix(determinant(bp), bp, seed=1).certified
