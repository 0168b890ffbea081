import random

import pytest
from freediv import a4
from freediv.polmat import is_skew, is_symmetric


def test_shapes(mats):
    assert mats.M.rows == mats.L.rows == mats.N.rows == 5
    assert mats.A.rows == 6
    assert all(is_skew(getattr(mats, n)) for n in "MLN")
    assert is_symmetric(mats.A)


def test_pfaffians_on_curve(mats):
    assert a4.pfaffians_M_on_curve(mats).passed
    assert a4.pfaffians_L_on_curve(mats).passed
    assert a4.printed_relation_match(mats).passed


def test_exactness(mats):
    rep = a4.exactness_checks(mats)
    assert rep.passed, rep.summary()
    assert "c = -24" in rep.get("left_inverse_scalar").details


def test_coefficient_map_shapes(mats):
    mt, l, n = a4.coefficient_maps(mats)
    assert (mt.matrix.rows, mt.matrix.cols) == (10, 5)
    assert (l.matrix.rows, l.matrix.cols) == (5, 10)
    assert (n.matrix.rows, n.matrix.cols) == (5, 10)


def test_A_structure_and_cache(mats, tmp_path, monkeypatch):
    monkeypatch.setenv("FREEDIV_CACHE", str(tmp_path))
    rep = a4.verify_A_structure(mats)
    assert rep.passed, rep.summary()
    d1, h1 = a4.det_A(mats, use_cache=False)
    d2, h2 = a4.det_A(mats)
    assert d1 == d2 and h1 == h2


def test_grassmannian():
    assert a4.grassmannian_check().passed


@pytest.mark.parametrize("ref,expected", [("A[2,3]", ("A", 2, 3)), ("A[t,0]", ("A", 0, 1)),
                                          ("M[1,2]", ("M", 0, 1)), ("N[5, 4]", ("N", 4, 3))])
def test_parse_entry_ref(ref, expected):
    assert a4.parse_entry_ref(ref) == expected


@pytest.mark.parametrize("ref", ["A[1,2]", "M[0,1]", "Q[1,2]", "M[1]", "M[6,1]", "A"])
def test_parse_entry_ref_errors(ref):
    with pytest.raises(ValueError):
        a4.parse_entry_ref(ref)


def test_mutate_keeps_structure(mats):
    m = a4.mutate(mats, "M", 0, 1, 1)
    assert is_skew(m.M) and m.M != mats.M
    a = a4.mutate(mats, "A", 2, 3, 1)
    assert is_symmetric(a.A) and a.A[3, 2] == a.A[2, 3]
    with pytest.raises(ValueError):
        a4.mutate(mats, "A", 0, 0, 1)  # a_tt is zero


@pytest.mark.parametrize("seed", range(6))
def test_symbolic_catches_MLN_mutations(mats, seed):
    rng = random.Random(seed)
    while True:
        mutated, desc = a4.random_mutation(rng, mats)
        if not desc.startswith("A"):
            break
    rep = a4.symbolic_suite(mutated)
    assert not rep.passed, desc
