import cmath

import numpy as np

import pytest
from freediv import a4
from freediv.numerics import (
    DetA,
    DomainError,
    build_context,
    dual_variety_residual,
    format_complex,
    frobenius_stickelberger_check,
    g2_g3_lattice,
    g2_g3_qseries,
    numeric_logarithmic_check,
    numeric_suite,
    ode_residual,
    parse_complex,
    tangent_hyperplane,
    wp_eval,
)

RHO = cmath.exp(1j * cmath.pi / 3)


@pytest.mark.parametrize("text,value", [("1.1i", 1.1j), ("0.3+1.2i", 0.3 + 1.2j), ("-i", -1j),
                                        ("2", 2), ("1e-1-2.5e0i", 0.1 - 2.5j)])
def test_parse_complex(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("text", ["", "1+", "i+i", "abc", "1.1k"])
def test_parse_complex_errors(text):
    with pytest.raises(ValueError):
        parse_complex(text)


def test_format_roundtrip():
    assert parse_complex(format_complex(0.3 + 1.2j)) == 0.3 + 1.2j


def test_square_and_hexagonal_lattices():
    g2, g3 = g2_g3_qseries(1j)
    assert abs(g3) < 1e-10 * abs(g2)
    g2, g3 = g2_g3_qseries(RHO)
    assert abs(g2) < 1e-10 * abs(g3)


def test_known_value_at_i():
    # closed form for the square lattice Z + iZ
    from math import gamma, pi
    g2, _ = g2_g3_qseries(1j)
    assert abs(g2 - gamma(0.25) ** 8 / (16 * pi ** 2)) < 1e-9 * abs(g2)


@pytest.mark.parametrize("tau", [1.1j, 0.3 + 1.2j, -0.4 + 0.95j])
def test_qseries_vs_lattice(tau):
    q = np.array(g2_g3_qseries(tau))
    l = np.array(g2_g3_lattice(tau))
    assert np.max(np.abs(q - l)) < 1e-6 * np.max(np.abs(q))


def test_modular_invariance():
    tau = 0.3 + 1.2j
    g2, g3 = g2_g3_qseries(tau)
    g2s, g3s = g2_g3_qseries(-1 / tau)
    assert abs(g2s - tau ** 4 * g2) < 1e-10 * abs(g2s)
    assert abs(g3s - tau ** 6 * g3) < 1e-10 * abs(g3s)


def test_domain_errors():
    with pytest.raises(DomainError):
        build_context(1.1 - 0.5j)
    with pytest.raises(DomainError):
        build_context(1.1j, series_terms=4)
    ctx = build_context(1.1j)
    with pytest.raises(DomainError):
        wp_eval(ctx, ctx.shortest)
    with pytest.raises(DomainError):
        wp_eval(ctx, 0)


def test_ode_and_parity():
    ctx = build_context(0.3 + 1.2j)
    for z in (0.1 + 0.05j, 0.2 - 0.1j, -0.3j):
        w = wp_eval(ctx, z)
        assert ode_residual(ctx, w) < 1e-9
        assert abs(wp_eval(ctx, -z).wp - w.wp) < 1e-12 * abs(w.wp)


def test_lattice_context_matches():
    a = build_context(1.1j)
    b = build_context(1.1j, series_terms=200, method="lattice_sum")
    assert abs(wp_eval(a, 0.2).wp - wp_eval(b, 0.2).wp) < 1e-6


def test_fs_corrected_forms_and_decay():
    rep = frobenius_stickelberger_check(0.3 + 1.2j)
    assert rep.get("dg_dtau_with_E2").status == "pass"
    assert rep.get("second_order_decay").status == "pass"


def test_tangent_vs_random(mats):
    ctx = build_context(1.1j)
    det = DetA(mats)
    h = tangent_hyperplane(ctx, 0.25 + 0.1j, 1.0, 0.5j, -0.3)
    assert dual_variety_residual(ctx, h, det=det) < 1e-6
    rep = numeric_logarithmic_check(ctx, h, det)
    assert rep.get("grad_times_A").status == "pass"
    assert rep.get("slice_euler_column").status == "pass"


def test_suite_deterministic(mats):
    r1 = numeric_suite(taus=(1.1j,), samples=5, mats=mats, seed=4)
    r2 = numeric_suite(taus=(1.1j,), samples=5, mats=mats, seed=4)
    assert [c.as_dict() for c in r1.checks] == [c.as_dict() for c in r2.checks]


def test_localizer_names_mutated_entry(mats):
    mutated = a4.mutate(mats, "A", 3, 4, 1)
    rep = numeric_suite(taus=(0.3 + 1.2j,), samples=10, mats=mutated)
    bad = [c for c in rep.failures() if c.id.endswith("columns_tangent")]
    assert bad and bad[0].witness == "suspected entry A[3,4]"
