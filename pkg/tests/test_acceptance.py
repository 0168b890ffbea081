"""Acceptance criteria 1-14, one PASS/FAIL line each.

Criteria 1, 5 and 11 contain identities that do not hold as stated; those
tests fail on purpose and their lines show the measured values.
"""

import random
import time

import numpy as np
import pytest

from freediv import a4
from freediv.bezout import (
    bezout_matrix,
    bprime_ratio,
    measured_constant,
    modified_bezout_matrix,
    s_vars,
    specialize,
    vandermonde_identities,
    verify_section5,
)
from freediv.numerics import DEFAULT_TAUS, build_context, frobenius_stickelberger_check, numeric_suite
from freediv.polmat import determinant
from freediv.poly import weighted_degree
from freediv.saito import check_discriminant_matrix, fixture_suite
from freediv.wp import formal_suite

SEED = 0


@pytest.fixture
def line(capsys):
    def emit(k: int, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\ncriterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return emit


def test_c01_bezout_identity(line):
    t0 = time.perf_counter()
    ratios = {n: bprime_ratio(n) for n in (2, 3, 4, 5)}
    dt = time.perf_counter() - t0
    ok = all(r == 1 for r in ratios.values()) and dt < 30
    line(1, ok, "det B' / (s0^2 det B): " + ", ".join(f"n={n}: {r}" for n, r in ratios.items())
         + f" ({dt:.1f}s)")


def test_c02_homogeneity(line):
    bad = []
    for n in range(2, 7):
        d = determinant(bezout_matrix(n))
        sv = s_vars(n)
        if weighted_degree(d, {v: 1 for v in sv}) != 2 * n - 2 or \
                weighted_degree(d, {f"s{i}": i for i in range(n + 1)}) != n * (n - 1):
            bad.append(n)
    line(2, not bad, f"degree 2n-2 and weight n(n-1) for n = 2..6; failures {bad}")


def test_c03_discriminant_oracle(line):
    consts = {n: measured_constant(n) for n in range(2, 7)}
    again = {n: measured_constant(n) for n in range(2, 7)}
    ok = all(c is not None and c != 0 for c in consts.values()) and consts == again
    line(3, ok, "constants " + ", ".join(f"n={n}: {c}" for n, c in consts.items()))


def test_c04_gram(line):
    res = {n: verify_section5(n, seed=SEED) for n in (2, 3, 4)}
    ok = all(r.get("c_gram").status == "pass" for r in res.values())
    # det(M M^T) = prod (r_i - r_j)^2 follows from det V^2; checked in criterion 5's det_V
    from freediv.bezout import difference_product, gram_matrix_from_roots
    ok_det = all(determinant(gram_matrix_from_roots(n)[1]) == difference_product(n, squared=True)
                 for n in (2, 3, 4))
    line(4, ok and ok_det, f"B'|s0=1(s(r)) = M M^T: {ok}; det = prod (r_i - r_j)^2: {ok_det}")


def test_c05_vandermonde(line):
    reps = {n: vandermonde_identities(n) for n in (2, 3, 4)}
    status = {n: {c.id: c.status for c in r.checks} for n, r in reps.items()}
    ok = all(s["det_V"] == s["VtM_entries"] == s["det_VtM"] == "pass" for s in status.values())
    detail = "; ".join(f"n={n}: det V {s['det_V']}, det(V^T M) as (-1)^n {s['det_VtM']}, "
                       f"as (-1)^(n(n+1)/2) {s['det_VtM_sign']}" for n, s in status.items())
    line(5, ok, detail)


def test_c06_saito(line):
    verdicts = {}
    for n in (2, 3, 4):
        bp = specialize(modified_bezout_matrix(n), {"s0": 1}, s_vars(n, 1))
        verdicts[n] = check_discriminant_matrix(determinant(bp), bp, seed=SEED).overall
    fx = fixture_suite(SEED)
    ok = all(v == "free_divisor_certified" for v in verdicts.values()) and fx.passed
    line(6, ok, f"B'|s0=1: {verdicts}; fixtures {'pass' if fx.passed else 'fail'}")


def test_c07_wp_formal(line):
    rep = formal_suite()
    line(7, rep.passed, f"{sum(c.status == 'pass' for c in rep.checks)}/{len(rep.checks)} formal checks")


def test_c08_pfaffians(mats, line):
    t0 = time.perf_counter()
    m = a4.pfaffians_M_on_curve(mats)
    l = a4.pfaffians_L_on_curve(mats)
    dt = time.perf_counter() - t0
    line(8, m.passed and l.passed and dt < 10,
         f"M sub-Pfaffians on the curve (y0 -> 1, y2..y5 -> wp..wp'''): {'pass' if m.passed else 'fail'}; "
         f"L under x_k: {'pass' if l.passed else 'fail'} ({dt:.2f}s)")


def test_c09_exact_sequence(mats, line):
    rep = a4.exactness_checks(mats)
    line(9, rep.passed, "; ".join(f"{c.id} {c.status}" for c in rep.checks)
         + f"; c frozen at {a4.EXPECTED_C}")


def test_c10_A_structure(mats, line, tmp_path, monkeypatch):
    monkeypatch.setenv("FREEDIV_CACHE", str(tmp_path))
    t0 = time.perf_counter()
    rep = a4.verify_A_structure(mats)
    dt = time.perf_counter() - t0
    line(10, rep.passed and dt < 60, "; ".join(f"{c.id} {c.status}" for c in rep.checks)
         + f" (uncached {dt:.2f}s)")


def test_c11_numeric_elliptic(line):
    rep = numeric_suite(DEFAULT_TAUS, samples=20, seed=SEED)
    wanted = ("g3_at_i", "g2_at_rho", "ode_residual", "qseries_vs_lattice")
    base = [c for c in rep.checks if c.id.split(".")[-1] in wanted]
    fs = [c for c in rep.checks if ".fs." in c.id]
    base_ok = len(base) == 2 + 2 * len(DEFAULT_TAUS) and all(c.status == "pass" for c in base)
    fs_ok = all(c.status == "pass" for c in fs)
    printed = [c.details.split("=")[-1].split("(")[0].strip() for c in fs if c.id.endswith("_printed")]
    line(11, base_ok and fs_ok,
         f"invariants/ODE/q-vs-lattice: {'pass' if base_ok else 'fail'}; printed dg/dtau relative errors "
         f"{', '.join(printed)} (tol 1e-5); E2-corrected forms and second-order decay pass")


@pytest.fixture(scope="module")
def numeric_report():
    return numeric_suite(DEFAULT_TAUS, samples=20, n_random=50, seed=SEED)


def test_c12_dual_variety(numeric_report, line):
    cs = [c for c in numeric_report.checks if c.id.split(".")[-1] in ("tangent_residual", "random_residual")]
    ok = len(cs) == 2 * len(DEFAULT_TAUS) and all(c.status == "pass" for c in cs)
    worst_t = max(float(c.details.split("= ")[1].split()[0]) for c in cs if c.id.endswith("tangent_residual"))
    min_r = min(float(c.details.split("= ")[1].split()[0]) for c in cs if c.id.endswith("random_residual"))
    line(12, ok, f"3 taus x 20 tangent / 50 random: max tangent {worst_t:.2e} (< 1e-6), "
                 f"min random {min_r:.2e} (> 1e-2)")


def test_c13_log_tangency(numeric_report, line):
    on = [c for c in numeric_report.checks if c.id.endswith("log_tangency")]
    off = [c for c in numeric_report.checks if c.id.endswith("log_off_divisor")]
    ok = all(c.status == "pass" for c in on + off) and len(on) == len(DEFAULT_TAUS)
    worst = max(float(c.details.split("= ")[1].split()[0]) for c in on)
    med = min(float(c.details.split("= ")[1].split()[0]) for c in off)
    line(13, ok, f"max normalised (grad det A) A on the divisor {worst:.2e} (< 1e-5); "
                 f"smallest off-divisor median {med:.2f}")


def test_c14_mutation_sensitivity(mats, line):
    rng = random.Random(SEED)
    missed, kinds = [], {}
    for _ in range(20):
        mutated, desc = a4.random_mutation(rng, mats)
        kinds[desc[0]] = kinds.get(desc[0], 0) + 1
        if a4.symbolic_suite(mutated).passed and not _numeric_catches(mutated):
            missed.append(desc)
    line(14, not missed, f"20 mutations {kinds}; undetected: {missed or 'none'}")


def _numeric_catches(mutated) -> bool:
    rep = numeric_suite(DEFAULT_TAUS, samples=10, n_random=20, seed=SEED, mats=mutated)
    # the printed-form FS checks fail regardless of the matrices; ignore them here
    return any(".fs." not in c.id for c in rep.failures())
