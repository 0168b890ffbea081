"""Double-precision elliptic functions and the numeric dual-variety tests.

The lattice is Z + tau*Z.  g2 and g3 come from the Eisenstein q-expansions
(or, as an independent oracle, from the truncated lattice sums), and wp from
its Laurent series at the origin, so every evaluation point must lie in a
disc well inside the shortest lattice vector.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import a4
from .poly import MultiPoly, _unpack
from .report import CheckReport

__all__ = [
    "DomainError",
    "EllipticContext",
    "HyperplaneCoords",
    "WpValues",
    "build_context",
    "dual_variety_residual",
    "frobenius_stickelberger_check",
    "numeric_logarithmic_check",
    "numeric_suite",
    "parse_complex",
    "tangent_hyperplane",
    "wp_eval",
]

PI = math.pi
TWO_PI_I = 2j * PI
LAURENT_TERMS = 64
DEFAULT_TAUS = (1.1j, 0.3 + 1.2j, cmath.exp(1j * PI / 3) + 0.01j)


class DomainError(ValueError):
    pass


_COMPLEX_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")


def parse_complex(text: str) -> complex:
    """Parse "a+bi", "bi", "a", "i" or "-i" (a, b decimals)."""
    t = text.strip().replace(" ", "")
    if not t:
        raise ValueError("empty complex literal")
    if t.endswith(("i", "j")):
        body = t[:-1]
        # split at the last sign that is not part of an exponent
        k = max(body.rfind("+"), body.rfind("-"))
        while k > 0 and body[k - 1] in "eE":
            k = max(body.rfind("+", 0, k - 1), body.rfind("-", 0, k - 1))
        re_part, im_part = (body[:k], body[k:]) if k > 0 else ("", body)
        if im_part in ("", "+", "-"):
            im_part += "1"
        if (re_part and not _COMPLEX_RE.match(re_part)) or not _COMPLEX_RE.match(im_part):
            raise ValueError(f"malformed complex literal {text!r}")
        return complex(float(re_part) if re_part else 0.0, float(im_part))
    if not _COMPLEX_RE.match(t):
        raise ValueError(f"malformed complex literal {text!r}")
    return complex(float(t), 0.0)


def format_complex(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


# ---------------------------------------------------------------------------
# invariants

def _sigma(n: int, k: int) -> int:
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def _sigma_table(terms: int, k: int) -> np.ndarray:
    return np.array([_sigma(n, k) for n in range(1, terms + 1)], dtype=float)


def _q_powers(tau: complex, terms: int) -> np.ndarray:
    return np.exp(TWO_PI_I * tau * np.arange(1, terms + 1))


def g2_g3_qseries(tau: complex, terms: int = 64) -> tuple[complex, complex]:
    """g2 = (4 pi^4/3) E4, g3 = (8 pi^6/27) E6 with q = exp(2 pi i tau)."""
    q = _q_powers(tau, terms)
    e4 = 1 + 240 * np.sum(_sigma_table(terms, 3) * q)
    e6 = 1 - 504 * np.sum(_sigma_table(terms, 5) * q)
    return complex(4 * PI ** 4 / 3 * e4), complex(8 * PI ** 6 / 27 * e6)


def e2_qseries(tau: complex, terms: int = 64) -> complex:
    return complex(1 - 24 * np.sum(_sigma_table(terms, 1) * _q_powers(tau, terms)))


def _lattice_raw(tau: complex, n: int) -> tuple[complex, complex]:
    r = np.arange(-n, n + 1)
    w = r[:, None] + tau * r[None, :]
    w[n, n] = 1.0
    inv2 = 1.0 / (w * w)
    inv2[n, n] = 0.0
    inv4 = inv2 * inv2
    return complex(60 * inv4.sum()), complex(140 * (inv4 * inv2).sum())


def g2_g3_lattice(tau: complex, n: int = 200, extrapolate: bool = True) -> tuple[complex, complex]:
    """Truncated lattice sums over |m|, |n| <= n.

    The truncation tail decays like n^(2-k) for the weight-k sum, so one
    Richardson step with ratio 2^(k-2) removes the leading error.
    """
    g2, g3 = _lattice_raw(tau, n)
    if not extrapolate:
        return g2, g3
    h2, h3 = _lattice_raw(tau, n // 2)
    return (4 * g2 - h2) / 3, (16 * g3 - h3) / 15


def _reduced_basis(tau: complex) -> tuple[complex, complex]:
    """Lagrange-Gauss reduction of (1, tau)."""
    a, b = complex(1), complex(tau)
    if abs(b) < abs(a):
        a, b = b, a
    while True:
        mu = round((b * a.conjugate()).real / abs(a) ** 2)
        b = b - mu * a
        if abs(b) >= abs(a):
            return a, b
        a, b = b, a


@dataclass(frozen=True)
class EllipticContext:
    tau: complex
    g2: complex
    g3: complex
    series_terms: int
    built_by: str
    shortest: float
    laurent: tuple = field(repr=False, compare=False, default=())

    @property
    def safe_radius(self) -> float:
        return 0.45 * self.shortest


def laurent_coefficients(g2: complex, g3: complex, n: int = LAURENT_TERMS) -> np.ndarray:
    """c[k] for k = 0..n-1 with wp = z^-2 + sum_{k>=2} c_k z^(2k-2); c[0] = c[1] = 0."""
    c = np.zeros(n, dtype=complex)
    c[2] = g2 / 20
    c[3] = g3 / 28
    for k in range(4, n):
        c[k] = 3 / ((2 * k + 1) * (k - 3)) * np.dot(c[2:k - 1], c[k - 2:1:-1])
    return c


def _laurent_tangent(g2, g3, d2, d3, n: int = LAURENT_TERMS) -> np.ndarray:
    """Directional derivative of the Laurent coefficients along (d2, d3) in (g2, g3)."""
    c = laurent_coefficients(g2, g3, n)
    dc = np.zeros(n, dtype=complex)
    dc[2] = d2 / 20
    dc[3] = d3 / 28
    for k in range(4, n):
        dc[k] = 3 / ((2 * k + 1) * (k - 3)) * 2 * np.dot(dc[2:k - 1], c[k - 2:1:-1])
    return dc


def build_context(tau: complex, series_terms: int = 64, method: str = "q_series") -> EllipticContext:
    tau = complex(tau)
    if not tau.imag > 0:
        raise DomainError(f"tau must lie in the upper half-plane, got {format_complex(tau)}")
    if series_terms < 8:
        raise DomainError("series_terms must be at least 8")
    if method == "q_series":
        g2, g3 = g2_g3_qseries(tau, series_terms)
    elif method == "lattice_sum":
        g2, g3 = g2_g3_lattice(tau, series_terms)
    else:
        raise ValueError(f"unknown method {method!r}; use q_series or lattice_sum")
    if not (cmath.isfinite(g2) and cmath.isfinite(g3)):
        raise DomainError("g2/g3 not finite")
    a, _ = _reduced_basis(tau)
    return EllipticContext(tau, g2, g3, series_terms, method, abs(a),
                           tuple(laurent_coefficients(g2, g3)))


# ---------------------------------------------------------------------------
# the Weierstrass function near the origin

@dataclass(frozen=True)
class WpValues:
    z: complex
    wp: complex
    wp1: complex
    wp2: complex
    wp3: complex
    wp4: complex

    def derivatives(self) -> tuple[complex, ...]:
        return (self.wp, self.wp1, self.wp2, self.wp3, self.wp4)


def _check_z(ctx: EllipticContext, z: np.ndarray) -> None:
    r = np.abs(z)
    if np.any(r >= ctx.safe_radius) or np.any(r < 1e-3):
        raise DomainError(f"z must satisfy 1e-3 <= |z| < {ctx.safe_radius:.6g} (0.45 x shortest period)")


def _series(coeffs, z: np.ndarray, order: int) -> np.ndarray:
    """d^order/dz^order of sum_k coeffs[k] z^(2k-2) for k >= 2, vectorised over z."""
    n = len(coeffs)
    k = np.arange(2, n)
    p = 2 * k - 2
    fall = np.ones(len(k))
    for j in range(order):
        fall = fall * (p - j)
    expo = p - order
    keep = fall != 0
    zz = z[..., None] ** expo[keep]
    return (zz * (np.asarray(coeffs)[2:][keep] * fall[keep])).sum(axis=-1)


def wp_eval_many(ctx: EllipticContext, z) -> np.ndarray:
    """Rows (wp, wp1, wp2, wp3, wp4) for an array of z."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    _check_z(ctx, z)
    c = ctx.laurent
    wp = z ** -2 + _series(c, z, 0)
    wp1 = -2 * z ** -3 + _series(c, z, 1)
    wp2 = 6 * z ** -4 + _series(c, z, 2)
    wp3 = -24 * z ** -5 + _series(c, z, 3)
    wp4 = 120 * wp ** 3 - 18 * ctx.g2 * wp - 12 * ctx.g3
    return np.stack([wp, wp1, wp2, wp3, wp4])


def wp_eval(ctx: EllipticContext, z: complex) -> WpValues:
    v = wp_eval_many(ctx, [z])[:, 0]
    return WpValues(complex(z), *(complex(x) for x in v))


def ode_residual(ctx: EllipticContext, w: WpValues) -> float:
    r = w.wp1 ** 2 - 4 * w.wp ** 3 + ctx.g2 * w.wp + ctx.g3
    return abs(r) / max(1.0, abs(w.wp) ** 3)


def _wp_g_derivative(ctx: EllipticContext, z: np.ndarray, d2: complex, d3: complex) -> np.ndarray:
    """Derivative of (wp, ..., wp4) at fixed z along (d2, d3) in (g2, g3)."""
    dc = _laurent_tangent(ctx.g2, ctx.g3, d2, d3)
    out = [_series(dc, z, k) for k in range(4)]
    wp = z ** -2 + _series(ctx.laurent, z, 0)
    out.append(360 * wp ** 2 * out[0] - 18 * (d2 * wp + ctx.g2 * out[0]) - 12 * d3)
    return np.stack(out)


# ---------------------------------------------------------------------------
# Frobenius-Stickelberger

def frobenius_stickelberger_check(tau: complex, h: float = 1e-4, terms: int = 64,
                                  tol: float = 1e-5) -> CheckReport:
    """Central differences of g2, g3 in tau against the two closed forms.

    The as-printed forms are checked first.  The quasimodular correction
    dg2/dtau = 3 g3/(pi i) + (2 pi i/3) E2 g2, dg3/dtau = g2^2/(6 pi i) + pi i E2 g3
    is checked alongside, and the order of the difference quotient is measured
    without a reference by comparing steps h, h/2, h/4.
    """
    tau = complex(tau)
    if not (tau.imag > h > 0):
        raise DomainError("need Im(tau) > h > 0")
    rep = CheckReport(suite=f"frobenius_stickelberger[tau={format_complex(tau)}]")

    def fd(step):
        p = g2_g3_qseries(tau + step, terms)
        m = g2_g3_qseries(tau - step, terms)
        return (p[0] - m[0]) / (2 * step), (p[1] - m[1]) / (2 * step)

    g2, g3 = g2_g3_qseries(tau, terms)
    d2, d3 = fd(h)
    printed2 = 3 / (PI * 1j) * g3
    printed3 = g2 ** 2 / (6 * PI * 1j)
    e2 = e2_qseries(tau, terms)
    true2 = printed2 + TWO_PI_I / 3 * e2 * g2
    true3 = printed3 + PI * 1j * e2 * g3

    def rel(a, b):
        return abs(a - b) / max(abs(b), 1e-300)

    r2, r3 = rel(d2, printed2), rel(d3, printed3)
    rep.add("dg2_dtau_printed", r2 < tol, f"|fd - 3 g3/(pi i)| / |3 g3/(pi i)| = {r2:.3e} (tol {tol:g})")
    rep.add("dg3_dtau_printed", r3 < tol, f"|fd - g2^2/(6 pi i)| / |g2^2/(6 pi i)| = {r3:.3e} (tol {tol:g})")
    cons = d2 * g2 ** 2 - 18 * g3 * d3
    scale = abs(d2) * abs(g2) ** 2 + 18 * abs(g3) * abs(d3)
    rep.add("consistency", abs(cons) / scale < tol,
            f"|g2^2 dg2 - 18 g3 dg3| / scale = {abs(cons) / scale:.3e}")
    c2, c3 = rel(d2, true2), rel(d3, true3)
    rep.add("dg_dtau_with_E2", max(c2, c3) < tol,
            f"against the E2-corrected forms: {c2:.3e}, {c3:.3e}")
    a, b = fd(h / 2), fd(h / 4)
    ratios = []
    for i in range(2):
        num = abs((d2, d3)[i] - a[i])
        den = abs(a[i] - b[i])
        ratios.append(num / den if den else float("inf"))
    ok = all(3.0 < r < 5.0 for r in ratios)
    rep.add("second_order_decay", ok,
            f"(D(h)-D(h/2))/(D(h/2)-D(h/4)) = {ratios[0]:.3f}, {ratios[1]:.3f} (expected 4)")
    return rep.finish()


# ---------------------------------------------------------------------------
# hyperplanes, det A

@dataclass(frozen=True)
class HyperplaneCoords:
    s0: complex
    s2: complex
    s3: complex
    s4: complex
    s5: complex

    def as_array(self) -> np.ndarray:
        return np.array([self.s0, self.s2, self.s3, self.s4, self.s5], dtype=complex)

    @classmethod
    def from_array(cls, a) -> "HyperplaneCoords":
        return cls(*(complex(x) for x in a))


# lambda = sum_k LAMBDA_COEF[k] * s_k * wp^(k-2), with wp^(-2) = 1 for s0
LAMBDA_COEF = np.array([1, 1, -1 / 2, 1 / 6, -1 / 24])


def lambda_values(s: np.ndarray, d: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """lambda(z) and lambda'(z); s has shape (5, ...) and d = (wp, .., wp4) shape (5, ...)."""
    lam = s[0] + LAMBDA_COEF[1] * s[1] * d[0] + LAMBDA_COEF[2] * s[2] * d[1] \
        + LAMBDA_COEF[3] * s[3] * d[2] + LAMBDA_COEF[4] * s[4] * d[3]
    dlam = LAMBDA_COEF[1] * s[1] * d[1] + LAMBDA_COEF[2] * s[2] * d[2] \
        + LAMBDA_COEF[3] * s[3] * d[3] + LAMBDA_COEF[4] * s[4] * d[4]
    return lam, dlam


def tangent_hyperplane(ctx: EllipticContext, z: complex, s3: complex, s4: complex,
                       s5: complex) -> HyperplaneCoords:
    w = wp_eval(ctx, z)
    scale = max(1.0, abs(w.wp) ** 1.5)
    if abs(w.wp1) <= 1e-6 * scale:
        raise DomainError("wp'(z) is too small; z is close to a 2-torsion point")
    s2 = (0.5 * s3 * w.wp2 - s4 * w.wp3 / 6 + s5 * w.wp4 / 24) / w.wp1
    s0 = -(s2 * w.wp - 0.5 * s3 * w.wp1 + s4 * w.wp2 / 6 - s5 * w.wp3 / 24)
    return HyperplaneCoords(s0, s2, s3, s4, s5)


class PolyEvaluator:
    """Vectorised evaluation of a MultiPoly at complex points."""

    def __init__(self, p: MultiPoly, variables):
        n = len(p.table)
        idx = [p.table.index(v) for v in variables]
        exps = [_unpack(m, n) for m in p.terms]
        self.exps = np.array([[e[i] for i in idx] for e in exps], dtype=np.int64).reshape(len(exps), len(idx))
        self.coeffs = np.array([float(c) for c in p.terms.values()], dtype=complex)
        self.variables = tuple(variables)

    def __call__(self, x: np.ndarray) -> np.ndarray:
        """x has shape (P, nvars); returns shape (P,)."""
        x = np.asarray(x, dtype=complex)
        if not len(self.coeffs):
            return np.zeros(x.shape[0], dtype=complex)
        maxe = int(self.exps.max(initial=0))
        pw = np.ones((x.shape[0], x.shape[1], maxe + 1), dtype=complex)
        for e in range(1, maxe + 1):
            pw[:, :, e] = pw[:, :, e - 1] * x
        terms = np.ones((x.shape[0], len(self.coeffs)), dtype=complex)
        for j in range(x.shape[1]):
            terms *= pw[:, j, :][:, self.exps[:, j]]
        return terms @ self.coeffs


class DetA:
    """det A, its partials and the numeric matrix A, for one (possibly mutated) A."""

    VARS = a4.A_TABLE

    def __init__(self, mats: a4.Matrices | None = None):
        self.mats = mats or a4.build_matrices()
        self.poly, self.digest = a4.det_A(self.mats)
        self.det = PolyEvaluator(self.poly, self.VARS)
        self.partial = {v: PolyEvaluator(self.poly.derivative(v), self.VARS) for v in self.VARS}
        self.entries = [[PolyEvaluator(self.mats.A[i, j], self.VARS) for j in range(6)] for i in range(6)]

    @staticmethod
    def points(ctx: EllipticContext, s: np.ndarray) -> np.ndarray:
        s = np.atleast_2d(s)
        g = np.tile([ctx.g2, ctx.g3], (s.shape[0], 1))
        return np.hstack([s, g])

    def value(self, ctx, s) -> np.ndarray:
        return self.det(self.points(ctx, s))

    def matrix(self, ctx, s) -> np.ndarray:
        """Numeric A at each hyperplane, shape (P, 6, 6)."""
        x = self.points(ctx, s)
        out = np.empty((x.shape[0], 6, 6), dtype=complex)
        for i in range(6):
            for j in range(6):
                out[:, i, j] = self.entries[i][j](x)
        return out

    def gradient(self, ctx, s, tau_factor: complex = -TWO_PI_I) -> np.ndarray:
        """(d/dtau, d/ds0, d/ds2, ..., d/ds5) of det A, shape (P, 6).

        The tau slot uses the printed derivatives of g2, g3 multiplied by
        ``tau_factor``; the default -2 pi i gives the field
        -6 g3 d/dg2 - (1/3) g2^2 d/dg3.
        """
        x = self.points(ctx, s)
        dg2 = 3 / (PI * 1j) * ctx.g3
        dg3 = ctx.g2 ** 2 / (6 * PI * 1j)
        dtau = self.partial["g2"](x) * dg2 + self.partial["g3"](x) * dg3
        cols = [tau_factor * dtau] + [self.partial[v](x) for v in a4.S_VARS]
        return np.stack(cols, axis=1)


@lru_cache(maxsize=4)
def _default_det() -> DetA:
    return DetA()


def random_like(s: np.ndarray, rng: np.random.Generator, count: int) -> np.ndarray:
    """``count`` hyperplanes with the same coordinate moduli and random phases."""
    phases = np.exp(2j * PI * rng.random((count, 5)))
    return np.abs(s)[None, :] * phases


def dual_variety_residual(ctx: EllipticContext, s: HyperplaneCoords, rng: np.random.Generator | None = None,
                          n_random: int = 50, det: DetA | None = None) -> float:
    det = det or _default_det()
    rng = rng or np.random.default_rng(0)
    arr = s.as_array()
    ref = np.median(np.abs(det.value(ctx, random_like(arr, rng, n_random))))
    if not ref > 1e-300:
        raise DomainError("degenerate normalisation: det A vanishes on the random hyperplanes")
    return float(abs(det.value(ctx, arr)[0]) / ref)


def _sample_tangents(ctx: EllipticContext, rng: np.random.Generator, count: int):
    """Tangent hyperplanes at random z with |z| in [0.2, 0.4] x shortest period."""
    out, zs, skipped = [], [], 0
    while len(out) < count:
        r = ctx.shortest * (0.2 + 0.2 * rng.random())
        z = r * cmath.exp(2j * PI * rng.random())
        s345 = rng.normal(size=3) + 1j * rng.normal(size=3)
        try:
            h = tangent_hyperplane(ctx, z, *s345)
        except DomainError:
            skipped += 1
            continue
        out.append(h.as_array())
        zs.append(z)
    return np.array(out), np.array(zs), skipped


def _normalised_rows(grad: np.ndarray, A: np.ndarray, tau_slot: bool = True,
                     mode: str = "cancel") -> np.ndarray:
    """Normalised |(grad . A)_j| per sample and column.

    ``cancel`` divides by sum_i |grad_i A_ij|, which is unchanged by rescaling
    any coordinate; ``norm`` divides by |grad| |A_j|.
    """
    if not tau_slot:
        grad, A = grad[:, 1:], A[:, 1:, :]
    prod = grad[:, :, None] * A
    row = np.abs(prod.sum(axis=1))
    if mode == "cancel":
        den = np.abs(prod).sum(axis=1)
    else:
        den = np.linalg.norm(grad, axis=1)[:, None] * np.linalg.norm(A, axis=1)
    return row / np.where(den > 0, den, 1.0)


def numeric_logarithmic_check(ctx: EllipticContext, s: HyperplaneCoords, det: DetA | None = None,
                              tol: float = 1e-5) -> CheckReport:
    det = det or _default_det()
    arr = np.atleast_2d(s.as_array())
    rep = CheckReport(suite="logarithmic")
    A = det.matrix(ctx, arr)
    grad = det.gradient(ctx, arr)
    v = _normalised_rows(grad, A)[0]
    vn = _normalised_rows(grad, A, mode="norm")[0]
    raw = _normalised_rows(det.gradient(ctx, arr, tau_factor=1), A)[0]
    rep.add("grad_times_A", v.max() < tol,
            f"max_j |(grad det A . A)_j| / sum_i |d_i det A * A_ij| = {v.max():.3e}; "
            f"over |grad| |A_j|: {vn.max():.3e}; without the -2 pi i factor on d/dtau: {raw.max():.3e}")
    sl = _normalised_rows(grad, A, tau_slot=False)[0]
    rep.add("slice_euler_column", sl[0] < tol,
            f"s-gradient against column t (the Euler field) = {sl[0]:.3e}; "
            f"other columns {', '.join(f'{x:.1e}' for x in sl[1:])}")
    return rep.finish()


def envelope_normals(ctx: EllipticContext, s: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Normal of the dual variety at the hyperplane tangent at z, in the (t, s0, s2..s5) frame."""
    d = wp_eval_many(ctx, z)
    dg = _wp_g_derivative(ctx, z, -6 * ctx.g3, -ctx.g2 ** 2 / 3)
    s = np.atleast_2d(s).T
    lam_t, _ = lambda_values(np.vstack([np.zeros(len(z)), s[1:]]), dg)
    n = np.stack([lam_t, np.ones(len(z)), d[0], -d[1] / 2, d[2] / 6, -d[3] / 24], axis=1)
    return n


def localize_A(ctx: EllipticContext, s: np.ndarray, z: np.ndarray, det: DetA, tol: float = 1e-6):
    """Columns of A that are not tangent to the dual variety at the samples.

    Returns (per-column worst residual, suspected entry or None).
    """
    n = envelope_normals(ctx, s, z)
    A = det.matrix(ctx, s)
    res = _normalised_rows(n, A).max(axis=0)
    bad = [j for j in range(6) if res[j] > tol]
    if not bad:
        return res, None
    L = a4.A_LABELS
    if len(bad) == 1:
        return res, f"A[{L[bad[0]]},{L[bad[0]]}]"
    if len(bad) == 2:
        return res, f"A[{L[bad[0]]},{L[bad[1]]}]"
    return res, "columns " + ", ".join(L[j] for j in bad)


# ---------------------------------------------------------------------------
# the suite

def context_checks(ctx: EllipticContext, rng: np.random.Generator, n_points: int = 100) -> CheckReport:
    rep = CheckReport(suite="context")
    r = ctx.safe_radius * (0.05 + 0.9 * rng.random(n_points))
    z = r * np.exp(2j * PI * rng.random(n_points))
    d = wp_eval_many(ctx, z)
    res = np.abs(d[1] ** 2 - 4 * d[0] ** 3 + ctx.g2 * d[0] + ctx.g3) / np.maximum(1, np.abs(d[0]) ** 3)
    rep.add("ode_residual", res.max() < 1e-9, f"max |wp1^2 - 4wp^3 + g2 wp + g3| / max(1,|wp|^3) = "
            f"{res.max():.3e} over {n_points} points")
    dm = wp_eval_many(ctx, -z)
    ev = np.max(np.abs(dm[0] - d[0]) / np.abs(d[0]))
    rep.add("wp_even", ev < 1e-12, f"max |wp(-z) - wp(z)| / |wp(z)| = {ev:.3e}")
    w2 = np.max(np.abs(d[2] - (6 * d[0] ** 2 - ctx.g2 / 2)) / np.maximum(1, np.abs(d[2])))
    rep.add("wp2_closed_form", w2 < 1e-9, f"max rel |wp2 - (6 wp^2 - g2/2)| = {w2:.3e}")
    lat = g2_g3_lattice(ctx.tau, 200)
    q = g2_g3_qseries(ctx.tau, ctx.series_terms)
    scale = max(abs(q[0]), abs(q[1]))
    dis = max(abs(lat[0] - q[0]), abs(lat[1] - q[1])) / scale
    rep.add("qseries_vs_lattice", dis < 1e-6, f"max |lattice - q-series| / max(|g2|,|g3|) = {dis:.3e} "
            f"(N = 200 with one Richardson step)")
    return rep.finish()


def symmetry_checks(terms: int = 64) -> CheckReport:
    rep = CheckReport(suite="symmetry")
    g2, g3 = g2_g3_qseries(1j, terms)
    rep.add("g3_at_i", abs(g3) < 1e-10 * abs(g2), f"|g3(i)| / |g2(i)| = {abs(g3) / abs(g2):.3e}")
    g2, g3 = g2_g3_qseries(cmath.exp(1j * PI / 3), terms)
    rep.add("g2_at_rho", abs(g2) < 1e-10 * abs(g3), f"|g2(rho)| / |g3(rho)| = {abs(g2) / abs(g3):.3e}")
    return rep.finish()


def separation_checks(ctx: EllipticContext, rng: np.random.Generator, samples: int = 20, n_random: int = 50,
                      tol: float = 1e-6, det: DetA | None = None, log_tol: float = 1e-5) -> CheckReport:
    det = det or _default_det()
    rep = CheckReport(suite="dual_variety")
    S, Z, skipped = _sample_tangents(ctx, rng, samples)
    lam, dlam = lambda_values(S.T, wp_eval_many(ctx, Z))
    mag = np.abs(S).max(axis=1) * np.abs(wp_eval_many(ctx, Z)[:4]).max(axis=0)
    tan_res = np.max(np.maximum(np.abs(lam), np.abs(dlam)) / mag)
    rep.add("tangent_construction", tan_res < 1e-12, f"max |lambda|, |lambda'| / scale = {tan_res:.3e}; "
            f"{skipped} samples skipped near 2-torsion")

    # each tangent sample is normalised by the median over n_random phase-randomised copies;
    # n_random further copies (cycling through the samples) form the random test set
    refs, tangent = [], []
    for s in S:
        ref = np.median(np.abs(det.value(ctx, random_like(s, rng, n_random))))
        if not ref > 1e-300:
            raise DomainError("degenerate normalisation: det A vanishes on the random hyperplanes")
        refs.append(ref)
        tangent.append(abs(det.value(ctx, s)[0]) / ref)
    owner = np.arange(n_random) % len(S)
    R = np.array([random_like(S[i], rng, 1)[0] for i in owner])
    randoms = np.abs(det.value(ctx, R)) / np.array(refs)[owner]
    tmax, rmin = max(tangent), float(randoms.min())
    rep.add("tangent_residual", tmax < tol, f"max normalised |det A| on {samples} tangent hyperplanes = "
            f"{tmax:.3e} (tol {tol:g}); sha256(A) {det.digest[:16]}")
    rep.add("random_residual", rmin > 1e-2, f"min normalised |det A| on {n_random} random hyperplanes "
            f"= {rmin:.3e} (floor 1e-2); median {np.median(randoms):.2f}")

    res, suspect = localize_A(ctx, S, Z, det, tol)
    rep.add("columns_tangent", suspect is None,
            "A columns tangent to the dual variety, worst per column "
            + ", ".join(f"{a4.A_LABELS[j]}:{res[j]:.1e}" for j in range(6)),
            None if suspect is None else f"suspected entry {suspect}")

    grad = det.gradient(ctx, S)
    A = det.matrix(ctx, S)
    on = _normalised_rows(grad, A).max()
    on_norm = _normalised_rows(grad, A, mode="norm").max()
    raw = _normalised_rows(det.gradient(ctx, S, tau_factor=1), A).max()
    R = np.array([random_like(s, rng, 1)[0] for s in S])
    off = np.median(_normalised_rows(det.gradient(ctx, R), det.matrix(ctx, R)).max(axis=1))
    rep.add("log_tangency", on < log_tol,
            f"max_j |(grad det A . A)_j| / sum_i |d_i det A * A_ij| on the divisor = {on:.3e} "
            f"(tol {log_tol:g}); over |grad| |A_j|: {on_norm:.3e}; without the -2 pi i factor {raw:.3e}")
    rep.add("log_off_divisor", off > 1e-1, f"median of the same quantity off the divisor = {off:.3e}")
    sl = _normalised_rows(grad, A, tau_slot=False)
    rep.add("slice_euler_column", sl[:, 0].max() < log_tol,
            f"pure-s gradient against column t: {sl[:, 0].max():.3e}; columns 0..5 "
            + ", ".join(f"{x:.1e}" for x in sl[:, 1:].max(axis=0)))

    R = random_like(S[0], rng, 1)[0]
    v1 = det.value(ctx, R)[0]
    v2 = det.value(ctx, 2 * R)[0]
    uni = abs(v2 / v1 - 2 ** 10)
    lam2 = 2.0
    wts = np.array([0, -2, -3, -4, -5])
    Rw = R * lam2 ** wts
    ctx_w = EllipticContext(ctx.tau, ctx.g2 * lam2 ** 4, ctx.g3 * lam2 ** 6, ctx.series_terms, ctx.built_by,
                            ctx.shortest, ())
    v3 = det.value(ctx_w, Rw)[0]
    wtd = abs(v3 / v1 - 2.0 ** -20) / 2.0 ** -20
    rep.add("scaling", uni / 2 ** 10 < 1e-9 and wtd < 1e-9,
            f"det(2s)/det(s) = 2^10 (rel err {uni / 2 ** 10:.1e}); weighted lambda = 2 gives 2^-20 "
            f"(rel err {wtd:.1e})")
    return rep.finish()


def numeric_suite(taus=DEFAULT_TAUS, samples: int = 20, terms: int = 64, tol: float = 1e-6,
                  fd_step: float = 1e-4, seed: int = 0, mats: a4.Matrices | None = None,
                  n_random: int = 50) -> CheckReport:
    rep = CheckReport(suite="a4_numeric", seed=seed)
    det = DetA(mats) if mats is not None else _default_det()
    rep.extend(symmetry_checks(terms), "symmetry.")
    for k, tau in enumerate(taus):
        rng = np.random.default_rng([seed, k])
        ctx = build_context(tau, terms)
        tag = f"tau={format_complex(tau)}."
        rep.extend(context_checks(ctx, rng), tag)
        rep.extend(frobenius_stickelberger_check(tau, fd_step, terms), tag + "fs.")
        rep.extend(separation_checks(ctx, rng, samples, n_random, tol, det), tag)
    return rep.finish()
