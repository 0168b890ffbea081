"""Bezout and Arnol'd discriminant matrices of the universal binary form.

The generating functions are divided by (x - y) by default.  With that
choice the modified matrix restricted to s0 = 1 is the Gram matrix of the
root gradients of s_1..s_n and the n = 2 Bezout determinant is the textbook
s1^2 - 4*s0*s2.  ``convention="y-x"`` negates every entry of both matrices.

The two determinants satisfy n^(n-2) det B' = s0^2 det B, so the plain
identity det B' = s0^2 det B holds only for n = 2; ``verify_section5``
reports the measured ratio.

Root-side convention: s_i(r) = (-1)^i e_i(r), so that
prod_k (x - r_k) = x^n + s_1 x^(n-1) + ... + s_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

from .poly import MultiPoly, divide_exact, substitute, sylvester_resultant, weighted_degree
from .polmat import PolyMatrix, determinant, matmul, transpose
from .report import CheckReport
from .saito import check_discriminant_matrix

__all__ = [
    "BezoutPair",
    "UniversalPolynomial",
    "bezout_matrix",
    "bezout_pair",
    "classical_discriminant",
    "gram_matrix_from_roots",
    "modified_bezout_matrix",
    "root_coefficients",
    "universal_polynomial",
    "vandermonde_identities",
    "vandermonde_matrix",
    "verify_section5",
    "bprime_ratio",
    "measured_constant",
]

CONVENTIONS = ("x-y", "y-x")


def s_vars(n: int, start: int = 0) -> tuple[str, ...]:
    return tuple(f"s{i}" for i in range(start, n + 1))


def r_vars(n: int) -> tuple[str, ...]:
    return tuple(f"r{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class UniversalPolynomial:
    n: int
    F: MultiPoly


@dataclass(frozen=True)
class BezoutPair:
    B: PolyMatrix
    Bprime: PolyMatrix
    convention: str


def universal_polynomial(n: int) -> UniversalPolynomial:
    """F(u, v) = s0 u^n + s1 u^(n-1) v + ... + sn v^n."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    table = ("u", "v") + s_vars(n)
    F = MultiPoly.from_terms(
        table, (((n - i, i) + tuple(int(k == i) for k in range(n + 1)), 1) for i in range(n + 1)))
    return UniversalPolynomial(n, F)


def _dehomogenized(n: int):
    """F(x,1), F_u(x,1), F_v(x,1) and their y-counterparts over (x, y, s0..sn)."""
    F = universal_polynomial(n).F
    table = ("x", "y") + s_vars(n)
    x, y = MultiPoly.var("x", table), MultiPoly.var("y", table)
    parts = {"F": F, "Fu": F.derivative("u"), "Fv": F.derivative("v")}
    at_x = {k: substitute(p, {"u": x, "v": 1}, table) for k, p in parts.items()}
    at_y = {k: substitute(p, {"u": y, "v": 1}, table) for k, p in parts.items()}
    return table, at_x, at_y


def _coefficient_matrix(numerator: MultiPoly, n_rows: int, top: int, convention: str, n: int) -> PolyMatrix:
    table = numerator.table
    x, y = MultiPoly.var("x", table), MultiPoly.var("y", table)
    if convention == "x-y":
        denom = x - y
    elif convention == "y-x":
        denom = y - x
    else:
        raise ValueError(f"unknown convention {convention!r}; use one of {CONVENTIONS}")
    gen = divide_exact(numerator, denom)
    if gen is None:
        raise ArithmeticError("generating function is not a polynomial")
    coeffs = gen.collect(("x", "y"))
    svars = s_vars(n)
    zero = MultiPoly.zero(svars)
    rows = []
    for i in range(1, n_rows + 1):
        rows.append([coeffs.get((top - i, top - j), zero) for j in range(1, n_rows + 1)])
    return PolyMatrix(rows, svars)


@lru_cache(maxsize=None)
def bezout_matrix(n: int, convention: str = "x-y") -> PolyMatrix:
    """(n-1)x(n-1) matrix of coefficients of x^(n-1-i) y^(n-1-j) in
    (F_v(x,1)F_u(y,1) - F_v(y,1)F_u(x,1)) / (x - y)."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n == 1:
        return PolyMatrix([], s_vars(1))
    _, X, Y = _dehomogenized(n)
    num = X["Fv"] * Y["Fu"] - Y["Fv"] * X["Fu"]
    return _coefficient_matrix(num, n - 1, n - 1, convention, n)


@lru_cache(maxsize=None)
def modified_bezout_matrix(n: int, convention: str = "x-y") -> PolyMatrix:
    """n x n matrix of coefficients of x^(n-i) y^(n-j) in
    (F(x,1)F_u(y,1) - F(y,1)F_u(x,1)) / (x - y)."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    _, X, Y = _dehomogenized(n)
    num = X["F"] * Y["Fu"] - Y["F"] * X["Fu"]
    return _coefficient_matrix(num, n, n, convention, n)


def bezout_pair(n: int, convention: str = "x-y") -> BezoutPair:
    return BezoutPair(bezout_matrix(n, convention), modified_bezout_matrix(n, convention), convention)


def specialize(a: PolyMatrix, values: dict, table) -> PolyMatrix:
    return a.map(lambda e: substitute(e, values, table), table)


def root_coefficients(n: int) -> list[MultiPoly]:
    """[s_1(r), ..., s_n(r)] with prod (x - r_k) = x^n + s_1 x^(n-1) + ... + s_n."""
    table = ("x",) + r_vars(n)
    f = MultiPoly.const(1, table)
    for r in r_vars(n):
        f = f * (MultiPoly.var("x", table) - MultiPoly.var(r, table))
    coeffs = f.collect(("x",))
    zero = MultiPoly.zero(r_vars(n))
    return [coeffs.get((n - i,), zero) for i in range(1, n + 1)]


def gram_matrix_from_roots(n: int) -> tuple[PolyMatrix, PolyMatrix]:
    """M = (d s_i / d r_j) and G = M M^T over r1..rn."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    s = root_coefficients(n)
    M = PolyMatrix([[si.derivative(r) for r in r_vars(n)] for si in s], r_vars(n))
    return M, matmul(M, transpose(M))


def vandermonde_matrix(n: int) -> PolyMatrix:
    """Rows r_j^(n-1), ..., r_j, 1."""
    table = r_vars(n)
    return PolyMatrix([[MultiPoly.var(r, table) ** (n - 1 - i) for r in table] for i in range(n)], table)


def difference_product(n: int, squared: bool = False) -> MultiPoly:
    """prod_{n >= i > j >= 1} (r_i - r_j), optionally squared."""
    table = r_vars(n)
    out = MultiPoly.const(1, table)
    for i in range(1, n + 1):
        for j in range(1, i):
            d = MultiPoly.var(f"r{i}", table) - MultiPoly.var(f"r{j}", table)
            out = out * (d * d if squared else d)
    return out


def classical_discriminant(n: int) -> MultiPoly:
    """(-1)^(n(n-1)/2) Res_x(f, f') / s0 for f = F(x, 1), over s0..sn."""
    table, X, _ = _dehomogenized(n)
    f = X["F"]
    res = sylvester_resultant(f, f.derivative("x"), "x")
    q = divide_exact(res, MultiPoly.var("s0", table))
    if q is None:
        raise ArithmeticError("resultant not divisible by s0")
    q = q.retable(s_vars(n))
    return -q if (n * (n - 1) // 2) % 2 else q


def _ratio(a: MultiPoly, b: MultiPoly):
    if a.is_zero() or b.is_zero() or len(a) != len(b):
        return None
    m = next(iter(b.terms))
    if m not in a.terms:
        return None
    c = a.terms[m] / b.terms[m]
    return c if a == b.scale(c) else None


def vandermonde_identities(n: int) -> CheckReport:
    """Symbolic checks of the reversed Vandermonde identities for 2 <= n <= 5.

    ``det_VtM`` compares against the sign (-1)^n as printed; with
    s_i = (-1)^i e_i the true sign is (-1)^(n(n+1)/2), which is checked
    separately as ``det_VtM_sign``.
    """
    if not 2 <= n <= 5:
        raise ValueError("n must be in 2..5")
    rep = CheckReport(suite=f"vandermonde[n={n}]")
    table = r_vars(n)
    V = vandermonde_matrix(n)
    M, _ = gram_matrix_from_roots(n)
    diff = difference_product(n)
    sign_v = -1 if (n * (n - 1) // 2) % 2 else 1
    det_v = determinant(V)
    rep.add("det_V", det_v == diff.scale(sign_v),
            f"det V = (-1)^{n * (n - 1) // 2} prod(r_i - r_j)", None if det_v == diff.scale(sign_v) else str(det_v))

    VtM = matmul(transpose(V), M)
    x_table = ("x",) + table
    x = MultiPoly.var("x", x_table)
    bad = []
    for i in range(n):
        ri = MultiPoly.var(table[i], table)
        for j in range(n):
            # (df/dr_j)(x) = -prod_{k != j} (x - r_k), evaluated at x = r_i
            g = MultiPoly.const(-1, x_table)
            for k in range(n):
                if k != j:
                    g = g * (x - MultiPoly.var(table[k], x_table))
            expected = substitute(g, {"x": ri}, table)
            if VtM[i, j] != expected:
                bad.append(f"({i + 1},{j + 1})")
            if i != j and VtM[i, j]:
                bad.append(f"offdiag({i + 1},{j + 1})")
    rep.add("VtM_entries", not bad, "(V^T M)_ij = (df/dr_j)(r_i); off-diagonal entries vanish",
            ",".join(bad) or None)

    det_vtm = determinant(VtM)
    sq = difference_product(n, squared=True)
    printed = sq.scale(-1 if n % 2 else 1)
    rep.add("det_VtM", det_vtm == printed, f"det(V^T M) = (-1)^{n} prod(r_i - r_j)^2",
            None if det_vtm == printed else f"ratio {_ratio(det_vtm, sq)}")
    true_sign = -1 if (n * (n + 1) // 2) % 2 else 1
    rep.add("det_VtM_sign", det_vtm == sq.scale(true_sign),
            f"det(V^T M) = (-1)^(n(n+1)/2) prod(r_i - r_j)^2 = {true_sign:+d} prod^2")
    return rep.finish()


def verify_section5(n: int, convention: str = "x-y", saito_max_n: int = 4, seed: int = 0) -> CheckReport:
    """Checks (a)-(e) for the Bezout pair of degree n, 2 <= n <= 6."""
    if not 2 <= n <= 6:
        raise ValueError("n must be in 2..6")
    rep = CheckReport(suite=f"bezout[n={n},{convention}]", seed=seed)
    B = bezout_matrix(n, convention)
    Bp = modified_bezout_matrix(n, convention)
    det_b = determinant(B)
    det_bp = determinant(Bp)
    svars = s_vars(n)

    hom = weighted_degree(det_b, {v: 1 for v in svars})
    wdeg = weighted_degree(det_b, {f"s{i}": i for i in range(n + 1)})
    rep.add("a_homogeneity", hom == 2 * n - 2 and wdeg == n * (n - 1),
            f"degrees ({hom}, {wdeg}); expected ({2 * n - 2}, {n * (n - 1)})")

    s0 = MultiPoly.var("s0", svars)
    lhs, rhs = det_bp, s0 * s0 * det_b
    ratio = _ratio(lhs, rhs)
    rep.add("b_det_Bprime", lhs == rhs, f"det B' = s0^2 det B; measured det B' / (s0^2 det B) = {ratio}",
            None if lhs == rhs else f"ratio {ratio}, n^(n-2) = {n ** (n - 2)}")

    rest = s_vars(n, 1)
    Bp1 = specialize(Bp, {"s0": 1}, rest)
    s_of_r = root_coefficients(n)
    rt = r_vars(n)
    Bp_r = Bp1.map(lambda e: substitute(e, dict(zip(rest, s_of_r)), rt), rt)
    _, G = gram_matrix_from_roots(n)
    rep.add("c_gram", Bp_r == G, "B'|_{s0=1}(s(r)) = M M^T")

    disc = classical_discriminant(n)
    c = _ratio(det_b, disc)
    rep.add("d_resultant_oracle", c is not None and c != 0,
            f"det B = c * (-1)^(n(n-1)/2) Res_x(f,f')/s0 with c = {c}")

    if n <= saito_max_n:
        f = determinant(Bp1)
        sr = check_discriminant_matrix(f, Bp1, check_squarefree=True, seed=seed)
        rep.add("e_saito", sr.certified,
                f"overall={sr.overall} scalar={sr.scalar} failures={sr.divisibility_failures} "
                f"squarefree={sr.squarefree_verdict}")
    else:
        rep.add("e_saito", None, f"skipped for n > {saito_max_n}")
    return rep.finish()


def bprime_ratio(n: int, convention: str = "x-y") -> mpq | None:
    """The rational c with det B' = c * s0^2 * det B."""
    Bp = determinant(modified_bezout_matrix(n, convention))
    s0 = MultiPoly.var("s0", s_vars(n))
    return _ratio(Bp, s0 * s0 * determinant(bezout_matrix(n, convention)))


def measured_constant(n: int, convention: str = "x-y") -> mpq | None:
    """The rational c with det B = c * classical_discriminant(n)."""
    return _ratio(determinant(bezout_matrix(n, convention)), classical_discriminant(n))
