"""Saito's criterion for free divisors, checked over the polynomial ring.

A reduced f together with a square matrix A certifies a free divisor when
det A = c*f for a nonzero rational c and every entry of (grad f) A is
divisible by f.  Squarefreeness is only tested probabilistically, so a
"certified" verdict carries that Monte Carlo caveat.  A global polynomial
certificate implies the local one at every point; the converse is not
attempted.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .poly import MultiPoly, PolyError, divide_exact, parse_poly, probably_squarefree
from .polmat import PolyMatrix, determinant
from .report import CheckReport

__all__ = ["SaitoReport", "check_discriminant_matrix", "check_logarithmic_field", "fixture_suite", "log_derivatives"]

CERTIFIED = "free_divisor_certified"
FAILED = "failed"
INCONCLUSIVE = "inconclusive"


@dataclass
class SaitoReport:
    det_matches: bool
    scalar: str | None
    divisibility_failures: list[int] = field(default_factory=list)
    squarefree_verdict: str = "skipped"
    overall: str = INCONCLUSIVE

    @property
    def certified(self) -> bool:
        return self.overall == CERTIFIED

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)


def _proportionality(a: MultiPoly, f: MultiPoly):
    """Rational c with a == c*f, or None."""
    if a.is_zero() or len(a) != len(f):
        return None
    m0 = next(iter(f.terms))
    if m0 not in a.terms:
        return None
    c = a.terms[m0] / f.terms[m0]
    return c if a == f.scale(c) else None


def log_derivatives(f: MultiPoly, a: PolyMatrix) -> list[MultiPoly]:
    """The row vector (grad f) A, gradient taken in table order."""
    grad = [f.derivative(v) for v in f.table]
    out = []
    for j in range(a.cols):
        acc = MultiPoly.zero(f.table)
        for i in range(a.rows):
            if grad[i] and a[i, j]:
                acc = acc + grad[i] * a[i, j]
        out.append(acc)
    return out


def check_discriminant_matrix(f: MultiPoly, a: PolyMatrix, check_squarefree: bool = True,
                              seed: int = 0, trials: int = 8) -> SaitoReport:
    if f.is_zero():
        raise PolyError("divisor equation is zero")
    if not a.is_square or a.rows != len(f.table):
        raise PolyError(f"matrix must be {len(f.table)}x{len(f.table)} for variables {f.table}")
    if a.table != f.table:
        a = a.map(lambda e: e.retable(f.table), f.table)

    c = _proportionality(determinant(a), f)
    det_matches = c is not None and c != 0
    failures = [j for j, g in enumerate(log_derivatives(f, a)) if divide_exact(g, f) is None]
    if check_squarefree:
        sq = "true" if probably_squarefree(f, trials=trials, seed=seed) else "false"
    else:
        sq = "skipped"

    if not det_matches or failures or sq == "false":
        overall = FAILED
    elif sq == "true":
        overall = CERTIFIED
    else:
        overall = INCONCLUSIVE
    return SaitoReport(
        det_matches=det_matches,
        scalar=str(c) if det_matches else None,
        divisibility_failures=failures,
        squarefree_verdict=sq,
        overall=overall,
    )


def check_logarithmic_field(f: MultiPoly, chi: Sequence[MultiPoly]) -> bool:
    """True iff sum_i chi_i * df/dx_i is divisible by f."""
    if len(chi) != len(f.table):
        raise PolyError(f"field needs {len(f.table)} components, got {len(chi)}")
    acc = MultiPoly.zero(f.table)
    for v, c in zip(f.table, chi):
        if not isinstance(c, MultiPoly):
            c = MultiPoly.const(c, f.table)
        acc = acc + c.retable(f.table) * f.derivative(v)
    return divide_exact(acc, f) is not None


def fixture_suite(seed: int = 0) -> CheckReport:
    """Known free divisors certify; the identity matrix against x*y does not."""
    rep = CheckReport(suite="saito_fixtures", seed=seed)
    t = ("x", "y")
    xy = parse_poly("x*y", t)
    x, y = MultiPoly.var("x", t), MultiPoly.var("y", t)
    r = check_discriminant_matrix(xy, PolyMatrix.diagonal([x, y]), seed=seed)
    rep.add("normal_crossing", r.certified and r.scalar == "1", f"x*y with diag(x, y): {r.overall}, scalar {r.scalar}")
    r = check_discriminant_matrix(x, PolyMatrix.diagonal([x, MultiPoly.const(1, t)]), seed=seed)
    rep.add("smooth", r.certified, f"x with diag(x, 1): {r.overall}")
    r = check_discriminant_matrix(xy, PolyMatrix.identity(2, t), seed=seed)
    rep.add("identity_rejected", r.overall == FAILED, f"x*y with the identity: {r.overall}")
    return rep.finish()
