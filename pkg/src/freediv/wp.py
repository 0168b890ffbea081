"""Formal differential algebra of the Weierstrass function.

Elements are a + b*wp1 with a, b in Q[wp, g2, g3], where wp1 stands for the
first derivative and every square of wp1 is rewritten by the cubic relation
wp1^2 = 4 wp^3 - g2 wp - g3.  g2 and g3 are independent symbols, so an
identity that reduces to zero here holds for every lattice.
"""

from __future__ import annotations

from functools import lru_cache

from gmpy2 import mpq

from .poly import MultiPoly, parse_poly, weighted_degree
from .report import CheckReport

__all__ = [
    "WElement",
    "W_TABLE",
    "WEIGHTS",
    "cubic",
    "d_dz",
    "formal_suite",
    "pfaffian_relations",
    "verify_identity",
    "w_arith",
    "wp_derivative",
]

W_TABLE = ("wp", "g2", "g3")
WEIGHTS = {"wp": 2, "wp1": 3, "g2": 4, "g3": 6}
_FULL_TABLE = ("wp", "wp1", "g2", "g3")


def _p(text: str) -> MultiPoly:
    return parse_poly(text, W_TABLE)


@lru_cache(maxsize=None)
def cubic() -> MultiPoly:
    """4 wp^3 - g2 wp - g3, the value of wp1^2."""
    return _p("4*wp^3 - g2*wp - g3")


@lru_cache(maxsize=None)
def _second() -> MultiPoly:
    return _p("6*wp^2 - 1/2*g2")


class WElement:
    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = self._lift(a)
        self.b = self._lift(b)

    @staticmethod
    def _lift(x) -> MultiPoly:
        if isinstance(x, MultiPoly):
            return x.retable(W_TABLE)
        return MultiPoly.const(x, W_TABLE)

    @classmethod
    def wp(cls) -> "WElement":
        return cls(MultiPoly.var("wp", W_TABLE))

    @classmethod
    def wp1(cls) -> "WElement":
        return cls(0, 1)

    @classmethod
    def g2(cls) -> "WElement":
        return cls(MultiPoly.var("g2", W_TABLE))

    @classmethod
    def g3(cls) -> "WElement":
        return cls(MultiPoly.var("g3", W_TABLE))

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "WElement":
        """Reduce a polynomial in (wp, wp1, g2, g3) to canonical form."""
        if "wp1" not in p.table:
            return cls(p)
        c = cubic()
        a = MultiPoly.zero(W_TABLE)
        b = MultiPoly.zero(W_TABLE)
        for (k,), coeff in p.collect(("wp1",)).items():
            term = coeff.retable(W_TABLE) * c ** (k // 2)
            if k % 2:
                b = b + term
            else:
                a = a + term
        return cls(a, b)

    @classmethod
    def parse(cls, text: str) -> "WElement":
        return cls.from_poly(parse_poly(text, _FULL_TABLE))

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def _coerce(self, other) -> "WElement":
        return other if isinstance(other, WElement) else WElement(other)

    def __add__(self, other) -> "WElement":
        other = self._coerce(other)
        return WElement(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "WElement":
        return WElement(-self.a, -self.b)

    def __sub__(self, other) -> "WElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "WElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "WElement":
        other = self._coerce(other)
        a = self.a * other.a
        if self.b and other.b:
            a = a + self.b * other.b * cubic()
        b = self.a * other.b + self.b * other.a
        return WElement(a, b)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "WElement":
        if k < 0:
            raise ValueError("negative power")
        out, base = WElement(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "WElement":
        return WElement(self.a.scale(c), self.b.scale(c))

    def __eq__(self, other) -> bool:
        if not isinstance(other, WElement):
            if isinstance(other, (int, MultiPoly)) or type(other) is type(mpq(0)):
                other = WElement(other)
            else:
                return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def weight(self):
        """Common weight of both components (wp1 contributes 3), or None."""
        wa = weighted_degree(self.a, WEIGHTS)
        wb = weighted_degree(self.b, WEIGHTS)
        if self.a.is_zero():
            return None if wb is None else (wb + 3 if not self.b.is_zero() else wa)
        if self.b.is_zero():
            return wa
        if wa is None or wb is None or wa != wb + 3:
            return None
        return wa

    def __str__(self) -> str:
        return f"({self.a}) + ({self.b})*wp1"

    def __repr__(self) -> str:
        return f"WElement({self})"


def w_arith(e1: WElement, e2: WElement, op: str) -> WElement:
    if op == "add":
        return e1 + e2
    if op == "mul":
        return e1 * e2
    raise ValueError(f"unknown operation {op!r}; use 'add' or 'mul'")


def d_dz(e: WElement) -> WElement:
    """d/dz with wp -> wp1, wp1 -> 6 wp^2 - g2/2, g2, g3 constant."""
    da = e.a.derivative("wp")
    db = e.b.derivative("wp")
    a = e.b * _second()
    if db:
        a = a + db * cubic()
    return WElement(a, da)


@lru_cache(maxsize=None)
def wp_derivative(k: int) -> WElement:
    """Canonical form of the k-th derivative of wp."""
    if k < 0:
        raise ValueError("derivative order must be non-negative")
    if k == 0:
        return WElement.wp()
    return d_dz(wp_derivative(k - 1))


def verify_identity(e: WElement) -> bool:
    return e.is_zero()


def pfaffian_relations() -> list[WElement]:
    """The five relations that the M sub-Pfaffians reduce to on the curve."""
    p, p1, p2, p3 = (wp_derivative(k) for k in range(4))
    g2, g3 = WElement.g2(), WElement.g3()
    h = mpq(1, 2)
    return [
        h * p1 * p3 - mpq(2, 3) * p2 * p2 + 2 * g2 * p * p + 6 * g3 * p + mpq(1, 6) * g2 * g2,
        p1 * p2 + h * g2 * p1 - h * p * p3,
        h * p1 * p1 - mpq(1, 3) * p * p2 + mpq(1, 3) * g2 * p + h * g3,
        6 * p * p1 - h * p3,
        h * p2 - 3 * p * p + mpq(1, 4) * g2,
    ]


def formal_suite() -> CheckReport:
    rep = CheckReport(suite="wp_formal")
    rep.add("wp2", wp_derivative(2) == WElement(_p("6*wp^2 - 1/2*g2")), f"wp'' = {wp_derivative(2).a}")
    rep.add("wp3", wp_derivative(3) == WElement(0, _p("12*wp")), f"wp''' = ({wp_derivative(3).b})*wp1")
    rep.add("wp4", wp_derivative(4) == WElement(_p("120*wp^3 - 18*g2*wp - 12*g3")),
            f"wp'''' = {wp_derivative(4).a}")
    ode = WElement.wp1() ** 2 - WElement(cubic())
    rep.add("ode_constant", verify_identity(d_dz(ode)), "d/dz (wp1^2 - 4 wp^3 + g2 wp + g3) = 0")
    for k, rel in enumerate(pfaffian_relations(), start=1):
        rep.add(f"relation{k}", verify_identity(rel), "reduces to 0", None if rel.is_zero() else str(rel))
    bad = [k for k in range(9) if wp_derivative(k).weight() != k + 2]
    rep.add("weights", not bad, "wp^(k) has weight k+2 for k = 0..8", str(bad) if bad else None)
    return rep.finish()
