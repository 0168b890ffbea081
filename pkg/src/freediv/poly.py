"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`MultiPoly` lives over an ordered variable table (a tuple of names).
Monomials are packed into a single Python integer, 16 bits per variable, so
that monomial multiplication is integer addition.  The top bit of every field
is a guard bit used by the divisibility test, which caps single exponents at
2**15 - 1.

Coefficients are ``gmpy2.mpq``.  Terms with zero coefficient are never stored,
so two polynomials are equal iff their term dictionaries are equal.  The
canonical printing order is graded reverse lexicographic with respect to the
table order.
"""

from __future__ import annotations

import contextlib
import contextvars
import heapq
import random
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from gmpy2 import mpq

__all__ = [
    "ANY_DEGREE",
    "MultiPoly",
    "PolyError",
    "PolyParseError",
    "Rational",
    "TableMismatchError",
    "TermBudgetExceeded",
    "UnknownVariableError",
    "derivative",
    "divide_exact",
    "evaluate",
    "gradient",
    "parse_poly",
    "probably_squarefree",
    "ring_arithmetic",
    "substitute",
    "sylvester_resultant",
    "term_budget",
    "var_table",
    "weighted_degree",
]

Rational = mpq
_MPQ = type(mpq(0))

_BITS = 16
_MASK = (1 << _BITS) - 1
_MAX_EXP = (1 << (_BITS - 1)) - 1
_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

DEFAULT_TERM_BUDGET = 5_000_000
_term_budget: contextvars.ContextVar[int] = contextvars.ContextVar(
    "freediv_term_budget", default=DEFAULT_TERM_BUDGET
)


class PolyError(Exception):
    """Base class for polynomial errors."""


class TableMismatchError(PolyError):
    pass


class UnknownVariableError(PolyError):
    pass


class TermBudgetExceeded(PolyError, MemoryError):
    """A result would exceed the configured term-count budget."""


class PolyParseError(PolyError, ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text[:pos]}<HERE>{text[pos:]}")


@contextlib.contextmanager
def term_budget(limit: int):
    """Temporarily change the term-count budget for the current context."""
    if limit < 1:
        raise ValueError("term budget must be positive")
    token = _term_budget.set(limit)
    try:
        yield
    finally:
        _term_budget.reset(token)


def _check_budget(n: int) -> None:
    limit = _term_budget.get()
    if n > limit:
        raise TermBudgetExceeded(f"polynomial with {n} terms exceeds budget of {limit}")


def var_table(names: Iterable[str]) -> tuple[str, ...]:
    table = tuple(names)
    for name in table:
        if not isinstance(name, str) or not _NAME_RE.match(name):
            raise PolyError(f"invalid variable name {name!r}")
    if len(set(table)) != len(table):
        raise PolyError(f"duplicate variable in table {table}")
    return table


def _to_rational(c) -> mpq:
    if isinstance(c, (int, Fraction, _MPQ)):
        return mpq(c)
    if isinstance(c, str):
        return mpq(c)
    raise TypeError(f"not an exact rational: {c!r}")


def _pack(exps: Sequence[int]) -> int:
    m = 0
    for i, e in enumerate(exps):
        if e < 0 or e > _MAX_EXP:
            raise PolyError(f"exponent {e} out of range")
        m |= e << (_BITS * i)
    return m


def _unpack(m: int, n: int) -> tuple[int, ...]:
    return tuple((m >> (_BITS * i)) & _MASK for i in range(n))


def _guard(n: int) -> int:
    g = 0
    for i in range(n):
        g |= 1 << (_BITS * i + _BITS - 1)
    return g


def _grevlex_key(exps: tuple[int, ...]) -> tuple:
    return (sum(exps), tuple(-e for e in reversed(exps)))


class MultiPoly:
    """Immutable sparse polynomial over ``table`` with rational coefficients."""

    __slots__ = ("table", "terms", "_hash", "_horner")

    def __init__(self, table: Sequence[str], terms: Mapping[int, mpq] | None = None, *, _trusted=False):
        self.table = table if _trusted else var_table(table)
        if terms is None:
            self.terms = {}
        elif _trusted:
            self.terms = terms
        else:
            self.terms = {m: mpq(c) for m, c in terms.items() if c != 0}
        self._hash = None
        self._horner = None

    # construction ---------------------------------------------------------

    @classmethod
    def zero(cls, table: Sequence[str]) -> "MultiPoly":
        return cls(tuple(table))

    @classmethod
    def const(cls, c, table: Sequence[str]) -> "MultiPoly":
        c = _to_rational(c)
        return cls(tuple(table), {0: c} if c else {})

    @classmethod
    def var(cls, name: str, table: Sequence[str]) -> "MultiPoly":
        table = tuple(table)
        if name not in table:
            raise UnknownVariableError(f"{name!r} not in table {table}")
        return cls(table, {1 << (_BITS * table.index(name)): mpq(1)})

    @classmethod
    def from_terms(cls, table: Sequence[str], items: Iterable[tuple[Sequence[int], object]]) -> "MultiPoly":
        table = var_table(table)
        terms: dict[int, mpq] = {}
        for exps, c in items:
            if len(exps) != len(table):
                raise PolyError("monomial length does not match table")
            m = _pack(exps)
            v = terms.get(m, 0) + _to_rational(c)
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return cls(table, terms, _trusted=True)

    @classmethod
    def parse(cls, text: str, table: Sequence[str] | None = None) -> "MultiPoly":
        return parse_poly(text, table)

    def _new(self, terms: dict[int, mpq]) -> "MultiPoly":
        return MultiPoly(self.table, terms, _trusted=True)

    # inspection -----------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.table)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self) -> mpq:
        if not self.is_constant():
            raise PolyError("polynomial is not constant")
        return self.terms.get(0, mpq(0))

    def __len__(self) -> int:
        return len(self.terms)

    def monomials(self) -> Iterator[tuple[tuple[int, ...], mpq]]:
        """Terms as (exponent tuple, coefficient), canonical order, largest first."""
        n = len(self.table)
        items = [(_unpack(m, n), c) for m, c in self.terms.items()]
        items.sort(key=lambda t: _grevlex_key(t[0]), reverse=True)
        return iter(items)

    def leading_term(self) -> tuple[tuple[int, ...], mpq]:
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        return next(self.monomials())

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        n = len(self.table)
        return max(sum(_unpack(m, n)) for m in self.terms)

    def degree(self, var: str) -> int:
        i = self._index(var)
        if not self.terms:
            return -1
        return max((m >> (_BITS * i)) & _MASK for m in self.terms)

    def variables(self) -> tuple[str, ...]:
        """Variables that actually occur, in table order."""
        used = 0
        for m in self.terms:
            used |= m
        return tuple(v for i, v in enumerate(self.table) if (used >> (_BITS * i)) & _MASK)

    def _index(self, var: str) -> int:
        try:
            return self.table.index(var)
        except ValueError:
            raise UnknownVariableError(f"{var!r} not in table {self.table}") from None

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.table != self.table:
                raise TableMismatchError(f"tables differ: {self.table} vs {other.table}")
            return other
        return MultiPoly.const(other, self.table)

    def __add__(self, other) -> "MultiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for m, c in small.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        _check_budget(len(out))
        return self._new(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return self._new({})
        if self.total_degree() + other.total_degree() > _MAX_EXP:
            raise PolyError("degree overflow")
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, mpq] = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                v = get(m)
                out[m] = ca * cb if v is None else v + ca * cb
        out = {m: c for m, c in out.items() if c}
        _check_budget(len(out))
        return self._new(out)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = _to_rational(c)
        if not c:
            return self._new({})
        return self._new({m: v * c for m, v in self.terms.items()})

    def __pow__(self, k: int) -> "MultiPoly":
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = MultiPoly.const(1, self.table)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.table == other.table and self.terms == other.terms
        if isinstance(other, (int, Fraction, _MPQ)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # calculus and structural operations ----------------------------------

    def derivative(self, var: str) -> "MultiPoly":
        i = self._index(var)
        shift = _BITS * i
        unit = 1 << shift
        out = {}
        for m, c in self.terms.items():
            e = (m >> shift) & _MASK
            if e:
                out[m - unit] = c * e
        return self._new(out)

    def retable(self, table: Sequence[str]) -> "MultiPoly":
        """Re-express over another table containing every occurring variable."""
        table = var_table(table)
        if table == self.table:
            return self
        n = len(self.table)
        pos = {}
        for i, v in enumerate(self.table):
            if v in table:
                pos[i] = table.index(v)
        out = {}
        for m, c in self.terms.items():
            exps = _unpack(m, n)
            new = 0
            for i, e in enumerate(exps):
                if e:
                    if i not in pos:
                        raise TableMismatchError(
                            f"variable {self.table[i]!r} occurs but is missing from {table}")
                    new |= e << (_BITS * pos[i])
            out[new] = c
        return MultiPoly(table, out, _trusted=True)

    def collect(self, variables: Sequence[str]) -> dict[tuple[int, ...], "MultiPoly"]:
        """Split into coefficients with respect to ``variables``.

        Returns a map from exponent tuples of ``variables`` to polynomials over
        the remaining variables of the table.
        """
        idx = [self._index(v) for v in variables]
        rest = tuple(v for v in self.table if v not in variables)
        rest_idx = [self.table.index(v) for v in rest]
        n = len(self.table)
        groups: dict[tuple[int, ...], dict[int, mpq]] = {}
        for m, c in self.terms.items():
            exps = _unpack(m, n)
            key = tuple(exps[i] for i in idx)
            sub = 0
            for j, i in enumerate(rest_idx):
                sub |= exps[i] << (_BITS * j)
            groups.setdefault(key, {})[sub] = c
        return {k: MultiPoly(rest, v, _trusted=True) for k, v in groups.items()}

    def coeff(self, exps: Mapping[str, int]) -> mpq:
        """Coefficient of the monomial given as {variable: exponent}."""
        m = 0
        for v, e in exps.items():
            m |= e << (_BITS * self._index(v))
        return self.terms.get(m, mpq(0))

    # numerics -------------------------------------------------------------

    def evaluate(self, point: Mapping[str, complex]) -> complex:
        """Evaluate in complex double precision (rounded, not exact).

        Nested Horner scheme over the table order; every table variable that
        occurs must be assigned.
        """
        if self._horner is None:
            self._horner = _horner_tree(self)
        used = self.variables()
        missing = [v for v in used if v not in point]
        if missing:
            raise UnknownVariableError(f"no value for {missing}")
        vals = [complex(point[v]) if v in point else 0j for v in self.table]
        return _horner_eval(self._horner, vals, 0)

    # text -----------------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r}, table={self.table})"


def _horner_tree(p: MultiPoly):
    n = len(p.table)
    items = [(_unpack(m, n), complex(float(c))) for m, c in p.terms.items()]

    def build(items, i):
        if i == n:
            return sum(c for _, c in items)
        groups: dict[int, list] = {}
        for exps, c in items:
            groups.setdefault(exps[i], []).append((exps, c))
        return [(e, build(g, i + 1)) for e, g in sorted(groups.items(), reverse=True)]

    return build(items, 0)


def _horner_eval(node, vals, i):
    if not isinstance(node, list):
        return node
    x = vals[i]
    acc = 0j
    prev = None
    for e, child in node:
        if prev is not None:
            acc *= x ** (prev - e)
        acc += _horner_eval(child, vals, i + 1)
        prev = e
    if prev:
        acc *= x ** prev
    return acc


# ---------------------------------------------------------------------------
# text format

def _format_monomial(exps: tuple[int, ...], table: tuple[str, ...]) -> str:
    parts = []
    for v, e in zip(table, exps):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_poly(p: MultiPoly) -> str:
    if not p.terms:
        return "0"
    out = []
    for k, (exps, c) in enumerate(p.monomials()):
        neg = c < 0
        a = -c if neg else c
        mono = _format_monomial(exps, p.table)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def parse_poly(text: str, table: Sequence[str] | None = None) -> MultiPoly:
    """Parse the grammar ``poly := ['-'] term (('+'|'-') term)*``.

    Terms are a rational or factor followed by ``*factor`` repeats; factors are
    ``ident`` or ``ident^uint``; rationals are ``uint`` or ``uint/uint``.
    When ``table`` is None the variables are taken in order of first
    appearance.
    """
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("id", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))

    if table is None:
        seen = []
        for kind, val, _ in tokens:
            if kind == "id" and val not in seen:
                seen.append(val)
        table = tuple(seen)
    table = var_table(table)
    index = {v: i for i, v in enumerate(table)}

    k = 0

    def peek():
        return tokens[k]

    def take(kind, val=None):
        nonlocal k
        t = tokens[k]
        if t[0] != kind or (val is not None and t[1] != val):
            want = val if val is not None else kind
            raise PolyParseError(f"expected {want!r}, found {t[1] or 'end of input'!r}", text, t[2])
        k += 1
        return t

    def factor(exps):
        _, name, p = take("id")
        if name not in index:
            raise PolyParseError(f"unknown variable {name!r}", text, p)
        e = 1
        if peek()[:2] == ("op", "^"):
            take("op", "^")
            e = int(take("num")[1])
        exps[index[name]] += e

    def term():
        exps = [0] * len(table)
        coef = mpq(1)
        t = peek()
        if t[0] == "num":
            num = int(take("num")[1])
            den = 1
            if peek()[:2] == ("op", "/"):
                take("op", "/")
                tok = take("num")
                den = int(tok[1])
                if den == 0:
                    raise PolyParseError("zero denominator", text, tok[2])
            coef = mpq(num, den)
        elif t[0] == "id":
            factor(exps)
        else:
            raise PolyParseError(f"unexpected {t[1] or 'end of input'!r}", text, t[2])
        while peek()[:2] == ("op", "*"):
            take("op", "*")
            factor(exps)
        return exps, coef

    if len(tokens) == 1:
        raise PolyParseError("empty polynomial", text, 0)
    items = []
    sign = 1
    if peek()[:2] == ("op", "-"):
        take("op", "-")
        sign = -1
    while True:
        exps, c = term()
        items.append((exps, sign * c))
        t = peek()
        if t[0] == "end":
            break
        if t[0] == "op" and t[1] in "+-":
            take("op")
            sign = 1 if t[1] == "+" else -1
            continue
        raise PolyParseError(f"unexpected {t[1]!r}", text, t[2])
    return MultiPoly.from_terms(table, items)


# ---------------------------------------------------------------------------
# operations

def ring_arithmetic(p: MultiPoly, q, op: str) -> MultiPoly:
    if op == "add":
        return p + _same(p, q)
    if op == "sub":
        return p - _same(p, q)
    if op == "mul":
        return p * _same(p, q)
    if op == "neg":
        return -p
    if op == "scale":
        return p.scale(q)
    raise ValueError(f"unknown operation {op!r}")


def _same(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    if not isinstance(q, MultiPoly) or q.table != p.table:
        raise TableMismatchError("operands must share a variable table")
    return q


def derivative(p: MultiPoly, var: str) -> MultiPoly:
    return p.derivative(var)


def gradient(p: MultiPoly, variables: Sequence[str] | None = None) -> list[MultiPoly]:
    return [p.derivative(v) for v in (variables or p.table)]


def substitute(p: MultiPoly, assignment: Mapping[str, object],
               table: Sequence[str] | None = None) -> MultiPoly:
    """Replace variables by polynomials (or rational constants).

    Unsubstituted variables keep their names.  ``table`` defaults to the
    remaining variables of ``p`` followed by any new variables introduced by
    the replacement polynomials.
    """
    for v in assignment:
        p._index(v)
    if table is None:
        names = [v for v in p.table if v not in assignment]
        for r in assignment.values():
            if isinstance(r, MultiPoly):
                names.extend(v for v in r.table if v not in names)
        table = tuple(names)
    table = var_table(table)
    for v in p.variables():
        if v not in assignment and v not in table:
            raise TableMismatchError(f"remaining variable {v!r} missing from target table")

    repl: dict[int, MultiPoly] = {}
    for v, r in assignment.items():
        r = r.retable(table) if isinstance(r, MultiPoly) else MultiPoly.const(r, table)
        repl[p.table.index(v)] = r

    n = len(p.table)
    keep = {i: table.index(v) for i, v in enumerate(p.table) if i not in repl and v in table}
    powers: dict[tuple[int, int], MultiPoly] = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = repl[i] if e == 1 else power(i, e - 1) * repl[i]
        return powers[key]

    # group terms by the substituted part so each power product is formed once
    groups: dict[tuple[int, ...], dict[int, mpq]] = {}
    for m, c in p.terms.items():
        exps = _unpack(m, n)
        sub_key = tuple(exps[i] for i in sorted(repl))
        rest = 0
        for i, j in keep.items():
            rest |= exps[i] << (_BITS * j)
        g = groups.setdefault(sub_key, {})
        g[rest] = c
    order = sorted(repl)
    result = MultiPoly.zero(table)
    for key, rest_terms in groups.items():
        factor = MultiPoly.const(1, table)
        for i, e in zip(order, key):
            if e:
                factor = factor * power(i, e)
        result = result + factor * MultiPoly(table, rest_terms, _trusted=True)
    return result


def divide_exact(g: MultiPoly, f: MultiPoly, order: str = "grevlex") -> MultiPoly | None:
    """Return q with g == q*f, or None when f does not divide g.

    Single-divisor multivariate division: the remainder is zero iff f | g, so
    the first leading term of the running remainder that LT(f) does not divide
    settles the answer.  ``order`` is "grevlex" or "grlex"; the verdict does
    not depend on it.
    """
    if f.table != g.table:
        raise TableMismatchError("dividend and divisor tables differ")
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if g.is_zero():
        return g
    n = len(f.table)
    if order == "grevlex":
        key = _grevlex_key
    elif order == "grlex":
        key = lambda e: (sum(e), e)  # noqa: E731
    else:
        raise ValueError(f"unknown monomial order {order!r}")

    def mkey(m):
        return key(_unpack(m, n))

    lm_f = max(f.terms, key=mkey)
    lc_f = f.terms[lm_f]
    guard = _guard(n)
    fterms = list(f.terms.items())

    r = dict(g.terms)
    heap = [(_neg(mkey(m)), m) for m in r]
    heapq.heapify(heap)
    q: dict[int, mpq] = {}
    budget = _term_budget.get()
    while r:
        _, m = heapq.heappop(heap)
        c = r.get(m)
        if c is None:
            continue
        d = (m | guard) - lm_f
        if d & guard != guard:
            return None
        t = d ^ guard
        coef = c / lc_f
        q[t] = coef
        for mf, cf in fterms:
            mm = mf + t
            v = r.get(mm)
            if v is None:
                r[mm] = -coef * cf
                heapq.heappush(heap, (_neg(mkey(mm)), mm))
            else:
                v = v - coef * cf
                if v:
                    r[mm] = v
                else:
                    del r[mm]
        if len(r) > budget:
            raise TermBudgetExceeded("remainder exceeds term budget")
    return MultiPoly(g.table, q, _trusted=True)


def _neg(key):
    # heapq is a min-heap; invert a (degree, tuple) key
    return (-key[0], tuple(-x for x in key[1]))


class _AnyDegree:
    def __repr__(self):
        return "ANY_DEGREE"


ANY_DEGREE = _AnyDegree()


def weighted_degree(p: MultiPoly, weights: Mapping[str, int]):
    """Common weighted degree of all terms, None if p is not weighted homogeneous.

    The zero polynomial is homogeneous of every degree; it returns ANY_DEGREE.
    """
    if p.is_zero():
        return ANY_DEGREE
    used = p.variables()
    missing = [v for v in used if v not in weights]
    if missing:
        raise UnknownVariableError(f"no weight for {missing}")
    w = [weights.get(v, 0) for v in p.table]
    n = len(p.table)
    degree = None
    for m in p.terms:
        d = sum(wi * e for wi, e in zip(w, _unpack(m, n)))
        if degree is None:
            degree = d
        elif d != degree:
            return None
    return degree


def evaluate(p: MultiPoly, point: Mapping[str, complex]) -> complex:
    return p.evaluate(point)


def coefficients_in(p: MultiPoly, var: str) -> list[MultiPoly]:
    """Coefficients of p as a polynomial in ``var``, lowest degree first.

    The coefficients stay over p's table (with ``var`` absent).
    """
    i = p._index(var)
    shift = _BITS * i
    deg = p.degree(var)
    out = [dict() for _ in range(max(deg, 0) + 1)]
    for m, c in p.terms.items():
        e = (m >> shift) & _MASK
        out[e][m - (e << shift)] = c
    return [MultiPoly(p.table, t, _trusted=True) for t in out]


def sylvester_matrix(f: MultiPoly, g: MultiPoly, var: str) -> list[list[MultiPoly]]:
    fc = coefficients_in(f, var)[::-1]
    gc = coefficients_in(g, var)[::-1]
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    zero = MultiPoly.zero(f.table)
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def sylvester_resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Res_var(f, g) as the determinant of the Sylvester matrix.

    A constant argument c against a polynomial of degree d gives c**d.
    """
    if f.table != g.table:
        raise TableMismatchError("resultant operands must share a table")
    if f.is_zero() or g.is_zero():
        raise PolyError("resultant of the zero polynomial")
    df, dg = f.degree(var), g.degree(var)
    if df == 0 and dg == 0:
        raise PolyError(f"both operands have degree 0 in {var}")
    if dg == 0:
        return g ** df
    if df == 0:
        return f ** dg
    from .polmat import PolyMatrix, determinant

    return determinant(PolyMatrix(sylvester_matrix(f, g, var)))


# ---------------------------------------------------------------------------
# univariate helpers over Q (coefficient lists, lowest degree first)

def _utrim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _umul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _utrim(out)


def _uadd(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return _utrim(out)


def _uderiv(a: list) -> list:
    return _utrim([a[i] * i for i in range(1, len(a))])


def _urem(a: list, b: list) -> list:
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lb
        shift = len(a) - len(b)
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        _utrim(a)
    return a


def ugcd(a: list, b: list) -> list:
    """Monic gcd of two univariate polynomials over Q."""
    a, b = _utrim(list(a)), _utrim(list(b))
    while b:
        a, b = b, _urem(a, b)
    if not a:
        return []
    lc = a[-1]
    return [x / lc for x in a]


def restrict_to_line(p: MultiPoly, base: Sequence, direction: Sequence) -> list:
    """Univariate polynomial t -> p(base + t*direction), lowest degree first."""
    n = len(p.table)
    lines = [[mpq(a), mpq(b)] for a, b in zip(base, direction)]
    cache: dict[tuple[int, int], list] = {}

    def power(i, e):
        if e == 0:
            return [mpq(1)]
        key = (i, e)
        if key not in cache:
            cache[key] = _umul(power(i, e - 1), _utrim(list(lines[i])))
        return cache[key]

    acc: list = []
    for m, c in p.terms.items():
        t = [c]
        for i, e in enumerate(_unpack(m, n)):
            if e:
                t = _umul(t, power(i, e))
        acc = _uadd(acc, t)
    return acc


def _random_rational(rng: random.Random, bound: int) -> mpq:
    num = rng.randint(-bound, bound)
    den = rng.randint(1, bound)
    return mpq(num, den)


def probably_squarefree(f: MultiPoly, trials: int = 8, seed: int = 0, bound: int = 10_000) -> bool:
    """Monte Carlo squarefreeness test along random rational lines.

    False is certain (a repeated factor was seen); True is probabilistic.
    """
    if f.is_zero():
        raise PolyError("zero polynomial")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    n = len(f.table)
    for _ in range(trials):
        base = [_random_rational(rng, bound) for _ in range(n)]
        direction = [_random_rational(rng, bound) for _ in range(n)]
        h = restrict_to_line(f, base, direction)
        if len(h) <= 2:
            continue
        if len(ugcd(h, _uderiv(h))) > 1:
            return False
    return True
