"""Matrices of polynomials: determinants, Pfaffians and a JSON file format."""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Callable, Sequence

from .poly import MultiPoly, PolyError, TableMismatchError, divide_exact, parse_poly, var_table

__all__ = [
    "PolyMatrix",
    "SkewPolyMatrix",
    "determinant",
    "pfaffian",
    "principal_sub_pfaffians",
    "matmul",
    "transpose",
    "is_skew",
    "is_symmetric",
    "matrix_from_json",
    "matrix_to_json",
]


class MatrixError(PolyError):
    pass


class PolyMatrix:
    """Rectangular matrix of MultiPoly entries sharing one variable table."""

    __slots__ = ("rows", "cols", "table", "_entries")

    def __init__(self, rows: Sequence[Sequence[MultiPoly]], table: Sequence[str] | None = None):
        data = [list(r) for r in rows]
        if table is None:
            if not data or not data[0]:
                raise MatrixError("cannot infer the table of an empty matrix; pass table=")
            table = data[0][0].table
        self.table = var_table(table)
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        entries = []
        for r in data:
            if len(r) != self.cols:
                raise MatrixError("ragged rows")
            for e in r:
                if not isinstance(e, MultiPoly):
                    e = MultiPoly.const(e, self.table)
                elif e.table != self.table:
                    raise TableMismatchError("matrix entries must share one table")
                entries.append(e)
        self._entries = tuple(entries)

    @classmethod
    def identity(cls, n: int, table: Sequence[str]) -> "PolyMatrix":
        one, zero = MultiPoly.const(1, table), MultiPoly.zero(table)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], table)

    @classmethod
    def diagonal(cls, diag: Sequence[MultiPoly]) -> "PolyMatrix":
        table = diag[0].table
        zero = MultiPoly.zero(table)
        n = len(diag)
        return cls([[diag[i] if i == j else zero for j in range(n)] for i in range(n)], table)

    def __getitem__(self, ij: tuple[int, int]) -> MultiPoly:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> list[MultiPoly]:
        return list(self._entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list[MultiPoly]:
        return [self._entries[i * self.cols + j] for i in range(self.rows)]

    def to_lists(self) -> list[list[MultiPoly]]:
        return [self.row(i) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def map(self, fn: Callable[[MultiPoly], MultiPoly], table: Sequence[str] | None = None) -> "PolyMatrix":
        out = [[fn(e) for e in r] for r in self.to_lists()]
        return PolyMatrix(out, table if table is not None else (out[0][0].table if out and out[0] else self.table))

    def with_entry(self, i: int, j: int, value: MultiPoly) -> "PolyMatrix":
        data = self.to_lists()
        data[i][j] = value
        return PolyMatrix(data, self.table)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self[i, j] for j in cols] for i in rows], self.table)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.table, self._entries) == (
            other.rows, other.cols, other.table, other._entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.table, self._entries))

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return matmul(self, other)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"PolyMatrix({self.rows}x{self.cols}: [{body}])"


class SkewPolyMatrix(PolyMatrix):
    """Square matrix with a_ij == -a_ji and zero diagonal, checked on construction."""

    __slots__ = ()

    def __init__(self, rows, table=None):
        super().__init__(rows, table)
        if not is_skew(self):
            raise MatrixError("matrix is not skew-symmetric")

    @classmethod
    def from_upper(cls, n: int, upper: dict[tuple[int, int], MultiPoly], table: Sequence[str]) -> "SkewPolyMatrix":
        """Build from entries (i, j) with i < j; missing entries are zero."""
        zero = MultiPoly.zero(table)
        data = [[zero] * n for _ in range(n)]
        for (i, j), v in upper.items():
            if not i < j:
                raise MatrixError(f"upper entry ({i},{j}) must have i < j")
            if not isinstance(v, MultiPoly):
                v = MultiPoly.const(v, table)
            data[i][j] = v
            data[j][i] = -v
        return cls(data, table)


def transpose(a: PolyMatrix) -> PolyMatrix:
    return PolyMatrix([a.column(j) for j in range(a.cols)], a.table)


def matmul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.cols != b.rows:
        raise MatrixError(f"dimension mismatch: {a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    if a.table != b.table:
        raise TableMismatchError("matrix tables differ")
    zero = MultiPoly.zero(a.table)
    out = []
    for i in range(a.rows):
        r = a.row(i)
        row = []
        for j in range(b.cols):
            acc = zero
            for k in range(a.cols):
                if r[k] and b[k, j]:
                    acc = acc + r[k] * b[k, j]
            row.append(acc)
        out.append(row)
    return PolyMatrix(out, a.table)


def is_skew(a: PolyMatrix) -> bool:
    if not a.is_square:
        return False
    return all(a[i, j] == -a[j, i] for i in range(a.rows) for j in range(i, a.cols))


def is_symmetric(a: PolyMatrix) -> bool:
    if not a.is_square:
        return False
    return all(a[i, j] == a[j, i] for i in range(a.rows) for j in range(i + 1, a.cols))


def matmul_transpose_ops(a: PolyMatrix, b: PolyMatrix | None, op: str):
    if op == "mul":
        return matmul(a, b)
    if op == "transpose":
        return transpose(a)
    if op == "is_skew":
        return is_skew(a)
    if op == "is_symmetric":
        return is_symmetric(a)
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# determinants

def _det_cofactor(a: PolyMatrix) -> MultiPoly:
    # Laplace expansion along rows, memoised on the set of remaining columns.
    n = a.rows
    data = a.to_lists()
    one = MultiPoly.const(1, a.table)

    @lru_cache(maxsize=None)
    def minor(mask: int) -> MultiPoly:
        # rows n - popcount(mask) .. n-1 against the columns in mask
        k = bin(mask).count("1")
        if k == 0:
            return one
        i = n - k
        acc = MultiPoly.zero(a.table)
        sign = 1
        for j in range(n):
            if not mask >> j & 1:
                continue
            e = data[i][j]
            if e:
                term = e * minor(mask & ~(1 << j))
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        return acc

    return minor((1 << n) - 1)


def _det_bareiss(a: PolyMatrix) -> MultiPoly:
    n = a.rows
    m = a.to_lists()
    sign = 1
    prev = MultiPoly.const(1, a.table)
    for k in range(n - 1):
        candidates = [i for i in range(k, n) if m[i][k]]
        if not candidates:
            return MultiPoly.zero(a.table)
        p = min(candidates, key=lambda i: len(m[i][k]))
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                if prev.is_constant():
                    q = num.scale(1 / prev.constant_value())
                else:
                    q = divide_exact(num, prev)
                    if q is None:
                        raise MatrixError("Bareiss step was not exact")
                m[i][j] = q
            m[i][k] = MultiPoly.zero(a.table)
        prev = pivot
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def determinant(a: PolyMatrix, method: str = "auto") -> MultiPoly:
    """Exact determinant.

    ``method`` is "bareiss" (fraction-free elimination, exact divisions),
    "cofactor" (memoised Laplace expansion) or "auto", which takes the
    division-free cofactor route up to size 6 and Bareiss beyond.
    """
    if not a.is_square:
        raise MatrixError(f"determinant of a non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    if n == 0:
        return MultiPoly.const(1, a.table)
    if n == 1:
        return a[0, 0]
    if method == "auto":
        method = "cofactor" if n <= 6 else "bareiss"
    if method == "cofactor":
        return _det_cofactor(a)
    if method == "bareiss":
        return _det_bareiss(a)
    raise ValueError(f"unknown determinant method {method!r}")


# ---------------------------------------------------------------------------
# Pfaffians

def pfaffian(s: PolyMatrix) -> MultiPoly:
    """Pfaffian by expansion along the first row; odd size gives 0, empty gives 1."""
    if not is_skew(s):
        raise MatrixError("Pfaffian needs a skew-symmetric matrix")
    n = s.rows
    if n % 2:
        return MultiPoly.zero(s.table)
    data = s.to_lists()
    one = MultiPoly.const(1, s.table)

    @lru_cache(maxsize=None)
    def pf(idx: tuple[int, ...]) -> MultiPoly:
        if not idx:
            return one
        first, rest = idx[0], idx[1:]
        acc = MultiPoly.zero(s.table)
        for k, j in enumerate(rest):
            e = data[first][j]
            if not e:
                continue
            term = e * pf(rest[:k] + rest[k + 1:])
            acc = acc + term if k % 2 == 0 else acc - term
        return acc

    return pf(tuple(range(n)))


def principal_sub_pfaffians(s: PolyMatrix) -> list[MultiPoly]:
    """Pfaffians of the 4x4 minors deleting row/column i, for i = 1..5, unsigned."""
    if s.rows != 5 or s.cols != 5:
        raise MatrixError("principal sub-Pfaffians need a 5x5 matrix")
    if not is_skew(s):
        raise MatrixError("principal sub-Pfaffians need a skew-symmetric matrix")
    out = []
    for i in range(5):
        keep = [k for k in range(5) if k != i]
        out.append(pfaffian(s.submatrix(keep, keep)))
    return out


# ---------------------------------------------------------------------------
# JSON format: {"vars": [...], "rows": [["poly", ...], ...]}

def matrix_to_json(a: PolyMatrix) -> dict:
    return {"vars": list(a.table), "rows": [[str(e) for e in a.row(i)] for i in range(a.rows)]}


def matrix_from_json(obj: dict | str) -> PolyMatrix:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "vars" not in obj or "rows" not in obj:
        raise MatrixError('matrix JSON needs "vars" and "rows"')
    table = var_table(obj["vars"])
    rows = [[parse_poly(str(e), table) for e in r] for r in obj["rows"]]
    return PolyMatrix(rows, table)
