"""Dense exact linear algebra: rank and determinant.

Over Q each row is scaled to integers and reduced by Bareiss' fraction-free
elimination, so every intermediate entry is a minor of the input.  Over F_p
it is ordinary Gaussian elimination on residues.  The kernels work on lists
of Python ints; :class:`DenseMatrix` is the Scalar-typed front end.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import ContextMismatch, InvalidParameter, NotSquare
from .exactfield import QQ, FieldCtx, Scalar, scalar


class DenseMatrix:
    """Row-major matrix of scalars from a single field."""

    __slots__ = ("rows", "cols", "ctx", "entries")

    def __init__(self, entries, ctx: FieldCtx | None = None):
        entries = [list(r) for r in entries]
        if ctx is None:
            ctx = next((v.ctx for r in entries for v in r if isinstance(v, Scalar)), QQ)
        self.ctx = ctx
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        if any(len(r) != self.cols for r in entries):
            raise InvalidParameter("ragged matrix")
        self.entries = [[scalar(v, ctx) for v in r] for r in entries]

    @classmethod
    def zeros(cls, rows: int, cols: int, ctx: FieldCtx = QQ) -> "DenseMatrix":
        return cls([[0] * cols for _ in range(rows)], ctx)

    @classmethod
    def identity(cls, n: int, ctx: FieldCtx = QQ) -> "DenseMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], ctx)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def raw_rows(self) -> list[list]:
        return [[v.value for v in r] for r in self.entries]

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.ctx == other.ctx and self.entries == other.entries

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in self.entries)
        return f"DenseMatrix([{body}], ctx={self.ctx})"


def integerize_row(row) -> tuple[list[int], int]:
    """Clear denominators in a row; returns (ints, scale)."""
    den = 1
    for v in row:
        if isinstance(v, Fraction) and v.denominator != 1:
            den = lcm(den, v.denominator)
    if den == 1:
        return [int(v) for v in row], 1
    return [int(v * den) for v in row], den


def bareiss_rank(rows: list[list[int]], ncols: int) -> int:
    """Rank of an integer matrix by fraction-free elimination.  ``rows`` is consumed."""
    rows = [r for r in rows if any(r)]
    rank, prev = 0, 1
    m = len(rows)
    for c in range(ncols):
        if rank == m:
            break
        piv = next((i for i in range(rank, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        p = prow[c]
        ptail = prow[c + 1 :]
        head = [0] * (c + 1)
        for i in range(rank + 1, m):
            row = rows[i]
            f = row[c]
            if f:
                rows[i] = head + [(p * x - f * y) // prev for x, y in zip(row[c + 1 :], ptail)]
            elif p != prev:
                rows[i] = head + [p * x // prev for x in row[c + 1 :]]
        prev = p
        rank += 1
    return rank


def gauss_rank_mod(rows: list[list[int]], ncols: int, p: int) -> int:
    """Rank over F_p of a matrix of residues.  ``rows`` is consumed."""
    rows = [r for r in rows if any(r)]
    rank = 0
    m = len(rows)
    for c in range(ncols):
        if rank == m:
            break
        piv = next((i for i in range(rank, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[c], -1, p)
        ptail = [x * inv % p for x in prow[c + 1 :]]
        for i in range(rank + 1, m):
            row = rows[i]
            f = row[c]
            if f:
                rows[i] = [0] * (c + 1) + [(x - f * y) % p for x, y in zip(row[c + 1 :], ptail)]
        rank += 1
    return rank


def raw_rank(rows: list[list], ncols: int, characteristic: int) -> int:
    """Rank of raw entries (Fractions/ints over Q, residues over F_p)."""
    if characteristic:
        return gauss_rank_mod([list(r) for r in rows], ncols, characteristic)
    return bareiss_rank([integerize_row(r)[0] for r in rows], ncols)


def bareiss_det(rows: list[list[int]]) -> int:
    n = len(rows)
    rows = [list(r) for r in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if rows[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        p = rows[k][k]
        prow = rows[k]
        for i in range(k + 1, n):
            row = rows[i]
            f = row[k]
            rows[i] = row[: k + 1] + [(p * x - f * y) // prev for x, y in zip(row[k + 1 :], prow[k + 1 :])]
        prev = p
    return sign * rows[n - 1][n - 1] if n else 1


def gauss_det_mod(rows: list[list[int]], p: int) -> int:
    n = len(rows)
    rows = [list(r) for r in rows]
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if rows[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            det = -det
        pk = rows[k][k]
        det = det * pk % p
        inv = pow(pk, -1, p)
        for i in range(k + 1, n):
            f = rows[i][k] * inv % p
            if f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[k])]
    return det % p


def rank(m: DenseMatrix) -> int:
    """Rank of ``m`` over its own field."""
    return raw_rank(m.raw_rows(), m.cols, m.ctx.characteristic)


def det_gauss(m: DenseMatrix) -> Scalar:
    """Exact determinant by elimination (Bareiss over Q, modular over F_p)."""
    if m.rows != m.cols:
        raise NotSquare(f"{m.rows}x{m.cols} matrix has no determinant")
    p = m.ctx.characteristic
    if p:
        return scalar(gauss_det_mod(m.raw_rows(), p), m.ctx)
    scale = 1
    rows = []
    for r in m.raw_rows():
        ints, s = integerize_row(r)
        rows.append(ints)
        scale *= s
    return scalar(Fraction(bareiss_det(rows), scale), m.ctx)


def matmul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    if a.ctx != b.ctx:
        raise ContextMismatch("matrices over different fields")
    if a.cols != b.rows:
        raise InvalidParameter("shape mismatch")
    out = []
    for r in a.entries:
        out.append([sum((r[k] * b.entries[k][j] for k in range(a.cols)), a.ctx.zero()) for j in range(b.cols)])
    return DenseMatrix(out, a.ctx)
