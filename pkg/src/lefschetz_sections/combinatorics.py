"""Unsigned Stirling numbers of the first kind and subset-product sums.

``d_subset_sum(n, k, a, b)`` is the k-th elementary symmetric function of the
multiset ``{i*a + b : 0 <= i < n}``, which is also written ``d_{n,n-k}(a, b)``.
:func:`d_stirling_formula` gives the same number through
Stirling numbers and binomials and is kept as an independent check.
"""
from __future__ import annotations

import threading
from math import comb

from .errors import ContextMismatch, IndexOutOfRange, InvalidParameter
from .exactfield import QQ, FieldCtx, Scalar, scalar


class StirlingTable:
    """Triangular table of unsigned Stirling numbers s(n, k), grown on demand.

    Entries are plain integers, independent of any field; reduce them at the
    point of use.
    """

    def __init__(self):
        self._rows: list[list[int]] = [[0], [0, 1]]  # rows[n][k], rows[0] unused
        self._lock = threading.Lock()

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def _grow(self, n: int) -> None:
        with self._lock:
            rows = self._rows
            while len(rows) <= n:
                m = len(rows) - 1
                prev = rows[m]
                # s(m+1, k) = s(m, k-1) + m * s(m, k)
                new = [0] * (m + 2)
                for k in range(1, m + 2):
                    new[k] = prev[k - 1] + (m * prev[k] if k <= m else 0)
                rows.append(new)

    def row(self, n: int) -> list[int]:
        if n > self.max_n:
            self._grow(n)
        return self._rows[n]

    def __call__(self, n: int, k: int) -> int:
        if n < 1:
            raise InvalidParameter(f"Stirling numbers need n >= 1, got {n}")
        if k <= 0 or k > n:
            return 0
        return self.row(n)[k]


STIRLING = StirlingTable()


def stirling_unsigned(n: int, k: int) -> int:
    """s(n, k): coefficient of x^k in x(x+1)...(x+n-1).  Zero outside 1 <= k <= n."""
    return STIRLING(n, k)


def _common_ctx(values, ctx: FieldCtx | None) -> FieldCtx:
    for v in values:
        if isinstance(v, Scalar):
            if ctx is None:
                ctx = v.ctx
            elif v.ctx != ctx:
                raise ContextMismatch(f"mixed fields {ctx} and {v.ctx}")
    return QQ if ctx is None else ctx


def expand_linear_product(factors, ctx: FieldCtx | None = None) -> list[Scalar]:
    """Coefficients (ascending) of prod(slope*x + intercept) over ``factors``.

    The empty product is ``[1]``.  Plain ints are accepted and mapped into
    ``ctx`` (or the field of the scalar arguments, or Q).
    """
    ctx = _common_ctx([v for f in factors for v in f], ctx)
    coeffs = [ctx.one()]
    for slope, intercept in factors:
        slope, intercept = scalar(slope, ctx), scalar(intercept, ctx)
        new = [ctx.zero()] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i] += c * intercept
            new[i + 1] += c * slope
        coeffs = new
    return coeffs


def elementary_symmetric(values, ctx: FieldCtx | None = None) -> list[Scalar]:
    """``[e_0, e_1, ..., e_n]`` of ``values`` by the one-pass recurrence."""
    ctx = _common_ctx(values, ctx)
    e = [ctx.one()]
    for v in values:
        v = scalar(v, ctx)
        e.append(ctx.zero())
        for j in range(len(e) - 1, 0, -1):
            e[j] = e[j] + v * e[j - 1]
    return e


def d_subset_sum(n: int, k: int, a, b) -> Scalar:
    """Sum over all k-subsets of {i*a + b : 0 <= i < n} of the product of the subset."""
    if n < 1:
        raise InvalidParameter(f"n must be >= 1, got {n}")
    if k < 0 or k > n:
        raise IndexOutOfRange(f"k must lie in [0, {n}], got {k}")
    ctx = _common_ctx([a, b], None)
    a, b = scalar(a, ctx), scalar(b, ctx)
    return elementary_symmetric([a * i + b for i in range(n)], ctx)[k]


def d_stirling_formula(n: int, k: int, a, b) -> Scalar:
    """sum_{i=0}^{k} s(n, n-i) * C(n-i, k-i) * a^i * b^(k-i).

    Agrees with :func:`d_subset_sum`; 0^0 is taken to be 1.
    """
    if k < 0 or k > n:
        raise IndexOutOfRange(f"k must lie in [0, {n}], got {k}")
    ctx = _common_ctx([a, b], None)
    a, b = scalar(a, ctx), scalar(b, ctx)
    total = ctx.zero()
    for i in range(k + 1):
        total += (a**i) * (b ** (k - i)) * (stirling_unsigned(n, n - i) * comb(n - i, k - i))
    return total
