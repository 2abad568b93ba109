"""Graded pieces of ideals: span dimensions, Hilbert functions, multiplication maps.

No quotient bases are built.  The rank of ``x l^k : [A]_d -> [A]_{d+k}`` for
``A = S/I`` is ``dim [I + (l^k)]_{d+k} - dim [I]_{d+k}``.
"""
from __future__ import annotations

from .errors import InvalidParameter
from .linalg import raw_rank
from .polynomial import HomogPoly, IdealPresentation, monomial_basis, num_monomials


def _degree_rows(generators, nvars: int, d: int):
    """Sparse rows {monomial: raw coeff} of all m*g with deg(m*g) = d."""
    for g in generators:
        if g.degree > d:
            continue
        raw = [(mono, c.value) for mono, c in g.coeffs.items()]
        for m in monomial_basis(nvars, d - g.degree):
            yield {tuple(a + b for a, b in zip(mono, m)): v for mono, v in raw}


def span_dim(generators, nvars: int, d: int, characteristic: int) -> int:
    """Dimension of the degree-``d`` part of the ideal generated by ``generators``.

    Rows coming from monomial generators are unit vectors; their columns are
    pivoted off up front, and only the remaining rows, projected away from
    those columns, go through elimination.
    """
    if d < 0:
        return 0
    unit_cols = set()
    others = []
    for row in _degree_rows(generators, nvars, d):
        if len(row) == 1:
            unit_cols.update(row)
        else:
            others.append(row)
    if not others:
        return len(unit_cols)
    cols = [m for m in monomial_basis(nvars, d) if m not in unit_cols]
    if not cols:
        return len(unit_cols)
    index = {m: j for j, m in enumerate(cols)}
    dense = []
    for row in others:
        r = [0] * len(cols)
        hit = False
        for m, v in row.items():
            j = index.get(m)
            if j is not None:
                r[j] = v
                hit = True
        if hit:
            dense.append(r)
    return len(unit_cols) + raw_rank(dense, len(cols), characteristic)


def graded_span_dim(ideal: IdealPresentation, d: int) -> int:
    """dim_K [I]_d."""
    return span_dim(ideal.generators, ideal.nvars, d, ideal.ctx.characteristic)


def hilbert_function(ideal: IdealPresentation, d: int) -> int:
    """dim_K [S/I]_d."""
    if d < 0:
        return 0
    return num_monomials(ideal.nvars, d) - graded_span_dim(ideal, d)


def _check_form(ideal: IdealPresentation, ell: HomogPoly):
    if ell.nvars != ideal.nvars:
        raise InvalidParameter("linear form and ideal live in different rings")
    if ell.degree != 1 and not ell.is_zero():
        raise InvalidParameter("multiplier must be a linear form")


def mult_map_rank(ideal: IdealPresentation, ell: HomogPoly, k: int, d: int) -> int:
    """Rank of multiplication by ``ell**k`` from [S/I]_d to [S/I]_{d+k}."""
    _check_form(ideal, ell)
    if k < 1:
        raise InvalidParameter("power must be positive")
    if d < 0:
        return 0
    power = ell**k
    if power.is_zero():
        return 0
    target = d + k
    p = ideal.ctx.characteristic
    base = span_dim(ideal.generators, ideal.nvars, target, p)
    return span_dim(ideal.generators + [power], ideal.nvars, target, p) - base


def max_rank_check(ideal: IdealPresentation, ell: HomogPoly, k: int, d: int) -> bool:
    """True iff multiplication by ``ell**k`` in degree ``d`` is injective or surjective."""
    expected = min(hilbert_function(ideal, d), hilbert_function(ideal, d + k))
    return mult_map_rank(ideal, ell, k, d) == expected


def contains(ideal: IdealPresentation, f: HomogPoly) -> bool:
    """Membership of a homogeneous form, by comparing span dimensions."""
    if f.is_zero():
        return True
    p = ideal.ctx.characteristic
    before = span_dim(ideal.generators, ideal.nvars, f.degree, p)
    return span_dim(ideal.generators + [f], ideal.nvars, f.degree, p) == before

