"""The almost complete intersections I_t, their lifting to points, and sections.

Variables: ``S = K[x, y, z]``, ``R = K[w, x, y, z]`` with ``w`` the lifting
variable, ``T = K[x, y]``.

    I_t      = (x^{t+1}, y^{t+1}, z^{t+1}, xyz)
    lift     = (prod (x - i w), prod (y - i w), prod (z - i w), xyz),  i = 0..t
    J_{t,a}  = lift + (w + a x), written in S
    L_{t,a}  = J_{t,a} + (b x + c y - z), written in T
"""
from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import expand_linear_product
from .errors import InvalidParameter, NonArtinianSection, NotTrueLifting
from .exactfield import QQ, FieldCtx, Scalar, scalar, scalar_to_string
from .polynomial import HomogPoly, IdealPresentation


def _check_t(t: int) -> None:
    if not isinstance(t, int) or t < 1:
        raise InvalidParameter(f"t must be a positive integer, got {t!r}")


def _ctx_of(*values, default: FieldCtx = QQ) -> FieldCtx:
    for v in values:
        if isinstance(v, Scalar):
            return v.ctx
    return default


def ideal_I(t: int, ctx: FieldCtx = QQ) -> IdealPresentation:
    """I_t = (x^{t+1}, y^{t+1}, z^{t+1}, xyz) in three variables."""
    _check_t(t)
    gens = [
        HomogPoly.monomial((t + 1, 0, 0), ctx=ctx),
        HomogPoly.monomial((0, t + 1, 0), ctx=ctx),
        HomogPoly.monomial((0, 0, t + 1), ctx=ctx),
        HomogPoly.monomial((1, 1, 1), ctx=ctx),
    ]
    return IdealPresentation(3, gens, ctx, {"family": "I", "t": t})


def in_N(a, t: int, ctx: FieldCtx | None = None) -> bool:
    """Whether ``a * i == -1`` for some ``1 <= i <= t`` (w + a x is then a zero-divisor)."""
    _check_t(t)
    a = scalar(a, ctx or _ctx_of(a))
    return any(a * i == -1 for i in range(1, t + 1))


def _binary_product(nvars: int, xi: int, yi: int, factors, ctx: FieldCtx) -> HomogPoly:
    """prod(slope*X + intercept*Y) as a form in ``nvars`` variables, X/Y at indices xi/yi."""
    coeffs = expand_linear_product(factors, ctx)
    n = len(coeffs) - 1
    terms = {}
    for i, c in enumerate(coeffs):
        mono = [0] * nvars
        mono[xi] += i
        mono[yi] += n - i
        terms[tuple(mono)] = c
    return HomogPoly(nvars, n, terms, ctx)


def ideal_J(t: int, a) -> IdealPresentation:
    """J_{t,a} = (x^{t+1}, prod_i (i a x + y), prod_i (i a x + z), xyz), i = 0..t."""
    _check_t(t)
    ctx = _ctx_of(a)
    a = scalar(a, ctx)
    if in_N(a, t):
        raise NonArtinianSection(f"a = {a} lies in N for t = {t}; w + a*x is a zero-divisor")
    factors = [(a * i, 1) for i in range(t + 1)]
    gens = [
        HomogPoly.monomial((t + 1, 0, 0), ctx=ctx),
        _binary_product(3, 0, 1, factors, ctx),
        _binary_product(3, 0, 2, factors, ctx),
        HomogPoly.monomial((1, 1, 1), ctx=ctx),
    ]
    return IdealPresentation(3, gens, ctx, {"family": "J", "t": t, "a": scalar_to_string(a)})


def ideal_L(t: int, a, b, c) -> IdealPresentation:
    """L_{t,a} in K[x, y]: the quotient of J_{t,a} by b x + c y - z."""
    _check_t(t)
    ctx = _ctx_of(a, b, c)
    a, b, c = (scalar(v, ctx) for v in (a, b, c))
    gens = [
        HomogPoly.monomial((t + 1, 0), ctx=ctx),
        _binary_product(2, 0, 1, [(a * i, 1) for i in range(t + 1)], ctx),
        _binary_product(2, 0, 1, [(a * i + b, c) for i in range(t + 1)], ctx),
        HomogPoly.monomial((1, 1), ctx=ctx) * HomogPoly.linear([b, c], ctx),
    ]
    gens = [g for g in gens if not g.is_zero()]
    return IdealPresentation(2, gens, ctx, {"family": "L", "t": t})


def _lift(alpha, tvals, ctx: FieldCtx) -> HomogPoly:
    n = len(alpha)
    result = HomogPoly.constant(n + 1, 1, ctx)
    for j, e in enumerate(alpha):
        for i in range(e):
            # x_j - t_{j,i} x_0
            result = result * HomogPoly.linear(
                [-scalar(tvals[j][i], ctx)] + [int(k == j) for k in range(n)], ctx
            )
    return result


def lift_monomial(alpha, tvals, ctx: FieldCtx | None = None) -> HomogPoly:
    """Lift x^alpha to prod_j prod_{i < alpha_j} (x_j - t_{j,i} x_0).

    The result lives in ``n + 1`` variables with the new variable ``x_0`` first.
    ``tvals[j]`` must hold at least ``alpha[j]`` pairwise distinct values.
    """
    alpha = tuple(alpha)
    if len(tvals) != len(alpha):
        raise InvalidParameter("need one list of lifting constants per variable")
    if ctx is None:
        ctx = _ctx_of(*(v for vals in tvals for v in vals))
    for j, (e, vals) in enumerate(zip(alpha, tvals)):
        if e < 0:
            raise InvalidParameter("negative exponent")
        if len(vals) < e:
            raise InvalidParameter(f"variable {j} needs {e} lifting constants, got {len(vals)}")
        vals = [scalar(v, ctx) for v in vals]
        if len(set(vals)) != len(vals):
            raise InvalidParameter(f"lifting constants for variable {j} are not distinct")
    return _lift(alpha, tvals, ctx)


def lifted_I(t: int, ctx: FieldCtx = QQ) -> IdealPresentation:
    """Lift of I_t to K[w, x, y, z] with constants t_{j,i} = i.

    Allowed in every characteristic, even when the constants collide.
    """
    _check_t(t)
    consts = [list(range(t + 1))] * 3
    gens = [
        _lift((t + 1, 0, 0), consts, ctx),
        _lift((0, t + 1, 0), consts, ctx),
        _lift((0, 0, t + 1), consts, ctx),
        _lift((1, 1, 1), consts, ctx),
    ]
    return IdealPresentation(4, gens, ctx, {"family": "lifted_I", "t": t})


@dataclass(frozen=True)
class PointSet:
    """Points [1 : a : b : c] of projective three-space."""

    points: tuple

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def to_lines(self) -> list[str]:
        return [" : ".join(scalar_to_string(v) for v in p) for p in self.points]


def point_set(t: int, ctx: FieldCtx = QQ) -> PointSet:
    """The 3t(t+1) + 1 points cut out by :func:`lifted_I` (coordinates in 0..t, one zero)."""
    _check_t(t)
    if 2 <= ctx.characteristic <= t:
        raise NotTrueLifting(f"constants 0..{t} collide in characteristic {ctx.characteristic}")
    pts = []
    for a in range(t + 1):
        for b in range(t + 1):
            for c in range(t + 1):
                if 0 in (a, b, c):
                    pts.append(tuple(scalar(v, ctx) for v in (1, a, b, c)))
    return PointSet(tuple(pts))


def hyperplane_section(ideal4: IdealPresentation, a, t: int | None = None) -> IdealPresentation:
    """Restrict a four-variable ideal to the hyperplane w = -a x.

    ``t`` defaults to ``ideal4.params["t"]``; when known, ``a`` in N raises
    :class:`NonArtinianSection`.
    """
    if ideal4.nvars != 4:
        raise InvalidParameter("hyperplane_section expects an ideal in K[w, x, y, z]")
    ctx = ideal4.ctx
    a = scalar(a, ctx)
    if t is None:
        t = ideal4.params.get("t")
    if t is not None and in_N(a, t):
        raise NonArtinianSection(f"a = {a} lies in N for t = {t}; w + a*x is a zero-divisor")
    images = [
        HomogPoly.linear([-a, 0, 0], ctx),
        HomogPoly.linear([1, 0, 0], ctx),
        HomogPoly.linear([0, 1, 0], ctx),
        HomogPoly.linear([0, 0, 1], ctx),
    ]
    gens = [g.compose(images) for g in ideal4.generators]
    gens = [g for g in gens if not g.is_zero()]
    params = dict(ideal4.params, family="section", a=scalar_to_string(a))
    return IdealPresentation(3, gens, ctx, params)


def hilbert_closed_form(t: int, d: int) -> int:
    """Hilbert function of S/I_t: 1, then 3d up to t, then 3(2t+1-d) up to 2t, then 0."""
    if d < 0:
        return 0
    if d == 0:
        return 1
    if d <= t:
        return 3 * d
    if d <= 2 * t:
        return 3 * (2 * t + 1 - d)
    return 0


def point_count(t: int) -> int:
    return 3 * t * (t + 1) + 1

