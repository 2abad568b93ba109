"""Weak and strong Lefschetz deciders for S/I_t and its deformations S/J_{t,a}.

Two routes to the weak Lefschetz property of ``S/J_{t,a}`` with
``l = b x + c y - z``:

* :func:`wlp_via_det` looks at the (t+1)x(t+1) matrix :func:`matrix_M`, whose
  rows are the coefficients of the generators of ``L_{t,a}`` in degree t+1
  with the ``x^{t+1}`` column removed.  Because the Hilbert function has equal
  peaks at t and t+1, the weak Lefschetz property comes down to that one map
  being bijective, i.e. ``det M != 0``.
* :func:`wlp_full` computes every multiplication map directly.

:func:`det_M_closed` evaluates the closed form of ``det M``.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .combinatorics import d_subset_sum, stirling_unsigned
from .errors import InvalidParameter, NonArtinianSection, NotArtinianInRange
from .exactfield import QQ, FieldCtx, Scalar, scalar, scalar_to_string
from .families import ideal_I, ideal_J, in_N
from .graded import contains, hilbert_function, mult_map_rank
from .linalg import DenseMatrix, det_gauss, rank
from .polynomial import HomogPoly, IdealPresentation


@dataclass(frozen=True)
class DegreeData:
    """One multiplication map ``x l^k : [A]_d -> [A]_{d+k}``."""

    d: int
    k: int
    dim_source: int
    dim_target: int
    rank: int

    @property
    def maximal(self) -> bool:
        return self.rank == min(self.dim_source, self.dim_target)

    def to_dict(self) -> dict:
        return dict(asdict(self), maximal=self.maximal)

    @classmethod
    def from_dict(cls, data: dict) -> "DegreeData":
        entry = cls(data["d"], data["k"], data["dim_source"], data["dim_target"], data["rank"])
        if data.get("maximal", entry.maximal) != entry.maximal:
            raise ValueError(f"inconsistent 'maximal' flag in {data}")
        return entry


@dataclass
class LefschetzReport:
    """Outcome of a WLP/SLP decision together with every map that was checked.

    ``verdict`` is true exactly when every entry of ``degree_data`` has maximal
    rank.  ``witness`` names the linear form (or the (b, c) pair) that worked.
    """

    property: str
    verdict: bool
    degree_data: list[DegreeData]
    context: dict
    witness: dict | None = None
    note: str = ""

    def __post_init__(self):
        if self.property not in ("WLP", "SLP"):
            raise ValueError(f"unknown property {self.property!r}")
        if self.verdict != all(e.maximal for e in self.degree_data):
            raise ValueError("verdict disagrees with the per-degree data")

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "verdict": self.verdict,
            "witness": self.witness,
            "note": self.note,
            "context": self.context,
            "degree_data": [e.to_dict() for e in self.degree_data],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LefschetzReport":
        return cls(
            property=data["property"],
            verdict=data["verdict"],
            degree_data=[DegreeData.from_dict(e) for e in data["degree_data"]],
            context=data["context"],
            witness=data.get("witness"),
            note=data.get("note", ""),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "LefschetzReport":
        return cls.from_dict(json.loads(text))


def linear_form(b, c, ctx: FieldCtx = QQ) -> HomogPoly:
    """l = b x + c y - z."""
    return HomogPoly.linear([scalar(b, ctx), scalar(c, ctx), -1], ctx)


def _ctx_of(*values) -> FieldCtx:
    return next((v.ctx for v in values if isinstance(v, Scalar)), QQ)


def _check_t(t: int) -> None:
    if not isinstance(t, int) or t < 1:
        raise InvalidParameter(f"t must be a positive integer, got {t!r}")


def matrix_M(t: int, a, b, c) -> DenseMatrix:
    """The (t+1)x(t+1) matrix whose determinant decides WLP of S/J_{t,a} for b x + c y - z.

    Column j (1-based) stands for x^{t+1-j} y^j.  Row 1 holds s(t+1, j) a^{t+1-j},
    row 2 holds d_{t+1,j}(a, b) c^j, and rows 3.. are the shifts of xy(bx + cy).
    """
    _check_t(t)
    ctx = _ctx_of(a, b, c)
    a, b, c = (scalar(v, ctx) for v in (a, b, c))
    n = t + 1
    zero = ctx.zero()
    top = [a ** (n - j) * stirling_unsigned(n, j) for j in range(1, n)] + [ctx.one()]
    # d_{n,j}(a, b) is the (n - j)-th elementary symmetric function of {i a + b}
    second = [d_subset_sum(n, n - j, a, b) * c**j for j in range(1, n)] + [c**n]
    rows = [top, second]
    for i in range(t - 1):
        row = [zero] * n
        row[i], row[i + 1] = b, c
        rows.append(row)
    return DenseMatrix(rows, ctx)


def det_M_closed(t: int, a, b, c) -> Scalar:
    """(-1)^t c^t (prod_{i=1}^t (a i + b) - prod_{i=1}^t (a c i - b))."""
    _check_t(t)
    ctx = _ctx_of(a, b, c)
    a, b, c = (scalar(v, ctx) for v in (a, b, c))
    first, second = ctx.one(), ctx.one()
    for i in range(1, t + 1):
        first *= a * i + b
        second *= a * c * i - b
    return (-1) ** t * c**t * (first - second)


def default_samples(t: int, a: Scalar) -> list[tuple[Scalar, Scalar]]:
    """(b, c) candidates: the line b = a c for c in 1, 2, 3, then (1, 1) and (1, -1).

    On the line, det M = (-1)^t a^t c^t prod (i + c), so c with c + i = 0 is skipped.
    """
    ctx = a.ctx
    out = []
    for c in (1, 2, 3):
        c = scalar(c, ctx)
        if not c or not a or any((c + i).is_zero() for i in range(1, t + 1)):
            continue
        out.append((a * c, c))
    for b, c in ((1, 1), (1, -1)):
        out.append((scalar(b, ctx), scalar(c, ctx)))
    seen, unique = set(), []
    for pair in out:
        if pair not in seen:
            seen.add(pair)
            unique.append(pair)
    return unique


def wlp_via_det(t: int, a, ctx: FieldCtx | None = None, samples=None) -> LefschetzReport:
    """Search (b, c) for a nonzero det M_{t,a,b,c}; the first hit is the witness.

    A negative verdict only means no sampled pair worked, except for a = 0 where
    det M = b^t c^t ((-1)^t - 1) vanishes for every (b, c) once t is even or
    the characteristic is 2.
    """
    _check_t(t)
    ctx = ctx or _ctx_of(a)
    a = scalar(a, ctx)
    if in_N(a, t):
        raise NonArtinianSection(f"a = {a} lies in N for t = {t}")
    if samples is None:
        samples = default_samples(t, a)
    samples = [(scalar(b, ctx), scalar(c, ctx)) for b, c in samples]
    if not samples:
        raise InvalidParameter("need at least one (b, c) sample")

    ideal = ideal_J(t, a)
    h_src, h_tgt = hilbert_function(ideal, t), hilbert_function(ideal, t + 1)
    context = {"t": t, "a": scalar_to_string(a), "characteristic": ctx.characteristic}
    tried = []
    for b, c in samples:
        m = matrix_M(t, a, b, c)
        r = rank(m)
        # cokernel of the twin-peak map is [T/L]_{t+1}, of dimension (t+1) - rank M
        entry = DegreeData(t, 1, h_src, h_tgt, h_tgt - (t + 1 - r))
        if not det_gauss(m).is_zero():
            note = "" if h_src == h_tgt else "peaks differ; only the middle map was checked"
            witness = {"b": scalar_to_string(b), "c": scalar_to_string(c)} if entry.maximal else None
            return LefschetzReport("WLP", entry.maximal, [entry], context, witness, note)
        tried.append(entry)
    if a.is_zero() and (t % 2 == 0 or ctx.characteristic == 2):
        note = "det M vanishes identically for a = 0"
    else:
        note = "no witness in sample"
    return LefschetzReport("WLP", False, tried, context, None, note)


def _degree_bound(ideal: IdealPresentation) -> int:
    t = ideal.params.get("t")
    if t is not None and ideal.nvars == 3:
        return 2 * t + 2
    return sum(g.degree for g in ideal.generators)


def _hilbert_until_zero(ideal: IdealPresentation, bound: int | None) -> list[int]:
    """[h(0), ..., h(D)] with D the last nonzero degree."""
    bound = _degree_bound(ideal) if bound is None else bound
    values = []
    d = 0
    while True:
        h = hilbert_function(ideal, d)
        if h == 0:
            if hilbert_function(ideal, d + 1) == 0:
                return values
        if d > bound:
            raise NotArtinianInRange(f"Hilbert function is still nonzero in degree {d} > {bound}")
        values.append(h)
        d += 1


def _form_context(ideal: IdealPresentation, ell: HomogPoly) -> dict:
    return {
        "t": ideal.params.get("t"),
        "a": ideal.params.get("a", "0" if ideal.params.get("family") == "I" else None),
        "characteristic": ideal.ctx.characteristic,
        "linear_form": ell.format(),
    }


def wlp_full(ideal: IdealPresentation, ell: HomogPoly, max_degree: int | None = None) -> LefschetzReport:
    """Check that x ell has maximal rank in every degree of S/ideal."""
    hs = _hilbert_until_zero(ideal, max_degree)
    data = []
    for d, h in enumerate(hs):
        h_next = hs[d + 1] if d + 1 < len(hs) else 0
        data.append(DegreeData(d, 1, h, h_next, mult_map_rank(ideal, ell, 1, d)))
    verdict = all(e.maximal for e in data)
    witness = {"linear_form": ell.format()} if verdict else None
    return LefschetzReport("WLP", verdict, data, _form_context(ideal, ell), witness)


def slp_full(ideal: IdealPresentation, ell: HomogPoly, max_degree: int | None = None) -> LefschetzReport:
    """Check every power map x ell^k : [A]_d -> [A]_{d+k} between nonzero pieces."""
    hs = _hilbert_until_zero(ideal, max_degree)
    top = len(hs) - 1
    data = []
    for d in range(top):
        for k in range(1, top - d + 1):
            data.append(DegreeData(d, k, hs[d], hs[d + k], mult_map_rank(ideal, ell, k, d)))
    verdict = all(e.maximal for e in data)
    witness = {"linear_form": ell.format()} if verdict else None
    return LefschetzReport("SLP", verdict, data, _form_context(ideal, ell), witness)


def witness_pair(t: int, ctx: FieldCtx = QQ) -> tuple[Scalar, Scalar]:
    """(p, q) = (t, -(2t - 2)), a nonzero solution of p (2t - 2) + q t = 0.

    Both entries vanish only in characteristic 2 with t even; that case is rejected.
    """
    p, q = scalar(t, ctx), scalar(-(2 * t - 2), ctx)
    if p.is_zero() and q.is_zero():
        raise InvalidParameter(f"(t, -(2t - 2)) vanishes in {ctx} for t = {t}")
    return p, q


def witness_form(t: int, ctx: FieldCtx = QQ, z_sign: int = -1) -> HomogPoly:
    """Degree-2 form killed by (x + y + z_sign*z)^{2t-3} modulo I_t.

    For z_sign = +1 this is f = p (x^2 + y^2 + z^2) + q (xy + xz + yz); for the
    default z_sign = -1 it is f with z replaced by -z, which pairs with x + y - z
    since z -> -z maps I_t to itself.
    """
    if z_sign not in (1, -1):
        raise InvalidParameter("z_sign must be +1 or -1")
    p, q = witness_pair(t, ctx)
    qz = q * z_sign
    terms = {(2, 0, 0): p, (0, 2, 0): p, (0, 0, 2): p, (1, 1, 0): q, (1, 0, 1): qz, (0, 1, 1): qz}
    return HomogPoly(3, 2, terms, ctx)


def witness_check(t: int, ctx: FieldCtx = QQ, z_sign: int = -1) -> bool:
    """Whether (x + y + z_sign*z)^{2t-3} f lies in I_t.

    True means x l^{2t-3} : [A]_2 -> [A]_{2t-1} has a kernel, and since
    h(2) = h(2t-1) = 6 that map is not bijective: S/I_t fails SLP for this l.
    """
    if not isinstance(t, int) or t < 3:
        raise InvalidParameter(f"the witness needs t >= 3, got {t!r}")
    ell = HomogPoly.linear([1, 1, z_sign], ctx)
    return contains(ideal_I(t, ctx), ell ** (2 * t - 3) * witness_form(t, ctx, z_sign))


def slp_conjecture_check(t: int, a, ctx: FieldCtx | None = None) -> LefschetzReport:
    """Check that x l^{2i-1} : [A]_{t-i+1} -> [A]_{t+i} is bijective for i = 1..t.

    ``A = S/J_{t,a}`` and ``l = x + y - z`` over Q.  Together with the weak
    Lefschetz property this is enough for the strong one.
    """
    _check_t(t)
    ctx = ctx or _ctx_of(a)
    if ctx.characteristic != 0:
        raise InvalidParameter("the conjecture check runs in characteristic 0 only")
    a = scalar(a, ctx)
    if a.is_zero():
        raise InvalidParameter("a = 0 is the monomial case, excluded from the conjecture")
    if in_N(a, t):
        raise InvalidParameter(f"a = {a} lies in N for t = {t}")
    ideal = ideal_J(t, a)
    ell = linear_form(1, 1, ctx)
    data = []
    for i in range(1, t + 1):
        src, k = t - i + 1, 2 * i - 1
        hs, ht = hilbert_function(ideal, src), hilbert_function(ideal, src + k)
        data.append(DegreeData(src, k, hs, ht, mult_map_rank(ideal, ell, k, src)))
    verdict = all(e.maximal for e in data)
    note = ""
    if any(e.dim_source != e.dim_target for e in data):
        note = "Hilbert function is not symmetric; maximal rank checked instead of bijectivity"
    witness = {"linear_form": ell.format()} if verdict else None
    context = {"t": t, "a": scalar_to_string(a), "characteristic": 0, "linear_form": ell.format()}
    return LefschetzReport("SLP", verdict, data, context, witness, note)
