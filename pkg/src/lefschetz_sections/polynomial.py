"""Homogeneous polynomials as sparse monomial -> coefficient maps.

Monomials are exponent tuples.  Orderings are graded-lex with the first
variable heaviest, so in three variables degree 2 reads x^2, xy, xz, y^2, yz, z^2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .errors import ContextMismatch, InvalidParameter
from .exactfield import QQ, FieldCtx, Scalar, scalar

Monomial = tuple  # tuple[int, ...]

DEFAULT_NAMES = {1: ("x",), 2: ("x", "y"), 3: ("x", "y", "z"), 4: ("w", "x", "y", "z")}


def variable_names(nvars: int) -> tuple[str, ...]:
    return DEFAULT_NAMES.get(nvars) or tuple(f"x{i}" for i in range(nvars))


@lru_cache(maxsize=None)
def _basis(nvars: int, d: int) -> tuple[Monomial, ...]:
    if nvars == 1:
        return ((d,),)
    out = []
    for e in range(d, -1, -1):
        out.extend((e,) + rest for rest in _basis(nvars - 1, d - e))
    return tuple(out)


def monomial_basis(nvars: int, d: int) -> list[Monomial]:
    """All monomials of degree ``d`` in ``nvars`` variables, graded-lex descending."""
    if nvars < 1:
        raise InvalidParameter("need at least one variable")
    if d < 0:
        return []
    return list(_basis(nvars, d))


def num_monomials(nvars: int, d: int) -> int:
    return comb(d + nvars - 1, nvars - 1) if d >= 0 else 0


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(m1, m2))


class HomogPoly:
    """Homogeneous polynomial of a fixed degree; zero coefficients are never stored."""

    __slots__ = ("nvars", "degree", "ctx", "coeffs")

    def __init__(self, nvars: int, degree: int, coeffs=None, ctx: FieldCtx = QQ):
        self.nvars = nvars
        self.degree = degree
        self.ctx = ctx
        clean = {}
        for mono, c in (coeffs or {}).items():
            mono = tuple(mono)
            if len(mono) != nvars or sum(mono) != degree or min(mono, default=0) < 0:
                raise InvalidParameter(f"monomial {mono} is not of degree {degree} in {nvars} variables")
            c = scalar(c, ctx)
            if c:
                clean[mono] = c
        self.coeffs: dict[Monomial, Scalar] = clean

    @classmethod
    def _raw(cls, nvars, degree, coeffs, ctx):
        p = cls.__new__(cls)
        p.nvars, p.degree, p.ctx, p.coeffs = nvars, degree, ctx, coeffs
        return p

    @classmethod
    def monomial(cls, exps, coeff=1, ctx: FieldCtx = QQ) -> "HomogPoly":
        exps = tuple(exps)
        return cls(len(exps), sum(exps), {exps: coeff}, ctx)

    @classmethod
    def linear(cls, coeffs, ctx: FieldCtx = QQ) -> "HomogPoly":
        n = len(coeffs)
        terms = {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)}
        return cls(n, 1, terms, ctx)

    @classmethod
    def constant(cls, nvars: int, c=1, ctx: FieldCtx = QQ) -> "HomogPoly":
        return cls(nvars, 0, {(0,) * nvars: c}, ctx)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, mono) -> Scalar:
        return self.coeffs.get(tuple(mono), self.ctx.zero())

    def _check(self, other: "HomogPoly"):
        if other.ctx != self.ctx:
            raise ContextMismatch(f"polynomials over {self.ctx} and {other.ctx}")
        if other.nvars != self.nvars:
            raise InvalidParameter("polynomials in different numbers of variables")

    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        self._check(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other.degree != self.degree:
            raise InvalidParameter("sum of forms of different degrees is not homogeneous")
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            v = out.get(m)
            v = c if v is None else v + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return HomogPoly._raw(self.nvars, self.degree, out, self.ctx)

    def __neg__(self):
        return HomogPoly._raw(self.nvars, self.degree, {m: -c for m, c in self.coeffs.items()}, self.ctx)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> "HomogPoly":
        if not isinstance(other, HomogPoly):
            c = scalar(other, self.ctx)
            if not c:
                return HomogPoly._raw(self.nvars, self.degree, {}, self.ctx)
            return HomogPoly._raw(self.nvars, self.degree, {m: v * c for m, v in self.coeffs.items()}, self.ctx)
        self._check(other)
        out: dict = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = mono_mul(m1, m2)
                v = out.get(m)
                out[m] = c1 * c2 if v is None else v + c1 * c2
        out = {m: c for m, c in out.items() if c}
        return HomogPoly._raw(self.nvars, self.degree + other.degree, out, self.ctx)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "HomogPoly":
        if e < 0:
            raise InvalidParameter("negative power of a polynomial")
        result = HomogPoly.constant(self.nvars, 1, self.ctx)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, mono: Monomial) -> "HomogPoly":
        """Multiply by a monomial (coefficient one)."""
        return HomogPoly._raw(
            self.nvars, self.degree + sum(mono), {mono_mul(m, mono): c for m, c in self.coeffs.items()}, self.ctx
        )

    def evaluate(self, point) -> Scalar:
        total = self.ctx.zero()
        pt = [scalar(v, self.ctx) for v in point]
        for mono, c in self.coeffs.items():
            term = c
            for v, e in zip(pt, mono):
                if e:
                    term = term * v**e
            total += term
        return total

    def compose(self, images: list["HomogPoly"]) -> "HomogPoly":
        """Substitute variable i by the linear form ``images[i]``."""
        if len(images) != self.nvars:
            raise InvalidParameter("need one image per variable")
        target = images[0].nvars
        result = HomogPoly._raw(target, self.degree, {}, self.ctx)
        powers: dict = {}
        for mono, c in self.coeffs.items():
            term = HomogPoly.constant(target, c, self.ctx)
            for i, e in enumerate(mono):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = images[i] ** e
                    term = term * powers[key]
            result = result + term
        return result

    def terms(self):
        """(monomial, coefficient) pairs in graded-lex descending order."""
        return sorted(self.coeffs.items(), key=lambda mc: mc[0], reverse=True)

    def __eq__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return self.nvars == other.nvars and self.ctx == other.ctx
        return (self.nvars, self.degree, self.ctx, self.coeffs) == (other.nvars, other.degree, other.ctx, other.coeffs)

    def __hash__(self):
        return hash((self.nvars, self.degree, frozenset(self.coeffs.items())))

    def format(self, names=None) -> str:
        names = names or variable_names(self.nvars)
        if self.is_zero():
            return "0"
        parts = []
        for mono, c in self.terms():
            mono_str = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, mono) if e
            )
            neg = False
            if self.ctx.is_rational and c.value < 0:
                neg, c = True, -c
            cs = str(c.value)
            if not mono_str:
                body = cs
            elif c == 1:
                body = mono_str
            else:
                body = f"{cs}*{mono_str}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"HomogPoly({self.format()!r}, ctx={self.ctx})"


@dataclass
class IdealPresentation:
    """A homogeneous ideal given by generators.  ``params`` records family data such as ``t``."""

    nvars: int
    generators: list[HomogPoly]
    ctx: FieldCtx = QQ
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        for g in self.generators:
            if g.nvars != self.nvars:
                raise InvalidParameter("generator has the wrong number of variables")
            if g.ctx != self.ctx:
                raise ContextMismatch(f"generator over {g.ctx} in an ideal over {self.ctx}")
            if g.is_zero():
                raise InvalidParameter("zero generator")

    def with_generator(self, g: HomogPoly) -> "IdealPresentation":
        return IdealPresentation(self.nvars, self.generators + [g], self.ctx, dict(self.params))

    def __str__(self):
        return "(" + ", ".join(g.format() for g in self.generators) + ")"
