"""Exact scalars over Q and over prime fields F_p.

A :class:`Scalar` wraps either a :class:`fractions.Fraction` (characteristic 0)
or a Python ``int`` residue in ``[0, p)``.  The field is carried around by a
:class:`FieldCtx`; combining scalars from different fields raises
:class:`ContextMismatch` instead of coercing.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Rational

from .errors import ContextMismatch, DivisionByZero, InvalidParameter

MAX_CHARACTERISTIC = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldCtx:
    """The field a computation runs in: 0 means Q, otherwise F_p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if not isinstance(p, Integral) or isinstance(p, bool):
            raise InvalidParameter(f"characteristic must be an integer, got {p!r}")
        if p != 0 and not (p < MAX_CHARACTERISTIC and is_prime(p)):
            raise InvalidParameter(f"characteristic must be 0 or a prime < 2^31, got {p}")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __call__(self, value) -> "Scalar":
        return scalar(value, self)

    def zero(self) -> "Scalar":
        return scalar_from_integer(0, self)

    def one(self) -> "Scalar":
        return scalar_from_integer(1, self)

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"F_{self.characteristic}"


QQ = FieldCtx(0)


class Scalar:
    """Immutable field element.  Supports ``+ - * / **`` with scalars or ints."""

    __slots__ = ("_value", "_ctx")

    def __init__(self, value, ctx: FieldCtx):
        # callers go through scalar()/scalar_from_integer(); value is already canonical
        object.__setattr__(self, "_value", value)
        object.__setattr__(self, "_ctx", ctx)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @property
    def value(self):
        """``Fraction`` in characteristic 0, residue ``int`` otherwise."""
        return self._value

    @property
    def ctx(self) -> FieldCtx:
        return self._ctx

    @property
    def numerator(self) -> int:
        return self._value.numerator if self._ctx.is_rational else self._value

    @property
    def denominator(self) -> int:
        return self._value.denominator if self._ctx.is_rational else 1

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other._ctx != self._ctx:
                raise ContextMismatch(f"cannot combine elements of {self._ctx} and {other._ctx}")
            return other
        if isinstance(other, (Integral, Rational)) and not isinstance(other, bool):
            return scalar(other, self._ctx)
        return NotImplemented

    def _wrap(self, v) -> "Scalar":
        p = self._ctx.characteristic
        return Scalar(v % p if p else v, self._ctx)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self._value + o._value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self._value - o._value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(o._value - self._value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self._value * o._value)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self._value)

    def __pos__(self):
        return self

    def inverse(self) -> "Scalar":
        return scalar_inv(self)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * scalar_inv(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * scalar_inv(self)

    def __pow__(self, e: int):
        if not isinstance(e, Integral):
            return NotImplemented
        if e < 0:
            return scalar_inv(self) ** (-e)
        p = self._ctx.characteristic
        if p:
            return Scalar(pow(self._value, e, p), self._ctx)
        return Scalar(self._value**e, self._ctx)

    def is_zero(self) -> bool:
        return not self._value

    def __bool__(self):
        return bool(self._value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._ctx == other._ctx and self._value == other._value
        if isinstance(other, (Integral, Rational)) and not isinstance(other, bool):
            try:
                return self._value == scalar(other, self._ctx)._value
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self._value, self._ctx.characteristic))

    def __str__(self):
        return scalar_to_string(self)

    def __repr__(self):
        return f"Scalar({scalar_to_string(self)!r})"


def scalar_from_integer(n: int, ctx: FieldCtx) -> Scalar:
    """Canonical image of the integer ``n`` in ``ctx``."""
    p = ctx.characteristic
    if p:
        return Scalar(int(n) % p, ctx)
    return Scalar(Fraction(int(n)), ctx)


def scalar(value, ctx: FieldCtx = QQ) -> Scalar:
    """Build a scalar from an int, ``Fraction``, another ``Scalar`` or a string.

    Rationals map into F_p by inverting the denominator, which must be a unit.
    """
    if isinstance(value, Scalar):
        if value.ctx != ctx:
            raise ContextMismatch(f"scalar from {value.ctx} used in {ctx}")
        return value
    if isinstance(value, str):
        return scalar_from_string(value, ctx)
    if isinstance(value, bool):
        raise InvalidParameter("booleans are not field elements")
    if isinstance(value, Integral):
        return scalar_from_integer(value, ctx)
    if isinstance(value, Rational):
        p = ctx.characteristic
        if not p:
            return Scalar(Fraction(value), ctx)
        num, den = value.numerator, value.denominator
        if den % p == 0:
            raise DivisionByZero(f"denominator {den} is not invertible mod {p}")
        return Scalar(num * pow(den, -1, p) % p, ctx)
    raise InvalidParameter(f"cannot interpret {value!r} as a field element")


def scalar_inv(s: Scalar) -> Scalar:
    if s.is_zero():
        raise DivisionByZero("zero has no inverse")
    p = s.ctx.characteristic
    if p:
        return Scalar(pow(s.value, -1, p), s.ctx)
    return Scalar(1 / s.value, s.ctx)


def scalar_to_string(s: Scalar) -> str:
    """``"num/den"`` (``"num"`` when den is 1) over Q, ``"r mod p"`` over F_p."""
    p = s.ctx.characteristic
    if p:
        return f"{s.value} mod {p}"
    v = s.value
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def scalar_from_string(text: str, ctx: FieldCtx | None = None) -> Scalar:
    """Parse ``"r mod p"``, ``"num/den"`` or a plain integer.

    A ``"r mod p"`` string carries its own field; if ``ctx`` is also given it
    has to agree.
    """
    text = text.strip()
    if " mod " in text:
        r, p = text.split(" mod ")
        own = FieldCtx(int(p))
        if ctx is not None and ctx != own:
            raise ContextMismatch(f"{text!r} is not an element of {ctx}")
        return scalar_from_integer(int(r), own)
    if ctx is None:
        ctx = QQ
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameter(f"cannot parse scalar {text!r}") from exc
    if "." in text or "e" in text.lower():
        raise InvalidParameter(f"decimal notation is not exact: {text!r}")
    return scalar(value, ctx)
