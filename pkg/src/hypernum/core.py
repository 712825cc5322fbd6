"""The hyperbolic (split-complex) number type and its arithmetic.

A hyperbolic number is ``x + j*y`` with ``j*j == 1``. Both components share
one scalar kind; mixing kinds promotes to the wider one, and a bare real on
either side of a binary operator is lifted to ``x + 0j`` first.
"""

from __future__ import annotations

from typing import Tuple

from . import scalar as sc
from .errors import NullConeDivision
from .scalar import Scalar, ScalarKind


class Hyperbolic:
    """Immutable hyperbolic number with real part ``re`` and j-part ``jm``.

    ``Hyperbolic(x, y)`` promotes ``x`` and ``y`` to a common kind,
    ``Hyperbolic(x)`` builds ``x + 0j`` and ``Hyperbolic(h)`` copies another
    hyperbolic number. Use :func:`coerce` to force a particular kind.

    >>> Hyperbolic(1, 3) * Hyperbolic(2, 1)
    Hyperbolic(5, 7)
    """

    __slots__ = ("re", "jm")

    re: Scalar
    jm: Scalar

    def __init__(self, re=0, jm=None):
        if isinstance(re, Hyperbolic):
            if jm is not None:
                raise TypeError("Hyperbolic(h) takes no second argument")
            x, y = re.re, re.jm
        else:
            x, y = sc.unify(sc.as_scalar(re), sc.as_scalar(0 if jm is None else jm))
        object.__setattr__(self, "re", x)
        object.__setattr__(self, "jm", y)

    @classmethod
    def _raw(cls, x: Scalar, y: Scalar) -> Hyperbolic:
        # caller guarantees x, y are valid scalars of one kind
        h = object.__new__(cls)
        object.__setattr__(h, "re", x)
        object.__setattr__(h, "jm", y)
        return h

    def __setattr__(self, name, value):
        raise AttributeError("Hyperbolic numbers are immutable")

    def __reduce__(self):
        return (make, (self.re, self.jm))

    @property
    def kind(self) -> ScalarKind:
        return sc.kind(self.re)

    def conj(self) -> Hyperbolic:
        return conj(self)

    def quad(self) -> Scalar:
        return quad_form(self)

    # operators

    def __add__(self, other):
        other = _lift(other)
        return NotImplemented if other is None else add(self, other)

    def __radd__(self, other):
        other = _lift(other)
        return NotImplemented if other is None else add(other, self)

    def __sub__(self, other):
        other = _lift(other)
        return NotImplemented if other is None else sub(self, other)

    def __rsub__(self, other):
        other = _lift(other)
        return NotImplemented if other is None else sub(other, self)

    def __mul__(self, other):
        other = _lift(other)
        return NotImplemented if other is None else mul(self, other)

    def __rmul__(self, other):
        other = _lift(other)
        return NotImplemented if other is None else mul(other, self)

    def __truediv__(self, other):
        other = _lift(other)
        return NotImplemented if other is None else div(self, other)

    def __rtruediv__(self, other):
        other = _lift(other)
        return NotImplemented if other is None else div(other, self)

    def __pow__(self, n):
        if isinstance(n, bool) or not isinstance(n, int):
            return NotImplemented
        from .functions import pow_i

        return pow_i(self, n)

    def __neg__(self) -> Hyperbolic:
        return neg(self)

    def __pos__(self) -> Hyperbolic:
        return pos(self)

    def __eq__(self, other) -> bool:
        other = _lift(other)
        return NotImplemented if other is None else eq(self, other)

    def __hash__(self) -> int:
        # values equal after promotion have equal float images
        return hash((float(self.re), float(self.jm)))

    def __bool__(self) -> bool:
        return not (sc.is_zero(self.re) and sc.is_zero(self.jm))

    def __repr__(self) -> str:
        return f"Hyperbolic({self.re!r}, {self.jm!r})"

    def __str__(self) -> str:
        from .textio import format

        return format(self)


def _lift(value):
    if isinstance(value, Hyperbolic):
        return value
    if sc.is_scalar(value):
        return make_real(value)
    return None


def make(x, y) -> Hyperbolic:
    """Build ``x + j*y`` after promoting both parts to a common kind."""
    return Hyperbolic(x, y)


def make_real(x) -> Hyperbolic:
    """Build ``x + 0j`` with the zero in the kind of ``x``."""
    x = sc.as_scalar(x)
    return Hyperbolic._raw(x, sc.zero(sc.kind(x)))


def unit_j() -> Hyperbolic:
    """The hyperbolic unit ``0 + 1j`` (INT kind)."""
    return Hyperbolic._raw(0, 1)


def coerce(h: Hyperbolic, k: ScalarKind) -> Hyperbolic:
    """Widen both parts of ``h`` to kind ``k``; narrowing raises DomainError."""
    return Hyperbolic._raw(sc.widen(h.re, k), sc.widen(h.jm, k))


def unify_h(a: Hyperbolic, b: Hyperbolic) -> Tuple[Hyperbolic, Hyperbolic]:
    k = sc.join_kind(a.kind, b.kind)
    return coerce(a, k), coerce(b, k)


def add(a: Hyperbolic, b: Hyperbolic) -> Hyperbolic:
    a, b = unify_h(a, b)
    return Hyperbolic._raw(sc.s_add(a.re, b.re), sc.s_add(a.jm, b.jm))


def sub(a: Hyperbolic, b: Hyperbolic) -> Hyperbolic:
    a, b = unify_h(a, b)
    return Hyperbolic._raw(sc.s_sub(a.re, b.re), sc.s_sub(a.jm, b.jm))


def neg(h: Hyperbolic) -> Hyperbolic:
    return Hyperbolic._raw(sc.s_neg(h.re), sc.s_neg(h.jm))


def pos(h: Hyperbolic) -> Hyperbolic:
    return Hyperbolic._raw(h.re, h.jm)


def mul(a: Hyperbolic, b: Hyperbolic) -> Hyperbolic:
    a, b = unify_h(a, b)
    re = sc.s_add(sc.s_mul(a.re, b.re), sc.s_mul(a.jm, b.jm))
    jm = sc.s_add(sc.s_mul(a.re, b.jm), sc.s_mul(a.jm, b.re))
    return Hyperbolic._raw(re, jm)


def conj(h: Hyperbolic) -> Hyperbolic:
    return Hyperbolic._raw(h.re, sc.s_neg(h.jm))


def quad_form(h: Hyperbolic) -> Scalar:
    """``re**2 - jm**2``, the real part of ``h * conj(h)``.

    Evaluated as ``(re + jm) * (re - jm)``: identical on exact kinds, and on
    floats it is zero only on the null cone itself.
    """
    return sc.s_mul(sc.s_add(h.re, h.jm), sc.s_sub(h.re, h.jm))


def inv(h: Hyperbolic) -> Hyperbolic:
    """Multiplicative inverse ``conj(h) / quad_form(h)``.

    INT inputs give a RATIONAL result. Raises NullConeDivision when the
    quadratic form is exactly zero (no epsilon for floats).
    """
    d = quad_form(h)
    if sc.is_zero(d):
        raise NullConeDivision(f"{h} lies on the null cone and has no inverse")
    return Hyperbolic._raw(sc.s_div(h.re, d), sc.s_div(sc.s_neg(h.jm), d))


def div(a: Hyperbolic, b: Hyperbolic) -> Hyperbolic:
    if sc.is_zero(quad_form(b)):
        raise NullConeDivision(f"divisor {b} lies on the null cone")
    return mul(a, inv(b))


def eq(a: Hyperbolic, b: Hyperbolic) -> bool:
    a, b = unify_h(a, b)
    return a.re == b.re and a.jm == b.jm
