"""Idempotent (lightcone) decomposition and elementary functions.

In the basis ``e+ = (1 + j)/2``, ``e- = (1 - j)/2`` a hyperbolic number
``x + jy`` has coordinates ``u = x + y`` and ``v = x - y``, and both
addition and multiplication act on ``(u, v)`` componentwise. The
transcendental functions below are defined through that split and always
return FLOAT results.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Tuple

from . import scalar as sc
from .core import Hyperbolic, coerce, inv, make_real, mul, quad_form
from .errors import DomainError, NullConeDivision
from .scalar import Rational, Scalar, ScalarKind

_LN2 = math.log(2.0)


class LightconeCoords(NamedTuple):
    u: Scalar
    v: Scalar


def idempotents() -> Tuple[Hyperbolic, Hyperbolic]:
    half = Rational(1, 2)
    return Hyperbolic(half, half), Hyperbolic(half, -half)


def decompose(z: Hyperbolic) -> LightconeCoords:
    return LightconeCoords(sc.s_add(z.re, z.jm), sc.s_sub(z.re, z.jm))


def recompose(c: LightconeCoords) -> Hyperbolic:
    """Inverse of :func:`decompose`. Exact kinds come back as RATIONAL when
    halving an INT pair, since INT division leaves the INT kind."""
    u, v = sc.unify(c.u, c.v)
    two = sc.widen(2, sc.kind(u))
    return Hyperbolic._raw(sc.s_div(sc.s_add(u, v), two), sc.s_div(sc.s_sub(u, v), two))


def _float_parts(z: Hyperbolic) -> Tuple[float, float]:
    z = coerce(z, ScalarKind.FLOAT)
    return z.re, z.jm


def _exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def exp_h(z: Hyperbolic) -> Hyperbolic:
    """``exp(x + jy) = e**x * (cosh y + j sinh y)``.

    Overflow saturates to ``inf`` as in binary64 instead of raising.
    """
    x, y = _float_parts(z)
    if y == 0.0:
        return Hyperbolic._raw(_exp(x), y)
    ay = abs(y)
    if ay < 20.0:
        ex = _exp(x)
        if ex != 0.0 and math.isfinite(ex):
            return Hyperbolic._raw(ex * math.cosh(y), ex * math.sinh(y))
        log_c, log_s = math.log(math.cosh(ay)), math.log(math.sinh(ay))
    else:
        # cosh, sinh = e**|y| (1 +- e**(-2|y|)) / 2, kept in log space
        t = math.exp(-2.0 * ay)
        log_c = ay + math.log1p(t) - _LN2
        log_s = ay + math.log1p(-t) - _LN2
    return Hyperbolic._raw(_exp(x + log_c), math.copysign(_exp(x + log_s), y))


def log_h(z: Hyperbolic) -> Hyperbolic:
    """Principal logarithm on the open right wedge ``|y| < x``."""
    x, y = _float_parts(z)
    u, v = x + y, x - y
    if not (u > 0.0 and v > 0.0):
        raise DomainError(f"log is defined only for |jm| < re, got {z}")
    lu, lv = math.log(u), math.log(v)
    return Hyperbolic._raw((lu + lv) / 2.0, (lu - lv) / 2.0)


def sqrt_h(z: Hyperbolic) -> Hyperbolic:
    """Principal square root on the closed right wedge ``|y| <= x``."""
    x, y = _float_parts(z)
    u, v = x + y, x - y
    if u < 0.0 or v < 0.0 or math.isnan(u) or math.isnan(v):
        raise DomainError(f"sqrt is defined only for |jm| <= re, got {z}")
    su, sv = math.sqrt(u), math.sqrt(v)
    return Hyperbolic._raw((su + sv) / 2.0, (su - sv) / 2.0)


def pow_i(z: Hyperbolic, n: int) -> Hyperbolic:
    """``z**n`` by repeated squaring; negative ``n`` inverts the positive power."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError("exponent must be an integer")
    if n < 0:
        if sc.is_zero(quad_form(z)):
            raise NullConeDivision(f"negative power of null-cone value {z}")
        return inv(pow_i(z, -n))
    result = make_real(sc.one(z.kind))
    base = z
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result
