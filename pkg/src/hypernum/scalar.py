"""Three-level scalar tower: INT < RATIONAL < FLOAT.

Scalars are represented by plain Python values:

* ``int``      -- INT kind, restricted to the signed 64-bit range;
* ``Rational`` -- RATIONAL kind, a reduced fraction with 64-bit components;
* ``float``    -- FLOAT kind, IEEE binary64.

Arithmetic on exact kinds is overflow-checked and raises
:class:`~hypernum.errors.NumOverflowError` instead of wrapping. The ``s_*``
functions expect operands that have already been unified to one kind.
"""

from __future__ import annotations

import enum
import fractions
import math
import numbers
from typing import Tuple, Union

from .errors import DomainError, NumOverflowError

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class ScalarKind(enum.IntEnum):
    INT = 0
    RATIONAL = 1
    FLOAT = 2


def _check_int64(n: int, what: str = "integer") -> int:
    if n < INT64_MIN or n > INT64_MAX:
        raise NumOverflowError(f"{what} {n} does not fit in 64 bits")
    return n


class Rational:
    """Exact fraction ``num/den`` kept in lowest terms with ``den > 0``.

    Both components must fit in a signed 64-bit integer; results that do not
    raise :class:`NumOverflowError`. Intermediate products are computed with
    Python's unbounded integers, so overflow is decided on the reduced
    result only.

    >>> Rational(6, -4)
    Rational(-3, 2)
    >>> str(Rational(0, 7))
    '0//1'
    """

    __slots__ = ("num", "den")

    num: int
    den: int

    def __init__(self, num: int, den: int = 1):
        if isinstance(num, bool) or isinstance(den, bool):
            raise TypeError("bool is not a scalar")
        if not isinstance(num, int) or not isinstance(den, int):
            raise TypeError("Rational components must be integers")
        if den == 0:
            raise DomainError(f"zero denominator in {num}//0")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        object.__setattr__(self, "num", _check_int64(num, "numerator"))
        object.__setattr__(self, "den", _check_int64(den, "denominator"))

    def __setattr__(self, name, value):
        raise AttributeError("Rational is immutable")

    def __reduce__(self):
        return (Rational, (self.num, self.den))

    # arithmetic (exact, checked); plain ints are accepted on either side

    @staticmethod
    def _operand(other):
        if isinstance(other, Rational):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Rational(other)
        return None

    def __add__(self, other) -> Rational:
        other = self._operand(other)
        if other is None:
            return NotImplemented
        return Rational(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other) -> Rational:
        other = self._operand(other)
        if other is None:
            return NotImplemented
        return Rational(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other) -> Rational:
        other = self._operand(other)
        if other is None:
            return NotImplemented
        return Rational(self.num * other.num, self.den * other.den)

    def __truediv__(self, other) -> Rational:
        other = self._operand(other)
        if other is None:
            return NotImplemented
        if other.num == 0:
            raise DomainError(f"division of {self} by exact zero")
        return Rational(self.num * other.den, self.den * other.num)

    def __radd__(self, other) -> Rational:
        other = self._operand(other)
        return NotImplemented if other is None else other + self

    def __rsub__(self, other) -> Rational:
        other = self._operand(other)
        return NotImplemented if other is None else other - self

    def __rmul__(self, other) -> Rational:
        other = self._operand(other)
        return NotImplemented if other is None else other * self

    def __rtruediv__(self, other) -> Rational:
        other = self._operand(other)
        return NotImplemented if other is None else other / self

    def __neg__(self) -> Rational:
        return Rational(-self.num, self.den)

    def __pos__(self) -> Rational:
        return self

    def __abs__(self) -> Rational:
        return Rational(abs(self.num), self.den)

    # comparison against any real

    def _cmp_key(self, other):
        if isinstance(other, Rational):
            return self.num * other.den, other.num * self.den
        if isinstance(other, int) and not isinstance(other, bool):
            return self.num, other * self.den
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, float):
            return math.isfinite(other) and fractions.Fraction(other) == fractions.Fraction(self.num, self.den)
        key = self._cmp_key(other)
        if key is None:
            return NotImplemented
        return key[0] == key[1]

    def __lt__(self, other) -> bool:
        key = self._cmp_key(other)
        if key is None:
            return NotImplemented
        return key[0] < key[1]

    def __le__(self, other) -> bool:
        key = self._cmp_key(other)
        if key is None:
            return NotImplemented
        return key[0] <= key[1]

    def __gt__(self, other) -> bool:
        key = self._cmp_key(other)
        if key is None:
            return NotImplemented
        return key[0] > key[1]

    def __ge__(self, other) -> bool:
        key = self._cmp_key(other)
        if key is None:
            return NotImplemented
        return key[0] >= key[1]

    def __hash__(self) -> int:
        # agrees with hash(int) and hash(float) for equal values
        return hash(fractions.Fraction(self.num, self.den))

    def __bool__(self) -> bool:
        return self.num != 0

    def __float__(self) -> float:
        # int true division is correctly rounded (round-half-even)
        return self.num / self.den

    def __repr__(self) -> str:
        return f"Rational({self.num}, {self.den})"

    def __str__(self) -> str:
        return f"{self.num}//{self.den}"


Scalar = Union[int, Rational, float]

_ZERO = {ScalarKind.INT: 0, ScalarKind.RATIONAL: Rational(0), ScalarKind.FLOAT: 0.0}
_ONE = {ScalarKind.INT: 1, ScalarKind.RATIONAL: Rational(1), ScalarKind.FLOAT: 1.0}


def as_scalar(x) -> Scalar:
    """Validate ``x`` as a scalar, converting friendly host types.

    ``fractions.Fraction`` becomes :class:`Rational`; other ``numbers.Real``
    values that are not ``int`` become ``float``. ``bool`` is rejected.
    """
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return _check_int64(int(x))
    if isinstance(x, (Rational, float)):
        return x
    if isinstance(x, fractions.Fraction):
        return Rational(x.numerator, x.denominator)
    if isinstance(x, numbers.Real):
        return float(x)
    raise TypeError(f"not a real scalar: {x!r}")


def is_scalar(x) -> bool:
    return isinstance(x, (Rational, numbers.Real)) and not isinstance(x, bool)


def kind(s: Scalar) -> ScalarKind:
    if isinstance(s, float):
        return ScalarKind.FLOAT
    if isinstance(s, Rational):
        return ScalarKind.RATIONAL
    if isinstance(s, int) and not isinstance(s, bool):
        return ScalarKind.INT
    raise TypeError(f"not a scalar: {s!r}")


def join_kind(a: ScalarKind, b: ScalarKind) -> ScalarKind:
    """Least common kind of ``a`` and ``b``."""
    return a if a >= b else b


def zero(k: ScalarKind) -> Scalar:
    return _ZERO[k]


def one(k: ScalarKind) -> Scalar:
    return _ONE[k]


def widen(s: Scalar, k: ScalarKind) -> Scalar:
    """Convert ``s`` to kind ``k``; only widening is allowed."""
    src = kind(s)
    if src == k:
        return s
    if src > k:
        raise DomainError(f"cannot narrow {src.name} value {s} to {k.name}")
    if k == ScalarKind.RATIONAL:
        return Rational(s)
    return float(s)


def unify(a: Scalar, b: Scalar) -> Tuple[Scalar, Scalar]:
    k = join_kind(kind(a), kind(b))
    return widen(a, k), widen(b, k)


def s_add(a: Scalar, b: Scalar) -> Scalar:
    r = a + b
    return _check_int64(r) if isinstance(r, int) else r


def s_sub(a: Scalar, b: Scalar) -> Scalar:
    r = a - b
    return _check_int64(r) if isinstance(r, int) else r


def s_mul(a: Scalar, b: Scalar) -> Scalar:
    r = a * b
    return _check_int64(r) if isinstance(r, int) else r


def s_neg(a: Scalar) -> Scalar:
    r = -a
    return _check_int64(r) if isinstance(r, int) else r


def s_div(a: Scalar, b: Scalar) -> Scalar:
    """Divide unified scalars. INT/INT gives an exact RATIONAL quotient;
    FLOAT division by zero follows binary64 (``±inf`` or ``nan``)."""
    if isinstance(a, float):
        if b == 0.0:
            if a == 0.0 or math.isnan(a):
                return math.nan
            return math.copysign(math.inf, a) * math.copysign(1.0, b)
        return a / b
    if isinstance(a, Rational):
        return a / b
    if b == 0:
        raise DomainError(f"division of {a} by exact zero")
    return Rational(a, b)


def is_zero(s: Scalar) -> bool:
    return s == 0


def is_negative(s: Scalar) -> bool:
    """Sign test used for rendering; ``-0.0`` counts as negative."""
    if isinstance(s, float):
        return math.copysign(1.0, s) < 0 and not math.isnan(s)
    return s < 0
