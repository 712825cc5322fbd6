import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hypernum import DomainError, NumOverflowError, Rational, ScalarKind
from hypernum import scalar as sc
from hypernum.scalar import INT64_MAX, INT64_MIN, join_kind, kind, s_add, s_div, s_mul, s_neg, s_sub, unify, widen

from helpers import frac

KINDS = list(ScalarKind)

int64s = st.integers(INT64_MIN, INT64_MAX)
small_rats = st.builds(Rational, st.integers(-10**6, 10**6), st.integers(1, 10**6))
scalars = st.one_of(int64s, small_rats, st.floats(allow_nan=False))


def test_kind_tags():
    assert kind(3) == ScalarKind.INT
    assert kind(Rational(1, 2)) == ScalarKind.RATIONAL
    assert kind(3.14) == ScalarKind.FLOAT


def test_kind_rejects_bool():
    with pytest.raises(TypeError):
        kind(True)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (ScalarKind.INT, ScalarKind.FLOAT, ScalarKind.FLOAT),
        (ScalarKind.INT, ScalarKind.INT, ScalarKind.INT),
        (ScalarKind.RATIONAL, ScalarKind.INT, ScalarKind.RATIONAL),
    ],
)
def test_join_kind_examples(a, b, expected):
    assert join_kind(a, b) == expected


def test_join_table_matches_lattice_order():
    order = {ScalarKind.INT: 0, ScalarKind.RATIONAL: 1, ScalarKind.FLOAT: 2}
    for a, b in itertools.product(KINDS, repeat=2):
        j = join_kind(a, b)
        # least upper bound: above both, and below every other upper bound
        assert order[j] >= order[a] and order[j] >= order[b]
        uppers = [c for c in KINDS if order[c] >= order[a] and order[c] >= order[b]]
        assert all(order[j] <= order[c] for c in uppers)


def test_join_laws_exhaustive():
    for a, b, c in itertools.product(KINDS, repeat=3):
        assert join_kind(join_kind(a, b), c) == join_kind(a, join_kind(b, c))
    for a, b in itertools.product(KINDS, repeat=2):
        assert join_kind(a, b) == join_kind(b, a)
    for a in KINDS:
        assert join_kind(a, a) == a


def test_widen_examples():
    assert widen(1, ScalarKind.RATIONAL) == Rational(1, 1)
    assert kind(widen(1, ScalarKind.RATIONAL)) == ScalarKind.RATIONAL
    assert widen(Rational(1, 2), ScalarKind.FLOAT) == 0.5
    with pytest.raises(DomainError):
        widen(1.0, ScalarKind.RATIONAL)
    with pytest.raises(DomainError):
        widen(Rational(1, 2), ScalarKind.INT)


def test_widen_to_own_kind_is_identity():
    r = Rational(3, 7)
    assert widen(r, ScalarKind.RATIONAL) is r
    assert widen(5, ScalarKind.INT) == 5


def test_widen_rational_to_float_rounds_to_nearest():
    # 1/3 has no binary64 representation; the correctly rounded value is the closest double
    f = widen(Rational(1, 3), ScalarKind.FLOAT)
    assert f == 0.3333333333333333
    assert abs(Fraction(f) - Fraction(1, 3)) <= abs(Fraction(math.nextafter(f, 1)) - Fraction(1, 3))
    assert abs(Fraction(f) - Fraction(1, 3)) <= abs(Fraction(math.nextafter(f, 0)) - Fraction(1, 3))


def test_unify_examples():
    assert unify(1, 2.0) == (1.0, 2.0)
    a, b = unify(Rational(1, 3), math.pi)
    assert (a, b) == (0.3333333333333333, 3.141592653589793)
    assert kind(a) == kind(b) == ScalarKind.FLOAT
    assert unify(2, 5) == (2, 5)


def test_promote_type_int_hyperbolic_with_float():
    # Hyperbolic{Int64} promoted with a float type lands in the float kind
    assert join_kind(ScalarKind.INT, ScalarKind.FLOAT) == ScalarKind.FLOAT


@given(scalars, scalars)
def test_unify_symmetric(a, b):
    x, y = unify(a, b)
    y2, x2 = unify(b, a)
    assert (x, y) == (x2, y2)
    assert kind(x) == kind(y) == join_kind(kind(a), kind(b))


@given(st.integers(-(2**53), 2**53))
def test_exact_path_commutes(i):
    assert widen(widen(i, ScalarKind.RATIONAL), ScalarKind.FLOAT) == widen(i, ScalarKind.FLOAT)


def test_rational_normalisation():
    r = Rational(6, -4)
    assert (r.num, r.den) == (-3, 2)
    z = Rational(0, -9)
    assert (z.num, z.den) == (0, 1)
    with pytest.raises(DomainError):
        Rational(1, 0)


def test_rational_is_immutable():
    r = Rational(1, 2)
    with pytest.raises(AttributeError):
        r.num = 3


def test_s_mul_rational_example():
    assert s_mul(Rational(2, 3), Rational(3, 4)) == Rational(1, 2)


def test_s_div_int_gives_rational():
    q = s_div(1, 2)
    assert q == Rational(1, 2) and kind(q) == ScalarKind.RATIONAL


def test_int_overflow_is_checked():
    with pytest.raises(NumOverflowError):
        s_add(INT64_MAX, 1)
    with pytest.raises(NumOverflowError):
        s_sub(INT64_MIN, 1)
    with pytest.raises(NumOverflowError):
        s_mul(2**32, 2**32)
    with pytest.raises(NumOverflowError):
        s_neg(INT64_MIN)
    assert s_add(INT64_MAX - 1, 1) == INT64_MAX


def test_rational_overflow_is_checked():
    big = Rational(INT64_MAX, 1)
    with pytest.raises(NumOverflowError):
        big + Rational(1, 1)
    with pytest.raises(NumOverflowError):
        Rational(1, INT64_MAX) * Rational(1, 2)
    # reduction happens before the range check
    assert Rational(2 * INT64_MAX, 2) == big


def test_exact_division_by_zero():
    with pytest.raises(DomainError):
        s_div(1, 0)
    with pytest.raises(DomainError):
        s_div(Rational(1, 2), Rational(0))


def test_float_division_by_zero_follows_binary64():
    assert s_div(1.0, 0.0) == math.inf
    assert s_div(-1.0, 0.0) == -math.inf
    assert s_div(1.0, -0.0) == -math.inf
    assert math.isnan(s_div(0.0, 0.0))


def test_as_scalar_conversions():
    assert sc.as_scalar(Fraction(3, 6)) == Rational(1, 2)
    with pytest.raises(NumOverflowError):
        sc.as_scalar(2**63)
    with pytest.raises(TypeError):
        sc.as_scalar("1")


def test_rational_ops_against_fraction_oracle():
    rng = random.Random(7)
    for _ in range(10_000):
        a = Rational(rng.randint(-10**9, 10**9), rng.randint(1, 10**9))
        b = Rational(rng.randint(-10**9, 10**9), rng.randint(1, 10**9))
        for op, ref in ((s_add, Fraction.__add__), (s_mul, Fraction.__mul__), (s_sub, Fraction.__sub__)):
            r = op(a, b)
            assert frac(r) == ref(frac(a), frac(b))
            assert r.den > 0 and math.gcd(r.num, r.den) == 1


@given(small_rats, small_rats)
def test_rational_invariants_after_division(a, b):
    if b.num == 0:
        return
    q = s_div(a, b)
    assert q.den > 0 and math.gcd(q.num, q.den) == 1
    assert frac(q) == frac(a) / frac(b)


def test_rational_hash_agrees_with_int_and_float():
    assert hash(Rational(4, 2)) == hash(2)
    assert hash(Rational(1, 2)) == hash(0.5)
    assert Rational(1, 2) == 0.5 and Rational(1, 3) != 1 / 3
