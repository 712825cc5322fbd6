"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from hypernum import Hyperbolic, Rational

REL = 1e-12


def rand_rational(rng: random.Random, num_bound: int = 50, den_bound: int = 20) -> Rational:
    return Rational(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def rand_rat_h(rng: random.Random) -> Hyperbolic:
    return Hyperbolic(rand_rational(rng), rand_rational(rng))


def rand_float_h(rng: random.Random, bound: float = 1e3) -> Hyperbolic:
    return Hyperbolic(rng.uniform(-bound, bound), rng.uniform(-bound, bound))


def rand_off_cone(rng: random.Random) -> Hyperbolic:
    while True:
        z = rand_rat_h(rng)
        if z.re != z.jm and z.re != -z.jm:
            return z


def frac(s) -> Fraction:
    if isinstance(s, Rational):
        return Fraction(s.num, s.den)
    return Fraction(s)


# 2x2 matrix model: x + jy  <->  [[x, y], [y, x]]; j*j = 1 becomes [[0,1],[1,0]]^2 = I


def to_matrix(h: Hyperbolic):
    x, y = frac(h.re), frac(h.jm)
    return ((x, y), (y, x))


def mat_mul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def mat_det(a):
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def mat_inv(a):
    d = mat_det(a)
    return ((a[1][1] / d, -a[0][1] / d), (-a[1][0] / d, a[0][0] / d))


def from_matrix(m):
    assert m[0][0] == m[1][1] and m[0][1] == m[1][0], "not a hyperbolic matrix"
    return m[0][0], m[0][1]


def parts(h: Hyperbolic):
    return frac(h.re), frac(h.jm)


def norm1(h: Hyperbolic) -> float:
    return abs(float(h.re)) + abs(float(h.jm))


def close(actual: Hyperbolic, expected: Hyperbolic, scale: float | None = None, rel: float = REL) -> bool:
    """Componentwise closeness, relative to ``scale`` (default: max-norm of expected)."""
    if scale is None:
        scale = max(abs(float(expected.re)), abs(float(expected.jm)))
    err = max(abs(float(actual.re) - float(expected.re)), abs(float(actual.jm) - float(expected.jm)))
    return err <= rel * scale
