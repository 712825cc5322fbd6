"""Hyperbolic (split-complex) numbers over an INT < RATIONAL < FLOAT tower."""

from .core import (
    Hyperbolic,
    add,
    coerce,
    conj,
    div,
    eq,
    inv,
    make,
    make_real,
    mul,
    neg,
    pos,
    quad_form,
    sub,
    unify_h,
    unit_j,
)
from .errors import DomainError, NullConeDivision, NumError, NumOverflowError, ParseError
from .functions import (
    LightconeCoords,
    decompose,
    exp_h,
    idempotents,
    log_h,
    pow_i,
    recompose,
    sqrt_h,
)
from .scalar import Rational, ScalarKind, join_kind, kind, unify, widen
from .textio import evaluate, format, parse_expr, parse_literal

j = unit_j()

__all__ = [
    "DomainError", "Hyperbolic", "LightconeCoords", "NullConeDivision", "NumError",
    "NumOverflowError", "ParseError", "Rational", "ScalarKind", "add", "coerce", "conj",
    "decompose", "div", "eq", "evaluate", "exp_h", "format", "idempotents", "inv", "j",
    "join_kind", "kind", "log_h", "make", "make_real", "mul", "neg", "parse_expr",
    "parse_literal", "pos", "pow_i", "quad_form", "recompose", "sqrt_h", "sub", "unify",
    "unify_h", "unit_j", "widen",
]
