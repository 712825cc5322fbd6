"""Text rendering, literal parsing and the arithmetic expression language.

Canonical form is ``<re>+<jm>j`` (or ``<re>-<|jm|>j`` for a negative
j-part). INT parts print as decimal integers, RATIONAL parts as ``p//q`` and
FLOAT parts as the shortest repr that round-trips.

Expression grammar, lowest precedence first::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' unary)?              # right associative
    atom    := INT | INT '//' INT | FLOAT | NUMBER 'j' | 'j' | 'inf' | 'nan'
             | '(' expr ')' | NAME '(' expr ')'

All error positions are byte offsets into the UTF-8 encoding of the input.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Callable, Dict, List, Optional, Tuple, Union

from . import scalar as sc
from .core import (
    Hyperbolic,
    add,
    conj,
    div,
    inv,
    make,
    make_real,
    mul,
    neg,
    quad_form,
    sub,
    unit_j,
)
from .errors import DomainError, NumError, NumOverflowError, ParseError, Span
from .functions import exp_h, log_h, pow_i, sqrt_h
from .scalar import Rational, Scalar, ScalarKind

MAX_DEPTH = 150

FUNCTIONS: Dict[str, Callable[[Hyperbolic], Hyperbolic]] = {
    "conj": conj,
    "inv": inv,
    "exp": exp_h,
    "log": log_h,
    "sqrt": sqrt_h,
    "quad": lambda h: make_real(quad_form(h)),
}


# rendering


def format_scalar(s: Scalar) -> str:
    if isinstance(s, float):
        return repr(s)
    return str(s)


def format(h: Hyperbolic) -> str:
    """Canonical text of ``h``; the sign of the j-part is folded in."""
    jm = format_scalar(h.jm)
    if sc.is_negative(h.jm):
        return f"{format_scalar(h.re)}-{jm[1:]}j"
    return f"{format_scalar(h.re)}+{jm}j"


# literals

_REAL = re.compile(
    r"(?P<rat>\d+//\d+)"
    r"|(?P<flt>\d+\.\d*(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+|inf|nan)"
    r"|(?P<int>\d+)",
    re.ASCII,
)


def _to_bytes_text(text: Union[str, bytes]) -> str:
    # latin-1 maps each byte to one character, so indices are byte offsets
    if isinstance(text, (bytes, bytearray)):
        return bytes(text).decode("latin-1")
    if text.isascii():
        return text
    return text.encode("utf-8", "surrogatepass").decode("latin-1")


def _make_real_scalar(m: re.Match, negative: bool) -> Scalar:
    sign = "-" if negative else ""
    try:
        if m.group("rat"):
            p, q = m.group("rat").split("//")
            return Rational(int(sign + p), int(q))
        if m.group("flt"):
            return float(sign + m.group("flt"))
        return sc.as_scalar(int(sign + m.group("int")))
    except (ValueError, NumOverflowError) as exc:
        # ValueError also covers int() refusing very long digit strings
        raise ParseError(m.start(), f"invalid literal {_clip(m.group(0))}: {getattr(exc, 'message', 'out of range')}") from None


def _clip(text: str, limit: int = 24) -> str:
    return repr(text if len(text) <= limit else text[:limit] + "...")


def _describe(text: str, pos: int) -> str:
    if pos >= len(text):
        return "end of input"
    return repr(text[pos])


def parse_literal(text: Union[str, bytes]) -> Hyperbolic:
    """Parse the canonical form produced by :func:`format`.

    A plain real (``"1//2"``) and an unfolded sign (``"1+-3j"``) are also
    accepted.
    """
    s = _to_bytes_text(text)
    pos = 0
    negative = False
    if s.startswith("-"):
        negative, pos = True, 1
    m = _REAL.match(s, pos)
    if m is None:
        raise ParseError(pos, f"expected a number, found {_describe(s, pos)}")
    re_part = _make_real_scalar(m, negative)
    pos = m.end()
    if pos == len(s):
        return make_real(re_part)
    if s[pos] not in "+-":
        raise ParseError(pos, f"expected '+' or '-', found {_describe(s, pos)}")
    negative = s[pos] == "-"
    pos += 1
    if pos < len(s) and s[pos] == "-":
        negative, pos = not negative, pos + 1
    m = _REAL.match(s, pos)
    if m is None:
        raise ParseError(pos, f"expected a number, found {_describe(s, pos)}")
    jm_part = _make_real_scalar(m, negative)
    pos = m.end()
    if pos >= len(s) or s[pos] != "j":
        raise ParseError(pos, f"expected 'j', found {_describe(s, pos)}")
    pos += 1
    if pos != len(s):
        raise ParseError(pos, f"unexpected trailing {_describe(s, pos)}")
    return make(re_part, jm_part)


# expression tree


@dataclasses.dataclass(frozen=True)
class NumLit:
    """A real literal, or a pure j-multiple such as ``3j`` when ``imag``."""

    value: Scalar
    imag: bool = False
    span: Span = dataclasses.field(default=(0, 0), compare=False)


@dataclasses.dataclass(frozen=True)
class JConst:
    span: Span = dataclasses.field(default=(0, 0), compare=False)


@dataclasses.dataclass(frozen=True)
class Neg:
    operand: "Expr"
    span: Span = dataclasses.field(default=(0, 0), compare=False)


@dataclasses.dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    span: Span = dataclasses.field(default=(0, 0), compare=False)


@dataclasses.dataclass(frozen=True)
class Call:
    name: str
    arg: "Expr"
    span: Span = dataclasses.field(default=(0, 0), compare=False)


Expr = Union[NumLit, JConst, Neg, BinOp, Call]


# lexer

_NUMBER = re.compile(r"(\d+)//(\d+)|\d+\.\d*(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+|\d+", re.ASCII)
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_SPACE = " \t\r\n"
_PUNCT = "+-*/^(),"


@dataclasses.dataclass
class _Token:
    kind: str  # "num", "name", "eof" or the punctuation character itself
    start: int
    end: int
    value: object = None
    imag: bool = False


def _number_token(s: str, m: re.Match) -> _Token:
    text = m.group(0)
    try:
        if m.group(1) is not None:
            value: Scalar = Rational(int(m.group(1)), int(m.group(2)))
        elif text.isdigit():
            value = sc.as_scalar(int(text))
        else:
            value = float(text)
    except (ValueError, NumOverflowError) as exc:
        raise ParseError(m.start(), f"invalid literal {_clip(text)}: {getattr(exc, 'message', 'out of range')}") from None
    end = m.end()
    imag = False
    if end < len(s) and s[end] == "j":
        nxt = s[end + 1 : end + 2]
        if not (nxt.isascii() and (nxt.isalnum() or nxt == "_")):
            imag, end = True, end + 1
    return _Token("num", m.start(), end, value, imag)


def _tokenize(s: str) -> List[_Token]:
    tokens: List[_Token] = []
    pos = 0
    n = len(s)
    while pos < n:
        c = s[pos]
        if c in _SPACE:
            pos += 1
            continue
        if c in _PUNCT:
            tokens.append(_Token(c, pos, pos + 1))
            pos += 1
            continue
        if "0" <= c <= "9":
            tok = _number_token(s, _NUMBER.match(s, pos))
        elif c.isascii() and (c.isalpha() or c == "_"):
            m = _NAME.match(s, pos)
            name = m.group(0)
            if name in ("inf", "nan", "infj", "nanj"):
                tok = _Token("num", pos, m.end(), float(name[:3]), name.endswith("j"))
            else:
                tok = _Token("name", pos, m.end(), name)
        else:
            raise ParseError(pos, f"unexpected character {c!r}")
        tokens.append(tok)
        pos = tok.end
    tokens.append(_Token("eof", n, n))
    return tokens


# parser

_BINARY = {"+": 1, "-": 1, "*": 2, "/": 2}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.depth = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: str):
        tok = self.tok
        found = "end of input" if tok.kind == "eof" else repr(self.text[tok.start:tok.end])
        raise ParseError(tok.start, f"expected {expected}, found {found}")

    def expect(self, kind: str) -> _Token:
        if self.tok.kind != kind:
            self.fail(repr(kind))
        return self.advance()

    def nest(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise ParseError(self.tok.start, f"expression nested deeper than {MAX_DEPTH} levels")

    def expr(self, min_prec: int = 1) -> Expr:
        self.nest()
        left = self.unary()
        while self.tok.kind in _BINARY and _BINARY[self.tok.kind] >= min_prec:
            op = self.advance().kind
            right = self.expr(_BINARY[op] + 1)
            left = BinOp(op, left, right, (left.span[0], right.span[1]))
        self.depth -= 1
        return left

    def unary(self) -> Expr:
        if self.tok.kind == "-":
            start = self.advance().start
            self.nest()
            operand = self.unary()
            self.depth -= 1
            return Neg(operand, (start, operand.span[1]))
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.tok.kind != "^":
            return base
        self.advance()
        self.nest()
        exponent = self.unary()
        self.depth -= 1
        return BinOp("^", base, exponent, (base.span[0], exponent.span[1]))

    def atom(self) -> Expr:
        tok = self.tok
        if tok.kind == "num":
            self.advance()
            return NumLit(tok.value, tok.imag, (tok.start, tok.end))
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            close = self.expect(")")
            return _respan(inner, (tok.start, close.end))
        if tok.kind == "name":
            if tok.value == "j":
                self.advance()
                return JConst((tok.start, tok.end))
            if tok.value not in FUNCTIONS:
                raise ParseError(tok.start, f"unknown name {tok.value!r}")
            self.advance()
            self.expect("(")
            arg = self.expr()
            close = self.expect(")")
            return Call(tok.value, arg, (tok.start, close.end))
        self.fail("a number, 'j', '(' or a function call")


def _respan(e: Expr, span: Span) -> Expr:
    # parenthesised subexpressions report the span including the parens
    return dataclasses.replace(e, span=span)


def parse_expr(text: Union[str, bytes]) -> Expr:
    """Parse one expression; the whole input must be consumed."""
    p = _Parser(_to_bytes_text(text))
    e = p.expr()
    if p.tok.kind != "eof":
        p.fail("an operator or end of input")
    return e


def parse_exprs(text: Union[str, bytes]) -> List[Expr]:
    """Parse a comma-separated list of expressions (at least one)."""
    p = _Parser(_to_bytes_text(text))
    items = [p.expr()]
    while p.tok.kind == ",":
        p.advance()
        items.append(p.expr())
    if p.tok.kind != "eof":
        p.fail("',', an operator or end of input")
    return items


def unparse(e: Expr) -> str:
    """Fully parenthesised source text that parses back to an equivalent tree."""
    if isinstance(e, NumLit):
        text = format_scalar(e.value) + ("j" if e.imag else "")
        return f"(-{text[1:]})" if sc.is_negative(e.value) else text
    if isinstance(e, JConst):
        return "j"
    if isinstance(e, Neg):
        return f"(-{unparse(e.operand)})"
    if isinstance(e, BinOp):
        return f"({unparse(e.left)}{e.op}{unparse(e.right)})"
    if isinstance(e, Call):
        return f"{e.name}({unparse(e.arg)})"
    raise TypeError(f"not an expression node: {e!r}")


# evaluation

_BINOPS = {"+": add, "-": sub, "*": mul, "/": div}


def _power(base: Hyperbolic, exponent: Hyperbolic, span: Span) -> Hyperbolic:
    if exponent.kind != ScalarKind.INT or exponent.jm != 0:
        raise DomainError(f"exponent must be an integer real, got {format(exponent)}", span)
    return pow_i(base, exponent.re)


def evaluate(e: Expr) -> Hyperbolic:
    """Evaluate ``e``. A NumError raised while evaluating a node carries that
    node's source span unless an inner node already set one."""
    try:
        if isinstance(e, NumLit):
            if e.imag:
                return make(sc.zero(sc.kind(e.value)), e.value)
            return make_real(e.value)
        if isinstance(e, JConst):
            return unit_j()
        if isinstance(e, Neg):
            return neg(evaluate(e.operand))
        if isinstance(e, BinOp):
            left, right = evaluate(e.left), evaluate(e.right)
            if e.op == "^":
                return _power(left, right, e.right.span)
            return _BINOPS[e.op](left, right)
        if isinstance(e, Call):
            return FUNCTIONS[e.name](evaluate(e.arg))
    except NumError as exc:
        if exc.span is None:
            exc.span = e.span
        raise
    raise TypeError(f"not an expression node: {e!r}")


def uses_float(e: Expr) -> Optional[Expr]:
    """Return the first node that introduces a FLOAT value, if any."""
    if isinstance(e, NumLit):
        return e if isinstance(e.value, float) else None
    if isinstance(e, Call):
        if e.name in ("exp", "log", "sqrt"):
            return e
        return uses_float(e.arg)
    if isinstance(e, Neg):
        return uses_float(e.operand)
    if isinstance(e, BinOp):
        return uses_float(e.left) or uses_float(e.right)
    return None
