"""Surface syntax: tokenizer, recursive-descent parser and evaluator.

Grammar (whitespace insensitive, left associative):

    compare := expr (('=' | '<' | '<=') expr)?
    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := atom ('^' exponent)?
    atom    := integer | 'rho' | 'o' | 'L' | 'M' | '(' expr ')' | '-' atom
             | ident '(' expr ')'
    ident   := 'e' | 'u' | 'inv' | 'abs' | 'shadow'
    exponent:= '(' rational ')' | integer
    rational:= integer ('/' positive-integer)?

The surface is ASCII only and accepts exact rational literals exclusively; a
quotient like 1/2 parses as division, which evaluates to the same exact value.
Exponent bases must evaluate to a pure power of rho unless the exponent is an
integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ParseError, SolidusError
from .external import (
    ExternalNum,
    canonicalize,
    ext_abs,
    ext_add,
    ext_compare,
    ext_div,
    ext_inv,
    ext_mul,
    ext_neg,
    ext_sub,
    magnitude,
    pure,
    shadow,
    unity,
)
from .field import Ordering, RhoPoly
from .neutrix import FULL, INFINITESIMALS, LIMITED, NeutrixKind


# --- syntax tree ---------------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    value: Fraction
    pos: int


@dataclass(frozen=True)
class Sym:
    name: str  # rho | o | L | M
    pos: int


@dataclass(frozen=True)
class Unary:
    op: str  # neg | e | u | inv | abs | shadow
    arg: "Expr"
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * /
    left: "Expr"
    right: "Expr"
    pos: int


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: Fraction
    pos: int


@dataclass(frozen=True)
class Cmp:
    op: str  # = | < | <=
    left: "Expr"
    right: "Expr"
    pos: int


Expr = Union[Lit, Sym, Unary, BinOp, Pow, Cmp]


# --- tokenizer ------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # int | name | op | end
    text: str
    pos: int  # 1-based column


_PUNCT = ("<=", "+", "-", "*", "/", "^", "(", ")", ",", "=", "<")


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            tokens.append(Token("int", source[i:j], i + 1))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            tokens.append(Token("name", source[i:j], i + 1))
            i = j
            continue
        for punct in _PUNCT:
            if source.startswith(punct, i):
                tokens.append(Token("op", punct, i + 1))
                i += len(punct)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", i + 1)
    tokens.append(Token("end", "", n + 1))
    return tokens


# --- parser ---------------------------------------------------------------------


_SYMBOLS = {"rho", "o", "L", "M"}
_FUNCTIONS = {"e", "u", "inv", "abs", "shadow"}


class Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        tok = self.current
        self.index += 1
        return tok

    def expect_op(self, text: str) -> Token:
        tok = self.current
        if tok.kind != "op" or tok.text != text:
            raise ParseError(f"expected {text!r}", tok.pos)
        return self.advance()

    def at_op(self, *texts: str) -> bool:
        return self.current.kind == "op" and self.current.text in texts

    def parse_compare(self) -> Expr:
        left = self.parse_expr()
        if self.at_op("=", "<", "<="):
            tok = self.advance()
            right = self.parse_expr()
            return Cmp(tok.text, left, right, tok.pos)
        return left

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while self.at_op("+", "-"):
            tok = self.advance()
            right = self.parse_term()
            node = BinOp(tok.text, node, right, tok.pos)
        return node

    def parse_term(self) -> Expr:
        node = self.parse_factor()
        while self.at_op("*", "/"):
            tok = self.advance()
            right = self.parse_factor()
            node = BinOp(tok.text, node, right, tok.pos)
        return node

    def parse_factor(self) -> Expr:
        node = self.parse_atom()
        if self.at_op("^"):
            tok = self.advance()
            exponent = self.parse_exponent()
            node = Pow(node, exponent, tok.pos)
        return node

    def parse_exponent(self) -> Fraction:
        if self.current.kind == "int":
            return Fraction(int(self.advance().text))
        self.expect_op("(")
        value = self.parse_rational()
        self.expect_op(")")
        return value

    def parse_rational(self) -> Fraction:
        negative = False
        if self.at_op("-"):
            self.advance()
            negative = True
        tok = self.current
        if tok.kind != "int":
            raise ParseError("expected an integer", tok.pos)
        self.advance()
        numerator = int(tok.text)
        denominator = 1
        if self.at_op("/"):
            self.advance()
            den_tok = self.current
            if den_tok.kind != "int" or int(den_tok.text) == 0:
                raise ParseError("expected a positive integer denominator", den_tok.pos)
            self.advance()
            denominator = int(den_tok.text)
        value = Fraction(numerator, denominator)
        return -value if negative else value

    def parse_atom(self) -> Expr:
        tok = self.current
        if tok.kind == "int":
            self.advance()
            return Lit(Fraction(int(tok.text)), tok.pos)
        if tok.kind == "op" and tok.text == "-":
            # binds looser than '^' so canonical text like -rho^2 means -(rho^2)
            self.advance()
            return Unary("neg", self.parse_factor(), tok.pos)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        if tok.kind == "name":
            self.advance()
            if tok.text in _SYMBOLS:
                return Sym(tok.text, tok.pos)
            if tok.text in _FUNCTIONS:
                self.expect_op("(")
                arg = self.parse_expr()
                self.expect_op(")")
                return Unary(tok.text, arg, tok.pos)
            raise ParseError(f"unknown identifier {tok.text!r}", tok.pos)
        raise ParseError("expected a value", tok.pos)

    def parse_full(self) -> Expr:
        node = self.parse_compare()
        tok = self.current
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return node


def parse(source: str) -> Expr:
    """Parse one expression or comparison; raises ParseError with a column."""
    return Parser(source).parse_full()


def parse_expr_list(source: str) -> list[Expr]:
    """Parse a comma-separated list of expressions."""
    parser = Parser(source)
    items = [parser.parse_compare()]
    while parser.at_op(","):
        parser.advance()
        items.append(parser.parse_compare())
    tok = parser.current
    if tok.kind != "end":
        raise ParseError(f"unexpected {tok.text!r}", tok.pos)
    return items


# --- evaluator --------------------------------------------------------------------


class EvalError(SolidusError):
    """Domain error during evaluation, annotated with a source position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (column {pos})")
        self.pos = pos


_SYMBOL_VALUES = {
    "o": INFINITESIMALS,
    "L": LIMITED,
    "M": FULL,
}


def _as_rho_power(value: ExternalNum, pos: int) -> Fraction:
    rep = value.rep
    if value.nx.kind is not NeutrixKind.ZERO or not rep.is_polynomial():
        raise EvalError("power base must be a pure power of rho", pos)
    terms = rep.num.terms
    if len(terms) != 1 or terms[0][1] != 1:
        raise EvalError("power base must be a pure power of rho", pos)
    return terms[0][0]


def _integer_power(value: ExternalNum, n: int, pos: int) -> ExternalNum:
    if n < 0:
        try:
            value = ext_inv(value)
        except SolidusError as exc:
            raise EvalError(str(exc), pos) from None
        n = -n
    result = canonicalize(1)
    for _ in range(n):
        result = ext_mul(result, value)
    return result


def evaluate(expr: Expr) -> ExternalNum | bool:
    """Bottom-up evaluation to a canonical external number (or a comparison bool)."""
    if isinstance(expr, Lit):
        return canonicalize(expr.value)
    if isinstance(expr, Sym):
        if expr.name == "rho":
            return canonicalize(RhoPoly.rho_power(1))
        return pure(_SYMBOL_VALUES[expr.name])
    if isinstance(expr, Unary):
        arg = _value(expr.arg)
        try:
            if expr.op == "neg":
                return ext_neg(arg)
            if expr.op == "e":
                return magnitude(arg)
            if expr.op == "u":
                return unity(arg)
            if expr.op == "inv":
                return ext_inv(arg)
            if expr.op == "abs":
                return ext_abs(arg)
            if expr.op == "shadow":
                return shadow(arg)
        except SolidusError as exc:
            raise EvalError(str(exc), expr.pos) from None
        raise EvalError(f"unknown operator {expr.op!r}", expr.pos)
    if isinstance(expr, BinOp):
        left, right = _value(expr.left), _value(expr.right)
        try:
            if expr.op == "+":
                return ext_add(left, right)
            if expr.op == "-":
                return ext_sub(left, right)
            if expr.op == "*":
                return ext_mul(left, right)
            if expr.op == "/":
                return ext_div(left, right)
        except SolidusError as exc:
            raise EvalError(str(exc), expr.pos) from None
        raise EvalError(f"unknown operator {expr.op!r}", expr.pos)
    if isinstance(expr, Pow):
        base = _value(expr.base)
        if expr.exponent.denominator == 1:
            return _integer_power(base, expr.exponent.numerator, expr.pos)
        q = _as_rho_power(base, expr.pos)
        return canonicalize(RhoPoly.rho_power(q * expr.exponent))
    if isinstance(expr, Cmp):
        left, right = _value(expr.left), _value(expr.right)
        order = ext_compare(left, right)
        if expr.op == "=":
            return order is Ordering.EQ
        if expr.op == "<":
            return order is Ordering.LT
        return order is not Ordering.GT
    raise EvalError("unknown expression node", getattr(expr, "pos", 1))


def _value(expr: Expr) -> ExternalNum:
    result = evaluate(expr)
    if isinstance(result, bool):
        raise EvalError("comparison used as a value", expr.pos)
    return result


def eval_text(source: str) -> ExternalNum | bool:
    return evaluate(parse(source))
