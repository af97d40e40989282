"""Recursive-descent parser and serializer for complexity expressions.

Grammar::

    expr     = term { "+" term }
    term     = factor { ("*" | juxtaposition) factor }
    factor   = primary [ "^" exponent ]
    primary  = number | "n" | logform | "sqrt" "(" "n" ")" | "(" expr ")" | "O" "(" expr ")"
    logform  = "log" ( "n" | "(" expr ")" )      -- argument checked to be n or n^k
    exponent = ["-"] number | "n" | "(" ["-"] number ")"
    number   = decimal | ratio p/q
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from ..errors import ParseError, UnsupportedExpression
from .canonical import canonicalize
from .nodes import N, Constant, Expr, Log, Power, Product, Sum, Variable, contains_log

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>\d+(?:/\d+|\.\d+)?)
  | (?P<word>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)

_PRIMARY_START = ("number", "n", "log", "sqrt", "O", "(")


@dataclass(frozen=True)
class Token:
    kind: str  # number, word, op, end
    text: str
    pos: int

    @property
    def tag(self) -> str:
        """Kind for numbers and unknown words, literal text otherwise."""
        if self.kind == "number":
            return "number"
        if self.kind == "end":
            return "end of input"
        return self.text


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected) -> ParseError:
        tok = self.tok
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        return ParseError(f"unexpected {found}", self.text, tok.pos, expected)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind == "number":
            raise self.fail([repr(text)])
        return self.advance()

    def parse(self) -> Expr:
        expr = self.expr()
        if self.tok.kind != "end":
            raise self.fail(["'+'", "'*'", "end of input"])
        return expr

    def expr(self) -> Expr:
        terms = [self.term()]
        while self.tok.text == "+":
            self.advance()
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> Expr:
        factors = [self.factor()]
        while True:
            if self.tok.text == "*":
                self.advance()
                factors.append(self.factor())
            elif self.tok.tag in _PRIMARY_START:
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> Expr:
        start = self.tok.pos
        base = self.primary()
        if self.tok.text != "^":
            return base
        self.advance()
        exponent = self.exponent()
        try:
            return Power(base, exponent)
        except UnsupportedExpression as exc:
            construct = self.text[start:self.tokens[self.i - 1].pos + len(self.tokens[self.i - 1].text)]
            raise UnsupportedExpression(exc.message, f"{construct!r} ({exc.construct})", start) from None

    def exponent(self):
        if self.tok.text == "n" and self.tok.kind == "word":
            self.advance()
            return N
        if self.tok.text == "(":
            self.advance()
            value = self.signed_number()
            self.expect(")")
            return value
        return self.signed_number()

    def signed_number(self) -> Fraction:
        negative = False
        if self.tok.text == "-":
            self.advance()
            negative = True
        if self.tok.kind != "number":
            raise self.fail(["number", "'n'", "'-'", "'('"] if not negative else ["number"])
        value = Fraction(self.advance().text)
        return -value if negative else value

    def primary(self) -> Expr:
        tok = self.tok
        if tok.kind == "number":
            self.advance()
            value = Fraction(tok.text)
            if value <= 0:
                raise UnsupportedExpression("non-positive constant", tok.text, tok.pos)
            return Constant(value)
        if tok.kind == "word":
            if tok.text == "n":
                self.advance()
                return N
            if tok.text == "log":
                return self.logform()
            if tok.text == "sqrt":
                self.advance()
                self.expect("(")
                self.expect("n")
                self.expect(")")
                return Power(N, Fraction(1, 2))
            if tok.text == "O":
                self.advance()
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return inner
            raise ParseError(f"unknown identifier {tok.text!r}", self.text, tok.pos,
                             ["number", "'n'", "'log'", "'sqrt'", "'O'", "'('"])
        if tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        raise self.fail(["number", "'n'", "'log'", "'sqrt'", "'O'", "'('"])

    def logform(self) -> Expr:
        start = self.advance().pos
        if self.tok.text == "n" and self.tok.kind == "word":
            self.advance()
            return Log(N)
        if self.tok.text != "(":
            raise self.fail(["'n'", "'('"])
        self.advance()
        arg = self.expr()
        self.expect(")")
        construct = self.text[start:self.tokens[self.i - 1].pos + 1]
        if isinstance(arg, Sum):
            raise UnsupportedExpression("unsupported log argument", f"log of a sum in {construct!r}", start)
        if contains_log(arg):
            raise UnsupportedExpression("unsupported log argument", f"nested log in {construct!r}", start)
        try:
            return Log(arg)
        except UnsupportedExpression:
            raise UnsupportedExpression(
                "unsupported log argument", f"{construct!r} (argument must be n or n^k)", start
            ) from None


def parse(text: str) -> Expr:
    """Parse complexity text such as ``"O(n log n)"`` into an AST.

    Juxtaposition multiplies, ``log n`` is sugar for ``log(n)`` and any
    ``O(...)`` wrapper is dropped without touching constant factors.
    Raises ParseError for syntax problems and UnsupportedExpression for
    forms outside the supported fragment (n^n, log of a sum, ...).
    """
    if not text or not text.strip():
        raise ParseError("empty expression", text or "", 0, ["expression"])
    expr = _Parser(text).parse()
    # surfaces irrational powers such as (2n)^(1/2) at parse time
    canonicalize(expr)
    return expr


def _exponent_text(exp) -> str:
    if isinstance(exp, Variable):
        return "n"
    if exp.denominator == 1 and exp > 0:
        return str(exp)
    return f"({exp})"


def _needs_parens_as_base(expr: Expr) -> bool:
    if isinstance(expr, Constant):
        return expr.value.denominator != 1
    return isinstance(expr, (Sum, Product, Power))


def to_text(expr: Expr) -> str:
    if isinstance(expr, Constant):
        return str(expr.value)
    if isinstance(expr, Variable):
        return "n"
    if isinstance(expr, Log):
        if isinstance(expr.arg, Power):
            return f"log(n^{_exponent_text(expr.arg.exponent)})"
        return "log(n)"
    if isinstance(expr, Power):
        base = to_text(expr.base)
        if _needs_parens_as_base(expr.base):
            base = f"({base})"
        return f"{base}^{_exponent_text(expr.exponent)}"
    if isinstance(expr, Product):
        return " * ".join(f"({to_text(f)})" if isinstance(f, Sum) else to_text(f) for f in expr.factors)
    if isinstance(expr, Sum):
        return " + ".join(to_text(t) for t in expr.terms)
    raise TypeError(f"not a complexity expression: {expr!r}")
