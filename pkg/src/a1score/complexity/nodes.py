"""AST for complexity functions of a single variable ``n``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from ..errors import UnsupportedExpression


class Expr:
    __slots__ = ()

    def __mul__(self, other: Expr) -> Expr:
        return Product((self, other))

    def __add__(self, other: Expr) -> Expr:
        return Sum((self, other))


@dataclass(frozen=True)
class Constant(Expr):
    value: Fraction

    def __post_init__(self):
        value = Fraction(self.value)
        if value <= 0:
            raise UnsupportedExpression("non-positive constant", str(value))
        object.__setattr__(self, "value", value)


@dataclass(frozen=True)
class Variable(Expr):
    name: str = "n"


@dataclass(frozen=True)
class Log(Expr):
    # arg is restricted to n or n^k, k > 0
    arg: Expr

    def __post_init__(self):
        arg = self.arg
        if isinstance(arg, Variable):
            return
        if isinstance(arg, Power) and isinstance(arg.base, Variable) and isinstance(arg.exponent, Fraction):
            if arg.exponent > 0:
                return
            raise UnsupportedExpression("unsupported log argument", "log of n with non-positive exponent")
        if isinstance(arg, Sum):
            raise UnsupportedExpression("unsupported log argument", "log of a sum")
        if contains_log(arg):
            raise UnsupportedExpression("unsupported log argument", "nested log")
        raise UnsupportedExpression("unsupported log argument", "log argument must be n or n^k")


Exponent = Union[Fraction, Variable]


@dataclass(frozen=True)
class Power(Expr):
    base: Expr
    exponent: Exponent

    def __post_init__(self):
        exp = self.exponent
        if isinstance(exp, Variable):
            if not (isinstance(self.base, Constant) and self.base.value > 1):
                raise UnsupportedExpression(
                    "unsupported exponent", "n as exponent requires a constant base > 1"
                )
            return
        exp = Fraction(exp)
        if exp == 0:
            raise UnsupportedExpression("unsupported exponent", "zero exponent")
        if isinstance(self.base, Sum) and not (exp.denominator == 1 and exp > 0):
            raise UnsupportedExpression(
                "unsupported exponent", f"a sum may only be raised to a positive integer, got {exp}"
            )
        object.__setattr__(self, "exponent", exp)


@dataclass(frozen=True)
class Product(Expr):
    factors: Tuple[Expr, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ValueError("empty product")


@dataclass(frozen=True)
class Sum(Expr):
    terms: Tuple[Expr, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ValueError("empty sum")


N = Variable()


def const(value) -> Constant:
    return Constant(Fraction(value))


def log_n() -> Log:
    return Log(N)


def n_pow(k) -> Power:
    return Power(N, Fraction(k))


def contains_log(expr: Expr) -> bool:
    if isinstance(expr, Log):
        return True
    if isinstance(expr, Power):
        return contains_log(expr.base)
    if isinstance(expr, Product):
        return any(contains_log(f) for f in expr.factors)
    if isinstance(expr, Sum):
        return any(contains_log(t) for t in expr.terms)
    return False
