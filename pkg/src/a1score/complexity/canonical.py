"""Exact normal form: a sum of terms ``coeff * n^poly * (log n)^log * base^n``.

All fields are :class:`fractions.Fraction`, so equality of two forms is an
exact structural comparison and never a floating-point judgement.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from ..errors import UnsupportedExpression
from .nodes import Constant, Expr, Log, Power, Product, Sum, Variable

ONE = Fraction(1)
ZERO = Fraction(0)

# (poly_exp, log_exp, exp_base)
Key = Tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    poly_exp: Fraction = ZERO
    log_exp: Fraction = ZERO
    exp_base: Fraction = ONE

    @property
    def key(self) -> Key:
        return (self.poly_exp, self.log_exp, self.exp_base)

    @property
    def growth_key(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.exp_base, self.poly_exp, self.log_exp, self.coeff)

    def __str__(self) -> str:
        parts = []
        if self.coeff != 1 or self.key == (ZERO, ZERO, ONE):
            parts.append(str(self.coeff))
        if self.poly_exp == 1:
            parts.append("n")
        elif self.poly_exp != 0:
            parts.append(f"n^{_exp_text(self.poly_exp)}")
        if self.log_exp == 1:
            parts.append("log(n)")
        elif self.log_exp != 0:
            parts.append(f"log(n)^{_exp_text(self.log_exp)}")
        if self.exp_base != 1:
            parts.append(f"({self.exp_base})^n" if self.exp_base.denominator != 1 else f"{self.exp_base}^n")
        return " * ".join(parts)


def _exp_text(q: Fraction) -> str:
    if q.denominator == 1 and q > 0:
        return str(q)
    return f"({q})"


@dataclass(frozen=True)
class CanonicalForm:
    terms: Tuple[Term, ...]

    @classmethod
    def from_dict(cls, coeffs: Dict[Key, Fraction]) -> CanonicalForm:
        terms = [Term(c, *k) for k, c in coeffs.items() if c != 0]
        terms.sort(key=lambda t: t.growth_key)
        return cls(tuple(terms))

    def as_dict(self) -> Dict[Key, Fraction]:
        return {t.key: t.coeff for t in self.terms}

    @property
    def leading(self) -> Term:
        return self.terms[-1]

    def is_constant(self) -> bool:
        return len(self.terms) == 1 and self.terms[0].key == (ZERO, ZERO, ONE)

    def __str__(self) -> str:
        return " + ".join(str(t) for t in reversed(self.terms))


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


def exact_power(base: Fraction, exponent: Fraction) -> Optional[Fraction]:
    """``base ** exponent`` as a Fraction, or None when the result is irrational."""
    if exponent.denominator == 1:
        return base ** int(exponent)
    root = exponent.denominator
    num = _int_root(base.numerator, root)
    den = _int_root(base.denominator, root)
    if num is None or den is None:
        return None
    return Fraction(num, den) ** exponent.numerator


def _int_root(value: int, k: int) -> Optional[int]:
    if value < 0:
        return None
    lo, hi = 0, 1
    while hi ** k <= value:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k < value:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** k == value else None


def _multiply(a: Dict[Key, Fraction], b: Dict[Key, Fraction]) -> Dict[Key, Fraction]:
    out: Dict[Key, Fraction] = {}
    for (pa, la, ea), ca in a.items():
        for (pb, lb, eb), cb in b.items():
            key = (pa + pb, la + lb, ea * eb)
            out[key] = out.get(key, ZERO) + ca * cb
    return out


def _add_into(acc: Dict[Key, Fraction], other: Dict[Key, Fraction]) -> None:
    for key, c in other.items():
        acc[key] = acc.get(key, ZERO) + c


def _power(terms: Dict[Key, Fraction], q: Fraction, where: str) -> Dict[Key, Fraction]:
    if len(terms) == 1:
        ((p, l, e), c), = terms.items()
        coeff = exact_power(c, q)
        base = exact_power(e, q)
        if coeff is None:
            raise UnsupportedExpression("unsupported exponent", f"{where} has an irrational coefficient")
        if base is None:
            raise UnsupportedExpression("unsupported exponent", f"{where} has an irrational exponential base")
        return {(p * q, l * q, base): coeff}
    if q.denominator != 1 or q < 1:
        raise UnsupportedExpression("unsupported exponent", f"{where}: sum raised to {q}")
    out = {(ZERO, ZERO, ONE): ONE}
    for _ in range(int(q)):
        out = _multiply(out, terms)
    return out


def _canon(expr: Expr) -> Dict[Key, Fraction]:
    if isinstance(expr, Constant):
        return {(ZERO, ZERO, ONE): expr.value}
    if isinstance(expr, Variable):
        return {(ONE, ZERO, ONE): ONE}
    if isinstance(expr, Log):
        # log(n^k) = k log n
        k = expr.arg.exponent if isinstance(expr.arg, Power) else ONE
        return {(ZERO, ONE, ONE): k}
    if isinstance(expr, Power):
        if isinstance(expr.exponent, Variable):
            base = _canon(expr.base)
            ((key, c),) = base.items()
            if key != (ZERO, ZERO, ONE) or c <= 1:
                raise UnsupportedExpression("unsupported exponent", "n as exponent requires a constant base > 1")
            return {(ZERO, ZERO, c): ONE}
        return _power(_canon(expr.base), expr.exponent, "power")
    if isinstance(expr, Product):
        out = {(ZERO, ZERO, ONE): ONE}
        for f in expr.factors:
            out = _multiply(out, _canon(f))
        return out
    if isinstance(expr, Sum):
        out: Dict[Key, Fraction] = {}
        for t in expr.terms:
            _add_into(out, _canon(t))
        return out
    raise TypeError(f"not a complexity expression: {expr!r}")


def canonicalize(expr: Expr) -> CanonicalForm:
    return CanonicalForm.from_dict(_canon(expr))


def canonical_equal(a: CanonicalForm, b: CanonicalForm) -> bool:
    return a.terms == b.terms


def _term_order(a: Term, b: Term) -> Ordering:
    ka, kb = a.growth_key, b.growth_key
    if ka < kb:
        return Ordering.LESS
    if ka > kb:
        return Ordering.GREATER
    return Ordering.EQUAL


def growth_order(a: CanonicalForm, b: CanonicalForm) -> Ordering:
    """Asymptotic comparison of two forms as n grows without bound.

    Leading terms decide; when they coincide exactly the next terms are
    compared, so EQUAL is returned only for identical forms.
    """
    ta, tb = list(reversed(a.terms)), list(reversed(b.terms))
    for x, y in zip(ta, tb):
        order = _term_order(x, y)
        if order is not Ordering.EQUAL:
            return order
    if len(ta) == len(tb):
        return Ordering.EQUAL
    return Ordering.GREATER if len(ta) > len(tb) else Ordering.LESS
