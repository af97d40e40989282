from __future__ import annotations

import math
from dataclasses import dataclass

from .complexity import CanonicalForm, Constant, Expr, Log, Power, Product, Sum, Variable
from .errors import DomainError, EvaluationOverflow


@dataclass(frozen=True)
class EvalConfig:
    log_base: float = 2.0

    def __post_init__(self):
        if not self.log_base > 1 or math.isinf(self.log_base):
            raise DomainError(f"log base must be a finite real > 1, got {self.log_base}")

    def log(self, n: float) -> float:
        if self.log_base == 2:
            return math.log2(n)
        if self.log_base == 10:
            return math.log10(n)
        return math.log(n) / math.log(self.log_base)


DEFAULT_EVAL = EvalConfig()


def _check_n(n: float) -> float:
    n = float(n)
    if math.isnan(n) or not n > 1:
        raise DomainError(f"n must be > 1, got {n}")
    if math.isinf(n):
        raise EvaluationOverflow("n is infinite")
    return n


def _finite(value: float, what: str = "value") -> float:
    if math.isinf(value) or value == 0.0:
        raise EvaluationOverflow(f"{what} is outside double-precision range")
    return value


def _pow(base: float, exp: float) -> float:
    try:
        return base ** exp
    except OverflowError:
        raise EvaluationOverflow(f"{base}^{exp} overflows") from None


def _eval(expr: Expr, n: float, config: EvalConfig) -> float:
    if isinstance(expr, Constant):
        return float(expr.value)
    if isinstance(expr, Variable):
        return n
    if isinstance(expr, Log):
        arg = expr.arg
        k = float(arg.exponent) if isinstance(arg, Power) else 1.0
        return k * config.log(n)
    if isinstance(expr, Power):
        base = _eval(expr.base, n, config)
        if isinstance(expr.exponent, Variable):
            return _pow(base, n)
        return _pow(base, float(expr.exponent))
    if isinstance(expr, Product):
        out = 1.0
        for f in expr.factors:
            out *= _eval(f, n, config)
        return out
    if isinstance(expr, Sum):
        return math.fsum(_eval(t, n, config) for t in expr.terms)
    raise TypeError(f"not a complexity expression: {expr!r}")


def evaluate(expr: Expr, n: float, config: EvalConfig = DEFAULT_EVAL) -> float:
    """Value of ``expr`` at ``n`` (> 1), logs taken in ``config.log_base``.

    Raises DomainError for n <= 1 and EvaluationOverflow when the value leaves
    double range.
    """
    n = _check_n(n)
    return _finite(_eval(expr, n, config))


def evaluate_canonical(form: CanonicalForm, n: float, config: EvalConfig = DEFAULT_EVAL) -> float:
    n = _check_n(n)
    log_n = config.log(n)
    total = []
    for t in form.terms:
        value = float(t.coeff)
        if t.poly_exp:
            value *= _pow(n, float(t.poly_exp))
        if t.log_exp:
            value *= _pow(log_n, float(t.log_exp))
        if t.exp_base != 1:
            value *= _pow(float(t.exp_base), n)
        total.append(value)
    return _finite(math.fsum(total))
