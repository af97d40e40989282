"""A1-Score of a single algorithm: xi * (time + space) / (time * space)."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .complexity import Expr, parse, to_text
from .errors import DomainError, EvaluationOverflow
from .evaluator import EvalConfig, evaluate


@dataclass(frozen=True)
class AlgorithmProfile:
    name: str
    time: Expr
    space: Expr

    @classmethod
    def from_text(cls, name: str, time: str, space: str) -> AlgorithmProfile:
        return cls(name, parse(time), parse(space))

    def swapped(self) -> AlgorithmProfile:
        return AlgorithmProfile(self.name, self.space, self.time)

    def __str__(self) -> str:
        return f"{self.name}(time={to_text(self.time)}, space={to_text(self.space)})"


@dataclass(frozen=True)
class A1Config:
    xi: float = 1.0
    eval: EvalConfig = field(default_factory=EvalConfig)

    def __post_init__(self):
        if not self.xi > 0 or math.isinf(self.xi):
            raise DomainError(f"xi must be a finite real > 0, got {self.xi}")

    @classmethod
    def make(cls, xi: float = 1.0, log_base: float = 2.0) -> A1Config:
        return cls(xi, EvalConfig(log_base))


DEFAULT_CONFIG = A1Config()


class A1Components(NamedTuple):
    sum: float
    product: float
    score: float


def a1_components(profile: AlgorithmProfile, n: float, config: A1Config = DEFAULT_CONFIG) -> A1Components:
    time = evaluate(profile.time, n, config.eval)
    space = evaluate(profile.space, n, config.eval)
    total = time + space
    product = time * space
    if math.isinf(total) or math.isinf(product) or product == 0.0:
        raise EvaluationOverflow(f"time/space combination for {profile.name} overflows at n={n}")
    return A1Components(total, product, config.xi * total / product)


def a1_score(profile: AlgorithmProfile, n: float, config: A1Config = DEFAULT_CONFIG) -> float:
    return a1_components(profile, n, config).score
