"""Pairwise verdicts under the A1-Score hypothesis, plus an asymptotic oracle.

When the symbolic products time*space of the two algorithms differ, the
higher A1-Score wins. When they are the same function the rule flips and
the lower A1-Score wins. The oracle compares products, then sums, by
asymptotic growth and never looks at a concrete n.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .complexity import CanonicalForm, Ordering, Product, Sum, canonical_equal, canonicalize, growth_order
from .errors import DomainError, EvaluationOverflow
from .metric import DEFAULT_CONFIG, A1Config, AlgorithmProfile, a1_score

TIE_RTOL = 1e-12


class Winner(str, enum.Enum):
    X = "X"
    Y = "Y"
    INDISTINGUISHABLE = "indistinguishable"

    def swapped(self) -> Winner:
        return {Winner.X: Winner.Y, Winner.Y: Winner.X}.get(self, self)


class Branch(str, enum.Enum):
    UNEQUAL_PRODUCT = "unequal-product"
    EQUAL_PRODUCT = "equal-product"


class ProductEquality(str, enum.Enum):
    SYMBOLIC = "symbolic"
    UNEQUAL = "unequal"


@dataclass(frozen=True)
class ScanRange:
    lo: float = 2.0
    hi: float = 1000.0
    samples: int = 512

    def __post_init__(self):
        if not self.lo > 1:
            raise DomainError(f"scan lower bound must be > 1, got {self.lo}")
        if not self.hi > self.lo or math.isinf(self.hi):
            raise DomainError(f"scan upper bound must be finite and > {self.lo}, got {self.hi}")
        if self.samples < 2:
            raise DomainError(f"scan needs at least 2 samples, got {self.samples}")

    @classmethod
    def parse(cls, text: str) -> ScanRange:
        """``"lo:hi:samples"``, e.g. ``"2:1000:512"``."""
        parts = text.split(":")
        if len(parts) != 3:
            raise DomainError(f"scan must look like lo:hi:samples, got {text!r}")
        try:
            return cls(float(parts[0]), float(parts[1]), int(parts[2]))
        except ValueError:
            raise DomainError(f"scan must look like lo:hi:samples, got {text!r}") from None

    def points(self) -> List[float]:
        """Geometrically spaced sample points, endpoints included exactly."""
        k = self.samples - 1
        ratio = self.hi / self.lo
        pts = [self.lo * ratio ** (i / k) for i in range(self.samples)]
        pts[0], pts[-1] = self.lo, self.hi
        return pts

    def __str__(self) -> str:
        return f"{self.lo:g}:{self.hi:g}:{self.samples}"


@dataclass(frozen=True)
class Crossover:
    """Sampled interval on which the A1 ordering differs from the one at scan.lo."""
    lo: float
    hi: float

    def __str__(self) -> str:
        return f"{self.lo:.6g}:{self.hi:.6g}"


@dataclass(frozen=True)
class ScanResult:
    crossovers: Tuple[Crossover, ...]
    gaps: Tuple[float, ...]
    samples: int


@dataclass(frozen=True)
class ComparisonVerdict:
    winner: Winner
    branch: Branch
    a1_x: float
    a1_y: float
    product_equality: ProductEquality
    crossovers: Tuple[Crossover, ...]
    oracle_winner: Winner
    oracle_agrees: bool
    n_star: float
    x_name: str = "X"
    y_name: str = "Y"
    scan_gaps: Tuple[float, ...] = field(default=())

    def winner_name(self, winner: Optional[Winner] = None) -> str:
        winner = self.winner if winner is None else winner
        if winner is Winner.X:
            return self.x_name
        if winner is Winner.Y:
            return self.y_name
        return Winner.INDISTINGUISHABLE.value


def is_tie(a: float, b: float, rtol: float = TIE_RTOL) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b))


def decide_winner(branch: Branch, a1_x: float, a1_y: float) -> Winner:
    """Hypothesis rule: higher A1 wins, unless the products are equal, then lower wins."""
    if is_tie(a1_x, a1_y):
        return Winner.INDISTINGUISHABLE
    x_higher = a1_x > a1_y
    if branch is Branch.EQUAL_PRODUCT:
        return Winner.Y if x_higher else Winner.X
    return Winner.X if x_higher else Winner.Y


def canonical_product(profile: AlgorithmProfile) -> CanonicalForm:
    return canonicalize(Product((profile.time, profile.space)))


def canonical_sum(profile: AlgorithmProfile) -> CanonicalForm:
    return canonicalize(Sum((profile.time, profile.space)))


def products_equal(x: AlgorithmProfile, y: AlgorithmProfile) -> bool:
    return canonical_equal(canonical_product(x), canonical_product(y))


def oracle_verdict(x: AlgorithmProfile, y: AlgorithmProfile) -> Winner:
    """Smaller product growth wins; equal products fall back to smaller sum growth."""
    order = growth_order(canonical_product(x), canonical_product(y))
    if order is Ordering.EQUAL:
        order = growth_order(canonical_sum(x), canonical_sum(y))
    if order is Ordering.LESS:
        return Winner.X
    if order is Ordering.GREATER:
        return Winner.Y
    return Winner.INDISTINGUISHABLE


def _sign(a: float, b: float) -> int:
    if is_tie(a, b):
        return 0
    return 1 if a > b else -1


def scan(x: AlgorithmProfile, y: AlgorithmProfile, config: A1Config = DEFAULT_CONFIG,
         scan_range: ScanRange = ScanRange()) -> ScanResult:
    signs: List[Tuple[float, Optional[int]]] = []
    gaps = []
    for n in scan_range.points():
        try:
            signs.append((n, _sign(a1_score(x, n, config), a1_score(y, n, config))))
        except EvaluationOverflow:
            signs.append((n, None))
            gaps.append(n)

    reference = next((s for _, s in signs if s is not None), None)
    intervals: List[Crossover] = []
    start = end = None
    for n, s in signs:
        if s is not None and s != reference:
            if start is None:
                start = n
            end = n
        elif start is not None:
            intervals.append(Crossover(start, end))
            start = None
    if start is not None:
        intervals.append(Crossover(start, end))
    return ScanResult(tuple(intervals), tuple(gaps), scan_range.samples)


def scan_crossovers(x: AlgorithmProfile, y: AlgorithmProfile, config: A1Config = DEFAULT_CONFIG,
                    scan_range: ScanRange = ScanRange()) -> List[Crossover]:
    return list(scan(x, y, config, scan_range).crossovers)


def compare(x: AlgorithmProfile, y: AlgorithmProfile, n_star: float = 3.0,
            config: A1Config = DEFAULT_CONFIG, scan_range: ScanRange = ScanRange()) -> ComparisonVerdict:
    equal = products_equal(x, y)
    branch = Branch.EQUAL_PRODUCT if equal else Branch.UNEQUAL_PRODUCT
    a1_x = a1_score(x, n_star, config)
    a1_y = a1_score(y, n_star, config)
    winner = decide_winner(branch, a1_x, a1_y)
    scanned = scan(x, y, config, scan_range)
    oracle = oracle_verdict(x, y)
    return ComparisonVerdict(
        winner=winner,
        branch=branch,
        a1_x=a1_x,
        a1_y=a1_y,
        product_equality=ProductEquality.SYMBOLIC if equal else ProductEquality.UNEQUAL,
        crossovers=scanned.crossovers,
        oracle_winner=oracle,
        oracle_agrees=winner is oracle,
        n_star=float(n_star),
        x_name=x.name,
        y_name=y.name,
        scan_gaps=scanned.gaps,
    )
