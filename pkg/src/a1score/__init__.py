"""Compare algorithms' combined time and space efficiency with the A1-Score."""
from .comparator import (
    Branch,
    ComparisonVerdict,
    Crossover,
    ProductEquality,
    ScanRange,
    Winner,
    compare,
    oracle_verdict,
    scan_crossovers,
)
from .complexity import CanonicalForm, Ordering, canonical_equal, canonicalize, growth_order, parse, to_text
from .errors import A1Error, DomainError, EvaluationOverflow, ParseError, UnsupportedExpression
from .evaluator import EvalConfig, evaluate
from .metric import A1Components, A1Config, AlgorithmProfile, a1_components, a1_score

__version__ = "0.1.0"

__all__ = [
    "A1Components",
    "A1Config",
    "A1Error",
    "AlgorithmProfile",
    "Branch",
    "CanonicalForm",
    "ComparisonVerdict",
    "Crossover",
    "DomainError",
    "EvalConfig",
    "EvaluationOverflow",
    "Ordering",
    "ParseError",
    "ProductEquality",
    "ScanRange",
    "UnsupportedExpression",
    "Winner",
    "a1_components",
    "a1_score",
    "canonical_equal",
    "canonicalize",
    "compare",
    "evaluate",
    "growth_order",
    "oracle_verdict",
    "parse",
    "scan_crossovers",
    "to_text",
]
