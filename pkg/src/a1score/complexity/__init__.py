from .canonical import CanonicalForm, Ordering, Term, canonical_equal, canonicalize, growth_order
from .nodes import N, Constant, Expr, Log, Power, Product, Sum, Variable
from .parser import parse, to_text

__all__ = [
    "CanonicalForm",
    "Constant",
    "Expr",
    "Log",
    "N",
    "Ordering",
    "Power",
    "Product",
    "Sum",
    "Term",
    "Variable",
    "canonical_equal",
    "canonicalize",
    "growth_order",
    "parse",
    "to_text",
]
