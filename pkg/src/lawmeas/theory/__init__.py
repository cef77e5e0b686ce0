"""Finitary equational presentations of algebraic theories and their finite models."""

from .builtins import BUILTIN_NAMES, builtin
from .dsl import parse_theory, print_theory
from .model import Algebra, EquationFailure, ModelReport, check_model, eval_term, first_violation
from .terms import App, Equation, OpSymbol, Term, TheoryPresentation, Var

__all__ = [
    "Algebra",
    "App",
    "BUILTIN_NAMES",
    "Equation",
    "EquationFailure",
    "ModelReport",
    "OpSymbol",
    "Term",
    "TheoryPresentation",
    "Var",
    "builtin",
    "check_model",
    "eval_term",
    "first_violation",
    "parse_theory",
    "print_theory",
]
