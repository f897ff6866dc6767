"""Command-line surface and the expression language."""

from .main import CommandResult, main, run_command
from .parser import BinOp, Neg, Num, ParseError, Pow, Var, parse_expression, to_source

__all__ = [
    "BinOp", "CommandResult", "Neg", "Num", "ParseError", "Pow", "Var",
    "main", "parse_expression", "run_command", "to_source",
]
