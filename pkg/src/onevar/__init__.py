"""Solver for word equations in one variable by recompression."""
from .model import ParseError, ParsedEquation, parse_equation
from .solver import SolverOptions, solve

__all__ = ["ParseError", "ParsedEquation", "SolverOptions", "parse_equation", "solve"]
