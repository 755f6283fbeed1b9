"""Reduced Groebner bases over algebraic number fields Q(a)."""

from ._anfgb import (
    Error,
    ParseError,
    Problem,
    Result,
    Stats,
    buchberger_direct,
    is_admissible_type_A,
    nfmodstd,
    parse_problem,
    to_json,
    to_text,
)


def solve(text, **kwargs):
    """Parse a problem and return its reduced basis as a list of strings."""
    return nfmodstd(parse_problem(text), **kwargs).basis


__all__ = [
    "Error",
    "ParseError",
    "Problem",
    "Result",
    "Stats",
    "buchberger_direct",
    "is_admissible_type_A",
    "nfmodstd",
    "parse_problem",
    "solve",
    "to_json",
    "to_text",
]
