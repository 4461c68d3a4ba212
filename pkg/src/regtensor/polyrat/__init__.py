"""Polynomial and rational-function arithmetic over exact fields."""

from .multipoly import ArityMismatch, InexactDivision, MultiPoly, format_poly, multi_gcd, multi_lcm
from .parse import ExprSyntaxError, parse_expr, parse_poly, parse_ratfunc, to_source
from .ratfunc import RatFunc, RatFuncField, pth_power_test
from .unipoly import (
    BothZero,
    ConstantInput,
    Degree,
    UniPoly,
    binomial_data,
    is_separable,
    separability_split,
    uni_gcd,
    uni_xgcd,
)

__all__ = [
    "ArityMismatch",
    "BothZero",
    "ConstantInput",
    "Degree",
    "ExprSyntaxError",
    "InexactDivision",
    "MultiPoly",
    "RatFunc",
    "RatFuncField",
    "UniPoly",
    "binomial_data",
    "format_poly",
    "is_separable",
    "multi_gcd",
    "multi_lcm",
    "parse_expr",
    "parse_poly",
    "parse_ratfunc",
    "pth_power_test",
    "separability_split",
    "to_source",
    "uni_gcd",
    "uni_xgcd",
]
