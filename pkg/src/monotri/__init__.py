"""Exact enumeration of monotone triangles with prescribed bottom row."""
from .counting import (
    AlphaMethod,
    alpha_eval,
    alpha_poly,
    asm_count,
    beta_count,
    gamma_poly,
    refined_asm,
    ssyt_product_poly,
    vsasm_count,
)
from .exactpoly import Poly, parse_poly
from .opcalc import DeltaFactoredOp, ShiftOperator
from .sumcalc import SumBound, interval_sum, nested_sum

__version__ = "0.1.0"

__all__ = [
    "AlphaMethod", "alpha_eval", "alpha_poly", "asm_count", "beta_count", "gamma_poly",
    "refined_asm", "ssyt_product_poly", "vsasm_count", "Poly", "parse_poly",
    "DeltaFactoredOp", "ShiftOperator", "SumBound", "interval_sum", "nested_sum",
]
