"""Exact counting of nonnegative integer solutions of parametric linear Diophantine systems."""

from .errors import DiocountError
from .qpoly import ONE, ZERO, IntPoly, QuasiPoly, make_quasipoly
from .gdiv import div_r, div_zx, ggcd, ggcd_bezout, inverse_mod, strongly_coprime
from .dedekind import denumerant_closed_form, fd_sum, polynomial_part, verify_recursion
from .oracle import conjecture_probe, count_solutions, denumerant, fit_quasipolynomial
from .vpart import (
    chamber_complex,
    is_1prime,
    popoviciu_2x3,
    t_param_2x3,
    t_param_unimodular,
    vpf_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "DiocountError", "ONE", "ZERO", "IntPoly", "QuasiPoly", "make_quasipoly",
    "div_r", "div_zx", "ggcd", "ggcd_bezout", "inverse_mod", "strongly_coprime",
    "denumerant_closed_form", "fd_sum", "polynomial_part", "verify_recursion",
    "conjecture_probe", "count_solutions", "denumerant", "fit_quasipolynomial",
    "chamber_complex", "is_1prime", "popoviciu_2x3", "t_param_2x3", "t_param_unimodular", "vpf_polynomial",
]
