from .eigen import eig_sym_numeric
from .matrix import ExactMatrix, PSDReport, kernel, psd_check_exact, rank
from .polynomial import A, B, NCMonomial, NCPolynomial, UNIT, poly_adjoint, poly_mul, poly_substitute
from .scalar import HALF, INV_SQRT2, ONE, SQRT2, ZERO, QSqrt2Scalar, scalar_arith

__all__ = [
    "A",
    "B",
    "ExactMatrix",
    "HALF",
    "INV_SQRT2",
    "NCMonomial",
    "NCPolynomial",
    "ONE",
    "PSDReport",
    "QSqrt2Scalar",
    "SQRT2",
    "UNIT",
    "ZERO",
    "eig_sym_numeric",
    "kernel",
    "poly_adjoint",
    "poly_mul",
    "poly_substitute",
    "psd_check_exact",
    "rank",
    "scalar_arith",
]
