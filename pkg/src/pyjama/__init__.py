"""Exact pyjama distances of roots of unity and numeric witnesses."""

__version__ = "0.1.0"

from .distance import (
    ConstructionError,
    DeltaResult,
    XiVector,
    delta_closed_form,
    delta_rank_one,
    epsilon_bound,
    half_ones_in_E,
    in_E,
    sign_vector,
    smallest_odd_prime_divisor,
    xi_vector,
)
from .exact import IntMat, IntPoly, cyclotomic_poly, hnf, poly_mod_cyclic
from .lattice import LatticeBasis, general_lambda, ideal_basis_oracle, lambda_basis, lambda_generators
from .oracle import delta_oracle
from .witness import SearchConfig, TheoremViolation, Witness, margin, search_witness

__all__ = [
    "ConstructionError", "DeltaResult", "XiVector", "delta_closed_form", "delta_rank_one",
    "epsilon_bound", "half_ones_in_E", "in_E", "sign_vector", "smallest_odd_prime_divisor",
    "xi_vector", "IntMat", "IntPoly", "cyclotomic_poly", "hnf", "poly_mod_cyclic",
    "LatticeBasis", "general_lambda", "ideal_basis_oracle", "lambda_basis", "lambda_generators",
    "delta_oracle", "SearchConfig", "TheoremViolation", "Witness", "margin", "search_witness",
]
