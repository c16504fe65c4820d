"""Exact and analytic evaluation of cyclotomic polynomials at roots of unity."""

from ._core import BACKEND
from .analytic import (
    logderiv_char_formula,
    logderiv_closed_346,
    logderiv_coprime_reduce,
    phi_value_char_formula,
    vaughan_construct,
)
from .characters import DirichletCharacter, all_characters, quadratic_character
from .closedform import closed_form_value, sign_magnitude
from .cyclofield import CycloElement, RootOfUnity, eval_phi_exact, logderiv_exact
from .errors import CyclotomyError
from .kronecker import KroneckerFactorization, NotKronecker, factor_kronecker
from .numtheory import FactoredInt, factor
from .polyring import IntPolynomial, cyclotomic
from .resultant import cyclotomic_resultant, resultant_bruteforce, resultant_closed

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CycloElement",
    "CyclotomyError",
    "DirichletCharacter",
    "FactoredInt",
    "IntPolynomial",
    "KroneckerFactorization",
    "NotKronecker",
    "RootOfUnity",
    "all_characters",
    "closed_form_value",
    "cyclotomic",
    "cyclotomic_resultant",
    "eval_phi_exact",
    "factor",
    "factor_kronecker",
    "logderiv_char_formula",
    "logderiv_closed_346",
    "logderiv_coprime_reduce",
    "logderiv_exact",
    "phi_value_char_formula",
    "quadratic_character",
    "resultant_bruteforce",
    "resultant_closed",
    "sign_magnitude",
    "vaughan_construct",
]
