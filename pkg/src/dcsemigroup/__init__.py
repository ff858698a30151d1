"""Weierstrass semigroups of double-covering type over plane curves on the blown-up plane."""

from .errors import SemigroupError
from .families import CaseId, FamilyCase, VerificationReport, family_semigroup, verify_case
from .lattice import DivisorClass
from .semigroup import NumericalSemigroup, d2, double_cover_semigroup, from_generators

__all__ = [
    "CaseId",
    "DivisorClass",
    "FamilyCase",
    "NumericalSemigroup",
    "SemigroupError",
    "VerificationReport",
    "d2",
    "double_cover_semigroup",
    "family_semigroup",
    "from_generators",
    "verify_case",
]
