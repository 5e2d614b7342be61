"""Explicit representations of the affine families and their operators R."""

from .base import DegenerateParameter, FamilyRep, FamilySpec, Relation
from .core import (annihilating_polynomial, build_family, build_R, central_scalar, derive_minimal_polynomial,
                   export_json, invariant_classes, opposite_structure, sample_parameters, verify_R_identity,
                   verify_relations)

__all__ = [
    "DegenerateParameter", "FamilyRep", "FamilySpec", "Relation", "annihilating_polynomial", "build_family",
    "build_R", "central_scalar", "derive_minimal_polynomial", "export_json", "invariant_classes",
    "opposite_structure", "sample_parameters", "verify_R_identity", "verify_relations",
]
