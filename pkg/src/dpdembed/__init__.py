"""Weighted projective embeddings of C*-surfaces given by DPD pairs, in exact arithmetic."""

from .divisors import QDivisor, div_of
from .dpd import (
    DPDPair,
    NormalFormData,
    are_equivalent,
    check_pair,
    ring_closure_check,
    section_generator,
    smoothness_check,
    to_normal_form,
)
from .embedding import (
    build_embedding,
    dehomogenize,
    eliminate_z,
    normality_flags,
    positive_weight_embedding,
    toric_replacement,
    universal_cover_form,
)
from .errors import InvalidPairError, NormalizationError, ParseError
from .gizatullin import (
    GizatullinParams,
    classify,
    find_gamma,
    plane_embedding,
    toric_embedding,
    toric_iso_check,
)
from .parsing import parse_divisor, parse_pair

__version__ = "0.1.0"

__all__ = [
    "DPDPair",
    "GizatullinParams",
    "InvalidPairError",
    "NormalFormData",
    "NormalizationError",
    "ParseError",
    "QDivisor",
    "are_equivalent",
    "build_embedding",
    "check_pair",
    "classify",
    "dehomogenize",
    "div_of",
    "eliminate_z",
    "find_gamma",
    "normality_flags",
    "parse_divisor",
    "parse_pair",
    "plane_embedding",
    "positive_weight_embedding",
    "ring_closure_check",
    "section_generator",
    "smoothness_check",
    "to_normal_form",
    "toric_embedding",
    "toric_iso_check",
    "toric_replacement",
    "universal_cover_form",
]
