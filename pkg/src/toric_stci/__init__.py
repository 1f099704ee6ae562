"""Exact toric-ideal computation and set-theoretic cut-out certificates for a
family of affine toric varieties, over Q or small prime fields."""

from .exactmath import (
    QQ,
    IntegerMatrix,
    LatticeBasis,
    PrimeField,
    PrimeFieldElement,
    RationalField,
    dth_roots,
    field_from_label,
    hermite_normal_form,
    is_prime,
    kernel_lattice,
    rank,
)
from .polyring import (
    Block,
    ExponentOverflowError,
    Grevlex,
    Lex,
    MonomialOrder,
    ParseError,
    Polynomial,
    PolynomialRing,
    convert,
    evaluate,
    format_poly,
    order_compare,
    parse_poly,
    substitute_monomials,
)
from .groebner import (
    DEFAULT_STEP_LIMIT,
    GroebnerBasis,
    IdealPresentation,
    StepLimitExceeded,
    buchberger,
    divide,
    eliminate,
    ideal_from_json,
    ideal_to_json,
    is_member,
    normal_form,
    radical_member,
    s_polynomial,
    saturate_ideal,
)
from .toric import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapExceeded,
    FinitePointSet,
    PointConfiguration,
    codimension,
    config_matrix,
    solution_set,
    toric_ideal,
    vanishes_on_parametrization,
)
from .family import (
    CandidatesNotProvided,
    FamilyHypothesisError,
    FamilyParams,
    RankBounds,
    WitnessResult,
    candidate_binomials,
    family_config,
    make_family,
    phi,
    rank_bounds,
    reconstruct_witness,
)
from .verify import CrossCheckReport, Verdict, finite_field_crosscheck, verify_cutout

__all__ = [
    "QQ",
    "IntegerMatrix",
    "LatticeBasis",
    "PrimeField",
    "PrimeFieldElement",
    "RationalField",
    "dth_roots",
    "field_from_label",
    "hermite_normal_form",
    "is_prime",
    "kernel_lattice",
    "rank",
    "Block",
    "ExponentOverflowError",
    "Grevlex",
    "Lex",
    "MonomialOrder",
    "ParseError",
    "Polynomial",
    "PolynomialRing",
    "convert",
    "evaluate",
    "format_poly",
    "order_compare",
    "parse_poly",
    "substitute_monomials",
    "DEFAULT_STEP_LIMIT",
    "GroebnerBasis",
    "IdealPresentation",
    "StepLimitExceeded",
    "buchberger",
    "divide",
    "eliminate",
    "ideal_from_json",
    "ideal_to_json",
    "is_member",
    "normal_form",
    "radical_member",
    "s_polynomial",
    "saturate_ideal",
    "DEFAULT_ENUMERATION_CAP",
    "EnumerationCapExceeded",
    "FinitePointSet",
    "PointConfiguration",
    "codimension",
    "config_matrix",
    "solution_set",
    "toric_ideal",
    "vanishes_on_parametrization",
    "CandidatesNotProvided",
    "FamilyHypothesisError",
    "FamilyParams",
    "RankBounds",
    "WitnessResult",
    "candidate_binomials",
    "family_config",
    "make_family",
    "phi",
    "rank_bounds",
    "reconstruct_witness",
    "CrossCheckReport",
    "Verdict",
    "finite_field_crosscheck",
    "verify_cutout",
]
