"""Service layer for supersingular Weil polynomial tables."""

from .binary_field import BinaryField, binary_field, parse_modulus
from .classify import Classification, Factor, classify_polynomial
from .curves import (
    CurveAS,
    GeneratorModel,
    PointCounts,
    charpoly_from_counts,
    check_field_bits,
    count_points,
    count_points_through,
    find_generator_model,
    roundtrip_counts,
)
from .enumeration import (
    EnumerationResult,
    FamilyScanReport,
    candidate_orders,
    enumerate_simple_ss,
    family_scan,
    orbit_signatures,
    simple_classes_up_to_degree,
)
from .errors import (
    ConsistencyError,
    InconsistentCountsError,
    InvalidInputError,
    PolyExprSyntaxError,
    RefusalError,
    TemplateError,
)
from .hondatate import IsogenyClass, LocalSplitting, dimension
from .numtheory import IntPoly, PrimePower, coeffs_from_text, coeffs_to_text
from .papercheck import (
    DiscrepancyReport,
    Verdict,
    completeness_oracle,
    h_cyclotomic_check,
    mod35_no_integer_root,
    verify_paper_tables,
)
from .polyexpr import parse_poly_expr
from .weil import min_poly, weil_number

__all__ = [
    "BinaryField",
    "binary_field",
    "parse_modulus",
    "Classification",
    "Factor",
    "classify_polynomial",
    "CurveAS",
    "GeneratorModel",
    "PointCounts",
    "charpoly_from_counts",
    "check_field_bits",
    "count_points",
    "count_points_through",
    "find_generator_model",
    "roundtrip_counts",
    "EnumerationResult",
    "FamilyScanReport",
    "candidate_orders",
    "enumerate_simple_ss",
    "family_scan",
    "orbit_signatures",
    "simple_classes_up_to_degree",
    "ConsistencyError",
    "InconsistentCountsError",
    "InvalidInputError",
    "PolyExprSyntaxError",
    "RefusalError",
    "TemplateError",
    "IsogenyClass",
    "LocalSplitting",
    "dimension",
    "IntPoly",
    "PrimePower",
    "coeffs_from_text",
    "coeffs_to_text",
    "DiscrepancyReport",
    "Verdict",
    "completeness_oracle",
    "h_cyclotomic_check",
    "mod35_no_integer_root",
    "verify_paper_tables",
    "parse_poly_expr",
    "min_poly",
    "weil_number",
]
