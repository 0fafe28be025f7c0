"""Exact Lie-theoretic invariants of homogeneous bundles on Hermitian symmetric spaces."""

from .dimensions import DimResult, freudenthal_dim, weyl_dim_g, weyl_dim_levi
from .errors import DomainError, InvalidInput, ResourceLimit, UndefinedJError
from .invariants import (
    LAMBDA1_REFERENCE,
    BundleReport,
    HermitianSpace,
    bundle_report_from_json,
    c1_ratio,
    classification_table_contains,
    h0_bbw,
    hermitian_space,
    hermitian_table,
    is_hermitian,
    j_general,
    j_hom,
    table_equivalent_node,
)
from .parabolic import (
    LeviData,
    Parabolic,
    is_dominant_for_g,
    is_dominant_for_parabolic,
    levi,
    maximal_parabolic,
)
from .rationals import format_rat, parse_rat
from .rootsystem import Root, RootSystem, SimpleType, Weight, build, build_named, fundamental_weight
from .search import SearchOutcome, minimize_j

__all__ = [
    "BundleReport", "DimResult", "DomainError", "HermitianSpace", "InvalidInput",
    "LAMBDA1_REFERENCE", "LeviData", "Parabolic", "ResourceLimit", "Root",
    "RootSystem", "SearchOutcome", "SimpleType", "UndefinedJError", "Weight",
    "build", "build_named", "bundle_report_from_json", "c1_ratio", "classification_table_contains",
    "format_rat", "freudenthal_dim", "fundamental_weight", "h0_bbw",
    "hermitian_space", "hermitian_table", "is_dominant_for_g",
    "is_dominant_for_parabolic", "is_hermitian", "j_general", "j_hom", "levi",
    "maximal_parabolic", "minimize_j", "parse_rat", "table_equivalent_node",
    "weyl_dim_g", "weyl_dim_levi",
]
