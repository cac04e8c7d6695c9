"""Candidate automorphisms of window carriers: checks, searches and lemma audits."""

from .lemmas import (
    LemmaReport,
    MapAudit,
    ObstructionWitness,
    lemma_suite,
    sigma_restriction_obstruction,
)
from .maps import (
    CandidateMap,
    CheckResult,
    GrowthCheck,
    IllDefinedQuotient,
    MeasuredParams,
    Violation,
    check_additivity,
    induced_quotient_map,
    measure_params,
    translation_equivariance_check,
    verify_growth_formula,
)
from .search import (
    ALL_FILTERS,
    ElementSearchReport,
    SearchConfig,
    SearchReport,
    Survivor,
    element_automorphism_search,
    expected_classes,
    filter_admits,
    search_automorphisms,
)

__all__ = [
    "ALL_FILTERS",
    "CandidateMap",
    "CheckResult",
    "ElementSearchReport",
    "GrowthCheck",
    "IllDefinedQuotient",
    "LemmaReport",
    "MapAudit",
    "MeasuredParams",
    "ObstructionWitness",
    "SearchConfig",
    "SearchReport",
    "Survivor",
    "Violation",
    "check_additivity",
    "element_automorphism_search",
    "expected_classes",
    "filter_admits",
    "induced_quotient_map",
    "lemma_suite",
    "measure_params",
    "search_automorphisms",
    "sigma_restriction_obstruction",
    "translation_equivariance_check",
    "verify_growth_formula",
]
