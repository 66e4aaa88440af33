"""Dependence measures for paired samples.

Five estimators of statistical dependence (Pearson, Spearman, canonical
correlation, distance correlation, and maximal correlation via either
alternating conditional expectations or a weighted-Hermite basis expansion),
a permutation-test engine with a Monte Carlo power harness, and seeded
synthetic-data generators. A CLI frontend lives in pairdep.cli.
"""

from .ace import ACE, AceOptions, AceResult, ace, smooth
from .cca import CcaResult, CovTriple, covariance_triple, first_canonical_correlation
from .correlation import pearson, spearman
from .datagen import Law, ModelConfig, gen_bump, gen_gaussian, gen_independent
from .distance import dcor, dcov2, dcov2_naive, double_center, pairwise_distances
from .exceptions import (
    CsvFormatError,
    DataValidationError,
    DegenerateDataError,
    InternalConsistencyError,
    PairdepError,
    StatisticEvaluationError,
)
from .hermite import BasisSpec, feature_matrix, hermite, standardize
from .permutation import (
    PermTestResult,
    PowerTable,
    Statistic,
    make_statistic,
    permutation_test,
    power_study,
)
from .renyi import KLCorrelation, KLResult, kl_bruteforce, kl_correlation
from .sample import PairedSample

__version__ = "0.1.0"

__all__ = [
    "ACE",
    "AceOptions",
    "AceResult",
    "BasisSpec",
    "CcaResult",
    "CovTriple",
    "CsvFormatError",
    "DataValidationError",
    "DegenerateDataError",
    "InternalConsistencyError",
    "KLCorrelation",
    "KLResult",
    "Law",
    "ModelConfig",
    "PairdepError",
    "PairedSample",
    "PermTestResult",
    "PowerTable",
    "Statistic",
    "StatisticEvaluationError",
    "ace",
    "covariance_triple",
    "dcor",
    "dcov2",
    "dcov2_naive",
    "double_center",
    "feature_matrix",
    "first_canonical_correlation",
    "gen_bump",
    "gen_gaussian",
    "gen_independent",
    "hermite",
    "kl_bruteforce",
    "kl_correlation",
    "make_statistic",
    "pairwise_distances",
    "pearson",
    "permutation_test",
    "power_study",
    "smooth",
    "spearman",
    "standardize",
]
