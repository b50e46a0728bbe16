from aztecdet.bijection import phi, phi_hat, tiling_to_paths
from aztecdet.dataclasses import CheckReport, DomainKind, KKSParams, PathFamilyParams, PathKind, Tiling, WeightTriple
from aztecdet.exact_arith import binomial, gamma_ratio_product, rising_factorial
from aztecdet.formulas import eval_formula, formula_ratio
from aztecdet.kks import kks_det, kks_matrix
from aztecdet.linalg import ExactMatrix, det_bareiss, det_modular, normalized_cofactors
from aztecdet.paths import delannoy, h_delannoy, lgv_matrix
from aztecdet.shapes import Partition, arithmetic_partition, aztec_type1, aztec_type2
from aztecdet.tilings import enumerate_tilings, weighted_tiling_count
from aztecdet.verify import run_suite

__all__ = [
    "CheckReport",
    "DomainKind",
    "ExactMatrix",
    "KKSParams",
    "Partition",
    "PathFamilyParams",
    "PathKind",
    "Tiling",
    "WeightTriple",
    "arithmetic_partition",
    "aztec_type1",
    "aztec_type2",
    "binomial",
    "delannoy",
    "det_bareiss",
    "det_modular",
    "enumerate_tilings",
    "eval_formula",
    "formula_ratio",
    "gamma_ratio_product",
    "h_delannoy",
    "kks_det",
    "kks_matrix",
    "lgv_matrix",
    "normalized_cofactors",
    "phi",
    "phi_hat",
    "rising_factorial",
    "run_suite",
    "tiling_to_paths",
    "weighted_tiling_count",
]


try:
    from ._version import version as __version__
except Exception:
    __version__ = "unknown"
