"""Desk-scale calculator for elliptic endoscopic data of SO(2N+1).

Exact character theory of Sp(2N, C) on compact classes, enumeration of
even-partition endoscopic data, dimension data with a Monte-Carlo Haar
oracle, synthetic Satake spectra, spherical test-function calculus with
stable transfer, and partial L-function / log-weighted partial-sum
estimators.
"""

from endoscopy_kit.symplectic import (
    RepLabel,
    SemisimpleClass,
    char_fund,
    char_lambda,
    char_value,
    trace_power,
)
from endoscopy_kit.endoscopy import EndoDatum, embed_class, enumerate_elliptic, iota
from endoscopy_kit.dimension import (
    AmbiguityReport,
    DimDataVector,
    dim_data,
    dim_data_vector,
    mc_dim_data_oracle,
    mult_trivial_lambda,
    recover_partition,
)

__all__ = [
    "AmbiguityReport",
    "DimDataVector",
    "EndoDatum",
    "RepLabel",
    "SemisimpleClass",
    "char_fund",
    "char_lambda",
    "char_value",
    "dim_data",
    "dim_data_vector",
    "embed_class",
    "enumerate_elliptic",
    "iota",
    "mc_dim_data_oracle",
    "mult_trivial_lambda",
    "recover_partition",
    "trace_power",
]
