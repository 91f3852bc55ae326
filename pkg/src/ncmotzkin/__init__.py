"""Exact verification of the weighted-Motzkin formula for 2-distant noncrossing partitions."""

from .contfrac import JFraction, SFraction, contract_s_to_j, j_expand, qd_extract, r_ladder_check, s_expand
from .exactnum import (
    ALPHA_BETA,
    D_WEIGHTS,
    FIB2,
    DyckWeights,
    MotzkinWeights,
    Rational,
    WeightSeq,
    catalan_fib_identity,
    fib,
    weight_b,
    weight_d,
    weight_lambda,
)
from .partitions import SetPartition, arcs, count_nc, enumerate_partitions, is_k_distant_noncrossing
from .paths import Flavor, LatticePath, Step, enumerate_paths, parse_path, path_weight, weighted_sum
from .series import TruncatedSeries, gf_nc2, gf_radical

__version__ = "0.1.0"
