"""Betti tables, Hilbert functions and fat-point invariants for powers of complete intersections."""

from .combinatorics import binomial, chain_count, enum_L, enum_M
from .fatpoints import (
    FatCISpec,
    HypothesisError,
    Interval,
    InvariantReport,
    SplitSpec,
    b_value,
    cb_minus_point_hf,
    ci_invariants,
    p2_exact_ri,
    sandwich_bounds,
    split_alpha,
    split_ri_bounds,
    trung_valla_bound,
)
from .hhs import HHSReport, check_hhs, shift_bounds
from .hilbert import HilbertData, hf_ci, hf_from_betti, hf_power, multiplicity
from .oracles import PointConfig, grid_points, monomial_hf, points_hf, remove_point
from .resolution import (
    BettiTable,
    CIType,
    PreconditionError,
    extreme_shifts,
    koszul_betti,
    power_betti,
    rank_formula,
)

__version__ = "0.1.0"
