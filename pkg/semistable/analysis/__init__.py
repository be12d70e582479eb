"""Closed-form oracles and the checks built on them."""
from .error import HypothesisError, ReportFailure
from .exponents import (
    Exponents, regularity_exponents, dimension_threshold, lambda_sharp, critical_power,
    admissible_alpha,
)
from .extremal import ExtremalPair, closed_form_extremal
from .report import ExponentTable, ExtremalReport, nine_digits
from .verify import LadderLevel, extremal_ladder, verify_extremal, check_ladder
from .hardy import HardyMargins, hardy_margin, hardy_verify, sharpness_probe, random_profile, check_hardy_model
from .conditions import SemistabilityConditions, power_semistability_conditions
from .membership import MembershipRow, lp_membership_scan, geometric_p_grid, power_boundaries, log_slope
from .scans import EstimateRatio, estimate_ratios, extremal_boundedness

__all__ = [
    'HypothesisError',
    'ReportFailure',
    'Exponents',
    'regularity_exponents',
    'dimension_threshold',
    'lambda_sharp',
    'critical_power',
    'admissible_alpha',
    'ExtremalPair',
    'closed_form_extremal',
    'ExponentTable',
    'ExtremalReport',
    'nine_digits',
    'LadderLevel',
    'extremal_ladder',
    'verify_extremal',
    'check_ladder',
    'HardyMargins',
    'hardy_margin',
    'hardy_verify',
    'sharpness_probe',
    'random_profile',
    'check_hardy_model',
    'SemistabilityConditions',
    'power_semistability_conditions',
    'MembershipRow',
    'lp_membership_scan',
    'geometric_p_grid',
    'power_boundaries',
    'log_slope',
    'EstimateRatio',
    'estimate_ratios',
    'extremal_boundedness',
]
