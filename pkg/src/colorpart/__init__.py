"""colorpart: exact and asymptotic evaluation of colored partition counts.

A colored partition of n assigns one of several colors to each part, where
color class i may only be used on parts divisible by a modulus s_i.  This
package computes the exact counts by three independent methods, evaluates
the closed-form leading asymptotic (prefactor, power of n, exponential
coefficient) in extended precision, measures the empirical error-decay
exponent, and numerically validates the supporting machinery: the
near-saddle region decomposition, sum-to-integral bounds, and Gaussian
integrals of coupled positive-definite quadratic forms.
"""

from .asymptotic import (
    ComparisonRow,
    ExponentFit,
    comparison_table,
    fit_error_exponent,
    geometric_grid,
    ln_main_term,
    ln_of_bigint,
)
from .exact import (
    ExactSeries,
    Method,
    PartitionTable,
    g_series_divisor,
    g_series_euler,
    g_via_tuple_convolution,
    partition_table,
)
from .precision import default_bits, set_default_bits, working_precision
from .quadform import (
    QuadFormSpec,
    det_closed_form,
    gaussian_integral_monte_carlo,
    gaussian_integral_quadrature,
    gaussian_quadform_integral,
    sum_vs_integral,
    truncation_error_bound,
)
from .regions import (
    RegionSplitReport,
    region_split,
    saddle_tuple,
    tail_bound_certificate,
)
from .specs import (
    AsymptoticConstants,
    ColoredSpec,
    EtaWindow,
    constants,
    eta_window,
    parse_json,
    parse_text,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticConstants",
    "ColoredSpec",
    "ComparisonRow",
    "EtaWindow",
    "ExactSeries",
    "ExponentFit",
    "Method",
    "PartitionTable",
    "QuadFormSpec",
    "RegionSplitReport",
    "comparison_table",
    "constants",
    "default_bits",
    "det_closed_form",
    "eta_window",
    "fit_error_exponent",
    "g_series_divisor",
    "g_series_euler",
    "g_via_tuple_convolution",
    "gaussian_integral_monte_carlo",
    "gaussian_integral_quadrature",
    "gaussian_quadform_integral",
    "geometric_grid",
    "ln_main_term",
    "ln_of_bigint",
    "parse_json",
    "parse_text",
    "partition_table",
    "region_split",
    "saddle_tuple",
    "set_default_bits",
    "sum_vs_integral",
    "tail_bound_certificate",
    "truncation_error_bound",
    "validate",
    "working_precision",
]
