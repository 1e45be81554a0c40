"""Exact evaluation, cross-verification and benchmarking of binomial
Fibonacci/Lucas power-sum identities.

All arithmetic is exact: arbitrary-precision integers, stdlib fractions,
and the quadratic field Q(alpha) of the golden ratio.
"""

from .identities import (
    EvalOutcome,
    IdentityDescriptor,
    IdentityId,
    IdentityParams,
    InapplicableParamsError,
    IntegralityError,
    applicable,
    catalog,
    cubic_rhs,
    descriptor,
    eval_pair,
    even_power_rhs,
    linear_rhs,
    odd_power_rhs,
    quadratic_rhs,
    special_linear_rhs,
)
from .quadfield import ALPHA, BETA, ONE, SQRT5, ZERO, NonInvertibleError, QuadNum, alpha_pow, beta_pow, root5_parts
from .sequences import ExactRational, SequenceKind, binomial, direct_sum, fib, lucas
from .transform import (
    BinomialKernel,
    IrrationalResultError,
    Kernel,
    NonInvertiblePointError,
    binomial_rhs,
    kernel_eval,
    reduce_F,
    reduce_L,
)
from .verify import (
    GridSpec,
    Report,
    VerificationRecord,
    default_grid_specs,
    run_default_grid,
    run_grid,
    run_grids,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "BETA",
    "BinomialKernel",
    "EvalOutcome",
    "ExactRational",
    "GridSpec",
    "IdentityDescriptor",
    "IdentityId",
    "IdentityParams",
    "InapplicableParamsError",
    "IntegralityError",
    "IrrationalResultError",
    "Kernel",
    "NonInvertibleError",
    "NonInvertiblePointError",
    "ONE",
    "QuadNum",
    "Report",
    "SQRT5",
    "SequenceKind",
    "VerificationRecord",
    "ZERO",
    "alpha_pow",
    "applicable",
    "beta_pow",
    "binomial",
    "binomial_rhs",
    "catalog",
    "cubic_rhs",
    "default_grid_specs",
    "descriptor",
    "direct_sum",
    "eval_pair",
    "even_power_rhs",
    "fib",
    "kernel_eval",
    "linear_rhs",
    "lucas",
    "odd_power_rhs",
    "quadratic_rhs",
    "reduce_F",
    "reduce_L",
    "root5_parts",
    "run_default_grid",
    "run_grid",
    "run_grids",
    "special_linear_rhs",
    "summarize",
]
