"""Yager and exponential negation of finite probability distributions."""

from .dynamics import (
    Converged,
    Cycle,
    IterationTrace,
    MaxIterationsReached,
    NoConvergence,
    contraction_factors,
    iterate,
    iterations_to_uniform,
)
from .entropy import (
    EntropyMeasure,
    entropy_delta,
    quadratic_entropy,
    shannon_entropy,
    yager_entropy_delta_closed,
)
from .errors import (
    DegenerateDimension,
    DistributionError,
    EmptyInput,
    EntryOutOfRange,
    LengthMismatch,
    SumNotOne,
    UniformInput,
)
from .negation import (
    NegationOperator,
    apply,
    double_negation,
    exponential_negation,
    yager_negation,
)
from .simplex import (
    DecimalPlaces,
    Distribution,
    LInfTolerance,
    is_uniform_at,
    linf_distance,
    make_distribution,
    parse_criterion,
    uniform,
)

__version__ = "0.1.0"
