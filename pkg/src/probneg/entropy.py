"""Entropy functionals and their change under negation."""

from __future__ import annotations

import enum

import numpy as np

from .errors import DegenerateDimension
from .negation import NegationOperator, apply
from .simplex import Distribution


class EntropyMeasure(enum.Enum):
    SHANNON = "shannon"
    QUADRATIC = "quadratic"


def shannon_entropy(p) -> float:
    """Shannon entropy ``-sum p_i ln p_i`` in nats, with ``0 ln 0 = 0``."""
    x = np.asarray(p, dtype=float)
    nz = x[x > 0]
    return float(-np.sum(nz * np.log(nz))) + 0.0  # no -0.0 for point masses


def quadratic_entropy(p) -> float:
    """``1 - sum p_i^2``, the measure under which Yager's negation is analysed."""
    x = np.asarray(p, dtype=float)
    return float(1.0 - np.dot(x, x))


def yager_entropy_delta_closed(p: Distribution) -> float:
    """Closed form of the quadratic-entropy gain of one Yager negation.

    ``(n - 2) / (n - 1)^2 * (n * sum p_i^2 - 1)``. Vanishes identically for
    ``n == 2``, which is why the binary Yager orbit never gains entropy.
    """
    x = np.asarray(p, dtype=float)
    n = x.size
    if n < 2:
        raise DegenerateDimension("closed-form Yager entropy delta needs n >= 2")
    return float((n - 2) / (n - 1) ** 2 * (n * np.dot(x, x) - 1.0))


_MEASURES = {
    EntropyMeasure.SHANNON: shannon_entropy,
    EntropyMeasure.QUADRATIC: quadratic_entropy,
}


def entropy(measure: EntropyMeasure, p) -> float:
    return _MEASURES[EntropyMeasure(measure)](p)


def entropy_delta(op: NegationOperator, measure: EntropyMeasure, p: Distribution) -> float:
    """``H(negation(p)) - H(p)`` for the chosen operator and measure."""
    h = _MEASURES[EntropyMeasure(measure)]
    return h(apply(op, p)) - h(p)
