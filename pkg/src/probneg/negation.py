"""Yager's arithmetic negation and the exponential negation.

Both maps send a distribution to its "not A_i" counterpart and share the
uniform distribution as fixed point. Yager's map is affine,
``(1 - p_i) / (n - 1)``; the exponential map is a softmax of the negated
probabilities, ``exp(-p_i) / sum_j exp(-p_j)``.

The ``*_map`` functions apply the bare formulas to any real vector without
validation or renormalization. They exist so printed inputs that are not
valid distributions can still be pushed through the formulas literally.
"""

from __future__ import annotations

import enum

import numpy as np

from .errors import DegenerateDimension
from .simplex import Distribution


class NegationOperator(enum.Enum):
    YAGER = "yager"
    EXPONENTIAL = "exp"

    @classmethod
    def parse(cls, text: str) -> "NegationOperator":
        key = text.strip().lower()
        aliases = {"yager": cls.YAGER, "exp": cls.EXPONENTIAL, "exponential": cls.EXPONENTIAL}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown operator {text!r}; expected 'exp' or 'yager'") from None

    def __str__(self) -> str:
        return self.value


def yager_map(values) -> np.ndarray:
    x = np.asarray(values, dtype=float)
    if x.size < 2:
        raise DegenerateDimension("Yager negation needs n >= 2 (divides by n - 1)")
    return (1.0 - x) / (x.size - 1)


def exponential_map(values) -> np.ndarray:
    # Arguments of exp lie in [-1, 0] for simplex inputs: no overflow, so no
    # max-shift is applied.
    w = np.exp(-np.asarray(values, dtype=float))
    return w / w.sum()


def yager_negation(p: Distribution) -> Distribution:
    q = yager_map(p.probs)
    return Distribution._trusted(q / q.sum())


def exponential_negation(p: Distribution) -> Distribution:
    """Normalized exponential of ``-p``.

    The normalizing constant ``1 / sum_j exp(-p_j)`` is recomputed on every
    call. For ``n == 1`` the result is ``{1.0}``.

    >>> exponential_negation(Distribution([0.0, 1.0])).tolist()  # doctest: +ELLIPSIS
    [0.731058578630..., 0.268941421369...]
    """
    return Distribution._trusted(exponential_map(p.probs))


_DISPATCH = {
    NegationOperator.YAGER: yager_negation,
    NegationOperator.EXPONENTIAL: exponential_negation,
}

_RAW_DISPATCH = {
    NegationOperator.YAGER: yager_map,
    NegationOperator.EXPONENTIAL: exponential_map,
}


def apply(op: NegationOperator, p: Distribution) -> Distribution:
    return _DISPATCH[NegationOperator(op)](p)


def apply_raw(op: NegationOperator, values) -> np.ndarray:
    """Apply the bare formula for ``op`` to an unvalidated vector."""
    return _RAW_DISPATCH[NegationOperator(op)](values)


def double_negation(op: NegationOperator, p: Distribution) -> Distribution:
    return apply(op, apply(op, p))
