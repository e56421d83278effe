"""Validated points on the probability simplex and convergence criteria."""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from .errors import EmptyInput, EntryOutOfRange, LengthMismatch, SumNotOne

SUM_TOLERANCE = 1e-9


class Distribution:
    """An immutable finite probability distribution.

    Entries must lie in ``[0, 1]`` exactly and sum to one within
    ``SUM_TOLERANCE``. Accepted inputs are stored unchanged (no silent
    renormalization), so ``Distribution(x).tolist() == list(x)``.
    """

    __slots__ = ("_p",)

    def __init__(self, values: Iterable[float]):
        p = np.array([float(v) for v in values], dtype=float)
        if p.size == 0:
            raise EmptyInput("a distribution needs at least one entry")
        bad = ~np.isfinite(p) | (p < 0.0) | (p > 1.0)
        if bad.any():
            i = int(np.flatnonzero(bad)[0])
            raise EntryOutOfRange(f"entry {i} = {p[i]!r} is outside [0, 1]")
        total = math.fsum(p)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise SumNotOne(f"entries sum to {total!r}, not 1 (tolerance {SUM_TOLERANCE:g})")
        p.flags.writeable = False
        self._p = p

    @classmethod
    def _trusted(cls, p: np.ndarray) -> "Distribution":
        # Skips validation; callers guarantee p is already on the simplex.
        obj = cls.__new__(cls)
        p = np.array(p, dtype=float)
        p.flags.writeable = False
        obj._p = p
        return obj

    @property
    def probs(self) -> np.ndarray:
        """Read-only view of the probabilities."""
        return self._p

    @property
    def n(self) -> int:
        return self._p.size

    def tolist(self) -> list[float]:
        return self._p.tolist()

    def __len__(self) -> int:
        return self._p.size

    def __iter__(self) -> Iterator[float]:
        return iter(self._p.tolist())

    def __getitem__(self, i: int) -> float:
        return float(self._p[i])

    def __array__(self, dtype=None, copy=None):
        return self._p if dtype is None else self._p.astype(dtype)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Distribution):
            return NotImplemented
        return self._p.shape == other._p.shape and bool(np.array_equal(self._p, other._p))

    def __hash__(self) -> int:
        return hash(self._p.tobytes())

    def __repr__(self) -> str:
        return f"Distribution({self.tolist()!r})"


@dataclass(frozen=True)
class DecimalPlaces:
    """Converged when every entry rounds to ``round(1/n, d)`` at ``d`` places."""

    d: int

    def __post_init__(self):
        if isinstance(self.d, bool) or not isinstance(self.d, int) or self.d < 1:
            raise ValueError(f"decimal places must be a positive integer, got {self.d!r}")

    def __str__(self) -> str:
        return f"dp:{self.d}"


@dataclass(frozen=True)
class LInfTolerance:
    """Converged when the L-infinity distance to uniform is below ``eps``."""

    eps: float

    def __post_init__(self):
        if not (isinstance(self.eps, (int, float)) and math.isfinite(self.eps) and self.eps > 0):
            raise ValueError(f"tolerance must be a positive real, got {self.eps!r}")

    def __str__(self) -> str:
        return f"linf:{self.eps:g}"


ConvergenceCriterion = Union[DecimalPlaces, LInfTolerance]


def parse_criterion(text: str) -> ConvergenceCriterion:
    """Parse ``dp:<d>`` or ``linf:<eps>``."""
    kind, sep, arg = text.strip().partition(":")
    if not sep:
        raise ValueError(f"criterion must look like dp:<d> or linf:<eps>, got {text!r}")
    kind = kind.strip().lower()
    if kind == "dp":
        try:
            d = int(arg)
        except ValueError:
            raise ValueError(f"bad decimal places in {text!r}") from None
        return DecimalPlaces(d)
    if kind == "linf":
        try:
            eps = float(arg)
        except ValueError:
            raise ValueError(f"bad tolerance in {text!r}") from None
        return LInfTolerance(eps)
    raise ValueError(f"unknown criterion kind {kind!r}; expected dp or linf")


def make_distribution(values: Sequence[float]) -> Distribution:
    return Distribution(values)


def uniform(n: int) -> Distribution:
    if n < 1:
        raise EmptyInput("uniform distribution needs n >= 1")
    return Distribution._trusted(np.full(n, 1.0 / n))


def linf_distance(p, q) -> float:
    """``max_i |p_i - q_i|``; accepts distributions or plain vectors."""
    a = np.asarray(p, dtype=float)
    b = np.asarray(q, dtype=float)
    if a.shape != b.shape:
        raise LengthMismatch(f"lengths differ: {a.size} vs {b.size}")
    return float(np.max(np.abs(a - b)))


def round_half_up(x: float, d: int) -> Decimal:
    # Goes through repr so a computed 0.3625 rounds like the printed decimal
    # 0.3625, not like its binary expansion 0.36249999...
    return Decimal(repr(float(x))).quantize(Decimal(1).scaleb(-d), rounding=ROUND_HALF_UP)


def is_uniform_at(p, criterion: ConvergenceCriterion) -> bool:
    """Whether ``p`` is indistinguishable from uniform under ``criterion``.

    Works on unvalidated vectors too, which the table reproductions need.
    """
    a = np.asarray(p, dtype=float)
    n = a.size
    if isinstance(criterion, DecimalPlaces):
        target = round_half_up(1.0 / n, criterion.d)
        return all(round_half_up(x, criterion.d) == target for x in a)
    if isinstance(criterion, LInfTolerance):
        return float(np.max(np.abs(a - 1.0 / n))) < criterion.eps
    raise TypeError(f"not a convergence criterion: {criterion!r}")
