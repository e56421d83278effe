"""Iterating a negation operator: traces, convergence and cycle detection."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Union

import numpy as np

from .entropy import shannon_entropy
from .errors import DegenerateDimension, UniformInput
from .negation import NegationOperator, apply, apply_raw
from .simplex import ConvergenceCriterion, Distribution, is_uniform_at, linf_distance, uniform

DEFAULT_MAX_ITER = 200
CYCLE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Converged:
    at: int
    kind = "converged"


@dataclass(frozen=True)
class Cycle:
    period: int
    detected_at: int
    kind = "cycle"

    @property
    def at(self) -> int:
        return self.detected_at


@dataclass(frozen=True)
class MaxIterationsReached:
    at: int
    kind = "max_iter"


Status = Union[Converged, Cycle, MaxIterationsReached]


@dataclass(frozen=True)
class NoConvergence:
    """Returned in place of an iteration count when the orbit never converges."""

    reason: Union[Cycle, MaxIterationsReached]

    def __str__(self) -> str:
        if isinstance(self.reason, Cycle):
            return f"cycle({self.reason.period})"
        return f"max_iter({self.reason.at})"


@dataclass
class IterationTrace:
    operator: NegationOperator
    criterion: ConvergenceCriterion
    states: List[Distribution] = field(default_factory=list)
    entropies: List[float] = field(default_factory=list)
    status: Optional[Status] = None

    def __len__(self) -> int:
        return len(self.states)

    @property
    def final(self) -> Distribution:
        return self.states[-1]


def _run(step: Callable, x0, criterion: ConvergenceCriterion, max_iter: int):
    """Shared loop; ``step`` maps a state to the next one."""
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    states = [x0]
    if is_uniform_at(x0, criterion):
        return states, Converged(0)
    history = [np.asarray(x0, dtype=float)]
    for k in range(1, max_iter + 1):
        x = step(states[-1])
        states.append(x)
        if is_uniform_at(x, criterion):
            return states, Converged(k)
        a = np.asarray(x, dtype=float)
        for j, prev in enumerate(history):
            if np.max(np.abs(a - prev)) <= CYCLE_TOLERANCE:
                return states, Cycle(period=k - j, detected_at=k)
        history.append(a)
    return states, MaxIterationsReached(max_iter)


def iterate(
    op: NegationOperator,
    p0: Distribution,
    criterion: ConvergenceCriterion,
    max_iter: int = DEFAULT_MAX_ITER,
) -> IterationTrace:
    """Apply ``op`` repeatedly from ``p0`` until a stopping rule fires.

    Convergence is tested on the initial state and after every application;
    a new state that repeats any earlier one (per entry within
    ``CYCLE_TOLERANCE``) ends the run as a cycle. The trace holds every
    visited state with its Shannon entropy.
    """
    op = NegationOperator(op)
    states, status = _run(lambda p: apply(op, p), p0, criterion, max_iter)
    return IterationTrace(
        operator=op,
        criterion=criterion,
        states=states,
        entropies=[shannon_entropy(s) for s in states],
        status=status,
    )


def run_raw(op: NegationOperator, values, criterion: ConvergenceCriterion,
            max_iter: int = DEFAULT_MAX_ITER):
    """Like :func:`iterate` but on an unvalidated vector with the bare formulas.

    Returns ``(states, status)`` where states are float arrays. This is how
    printed inputs that do not sum to one are reproduced.
    """
    op = NegationOperator(op)
    x0 = np.asarray(values, dtype=float)
    return _run(lambda x: apply_raw(op, x), x0, criterion, max_iter)


def _count(status: Status) -> Union[int, NoConvergence]:
    if isinstance(status, Converged):
        return status.at
    return NoConvergence(status)


def iterations_to_uniform(
    op: NegationOperator,
    p0: Distribution,
    criterion: ConvergenceCriterion,
    max_iter: int = DEFAULT_MAX_ITER,
) -> Union[int, NoConvergence]:
    return _count(iterate(op, p0, criterion, max_iter).status)


def raw_iterations_to_uniform(op, values, criterion, max_iter=DEFAULT_MAX_ITER):
    return _count(run_raw(op, values, criterion, max_iter)[1])


def contraction_factors(op: NegationOperator, p: Distribution, steps: int = 1) -> list[float]:
    """Ratios of successive L-infinity deviations from uniform.

    One ratio per application, ``steps`` applications starting at ``p``.
    Stops early if an iterate lands exactly on uniform.
    """
    n = len(p)
    if n < 2:
        raise DegenerateDimension("contraction factor needs n >= 2")
    u = uniform(n)
    dev = linf_distance(p, u)
    if dev == 0.0:
        raise UniformInput("contraction factor is undefined at the uniform distribution")
    out = []
    for _ in range(steps):
        p = apply(op, p)
        nxt = linf_distance(p, u)
        out.append(nxt / dev)
        if nxt == 0.0:
            break
        dev = nxt
    return out
