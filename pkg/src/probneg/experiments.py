"""Reproduction of the published iteration tables and convergence-speed studies."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, List, NamedTuple, Sequence, Tuple, Union

import numpy as np

from .dynamics import (
    DEFAULT_MAX_ITER,
    NoConvergence,
    iterations_to_uniform,
    raw_iterations_to_uniform,
)
from .negation import NegationOperator, apply_raw
from .simplex import ConvergenceCriterion, DecimalPlaces, Distribution

Count = Union[int, NoConvergence]

MIN_DIM, MAX_DIM = 2, 64

# Inputs exactly as printed. P3 sums to 1.1, so it is kept as a raw vector
# and only pushed through the bare formulas.
PAPER_INPUTS = {
    "P1": (0.0, 1.0),
    "P2": (0.1, 0.4, 0.5),
    "P3": (0.1, 0.13, 0.17, 0.3, 0.4),
}


class Init(enum.Enum):
    DELTA_ON_FIRST = "delta"


@dataclass(frozen=True)
class ExperimentTable:
    id: int
    operator: NegationOperator
    initial: Tuple[float, ...]
    columns: Tuple[int, ...]
    expected: np.ndarray  # rows = elements, columns = iteration index
    tolerance: float
    label: str = ""


@lru_cache(maxsize=None)
def _load() -> dict:
    text = resources.files("probneg").joinpath("data/paper_tables.json").read_text()
    return json.loads(text)


def load_tables() -> dict[int, ExperimentTable]:
    raw = _load()
    out = {}
    for t in raw["tables"]:
        exp = np.array(t["rows"], dtype=float)
        exp.flags.writeable = False
        out[t["id"]] = ExperimentTable(
            id=t["id"],
            operator=NegationOperator.parse(t["operator"]),
            initial=tuple(float(v) for v in t["initial"]),
            columns=tuple(t["columns"]),
            expected=exp,
            tolerance=float(raw["tolerance"]),
            label=t.get("label", ""),
        )
    return out


TABLE_IDS = (1, 2, 3, 4, 5, 6, 7)


class Cell(NamedTuple):
    element: int
    k: int
    computed: float
    expected: float
    deviation: float
    ok: bool


@dataclass
class TableReport:
    id: int
    label: str
    operator: NegationOperator
    tolerance: float
    cells: List[Cell]

    @property
    def max_deviation(self) -> float:
        return max(c.deviation for c in self.cells)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.cells)

    @property
    def failures(self) -> List[Cell]:
        return [c for c in self.cells if not c.ok]


def orbit_raw(op: NegationOperator, values, steps: int) -> List[np.ndarray]:
    """States 0..steps of the bare-formula orbit from ``values``."""
    states = [np.asarray(values, dtype=float)]
    for _ in range(steps):
        states.append(apply_raw(op, states[-1]))
    return states


def reproduce_table(table_id: int) -> TableReport:
    """Recompute one published table and compare it cell by cell.

    The orbit is generated with the bare formulas from the input exactly as
    printed. A cell passes when ``|computed - printed| <= tolerance`` (a hair
    of float slack absorbs ties such as 0.3125 printed as 0.313).
    """
    tables = load_tables()
    if table_id not in tables:
        raise KeyError(f"unknown table {table_id}; valid ids are {TABLE_IDS}")
    t = tables[table_id]
    states = orbit_raw(t.operator, t.initial, max(t.columns))
    cells = []
    for j, k in enumerate(t.columns):
        for i in range(t.expected.shape[0]):
            got = float(states[k][i])
            want = float(t.expected[i, j])
            dev = abs(got - want)
            cells.append(Cell(i + 1, k, got, want, dev, dev <= t.tolerance + 1e-12))
    return TableReport(t.id, t.label, t.operator, t.tolerance, cells)


def reproduce_all() -> List[TableReport]:
    return [reproduce_table(i) for i in TABLE_IDS]


class SpeedComparison(NamedTuple):
    exponential: Count
    yager: Count


def speed_comparison(p0: Distribution, criterion: ConvergenceCriterion,
                     max_iter: int = DEFAULT_MAX_ITER) -> SpeedComparison:
    if len(p0) < 2:
        raise ValueError("speed comparison needs n >= 2")
    return SpeedComparison(
        iterations_to_uniform(NegationOperator.EXPONENTIAL, p0, criterion, max_iter),
        iterations_to_uniform(NegationOperator.YAGER, p0, criterion, max_iter),
    )


def raw_speed_comparison(values: Sequence[float], criterion: ConvergenceCriterion,
                         max_iter: int = DEFAULT_MAX_ITER) -> SpeedComparison:
    """Speed comparison on an unvalidated input such as the printed P3."""
    return SpeedComparison(
        raw_iterations_to_uniform(NegationOperator.EXPONENTIAL, values, criterion, max_iter),
        raw_iterations_to_uniform(NegationOperator.YAGER, values, criterion, max_iter),
    )


def precisions_reproducing(values: Sequence[float], target: Tuple[int, int],
                           digits: Iterable[int] = range(4, 9)) -> List[int]:
    """Decimal precisions ``d`` at which the raw speed comparison equals ``target``."""
    hits = []
    for d in digits:
        got = raw_speed_comparison(values, DecimalPlaces(d))
        if tuple(got) == tuple(target):
            hits.append(d)
    return hits


def delta_on_first(n: int) -> Distribution:
    p = np.zeros(n)
    p[0] = 1.0
    return Distribution._trusted(p)


def _check_dims(dims: Sequence[int]) -> List[int]:
    dims = sorted(int(n) for n in dims)
    if not dims:
        raise ValueError("empty dimension range")
    if dims[0] < MIN_DIM or dims[-1] > MAX_DIM:
        raise ValueError(f"dimensions must lie in [{MIN_DIM}, {MAX_DIM}], got {dims[0]}..{dims[-1]}")
    return dims


@dataclass
class SweepReport:
    operator: NegationOperator
    criterion: ConvergenceCriterion
    rows: List[Tuple[int, Count]]


def convergence_sweep(op: NegationOperator, dims: Sequence[int], criterion: ConvergenceCriterion,
                      init: Init = Init.DELTA_ON_FIRST,
                      max_iter: int = DEFAULT_MAX_ITER) -> SweepReport:
    """Iterations to uniform from a point mass, for each dimension in ``dims``.

    Non-convergent dimensions (Yager at n = 2) are reported as
    :class:`NoConvergence` rows rather than raised.
    """
    op = NegationOperator(op)
    if Init(init) is not Init.DELTA_ON_FIRST:
        raise ValueError(f"unsupported init {init!r}")
    rows = [(n, iterations_to_uniform(op, delta_on_first(n), criterion, max_iter))
            for n in _check_dims(dims)]
    return SweepReport(op, criterion, rows)


def random_distributions(rng: np.random.Generator, n: int, size: int) -> np.ndarray:
    """``size`` points drawn uniformly from the n-simplex (normalized exponentials)."""
    x = rng.exponential(size=(size, n))
    return x / x.sum(axis=1, keepdims=True)


def rng_for(seed: int, n: int) -> np.random.Generator:
    # One stream per dimension so results do not depend on evaluation order.
    return np.random.default_rng([int(seed), int(n)])


class MedianRow(NamedTuple):
    n: int
    median: float
    trials: int
    failures: int


def random_sweep(op: NegationOperator, dims: Sequence[int], criterion: ConvergenceCriterion,
                 trials: int = 1000, seed: int = 0,
                 max_iter: int = DEFAULT_MAX_ITER) -> List[MedianRow]:
    """Median iterations to uniform over random starts, per dimension.

    Starts that do not converge are counted in ``failures`` and left out of
    the median.
    """
    op = NegationOperator(op)
    rows = []
    for n in _check_dims(dims):
        counts, failures = [], 0
        for x in random_distributions(rng_for(seed, n), n, trials):
            c = iterations_to_uniform(op, Distribution._trusted(x), criterion, max_iter)
            if isinstance(c, NoConvergence):
                failures += 1
            else:
                counts.append(c)
        med = float(np.median(counts)) if counts else float("nan")
        rows.append(MedianRow(n, med, trials, failures))
    return rows


def median_speed(dims: Sequence[int], criterion: ConvergenceCriterion, trials: int = 1000,
                 seed: int = 0) -> dict[int, Tuple[float, float]]:
    """Per dimension, ``(median exponential count, median Yager count)`` on shared starts."""
    exp = random_sweep(NegationOperator.EXPONENTIAL, dims, criterion, trials, seed)
    yag = random_sweep(NegationOperator.YAGER, dims, criterion, trials, seed)
    return {a.n: (a.median, b.median) for a, b in zip(exp, yag)}

