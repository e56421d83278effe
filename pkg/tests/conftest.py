import mpmath
import numpy as np
import pytest

SUITE_SEED = 20240917
SUITE_SIZE = 10_000


def random_suite(size=SUITE_SIZE, seed=SUITE_SEED, dims=(2, 20)):
    """Seeded random distributions, uniform on the simplex, n drawn from ``dims``."""
    rng = np.random.default_rng(seed)
    out = []
    for n in rng.integers(dims[0], dims[1] + 1, size=size):
        x = rng.exponential(size=n)
        out.append(x / x.sum())
    return out


@pytest.fixture(scope="session")
def suite():
    return random_suite()


@pytest.fixture(scope="session")
def small_suite():
    return random_suite(size=500, seed=7)


# Independent high-precision oracles. They share no code with the package.

def mp_exponential(values, dps=40):
    with mpmath.workdps(dps):
        w = [mpmath.exp(-mpmath.mpf(str(v))) for v in values]
        s = mpmath.fsum(w)
        return [float(x / s) for x in w]


def mp_yager(values, dps=40):
    with mpmath.workdps(dps):
        n = len(values)
        return [float((1 - mpmath.mpf(str(v))) / (n - 1)) for v in values]


def mp_shannon(values, dps=40):
    with mpmath.workdps(dps):
        ps = [mpmath.mpf(str(v)) for v in values]
        return float(-mpmath.fsum(p * mpmath.log(p) for p in ps if p > 0))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
