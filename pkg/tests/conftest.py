import json
import pathlib

import pytest

from onevar.instances import gen_random
from onevar.solver import SolverOptions, solve

DATA = pathlib.Path(__file__).parent / "data"

# (engine, short-word threshold N); N = 5 forces the short-word machinery
CONFIGS = [("baseline", 100), ("linear", 100), ("baseline", 5), ("linear", 5)]


def suite_lines(count=1000):
    for i in range(count):
        size = 4 + i % 57
        yield i, size, gen_random(i, size, 1 + i % 3, plant=i % 2 == 1)


@pytest.fixture(scope="session")
def derived():
    return json.loads((DATA / "derived.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def frozen_suite():
    return json.loads((DATA / "suite_oracle.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def suite():
    return list(suite_lines())


@pytest.fixture(scope="session")
def suite_runs(suite):
    """Solve results per configuration for the whole suite, invariant checks on."""
    out = {}
    for engine, n in CONFIGS:
        opts = SolverOptions(engine=engine, N=n, check_invariants=True)
        out[(engine, n)] = [solve(line, opts) for _, _, line in suite]
    return out
