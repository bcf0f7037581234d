import math
import os

import pytest
from hypothesis import HealthCheck, settings

from shadowvol.fixtures import get_example
from shadowvol.pipeline import parse_job, prepare
from shadowvol.quandle import ParabolicVector

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

T_MINUS = complex(-0.5, -math.sqrt(3) / 2)
T_PLUS = complex(-0.5, math.sqrt(3) / 2)
FIG8_PD = [[4, 7, 5, 8], [8, 3, 1, 4], [2, 6, 3, 5], [6, 2, 7, 1]]
TREFOIL_PD = [[1, 5, 2, 4], [5, 3, 6, 2], [3, 1, 4, 8], [7, 6, 8, 7]]


def vec(a, b):
    return ParabolicVector(a, b)


def load(name, randomize=None):
    """Diagram and coloring of a built-in example; ``randomize`` is a search seed."""
    obj = get_example(name)
    if randomize is not None:
        obj.pop("region_colors")
        obj.pop("p")
        obj["seed"] = randomize
    d, s, _ = prepare(parse_job(obj))
    return d, s


@pytest.fixture
def fig8():
    return load("fig8_minus")


@pytest.fixture
def trefoil():
    return load("trefoil")


def braid_pd(word, strands):
    """PD code of a braid closure; generator +i / -i acts on strands i-1, i (1-based)."""
    counter = [0]

    def fresh():
        counter[0] += 1
        return counter[0]

    start = [fresh() for _ in range(strands)]
    cur = list(start)
    rows = []
    for g in word:
        i = abs(g) - 1
        a, b = cur[i], cur[i + 1]
        c, dd = fresh(), fresh()
        if g > 0:
            rows.append([b, dd, c, a])
        else:
            rows.append([a, b, dd, c])
        cur[i], cur[i + 1] = c, dd
    rename = {cur[k]: start[k] for k in range(strands)}
    return [[rename.get(x, x) for x in row] for row in rows]


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one pass/fail line for an acceptance criterion, then assert it."""

    def record(number, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
