import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bettibound.ideal import minimalize
from bettibound.oracle import borel_ideal_corpus, random_borel_set


@pytest.fixture(scope="session")
def borel_ideals():
    return borel_ideal_corpus(200, seed=20240611)


@pytest.fixture(scope="session")
def fuzzed_borel_sets():
    rng = random.Random(4242)
    out = []
    while len(out) < 500:
        n = rng.randint(2, 5)
        d = rng.randint(1, 5)
        out.append(random_borel_set(n, d, rng))
    return out


@pytest.fixture
def square_ideal():
    """(X1, X2)^2 in three variables."""
    return minimalize([(2, 0, 0), (1, 1, 0), (0, 2, 0)], 3)


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""

    def record(number, title, ok, elapsed, budget=None):
        over = budget is not None and elapsed >= budget
        status = "PASS" if ok and not over else "FAIL"
        limit = f" (budget {budget:g}s)" if budget is not None else ""
        line = f"criterion {number:>2} {status}  {title}  [{elapsed:.2f}s{limit}]"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line
        assert not over, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
