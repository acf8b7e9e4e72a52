"""The ten acceptance criteria on the full grid, each at its exact tolerance
and time limit.  One PASS/FAIL line per criterion is printed in the summary."""
import time

import pytest

from kummerlab.config import FULL, SMALL
from kummerlab.selftest import CRITERIA, run_all, run_criterion

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA], ids=lambda n: f"criterion{n}")
def test_criterion(number):
    result = run_criterion(number, FULL)
    ACCEPTANCE_LINES.append((number, result.line()))
    print(result.line())
    for d in result.details:
        print("    " + d)
    assert result.passed, "\n".join(result.details)


def test_small_grid_runs_quickly():
    start = time.perf_counter()
    results = run_all(SMALL)
    assert time.perf_counter() - start < 60
    assert [r.number for r in results] == list(range(1, 11))
