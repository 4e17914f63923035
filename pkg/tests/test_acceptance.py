"""The ten acceptance criteria, one test each, at full size.

Each test prints a PASS/FAIL line with its wall-clock time; the budget is
asserted alongside the check itself.
"""

import pytest

from nilcoxeter import verify


@pytest.fixture
def report(capsys):
    def emit(result):
        with capsys.disabled():
            print(f"\n{result.line()}  [{result.seconds:.2f}s of {result.budget:.0f}s]")
        return result
    return emit


# seconds, criterion by criterion
BUDGETS = {1: 1, 2: 1, 3: 120, 4: 120, 5: 120, 6: 180, 7: 300, 8: 60, 9: 120, 10: 120}


@pytest.mark.parametrize("number", range(1, 11))
def test_criterion(number, report):
    check = verify.CHECKS[number - 1]
    r = report(check())
    assert r.number == number and r.budget == BUDGETS[number]
    assert r.ok, r.details
    assert r.within_budget, f"{r.seconds:.1f}s over the {r.budget}s budget"
