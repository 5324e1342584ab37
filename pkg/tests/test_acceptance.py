"""Every acceptance criterion at its stated size and tolerance.

Each test prints one PASS/FAIL line; run with ``-s`` or read the summary.
"""
import pytest

from polybalance.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda fn: fn.__name__)
def test_criterion(criterion, capsys):
    result = criterion()
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.line()
