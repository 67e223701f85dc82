"""The twelve acceptance criteria, one test each, with a PASS/FAIL line per criterion."""

import json

import pytest

from adcalc.acceptance import CRITERIA, run_criterion

NUMBERS = range(1, len(CRITERIA) + 1)


@pytest.mark.parametrize("number", NUMBERS, ids=[f"{n:02d}-{CRITERIA[n - 1].__name__[10:]}" for n in NUMBERS])
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        print(f"\n{result.line()}  ({result.seconds:.1f}s)")
    assert result.ok, json.dumps(result.details, ensure_ascii=False, default=str)[:2000]
