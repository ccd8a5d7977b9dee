"""Acceptance criteria 1-11; a PASS/FAIL line per criterion is printed at the end of the run."""

import json

import pytest

from mono import acceptance


@pytest.mark.parametrize("number", range(1, 12))
def test_criterion(number, request):
    result = acceptance.CRITERIA[number - 1](0)
    line = result.line()
    request.config.acceptance_lines.append(line)
    print(line)
    assert result.passed, json.dumps(result.details, default=str, sort_keys=True)[:2000]
