"""One test per acceptance criterion; each prints its PASS/FAIL line."""

import pytest

from chevalier.acceptance import CRITERIA, TIME_LIMITS, run_criterion

from conftest import ACCEPTANCE_KEY


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA],
                         ids=[f"criterion{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, request):
    res = run_criterion(number)
    request.config.stash.setdefault(ACCEPTANCE_KEY, {})[number] = res
    print(res.line())
    assert res.passed, res.notes
    limit = TIME_LIMITS.get(number)
    if limit is not None:
        assert res.seconds <= limit, f"took {res.seconds:.1f}s, limit {limit}s"
