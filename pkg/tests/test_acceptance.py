"""The acceptance gate: run the full self-verification battery once and
assert every criterion, printing its pass/fail line."""

import pytest

from qlattice.acceptance import ALL_KEYS, run_acceptance


@pytest.fixture(scope="module")
def battery():
    results = run_acceptance()
    return {r.key: r for r in results}


@pytest.mark.parametrize("key", ALL_KEYS)
def test_criterion(battery, key):
    result = battery[key]
    print(result.line())
    assert result.ok, result.line()


def test_battery_is_complete(battery):
    assert sorted(battery) == sorted(ALL_KEYS)
