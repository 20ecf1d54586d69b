import pytest

from parikh.verify import SUITES, run_suites


def test_all_suites_pass_at_desk_scale():
    results = run_suites(list(SUITES), max_len=6, bound=14, seed=0)
    assert [r.name for r in results] == list(SUITES)
    for result in results:
        assert result.passed, f"{result.name}: {result.detail}"
        assert result.checks > 0


def test_suites_are_deterministic():
    first = run_suites(["power-formula"], max_len=5, seed=3)
    second = run_suites(["power-formula"], max_len=5, seed=3)
    assert first == second


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suites(["no-such-suite"])
