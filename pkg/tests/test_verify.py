import json

import pytest

from orchard.morphism import sigma_mutation
from orchard.verify import SUITES, run_suite


def test_default_run_passes():
    results = run_suite()
    assert {r.suite for r in results} == set(SUITES)
    failed = [(r.suite, r.name, r.message) for r in results if not r.passed]
    assert failed == []
    assert all(r.cases > 0 for r in results)


def test_smaller_exhaustive_layer():
    assert all(r.passed for r in run_suite("core", n_max=5))


def test_deterministic_per_seed():
    a = [r.to_json() for r in run_suite("geometry", seed=3)]
    b = [r.to_json() for r in run_suite("geometry", seed=3)]
    assert json.dumps(a) == json.dumps(b)


def test_mutant_is_caught():
    def corrupt(phi, i, j, value):
        return -value if (i, j) == (0, 1) else value

    with sigma_mutation(corrupt):
        results = run_suite("core")
    failed = [r for r in results if not r.passed]
    assert len(failed) >= 3
    assert any(r.counterexample for r in failed)
    for r in failed:
        data = r.to_json()
        assert data["passed"] is False and data["message"]
    # the hook is removed on exit
    assert all(r.passed for r in run_suite("core"))


def test_bad_arguments():
    with pytest.raises(ValueError):
        run_suite("bogus")
    with pytest.raises(ValueError):
        run_suite(n_max=2)
