import pytest

from qradius.errors import ParameterError
from qradius.verify import (
    SUITES,
    SuiteReport,
    run_analytic_suite,
    run_buzano_suite,
    run_elementary_suite,
    run_embedding_suite,
    run_monotonicity_suite,
    run_suite,
)


def _check_report(r, name, trials):
    assert isinstance(r, SuiteReport)
    assert r.suite == name
    assert r.trials == trials
    assert 0 <= r.failures <= r.trials
    assert r.worst_violation >= 0
    assert r.passed


def test_buzano_small():
    r = run_buzano_suite(trials=5_000, dim=3, seed=1)
    _check_report(r, "buzano", 5_000)


def test_buzano_in_c2():
    _check_report(run_buzano_suite(trials=2_000, dim=2, seed=4), "buzano", 2_000)


def test_elementary_small():
    r = run_elementary_suite(trials=6, dim=3, seed=2, restarts=16)
    _check_report(r, "elementary", 6)
    assert r.checks["homogeneity"] <= 1e-12
    assert r.checks["symmetry"] == 0.0
    assert r.checks["unitary"] <= 1e-12


def test_monotonicity():
    r = run_monotonicity_suite(trials=200, dim=3, seed=3)
    _check_report(r, "monotone", 200)
    assert r.skipped == 0


def test_monotonicity_counts_skips():
    r = run_monotonicity_suite(trials=5, dim=2, seed=3, max_retries=0)
    assert r.skipped == 5
    assert r.failures == 0


def test_embedding_fixtures():
    r = run_embedding_suite(trials=3, seed=0)
    _check_report(r, "embedding", 3)
    assert r.checks["diagonal"] <= 1e-3
    assert r.checks["offdiagonal"] <= 1e-3


def test_analytic_small():
    r = run_analytic_suite(trials=5, max_degree=5, seed=0, dim=3, restarts=32)
    _check_report(r, "analytic", 5)
    assert r.checks["attained"] <= 1e-3
    assert r.checks["constant"] <= 1e-9


@pytest.mark.parametrize("name", sorted(SUITES))
def test_deterministic_across_worker_counts(name):
    trials = 2_500 if name == "buzano" else 3
    a = run_suite(name, trials, seed=7, workers=1).to_dict()
    b = run_suite(name, trials, seed=7, workers=3).to_dict()
    assert a == b
    assert "elapsed" not in a
    assert "elapsed" in run_suite(name, trials, seed=7).to_dict(timing=True)


def test_failures_carry_substream_keys():
    # a deliberately impossible tolerance must surface failing sub-seeds
    from qradius import verify

    results = [([0, i], {"x": float(i)}) for i in range(40)]
    r = verify._reduce("demo", 40, 0, results, {"x": 10.5}, 0.0)
    assert r.failures == 29
    assert r.failing[0] == [0, 11]
    assert len(r.failing) == verify.MAX_LISTED_FAILURES
    assert r.worst_violation == 39.0


def test_unknown_suite():
    with pytest.raises(ParameterError):
        run_suite("nope", 1)


def test_trial_validation():
    with pytest.raises(ParameterError):
        run_buzano_suite(trials=0)
    with pytest.raises(ParameterError):
        run_monotonicity_suite(trials=1, dim=1)
