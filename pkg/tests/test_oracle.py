import numpy as np
import pytest

from qradius import rankone as ro
from qradius.core import random_unit, random_unitary, substream
from qradius.errors import DimensionError, ParameterError
from qradius.oracle import (
    OracleConfig,
    direct_sample,
    estimate_radius,
    range_value,
    reduced_objective,
    sample_range_cloud,
)

from conftest import random_vector

NILPOTENT = np.array([[0.0, 1.0], [0.0, 0.0]])
e1 = np.array([1.0, 0.0])
e2 = np.array([0.0, 1.0])


class TestDirectSample:
    def test_identity_returns_q(self, rng):
        for q in (0.0, 0.3, 1.0, 0.6j, (0.3 + 0.4j)):
            pt = direct_sample(np.eye(3), q, rng)
            assert abs(pt.value - q) <= 1e-15

    def test_zero_operator(self, rng):
        assert direct_sample(np.zeros((3, 3)), 0.5, rng).value == 0

    def test_constraints_hold(self, rng):
        for _ in range(100):
            q = complex(*rng.uniform(-0.7, 0.7, 2))
            A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            pt = direct_sample(A, q, rng)
            x = q * pt.y + np.sqrt(1 - abs(q) ** 2) * pt.t
            assert abs(np.linalg.norm(x) - 1) <= 1e-12
            assert abs(np.vdot(pt.y, x) - q) <= 1e-12
            assert abs(np.vdot(pt.y, pt.t)) <= 1e-12
            assert abs(pt.value - range_value(A, q, pt.y, pt.t)) <= 1e-12 * np.abs(A).max()

    def test_hand_computed_range_value(self):
        # <A e2, e1> = <e1, e1> = 1
        assert range_value(NILPOTENT, 0.0, e1, e2) == 1

    def test_rejects_large_q(self, rng):
        with pytest.raises(ParameterError):
            direct_sample(np.eye(2), 1.01, rng)
        with pytest.raises(DimensionError):
            direct_sample(np.eye(1), 0.5, rng)


class TestReducedObjective:
    def test_identity(self, rng):
        for q in (0.0, 0.4, 1.0):
            h, t = reduced_objective(np.eye(3), q, random_unit(3, rng))
            assert h == pytest.approx(q, abs=1e-15)
            assert abs(np.linalg.norm(t) - 1) <= 1e-12

    def test_nilpotent(self):
        h, t = reduced_objective(NILPOTENT, 0.0, e1)
        assert h == pytest.approx(1.0, abs=1e-15)
        assert np.allclose(np.abs(t), [0, 1])

    def test_dominates_sampled_points(self, rng):
        A = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        q = 0.45
        y = random_unit(3, rng)
        h, _ = reduced_objective(A, q, y)
        for _ in range(500):
            t = random_vector(rng, 3)
            t = t - np.vdot(y, t) * y
            t /= np.linalg.norm(t)
            assert abs(range_value(A, q, y, t)) <= h + 1e-12

    def test_returned_t_realizes_h(self, rng):
        for _ in range(200):
            A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            q = rng.random()
            y = random_unit(4, rng)
            h, t = reduced_objective(A, q, y)
            assert abs(np.vdot(y, t)) <= 1e-12
            assert abs(range_value(A, q, y, t)) == pytest.approx(h, rel=1e-12)

    def test_rejects_non_unit(self):
        with pytest.raises(ParameterError):
            reduced_objective(np.eye(2), 0.5, np.array([1.0, 1.0]))


class TestEstimateRadius:
    def test_identity(self):
        est = estimate_radius(np.eye(3), 0.3, OracleConfig(restarts=4))
        assert est.estimate == pytest.approx(0.3, abs=1e-9)

    def test_nilpotent(self):
        est = estimate_radius(NILPOTENT, 0.6, OracleConfig(restarts=16))
        assert est.estimate == pytest.approx(0.9, abs=1e-6)

    def test_rank_one_example(self):
        p = ro.RankOnePair([1, 0], [3, 4])
        est = estimate_radius(ro.as_matrix(p), 0.5, OracleConfig(restarts=64))
        assert est.estimate == pytest.approx(4.982051, abs=1e-3)
        assert est.estimate <= ro.evaluate_radius(p, 0.5) + 1e-9

    def test_witness_is_valid_range_point(self, rng):
        A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        est = estimate_radius(A, 0.3, OracleConfig(restarts=8))
        y, t = est.witness_y, est.witness_t
        assert abs(np.linalg.norm(y) - 1) <= 1e-12
        assert abs(np.vdot(y, t)) <= 1e-12
        assert abs(range_value(A, 0.3, y, t)) == pytest.approx(est.estimate, rel=1e-12)

    def test_lower_bound_on_rank_one(self):
        for i in range(20):
            rng = substream(9, i)
            p = ro.RankOnePair(random_vector(rng, 3), random_vector(rng, 3))
            q = rng.random()
            est = estimate_radius(ro.as_matrix(p), q, OracleConfig(restarts=16, seed=i)).estimate
            assert est <= ro.evaluate_radius(p, q) + 1e-9

    def test_witness_seeded_start_is_exact(self):
        for i in range(20):
            rng = substream(10, i)
            p = ro.RankOnePair(random_vector(rng, 4), random_vector(rng, 4)).normalized()
            q = rng.random()
            y, _ = ro.witness_vectors(p, q)
            est = estimate_radius(ro.as_matrix(p), q, OracleConfig(restarts=2, seed=i), starts=[y])
            assert est.estimate == pytest.approx(ro.evaluate_radius(p, q), abs=1e-10)

    def test_longer_climbs_never_lose_ground(self, rng):
        # same seed => same trajectory; a smaller min_step only continues it
        A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        values = [estimate_radius(A, 0.4, OracleConfig(restarts=1, min_step=m, seed=5)).estimate
                  for m in (0.25, 0.05, 1e-2, 1e-3, 1e-5, 1e-7)]
        assert values == sorted(values)

    def test_unitary_invariance(self, rng):
        A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        U = random_unitary(4, rng)
        cfg = OracleConfig(restarts=64, seed=3)
        for q in (0.2, 0.7):
            a = estimate_radius(A, q, cfg).estimate
            b = estimate_radius(U.conj().T @ A @ U, q, cfg).estimate
            assert a == pytest.approx(b, abs=2e-3)

    def test_subadditivity(self):
        for i in range(10):
            rng = substream(12, i)
            p1 = ro.RankOnePair(random_vector(rng, 3), random_vector(rng, 3))
            p2 = ro.RankOnePair(random_vector(rng, 3), random_vector(rng, 3))
            q = rng.random()
            est = estimate_radius(ro.as_matrix(p1) + ro.as_matrix(p2), q, OracleConfig(restarts=64, seed=i))
            assert est.estimate <= ro.evaluate_radius(p1, q) + ro.evaluate_radius(p2, q) + 2e-3

    def test_deterministic_across_workers(self, rng):
        A = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
        runs = [estimate_radius(A, 0.55, OracleConfig(restarts=12, seed=8, workers=w)) for w in (1, 2, 3, 12)]
        for r in runs[1:]:
            assert r.estimate == runs[0].estimate
            assert np.array_equal(r.witness_y, runs[0].witness_y)
            assert r.restart == runs[0].restart

    def test_rejects_bad_q(self):
        with pytest.raises(ParameterError):
            estimate_radius(np.eye(2), 1.5)
        with pytest.raises(ParameterError):
            estimate_radius(np.eye(2), 0.5j)

    def test_config_validation(self):
        with pytest.raises(ParameterError):
            OracleConfig(restarts=0)
        with pytest.raises(ParameterError):
            OracleConfig(step_shrink=1.0)
        with pytest.raises(ParameterError):
            OracleConfig(min_step=1.0, initial_step=0.5)


class TestRangeCloud:
    def test_identity(self, rng):
        pts = sample_range_cloud(np.eye(2), 0.3, 50, rng)
        assert len(pts) == 50
        assert all(abs(p.value - 0.3) <= 1e-15 for p in pts)

    def test_points_are_in_the_range(self, rng):
        A = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        q = 0.2 + 0.5j
        for pt in sample_range_cloud(A, q, 200, rng):
            assert abs(np.linalg.norm(pt.y) - 1) <= 1e-12
            assert abs(np.vdot(pt.y, pt.t)) <= 1e-12
            assert abs(pt.value - range_value(A, q, pt.y, pt.t)) <= 1e-12

    def test_diagonal_inside_unit_disk(self, rng):
        pts = sample_range_cloud(np.diag([1.0, -1.0]), 0.0, 10_000, rng)
        assert max(abs(p.value) for p in pts) <= 1 + 1e-12

    def test_cloud_bounded_by_estimate(self, rng):
        A = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        est = estimate_radius(A, 0.6, OracleConfig(restarts=32)).estimate
        pts = sample_range_cloud(A, 0.6, 5_000, rng)
        assert max(abs(p.value) for p in pts) <= est + 1e-9

    def test_rank_one_cloud_approaches_radius(self):
        p = ro.RankOnePair([1, 0], [3, 4])
        pts = sample_range_cloud(ro.as_matrix(p), 0.5, 100_000, substream(4))
        m = max(abs(pt.value) for pt in pts)
        assert m == pytest.approx(ro.evaluate_radius(p, 0.5), abs=0.02)
        assert m <= ro.evaluate_radius(p, 0.5) + 1e-12

    def test_phase_of_q_does_not_matter(self, rng):
        A = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        theta = rng.uniform(0, 2 * np.pi)
        m0 = max(abs(p.value) for p in sample_range_cloud(A, 0.5, 100_000, substream(1)))
        m1 = max(abs(p.value) for p in sample_range_cloud(A, 0.5 * np.exp(1j * theta), 100_000, substream(2)))
        assert m0 == pytest.approx(m1, abs=0.05)

    def test_count_validation(self, rng):
        with pytest.raises(ParameterError):
            sample_range_cloud(np.eye(2), 0.5, 0, rng)
