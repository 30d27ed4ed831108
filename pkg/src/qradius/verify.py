"""Seedable property suites for the rank-one formula and its corollaries.

Each suite runs ``trials`` independent trials. Trial ``i`` (or block ``i`` for
the vectorized Buzano suite) draws from ``substream(seed, i)``, so a report is
reproducible from ``(trials, dim, seed)`` alone and does not depend on the
number of worker threads. Failing trials are listed by their substream key.

Inequalities are scored by absolute excess over the bound, identities by
relative error.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import rankone as ro
from .core import GramWeight, complex_gaussian, random_orthonormal_pairs, random_unitary, substream
from .oracle import OracleConfig, cloud_values, estimate_radius
from .errors import ParameterError

__all__ = [
    "SuiteReport",
    "SUITES",
    "run_suite",
    "run_buzano_suite",
    "run_elementary_suite",
    "run_monotonicity_suite",
    "run_embedding_suite",
    "run_analytic_suite",
]

MAX_LISTED_FAILURES = 20


@dataclass
class SuiteReport:
    suite: str
    trials: int
    failures: int
    worst_violation: float
    seed: int
    elapsed: float = 0.0
    skipped: int = 0
    checks: dict = field(default_factory=dict)
    failing: list = field(default_factory=list)

    @property
    def passed(self):
        return self.failures == 0

    def to_dict(self, timing=False):
        d = asdict(self)
        if not timing:
            del d["elapsed"]
        return d


def _map_trials(fn, n, workers):
    if workers <= 1:
        return [fn(i) for i in range(n)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(n)))


def _reduce(name, trials, seed, results, tolerances, started):
    """Fold per-trial ``{check: violation}`` dicts (``None`` = skipped) into a report."""
    checks = {k: 0.0 for k in tolerances}
    failures = skipped = 0
    failing = []
    for key, res in results:
        if res is None:
            skipped += 1
            continue
        bad = False
        for k, v in res.items():
            checks[k] = max(checks[k], float(v))
            if v > tolerances[k]:
                bad = True
        if bad:
            failures += 1
            if len(failing) < MAX_LISTED_FAILURES:
                failing.append(key)
    return SuiteReport(
        suite=name,
        trials=trials,
        failures=failures,
        worst_violation=max(checks.values(), default=0.0),
        seed=seed,
        elapsed=time.perf_counter() - started,
        skipped=skipped,
        checks=checks,
        failing=failing,
    )


def _random_vector(rng, n, scale=True):
    v = complex_gaussian(rng, (n,))
    if scale:
        v = v * np.exp(rng.normal())
    return v


def _check_common(trials, dim):
    if trials < 1:
        raise ParameterError("trials must be >= 1")
    if dim < 2:
        raise ParameterError("dim must be >= 2")


def _row_invariants(A, B):
    """Vectorized ``|a||b|``, ``|<a,b>|`` and gap for rows of ``A`` and ``B``."""
    na = np.linalg.norm(A, axis=-1)
    nb = np.linalg.norm(B, axis=-1)
    ab = np.sum(B.conj() * A, axis=-1)
    with np.errstate(invalid="ignore", divide="ignore"):
        ra = np.linalg.norm(A - (ab / nb**2)[:, None] * B, axis=-1)
        rb = np.linalg.norm(B - (ab.conj() / na**2)[:, None] * A, axis=-1)
        gap = 0.5 * (nb * ra + na * rb)
    gap = np.where((na == 0) | (nb == 0), 0.0, gap)
    return na * nb, np.abs(ab), gap


BUZANO_BLOCK = 1000


def run_buzano_suite(trials=100_000, dim=4, seed=0, workers=1):
    """Fuzz ``|<a,x><b,y>| <= w_q(a(x)b)`` over unit ``x, y`` with ``<x,y> = q``.

    About 5% of trials use ``q = 1`` (``y = x``, the classical inequality),
    5% use ``q = 0`` and 1% use ``a = 0``. The violation is the excess over
    the bound in units of ``|a||b|``, allowed up to 1e-12. Trials run in
    vectorized blocks of 1000; a failure is reported as ``[block, row]``.
    """
    _check_common(trials, dim)
    started = time.perf_counter()
    nblocks = -(-trials // BUZANO_BLOCK)

    def block(k):
        m = min(BUZANO_BLOCK, trials - k * BUZANO_BLOCK)
        rng = substream(seed, k)
        a = complex_gaussian(rng, (m, dim)) * np.exp(rng.normal(size=(m, 1)))
        b = complex_gaussian(rng, (m, dim)) * np.exp(rng.normal(size=(m, 1)))
        a[rng.random(m) < 0.01] = 0.0
        q = rng.random(m)
        u = rng.random(m)
        q[u < 0.05] = 1.0
        q[(u >= 0.05) & (u < 0.10)] = 0.0
        y, t = random_orthonormal_pairs(m, dim, rng)
        s = np.sqrt(1 - q * q)
        x = q[:, None] * y + s[:, None] * t
        x[q == 1.0] = y[q == 1.0]
        lhs = np.abs(np.sum(x.conj() * a, axis=-1) * np.sum(y.conj() * b, axis=-1))
        nab, abs_ab, gap = _row_invariants(a, b)
        bound = ro.radius_from_invariants(nab, abs_ab, gap, q)
        excess = np.maximum(lhs - bound, 0.0)
        rel = np.divide(excess, nab, out=np.zeros(m), where=nab > 0)
        return [([k, r], {"buzano": float(rel[r])}) for r in range(m)]

    results = [item for blk in _map_trials(block, nblocks, workers) for item in blk]
    return _reduce("buzano", trials, seed, results, {"buzano": 1e-12}, started)


def run_elementary_suite(trials=100, dim=4, seed=0, workers=1, restarts=64):
    """Homogeneity, symmetry, unitary invariance, subadditivity and q-phase invariance.

    Closed-form identities must hold to 1e-12 relative (symmetry bitwise).
    Subadditivity compares the oracle on ``A + B`` (two rank-one terms)
    against the sum of the closed forms with a 2e-3 budget. Phase invariance
    is checked pointwise: the range point of ``(y, t)`` at ``q e^{i theta}``
    equals ``e^{i theta}`` times the point of ``(y, e^{-i theta} t)`` at ``q``,
    and no sampled point exceeds the closed-form radius.
    """
    _check_common(trials, dim)
    started = time.perf_counter()
    tol = {"homogeneity": 1e-12, "symmetry": 0.0, "unitary": 1e-12,
           "subadditivity": 2e-3, "phase": 1e-10, "phase_bound": 1e-9}

    def trial(i):
        rng = substream(seed, i)
        a, b = _random_vector(rng, dim), _random_vector(rng, dim)
        q = float(rng.random())
        p = ro.RankOnePair(a, b)
        w = ro.evaluate_radius(p, q)
        res = {}

        mu = complex(complex_gaussian(rng, ()))
        w_mu = ro.evaluate_radius(ro.RankOnePair(mu * a, b), q)
        res["homogeneity"] = abs(w_mu - abs(mu) * w) / (abs(mu) * w)

        res["symmetry"] = float(ro.evaluate_radius(p.swapped(), q) != w)

        U = random_unitary(dim, rng)
        res["unitary"] = abs(ro.evaluate_radius(ro.RankOnePair(U @ a, U @ b), q) - w) / w

        p2 = ro.RankOnePair(_random_vector(rng, dim), _random_vector(rng, dim))
        est = estimate_radius(ro.as_matrix(p) + ro.as_matrix(p2), q,
                              OracleConfig(restarts=restarts, seed=int(rng.integers(2**31))))
        res["subadditivity"] = max(est.estimate - (w + ro.evaluate_radius(p2, q)), 0.0)

        theta = float(rng.uniform(0, 2 * np.pi))
        rot = np.exp(1j * theta)
        M = ro.as_matrix(p)
        Y, T = random_orthonormal_pairs(64, dim, rng)
        v_rot = cloud_values(M, q * rot, Y, T)
        v_ref = rot * cloud_values(M, q, Y, T * np.conj(rot))
        res["phase"] = float(np.max(np.abs(v_rot - v_ref))) / w
        res["phase_bound"] = max(float(np.max(np.abs(v_rot))) - w, 0.0) / w
        return [seed, i], res

    results = _map_trials(trial, trials, workers)
    return _reduce("elementary", trials, seed, results, tol, started)


def _random_pd(rng, n):
    B = complex_gaussian(rng, (n, n))
    return B @ B.conj().T / n + 0.1 * np.eye(n)


def run_monotonicity_suite(trials=1000, dim=4, seed=0, workers=1, max_retries=100):
    """Monotonicity of ``w_q(a(x)b)`` in the inner product.

    ``G2 = G1 + P P^H`` guarantees ``|x|_1 <= |x|_2``; ``(a, b)`` is redrawn
    until ``|<a,b>_1| <= |<a,b>_2|``. Trials where that never happens within
    ``max_retries`` draws are counted in ``skipped``.
    """
    _check_common(trials, dim)
    started = time.perf_counter()

    def trial(i):
        rng = substream(seed, i)
        G1 = _random_pd(rng, dim)
        P = complex_gaussian(rng, (dim, int(rng.integers(1, dim + 1))))
        G2 = G1 + P @ P.conj().T
        g1, g2 = GramWeight(G1), GramWeight(G2)
        q = float(rng.random())
        for _ in range(max_retries):
            a, b = _random_vector(rng, dim), _random_vector(rng, dim)
            p1, p2 = ro.RankOnePair(a, b, g1), ro.RankOnePair(a, b, g2)
            if p1.abs_inner <= p2.abs_inner:
                break
        else:
            return [seed, i], None
        return [seed, i], {"monotonicity": max(ro.evaluate_radius(p1, q) - ro.evaluate_radius(p2, q), 0.0)}

    results = _map_trials(trial, trials, workers)
    return _reduce("monotone", trials, seed, results, {"monotonicity": 1e-12}, started)


def run_embedding_suite(trials=25, seed=0, dim=2, workers=1, restarts=64):
    """Oracle estimates of both block embeddings against their exact values.

    With ``dim = 2`` the first two trials are fixed fixtures:
    ``a = (1,0), b = (3,4)`` at ``q = 0.5`` (diagonal) / ``q = 0.8``
    (off-diagonal), then both at ``q = 1``.
    """
    _check_common(trials, dim)
    started = time.perf_counter()
    tol = {"diagonal": 1e-3, "offdiagonal": 1e-3, "diagonal_excess": 1e-9, "offdiagonal_excess": 1e-9}

    def trial(i):
        rng = substream(seed, i)
        if dim == 2 and i < 2:
            a, b = np.array([1.0, 0.0]), np.array([3.0, 4.0])
            q_d, q_o = (0.5, 0.8) if i == 0 else (1.0, 1.0)
        else:
            a, b = _random_vector(rng, dim), _random_vector(rng, dim)
            q_d = q_o = float(rng.random())
        p = ro.RankOnePair(a, b)
        cfg = OracleConfig(restarts=restarts, seed=int(rng.integers(2**31)))
        exact_d = ro.evaluate_radius(p, q_d)
        exact_o = ro.offdiagonal_radius(p, q_o)
        est_d = estimate_radius(ro.embed_diagonal(p), q_d, cfg).estimate
        est_o = estimate_radius(ro.embed_offdiagonal(p), q_o, cfg).estimate
        return [seed, i], {
            "diagonal": abs(est_d - exact_d),
            "offdiagonal": abs(est_o - exact_o),
            "diagonal_excess": max(est_d - exact_d, 0.0),
            "offdiagonal_excess": max(est_o - exact_o, 0.0),
        }

    results = _map_trials(trial, trials, workers)
    return _reduce("embedding", trials, seed, results, tol, started)


def run_analytic_suite(trials=100, max_degree=5, seed=0, dim=4, workers=1, restarts=64):
    """Bound for ``w_q(f(a(x)b))`` with ``f`` a random finite power series.

    Every trial also checks the affine identity pointwise: for shared
    ``(y, t)``, the range point of ``c T + alpha_0 I`` equals ``c`` times the
    range point of ``T`` plus ``alpha_0 q``. Trial 0 uses ``f(l) = l^2``,
    where the bound is attained (1e-3); trial 1 uses a constant series, whose
    radius is exactly ``q |alpha_0|`` (1e-9).
    """
    _check_common(trials, dim)
    if max_degree < 0:
        raise ParameterError("max_degree must be >= 0")
    started = time.perf_counter()
    tol = {"bound": 1e-6, "affine": 1e-10, "attained": 1e-3, "constant": 1e-9}

    def trial(i):
        rng = substream(seed, i)
        p = ro.RankOnePair(_random_vector(rng, dim), _random_vector(rng, dim))
        q = float(rng.random())
        if i == 0:
            coeffs = [0, 0, 1]
        elif i == 1:
            coeffs = [complex(complex_gaussian(rng, ()))]
        else:
            coeffs = complex_gaussian(rng, (int(rng.integers(0, max_degree + 1)) + 1,))
        s = ro.PowerSeries(coeffs)
        F = ro.analytic_image(p, s)
        bound = ro.analytic_bound(p, s, q)
        est = estimate_radius(F, q, OracleConfig(restarts=restarts, seed=int(rng.integers(2**31)))).estimate
        res = {"bound": max(est - bound, 0.0)}
        if i == 0:
            res["attained"] = abs(est - bound)
        elif i == 1:
            res["constant"] = abs(est - q * abs(s.coefficients[0]))
        c = ro.analytic_coefficient(p, s)
        T = ro.as_matrix(p)
        Y, Tv = random_orthonormal_pairs(32, dim, rng)
        lhs = cloud_values(F, q, Y, Tv)
        rhs = c * cloud_values(T, q, Y, Tv) + s.coefficients[0] * q
        scale = max(1.0, abs(c) * p.operator_norm + abs(s.coefficients[0]))
        res["affine"] = float(np.max(np.abs(lhs - rhs))) / scale
        return [seed, i], res

    results = _map_trials(trial, trials, workers)
    return _reduce("analytic", trials, seed, results, tol, started)


SUITES = {
    "buzano": run_buzano_suite,
    "elementary": run_elementary_suite,
    "monotone": run_monotonicity_suite,
    "embedding": run_embedding_suite,
    "analytic": run_analytic_suite,
}


def run_suite(name, trials, dim=None, seed=0, workers=1):
    """Dispatch a suite by name; ``dim=None`` uses the suite's default."""
    try:
        fn = SUITES[name]
    except KeyError:
        raise ParameterError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    kwargs = {"trials": trials, "seed": seed, "workers": workers}
    if dim is not None:
        kwargs["dim"] = dim
    return fn(**kwargs)
