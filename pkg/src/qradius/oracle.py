"""Brute-force estimation of q-numerical ranges and radii of dense matrices.

The q-numerical radius of ``A`` is the supremum of

    q |<Ay, y>| + sqrt(1 - q^2) |<At, y>|

over orthonormal pairs ``(y, t)``. For fixed ``y`` the maximum over ``t`` is
available in closed form: ``<At, y> = <t, A^H y>``, so the best ``t`` is the
normalized part of ``A^H y`` orthogonal to ``y``. What remains is a function
``h(y)`` on the unit sphere, maximized here by restarted derivative-free hill
climbing. ``h`` is not smooth wherever ``<Ay, y> = 0`` or ``A^H y`` is
parallel to ``y``, which rules out plain gradient ascent.

Everything here uses the standard inner product on C^n. For an operator on a
Gram-weighted space, pass ``GramWeight.to_standard(A)`` instead.

All estimates are lower bounds on the true supremum (up to rounding).
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import (
    CONSTRUCT_TOL,
    INPUT_TOL,
    as_operator,
    as_vector,
    complex_gaussian,
    random_orthonormal_pairs,
    random_unit,
    random_unit_orthogonal,
    substream,
)
from .errors import ParameterError

__all__ = [
    "OracleConfig",
    "RangePoint",
    "Estimate",
    "range_value",
    "direct_sample",
    "reduced_objective",
    "estimate_radius",
    "sample_range_cloud",
    "cloud_values",
]


@dataclass(frozen=True)
class OracleConfig:
    """Settings for :func:`estimate_radius`.

    ``samples_per_restart`` random starting points are drawn per restart and
    the best one is climbed. A round consists of ``proposals`` random tangent
    moves (default ``max(8, 4n)``); if none of them improves ``h`` the step is
    multiplied by ``step_shrink``. A restart stops once its step drops below
    ``min_step``. ``workers`` only affects wall time, never the result.
    """

    restarts: int = 32
    samples_per_restart: int = 1
    initial_step: float = 0.5
    step_shrink: float = 0.5
    min_step: float = 1e-6
    seed: int = 0
    proposals: int | None = None
    workers: int = 1

    def __post_init__(self):
        if self.restarts < 1:
            raise ParameterError("restarts must be >= 1")
        if self.samples_per_restart < 1:
            raise ParameterError("samples_per_restart must be >= 1")
        if not self.initial_step > 0:
            raise ParameterError("initial_step must be positive")
        if not 0 < self.step_shrink < 1:
            raise ParameterError("step_shrink must lie in (0, 1)")
        if not 0 < self.min_step <= self.initial_step:
            raise ParameterError("min_step must lie in (0, initial_step]")
        if self.seed < 0:
            raise ParameterError("seed must be non-negative")
        if self.proposals is not None and self.proposals < 1:
            raise ParameterError("proposals must be >= 1")
        if self.workers < 1:
            raise ParameterError("workers must be >= 1")


@dataclass(frozen=True)
class RangePoint:
    """Member ``q<Ay,y> + sqrt(1-|q|^2)<At,y>`` of the q-numerical range."""

    value: complex
    y: np.ndarray
    t: np.ndarray


@dataclass(frozen=True)
class Estimate:
    estimate: float
    witness_y: np.ndarray
    witness_t: np.ndarray
    restart: int


def _check_real_q(q):
    if np.iscomplexobj(q) and np.imag(q) != 0:
        raise ParameterError("the radius oracle takes real q; reduce complex q to |q| first")
    q = float(np.real(q))
    if not 0.0 <= q <= 1.0:
        raise ParameterError(f"q must lie in [0, 1], got {q}")
    return q


def _check_complex_q(q):
    q = complex(q)
    if abs(q) > 1.0:
        raise ParameterError(f"|q| must be <= 1, got {abs(q)}")
    return q, np.sqrt(max(0.0, 1.0 - abs(q) ** 2))


def range_value(A, q, y, t):
    """``q<Ay,y> + sqrt(1-|q|^2)<At,y>`` for given vectors (no constraint checks)."""
    q = complex(q)
    s = np.sqrt(max(0.0, 1.0 - abs(q) ** 2))
    return complex(q * np.vdot(y, A @ y) + s * np.vdot(y, A @ t))


def direct_sample(A, q, rng):
    """One Haar-random member of ``W_q(A)``.

    Builds ``x = q y + sqrt(1-|q|^2) t`` from a random orthonormal pair so that
    ``|x| = 1`` and ``<x, y> = q``, and returns ``<Ax, y>``.
    """
    A = as_operator(A)
    q, s = _check_complex_q(q)
    y = random_unit(A.shape[0], rng)
    t = random_unit_orthogonal(y, rng)
    x = q * y + s * t
    return RangePoint(complex(np.vdot(y, A @ x)), y, t)


def _objective_rows(A, q, s, Y):
    """h for every row of ``Y`` (shape ``(..., n)``); rows assumed unit."""
    AY = Y @ A.T
    W = Y @ A.conj()  # rows are A^H y
    qf = np.sum(Y.conj() * AY, axis=-1)
    P = W - np.sum(Y.conj() * W, axis=-1, keepdims=True) * Y
    return q * np.abs(qf) + s * np.linalg.norm(P, axis=-1)


def _best_t(A, y):
    """Phase-free maximizer of |<At, y>| over unit t orthogonal to y, and its value."""
    w = A.conj().T @ y
    pw = w - np.vdot(y, w) * y
    pw = pw - np.vdot(y, pw) * y
    npw = np.linalg.norm(pw)
    if npw > CONSTRUCT_TOL * max(1.0, np.linalg.norm(w)):
        return pw / npw, float(npw)
    # A^H y parallel to y: every unit t orthogonal to y gives <At, y> = 0
    k = int(np.argmin(np.abs(y)))
    e = np.zeros_like(y)
    e[k] = 1.0
    for _ in range(2):
        e = e - np.vdot(y, e) * y
    return e / np.linalg.norm(e), 0.0


def reduced_objective(A, q, y):
    """``h(y) = q|<Ay,y>| + sqrt(1-q^2) max_t |<At,y>|`` and a maximizing ``t``.

    The returned ``t`` is unit, orthogonal to ``y`` and phase-aligned so that
    the range point ``q<Ay,y> + sqrt(1-q^2)<At,y>`` has modulus exactly
    ``h(y)`` (up to rounding).

    Parameters
    ----------
    A : (n, n) array_like
    q : float in [0, 1]
    y : (n,) array_like
        Unit vector (tolerance 1e-9).

    Returns
    -------
    h : float
    t : ndarray
    """
    A = as_operator(A)
    q = _check_real_q(q)
    y = as_vector(y, "y")
    ny = np.linalg.norm(y)
    if abs(ny - 1.0) > INPUT_TOL:
        raise ParameterError(f"y must be a unit vector, got norm {ny}")
    y = y / ny
    s = np.sqrt(1.0 - q * q)
    qf = np.vdot(y, A @ y)
    t, pnorm = _best_t(A, y)
    # <At, y> = <t, A^H y> = |P A^H y| for the unrotated t; rotate to match arg <Ay,y>
    phase = qf / abs(qf) if qf != 0 else 1.0
    t = phase * t
    return float(q * abs(qf) + s * pnorm), t


def _tangent_unit(Y, D):
    """Project directions ``D`` (m, K, n) onto the complex orthogonal complement of ``Y`` (m, n) and normalize."""
    Yb = Y[:, None, :]
    D = D - np.sum(Yb.conj() * D, axis=-1, keepdims=True) * Yb
    nd = np.linalg.norm(D, axis=-1, keepdims=True)
    return D / np.where(nd > 0, nd, 1.0)


def _climb(A, q, indices, cfg, K):
    """Hill-climb the restarts in ``indices`` side by side.

    Each restart draws only from its own substream, so the outcome of restart
    ``i`` does not depend on which other restarts share the batch.
    """
    n = A.shape[0]
    s = np.sqrt(1.0 - q * q)
    rngs = [substream(cfg.seed, i) for i in indices]
    m = len(indices)

    Y = np.empty((m, n), dtype=np.complex128)
    for j, rng in enumerate(rngs):
        Z = complex_gaussian(rng, (cfg.samples_per_restart, n))
        Z = Z / np.linalg.norm(Z, axis=-1, keepdims=True)
        Y[j] = Z[int(np.argmax(_objective_rows(A, q, s, Z)))]
    H = _objective_rows(A, q, s, Y)
    if cfg.starts is not None:
        for j, i in enumerate(indices):
            if i < len(cfg.starts):
                Y[j] = cfg.starts[i]
                H[j] = _objective_rows(A, q, s, Y[j][None, :])[0]

    step = np.full(m, cfg.initial_step)
    active = np.ones(m, dtype=bool)
    while active.any():
        idx = np.flatnonzero(active)
        D = np.stack([complex_gaussian(rngs[j], (K, n)) for j in idx])
        Ya = Y[idx]
        D = _tangent_unit(Ya, D)
        P = Ya[:, None, :] + step[idx, None, None] * D
        P = P / np.linalg.norm(P, axis=-1, keepdims=True)
        Hp = _objective_rows(A, q, s, P)
        best = np.argmax(Hp, axis=1)
        hb = Hp[np.arange(idx.size), best]
        up = hb > H[idx]
        Y[idx[up]] = P[np.flatnonzero(up), best[up]]
        H[idx[up]] = hb[up]
        down = idx[~up]
        step[down] *= cfg.step_shrink
        active[down[step[down] < cfg.min_step]] = False
    return Y, H


@dataclass(frozen=True)
class _RunConfig:
    seed: int
    samples_per_restart: int
    initial_step: float
    step_shrink: float
    min_step: float
    starts: np.ndarray | None


def estimate_radius(A, q, cfg=None, starts=None):
    """Lower estimate of the q-numerical radius of ``A`` by restarted hill climbing.

    Parameters
    ----------
    A : (n, n) array_like
    q : float in [0, 1]
        Complex ``q`` should be reduced to ``abs(q)`` by the caller.
    cfg : OracleConfig, optional
    starts : (m, n) array_like, optional
        Replace the random starting points of the first ``m`` restarts, e.g.
        with known extremal vectors.

    Returns
    -------
    Estimate
        Best ``h`` over all restarts with its ``(y, t)``; ties go to the
        lowest restart index. Bit-for-bit reproducible for a fixed
        ``cfg.seed``, whatever ``cfg.workers`` is.
    """
    A = as_operator(A)
    q = _check_real_q(q)
    cfg = cfg or OracleConfig()
    n = A.shape[0]
    if starts is not None:
        starts = np.atleast_2d(np.asarray(starts, dtype=np.complex128))
        if starts.shape[1] != n:
            raise ParameterError(f"starting points must have dimension {n}")
        starts = starts / np.linalg.norm(starts, axis=-1, keepdims=True)
    run = _RunConfig(cfg.seed, cfg.samples_per_restart, cfg.initial_step,
                     cfg.step_shrink, cfg.min_step, starts)
    K = cfg.proposals or max(8, 4 * n)

    chunks = np.array_split(np.arange(cfg.restarts), min(cfg.workers, cfg.restarts))
    if cfg.workers == 1:
        results = [_climb(A, q, list(c), run, K) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(lambda c: _climb(A, q, list(c), run, K), chunks))
    Y = np.concatenate([r[0] for r in results])
    H = np.concatenate([r[1] for r in results])

    i = int(np.argmax(H))
    h, t = reduced_objective(A, q, Y[i])
    return Estimate(h, Y[i] / np.linalg.norm(Y[i]), t, i)


def cloud_values(A, q, Y, T):
    """Range values for stacked orthonormal pairs (rows of ``Y`` and ``T``)."""
    q, s = _check_complex_q(q)
    return q * np.sum(Y.conj() * (Y @ A.T), axis=-1) + s * np.sum(Y.conj() * (T @ A.T), axis=-1)


def sample_range_cloud(A, q, count, rng):
    """``count`` i.i.d. Haar-random members of ``W_q(A)``.

    Returns
    -------
    list of RangePoint
    """
    A = as_operator(A)
    count = int(count)
    if count < 1:
        raise ParameterError("count must be >= 1")
    Y, T = random_orthonormal_pairs(count, A.shape[0], rng)
    vals = cloud_values(A, q, Y, T)
    return [RangePoint(complex(v), y, t) for v, y, t in zip(vals, Y, T)]
