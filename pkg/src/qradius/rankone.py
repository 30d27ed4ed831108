"""Closed-form q-numerical radius of rank-one operators and its consequences.

For ``a, b`` in C^n and ``q`` in [0, 1] the operator ``a (x) b : x -> <x, a> b``
satisfies

    w_q(a (x) b) = (|a||b| + q |<a,b>|) / 2
                   + sqrt(1 - q^2) / 2 * sqrt(|a|^2 |b|^2 - |<a,b>|^2).

Everything in this module is an exact (floating point) evaluation of that
formula or of quantities derived from it: the ratio ``lambda_q`` to the
operator norm, the maximizing ``q``, derivatives of ``q -> w_q``, the explicit
extremal vectors, block embeddings and bounds for power series in
``a (x) b``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .core import GramWeight, as_gram, as_vector
from .errors import DegenerateInputError, DimensionError, ParameterError

__all__ = [
    "RankOnePair",
    "PowerSeries",
    "Profile",
    "radius_from_invariants",
    "evaluate_radius",
    "buzano_bound",
    "lambda_factor",
    "q_star",
    "profile",
    "witness_vectors",
    "witness_objective",
    "as_matrix",
    "embed_diagonal",
    "embed_offdiagonal",
    "embedded_diagonal_pair",
    "offdiagonal_radius",
    "analytic_coefficient",
    "analytic_image",
    "analytic_bound",
]

# |<a,b>| below this fraction of |a||b| counts as orthogonal in lambda_factor
ORTHOGONAL_TOL = 1e-14


def _residual_norm(x, u_w, x_w):
    """|x - (<x,u>/<u,u>) u| computed in standard coordinates."""
    uu = np.vdot(u_w, u_w).real
    return float(np.linalg.norm(x_w - (np.vdot(u_w, x_w) / uu) * u_w))


@dataclass(frozen=True, eq=False)
class RankOnePair:
    """The operator ``a (x) b`` on ``(C^n, <.,.>_G)`` with cached invariants.

    ``gap`` is ``sqrt(|a|^2 |b|^2 - |<a,b>|^2)``. It is evaluated as
    ``|b| * min_l |a - l b|`` (symmetrized in ``a`` and ``b``), which is exact
    analytically and does not suffer the cancellation of the difference of
    squares when ``a`` and ``b`` are nearly parallel.
    """

    a: np.ndarray
    b: np.ndarray
    g: GramWeight = None
    norm_a: float = field(init=False)
    norm_b: float = field(init=False)
    inner_ab: complex = field(init=False)
    gap: float = field(init=False)

    def __post_init__(self):
        a = as_vector(self.a, "a")
        b = as_vector(self.b, "b")
        if a.shape != b.shape:
            raise DimensionError(f"a and b differ in dimension: {a.shape[0]} vs {b.shape[0]}")
        g = as_gram(self.g, a.shape[0])
        a = a.copy()
        b = b.copy()
        a.setflags(write=False)
        b.setflags(write=False)
        wa, wb = g.coords(a), g.coords(b)
        na = float(np.linalg.norm(wa))
        nb = float(np.linalg.norm(wb))
        if na == 0.0 or nb == 0.0:
            gap = 0.0
        else:
            # a + b == b + a in IEEE arithmetic, keeps (a, b) <-> (b, a) bitwise symmetric
            gap = 0.5 * (nb * _residual_norm(a, wb, wa) + na * _residual_norm(b, wa, wb))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "norm_a", na)
        object.__setattr__(self, "norm_b", nb)
        object.__setattr__(self, "inner_ab", complex(np.vdot(wb, wa)))
        object.__setattr__(self, "gap", gap)

    @property
    def dim(self):
        return self.a.shape[0]

    @property
    def operator_norm(self):
        return self.norm_a * self.norm_b

    @property
    def abs_inner(self):
        return abs(self.inner_ab)

    @property
    def is_zero(self):
        return self.norm_a == 0.0 or self.norm_b == 0.0

    def swapped(self):
        """The pair ``(b, a)``, i.e. the adjoint operator."""
        return RankOnePair(self.b, self.a, self.g)

    def normalized(self):
        if self.is_zero:
            raise DegenerateInputError("cannot normalize a pair containing a zero vector")
        return RankOnePair(self.a / self.norm_a, self.b / self.norm_b, self.g)


@dataclass(frozen=True)
class PowerSeries:
    """Finite power series ``f(l) = sum_k coefficients[k] l^k``.

    A finite series is entire, so ``f(a (x) b)`` is always defined.
    """

    coefficients: tuple

    def __post_init__(self):
        c = tuple(complex(x) for x in self.coefficients)
        if not c:
            raise ParameterError("a power series needs at least one coefficient")
        if not all(np.isfinite(x) for x in c):
            raise ParameterError("power series coefficients must be finite")
        object.__setattr__(self, "coefficients", c)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __call__(self, z):
        acc = 0j
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc


class Profile(NamedTuple):
    f: float
    f1: float | None
    f2: float | None


def _check_q(q):
    q = float(q)
    if not 0.0 <= q <= 1.0:
        raise ParameterError(f"q must lie in [0, 1], got {q}")
    return q


def _require_nonzero(p):
    if p.is_zero:
        raise DegenerateInputError("a and b must both be nonzero")


def radius_from_invariants(nab, abs_ab, gap, q):
    """Closed form from ``|a||b|``, ``|<a,b>|``, the gap and ``q``. Vectorizes over arrays."""
    return (nab + q * abs_ab) / 2 + np.sqrt(1 - q * q) / 2 * gap


def evaluate_radius(p, q):
    """q-numerical radius of ``a (x) b``.

    Parameters
    ----------
    p : RankOnePair
    q : float
        Must satisfy ``0 <= q <= 1``.

    Returns
    -------
    float
        ``(|a||b| + q|<a,b>|)/2 + sqrt(1-q^2)/2 * sqrt(|a|^2|b|^2 - |<a,b>|^2)``;
        ``0`` when ``a`` or ``b`` vanishes.

    Examples
    --------
    >>> evaluate_radius(RankOnePair([1, 0], [3, 4]), 1.0)
    4.0
    """
    q = _check_q(q)
    if p.is_zero:
        return 0.0
    return float(radius_from_invariants(p.norm_a * p.norm_b, p.abs_inner, p.gap, q))


def buzano_bound(p, q):
    """Upper bound on ``|<a,x><b,y>|`` over unit ``x, y`` with ``<x,y> = q``.

    Equal to :func:`evaluate_radius`; kept as a separate name for readability
    at call sites that check the inequality.
    """
    return evaluate_radius(p, q)


def lambda_factor(p, q):
    """Ratio ``w_q(a (x) b) / |a (x) b|`` in [0, 1].

    Uses the phase form ``(1 + cos(arccos q - arctan(gap/|<a,b>|))) / 2`` and
    the orthogonal branch ``(1 + sqrt(1-q^2)) / 2`` when ``|<a,b>|`` is
    negligible against ``|a||b|``.
    """
    q = _check_q(q)
    _require_nonzero(p)
    nab = p.norm_a * p.norm_b
    ab = p.abs_inner
    if ab <= ORTHOGONAL_TOL * nab:
        return (1 + np.sqrt(1 - q * q)) / 2
    # arctan(sqrt((|a||b|/|<a,b>|)^2 - 1)) written without the cancelling square
    gamma = np.arctan2(p.gap, ab)
    return float((1 + np.cos(np.arccos(q) - gamma)) / 2)


def q_star(p):
    """The unique ``q`` maximizing ``q -> w_q(a (x) b)``, namely ``|<a,b>|/(|a||b|)``."""
    _require_nonzero(p)
    return float(min(1.0, p.abs_inner / (p.norm_a * p.norm_b)))


def profile(p, q, derivatives=True):
    """Value and first two derivatives of ``f(q) = w_q(a (x) b)``.

    The derivative formulas hold on the open interval, so ``derivatives=True``
    requires ``0 < q < 1``; with ``derivatives=False`` any ``q`` in [0, 1] is
    accepted and ``f1``, ``f2`` are ``None``.
    """
    q = _check_q(q)
    f = evaluate_radius(p, q)
    if not derivatives:
        return Profile(f, None, None)
    if not 0.0 < q < 1.0:
        raise ParameterError(f"derivatives of the profile need 0 < q < 1, got {q}")
    s = np.sqrt(1 - q * q)
    f1 = p.abs_inner / 2 - q / (2 * s) * p.gap
    f2 = -p.gap / (2 * (1 - q * q) * s)
    return Profile(f, float(f1), float(f2))


def _orthogonal_unit(a_w):
    """Unit vector orthogonal to the unit vector ``a_w`` (standard coordinates).

    First coordinate direction that is far from parallel to ``a_w``, with two
    Gram-Schmidt passes.
    """
    n = a_w.shape[0]
    resid = np.sqrt(np.clip(1.0 - np.abs(a_w) ** 2, 0.0, None))
    candidates = np.flatnonzero(resid >= 0.5)
    k = int(candidates[0]) if candidates.size else int(np.argmax(resid))
    e = np.zeros(n, dtype=np.complex128)
    e[k] = 1.0
    for _ in range(2):
        e = e - np.vdot(a_w, e) * a_w
    return e / np.linalg.norm(e)


def witness_vectors(p, q):
    """Orthonormal pair ``(y, t)`` attaining ``w_q`` for the normalized pair.

    With ``q = cos(alpha)``, ``|<a,b>| = cos(gamma)`` and ``beta = (alpha+gamma)/2``::

        y = cos(beta) a + sin(beta) e^{i arg<a,b>} u
        t = sin(beta) a - cos(beta) e^{i arg<a,b>} u

    where ``a, b`` are normalized and ``u`` is the unit vector along the part
    of ``b`` orthogonal to ``a``. If ``a`` and ``b`` are parallel, ``u`` is
    any fixed unit vector orthogonal to ``a``. ``arg 0`` is taken as 0. Both
    vectors are unit in the ``g``-norm and ``g``-orthogonal.
    """
    q = _check_q(q)
    _require_nonzero(p)
    g = p.g
    a_w = g.coords(p.a) / p.norm_a
    b_w = g.coords(p.b) / p.norm_b
    ab = np.vdot(b_w, a_w)
    b1 = b_w - np.vdot(a_w, b_w) * a_w
    nb1 = np.linalg.norm(b1)
    if nb1 <= 1e-14:
        u = _orthogonal_unit(a_w)
    else:
        u = b1 / nb1
        u = u - np.vdot(a_w, u) * a_w
        u = u / np.linalg.norm(u)
    phase = ab / abs(ab) if ab != 0 else 1.0
    alpha = np.arctan2(np.sqrt(1 - q * q), q)
    gamma = np.arctan2(nb1, abs(ab))
    beta = 0.5 * (alpha + gamma)
    c, s = np.cos(beta), np.sin(beta)
    y_w = c * a_w + s * phase * u
    t_w = s * a_w - c * phase * u
    return g.from_coords(y_w), g.from_coords(t_w)


def witness_objective(p, q, y, t):
    """``q |<(a(x)b) y, y>| + sqrt(1-q^2) |<(a(x)b) t, y>|`` with ``g`` inner products."""
    q = _check_q(q)
    g = p.g
    wa, wb = g.coords(p.a), g.coords(p.b)
    wy, wt = g.coords(np.asarray(y)), g.coords(np.asarray(t))
    by = np.vdot(wy, wb)  # <b, y>
    return float(q * abs(np.vdot(wa, wy) * by) + np.sqrt(1 - q * q) * abs(np.vdot(wa, wt) * by))


def as_matrix(p):
    """Matrix ``M`` with ``M x = <x, a>_G b``, i.e. ``b (G a)^H``."""
    return np.outer(p.b, (p.g.matrix @ p.a).conj())


def _block_gram(g):
    if g.is_identity:
        return None
    n = g.dim
    G = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    G[:n, :n] = g.matrix
    G[n:, n:] = g.matrix
    return G


def embed_diagonal(p):
    """The ``2n x 2n`` block operator ``[[a(x)b, 0], [0, 0]]``."""
    n = p.dim
    M = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    M[:n, :n] = as_matrix(p)
    return M


def embed_offdiagonal(p):
    """The ``2n x 2n`` block operator ``[[0, a(x)b], [0, 0]]``."""
    n = p.dim
    M = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    M[:n, n:] = as_matrix(p)
    return M


def embedded_diagonal_pair(p):
    """Rank-one pair ``((a,0), (b,0))`` whose operator equals :func:`embed_diagonal`."""
    z = np.zeros(p.dim, dtype=np.complex128)
    return RankOnePair(np.concatenate([p.a, z]), np.concatenate([p.b, z]), _block_gram(p.g))


def embedded_offdiagonal_pair(p):
    """Rank-one pair ``((0,a), (b,0))`` whose operator equals :func:`embed_offdiagonal`."""
    z = np.zeros(p.dim, dtype=np.complex128)
    return RankOnePair(np.concatenate([z, p.a]), np.concatenate([p.b, z]), _block_gram(p.g))


def offdiagonal_radius(p, q):
    """Exact ``w_q`` of :func:`embed_offdiagonal`: ``(1 + sqrt(1-q^2))/2 |a||b|``."""
    q = _check_q(q)
    return float((1 + np.sqrt(1 - q * q)) / 2 * p.norm_a * p.norm_b)


def analytic_coefficient(p, s):
    """``sum_{k>=1} alpha_k <b,a>^(k-1)`` evaluated by Horner's rule."""
    ba = p.inner_ab.conjugate()
    acc = 0j
    for c in reversed(s.coefficients[1:]):
        acc = acc * ba + c
    return acc


def analytic_image(p, s):
    """Dense matrix of ``f(a (x) b)`` for the finite power series ``s``.

    Since ``(a(x)b)^k = <b,a>^(k-1) a(x)b`` for ``k >= 1``, this is
    ``analytic_coefficient(p, s) * (a(x)b) + alpha_0 I``.
    """
    return analytic_coefficient(p, s) * as_matrix(p) + s.coefficients[0] * np.eye(p.dim)


def analytic_bound(p, s, q):
    """Upper bound ``w_q(a(x)b) |sum_{k>=1} alpha_k <b,a>^(k-1)| + q |alpha_0|``."""
    q = _check_q(q)
    return float(evaluate_radius(p, q) * abs(analytic_coefficient(p, s)) + q * abs(s.coefficients[0]))
