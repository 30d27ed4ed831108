"""Complex linear-algebra and sampling primitives on C^n.

Inner products are linear in the first argument and conjugate-linear in the
second::

    <x, y>_G = sum_ij G[i, j] x[j] conj(y[i]) = y^H G x

so that the rank-one operator ``x -> <x, a> b`` is the matrix ``b (G a)^H``.
An arbitrary inner product on C^n is represented by its Gram matrix ``G``
(Hermitian positive definite); ``G = None`` means the standard one.

Random vectors and matrices are drawn from a :class:`numpy.random.Generator`
passed in by the caller. Use :func:`substream` to derive independent,
counter-keyed generators from a single integer seed.
"""
from __future__ import annotations

import numpy as np

from .errors import DegenerateInputError, DimensionError, ParameterError

__all__ = [
    "CONSTRUCT_TOL",
    "INPUT_TOL",
    "GramWeight",
    "as_vector",
    "as_operator",
    "as_gram",
    "substream",
    "inner",
    "norm",
    "project_off",
    "random_unit",
    "random_unit_orthogonal",
    "random_unitary",
    "complex_gaussian",
    "random_orthonormal_pairs",
]

#: tolerance for vectors we construct ourselves
CONSTRUCT_TOL = 1e-12
#: tolerance for user-supplied unit/orthogonality conditions
INPUT_TOL = 1e-9


def as_vector(x, name="x"):
    """Return ``x`` as a 1-D complex128 array of dimension at least two."""
    v = np.asarray(x, dtype=np.complex128)
    if v.ndim != 1:
        raise DimensionError(f"{name} must be one-dimensional, got shape {v.shape}")
    if v.shape[0] < 2:
        raise DimensionError(f"{name} must have dimension >= 2, got {v.shape[0]}")
    if not np.all(np.isfinite(v)):
        raise ParameterError(f"{name} has non-finite entries")
    return v


def as_operator(A, name="A"):
    """Return ``A`` as a square complex128 matrix of size at least 2x2."""
    m = np.asarray(A, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"{name} must be a square matrix, got shape {m.shape}")
    if m.shape[0] < 2:
        raise DimensionError(f"{name} must be at least 2x2")
    if not np.all(np.isfinite(m)):
        raise ParameterError(f"{name} has non-finite entries")
    return m


class GramWeight:
    """Hermitian positive-definite Gram matrix defining ``<x, y>_G = <Gx, y>``.

    The Cholesky factor ``G = L L^H`` is kept so that ``x -> L^H x`` maps the
    weighted space isometrically onto C^n with the standard inner product.
    """

    __slots__ = ("matrix", "factor", "dim", "is_identity")

    def __init__(self, matrix):
        g = np.array(matrix, dtype=np.complex128)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise DimensionError(f"Gram matrix must be square, got shape {g.shape}")
        if g.shape[0] < 2:
            raise DimensionError("Gram matrix must be at least 2x2")
        if not np.all(np.isfinite(g)):
            raise ParameterError("Gram matrix has non-finite entries")
        scale = max(1.0, float(np.max(np.abs(g))))
        if np.max(np.abs(g - g.conj().T)) > CONSTRUCT_TOL * scale:
            raise ParameterError("Gram matrix is not Hermitian")
        g = 0.5 * (g + g.conj().T)
        try:
            L = np.linalg.cholesky(g)
        except np.linalg.LinAlgError:
            raise ParameterError("Gram matrix is not positive definite") from None
        g.setflags(write=False)
        L.setflags(write=False)
        self.matrix = g
        self.factor = L
        self.dim = g.shape[0]
        self.is_identity = bool(np.array_equal(g, np.eye(self.dim)))

    @classmethod
    def identity(cls, dim):
        return cls(np.eye(dim))

    def __repr__(self):
        return f"GramWeight(dim={self.dim}, identity={self.is_identity})"

    def coords(self, x):
        """Map ``x`` (last axis) into standard coordinates, ``L^H x``."""
        if self.is_identity:
            return np.asarray(x)
        return np.asarray(x) @ self.factor.conj()

    def from_coords(self, w):
        """Inverse of :meth:`coords`."""
        if self.is_identity:
            return np.asarray(w)
        w = np.asarray(w)
        # solve L^H x = w for each row of w
        return np.linalg.solve(self.factor.conj().T, w.T).T

    def to_standard(self, A):
        """Return ``L^H A L^{-H}``, the matrix of ``A`` in standard coordinates.

        ``A`` acting on ``(C^n, <.,.>_G)`` is unitarily equivalent to the
        returned matrix acting on ``(C^n, <.,.>)``, so all q-numerical radii
        coincide.
        """
        if self.is_identity:
            return np.asarray(A, dtype=np.complex128)
        LH = self.factor.conj().T
        return LH @ np.linalg.solve(LH.T, np.asarray(A).T).T


def as_gram(g, dim):
    """Normalize ``g`` (None, array or GramWeight) to a :class:`GramWeight` of ``dim``."""
    if g is None:
        return GramWeight.identity(dim)
    if not isinstance(g, GramWeight):
        g = GramWeight(g)
    if g.dim != dim:
        raise DimensionError(f"Gram weight has dimension {g.dim}, expected {dim}")
    return g


def substream(seed, *key):
    """Independent generator derived from ``seed`` and an integer counter ``key``.

    Identical ``(seed, key)`` always yield identical streams, regardless of the
    order or thread in which they are created.
    """
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key)))


def _check_pair(x, y, g):
    x = as_vector(x, "x")
    y = as_vector(y, "y")
    if x.shape != y.shape:
        raise DimensionError(f"dimension mismatch: {x.shape[0]} vs {y.shape[0]}")
    return x, y, as_gram(g, x.shape[0])


def inner(x, y, g=None):
    """Inner product ``<x, y>_G``, linear in ``x`` and conjugate-linear in ``y``.

    Examples
    --------
    >>> inner([1, 0], [3, 4])
    (3+0j)
    """
    x, y, g = _check_pair(x, y, g)
    return complex(np.vdot(g.coords(y), g.coords(x)))


def norm(x, g=None):
    """Norm induced by the Gram weight ``g``."""
    x = as_vector(x)
    g = as_gram(g, x.shape[0])
    return float(np.linalg.norm(g.coords(x)))


def project_off(x, u, g=None):
    """Component of ``x`` that is ``g``-orthogonal to ``u``.

    Returns ``x - (<x,u>/<u,u>) u``. Raises :class:`DegenerateInputError` for
    ``u = 0``.
    """
    x, u, g = _check_pair(x, u, g)
    wu = g.coords(u)
    uu = np.vdot(wu, wu).real
    if uu == 0.0:
        raise DegenerateInputError("cannot project off the zero vector")
    return x - (np.vdot(wu, g.coords(x)) / uu) * u


def complex_gaussian(rng, shape):
    """Standard complex Gaussian array, E|z|^2 = 1 per entry."""
    z = rng.standard_normal(tuple(shape) + (2,))
    return (z[..., 0] + 1j * z[..., 1]) / np.sqrt(2.0)


def random_unit(dim, rng, g=None):
    """Uniformly distributed unit vector on the ``g``-unit sphere of C^dim."""
    dim = int(dim)
    if dim < 2:
        raise DimensionError(f"dim must be >= 2, got {dim}")
    g = as_gram(g, dim)
    while True:
        z = complex_gaussian(rng, (dim,))
        nz = np.linalg.norm(z)
        if nz > 0.0:
            break
    x = g.from_coords(z / nz)
    if not g.is_identity:
        x = x / np.linalg.norm(g.coords(x))
    return x


def random_unit_orthogonal(y, rng, g=None):
    """Uniform unit vector ``t`` with ``<t, y>_G = 0``; ``y`` must be a unit vector."""
    y = as_vector(y, "y")
    dim = y.shape[0]
    g = as_gram(g, dim)
    wy = g.coords(y)
    ny = np.linalg.norm(wy)
    if abs(ny - 1.0) > INPUT_TOL:
        raise ParameterError(f"y must be a unit vector, got norm {ny}")
    wy = wy / ny
    while True:
        w = complex_gaussian(rng, (dim,))
        # two Gram-Schmidt passes keep |<t, y>| at rounding level
        w = w - np.vdot(wy, w) * wy
        w = w - np.vdot(wy, w) * wy
        nw = np.linalg.norm(w)
        if nw > 1e-8:
            break
    t = g.from_coords(w / nw)
    if not g.is_identity:
        t = t - (np.vdot(g.coords(y), g.coords(t)) / ny**2) * y
        t = t / np.linalg.norm(g.coords(t))
    return t


def random_unitary(dim, rng):
    """Haar-distributed unitary matrix (QR of a complex Ginibre matrix, phase fixed)."""
    dim = int(dim)
    if dim < 2:
        raise DimensionError(f"dim must be >= 2, got {dim}")
    Q, R = np.linalg.qr(complex_gaussian(rng, (dim, dim)))
    d = np.diagonal(R)
    return Q * (d / np.abs(d))


def random_orthonormal_pairs(count, dim, rng):
    """``count`` independent Haar-random orthonormal pairs ``(y, t)`` in C^dim.

    Vectorized counterpart of :func:`random_unit` followed by
    :func:`random_unit_orthogonal` for the standard inner product. Returns
    two arrays of shape ``(count, dim)``.
    """
    Z = complex_gaussian(rng, (count, 2, dim))
    Y = Z[:, 0]
    Y = Y / np.linalg.norm(Y, axis=-1, keepdims=True)
    T = Z[:, 1]
    for _ in range(2):
        T = T - np.sum(Y.conj() * T, axis=-1, keepdims=True) * Y
    T = T / np.linalg.norm(T, axis=-1, keepdims=True)
    return Y, T
