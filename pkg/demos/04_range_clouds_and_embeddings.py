# %% [markdown]
# # Sampling q-numerical ranges; block embeddings
#
# ``sample_range_cloud`` draws Haar-random orthonormal pairs and returns
# points of ``W_q(A)``. The farthest point approaches the radius from below.
# For a rank-one ``a (x) b``, the block matrix ``[[a(x)b, 0], [0, 0]]`` keeps
# the radius. ``[[0, a(x)b], [0, 0]]`` has radius ``(1 + sqrt(1-q^2))/2 |a||b|``.

# %%
import numpy as np

from qradius import rankone as ro
from qradius.core import substream
from qradius.oracle import OracleConfig, estimate_radius, sample_range_cloud

p = ro.RankOnePair([1, 0], [3, 4])
for i, q in enumerate((0.2, 0.5, 0.9)):
    cloud = sample_range_cloud(ro.as_matrix(p), q, 50_000, substream(0, i))
    print(f"q={q}: max |w| over cloud {max(abs(pt.value) for pt in cloud):.4f}, radius {ro.evaluate_radius(p, q):.4f}")

# %%
cfg = OracleConfig(restarts=64)
for q in (0.0, 0.5, 0.8, 1.0):
    d = estimate_radius(ro.embed_diagonal(p), q, cfg).estimate
    o = estimate_radius(ro.embed_offdiagonal(p), q, cfg).estimate
    print(f"q={q}: diagonal {d:.6f} (exact {ro.evaluate_radius(p, q):.6f})   "
          f"off-diagonal {o:.6f} (exact {ro.offdiagonal_radius(p, q):.6f})")

# %% [markdown]
# The phase of ``q`` does not matter: the clouds for ``q`` and ``q e^{i theta}``
# are rotations of each other and have the same maximal modulus.

# %%
A = np.array([[1, 2j], [0, -1]])
m0 = max(abs(pt.value) for pt in sample_range_cloud(A, 0.5, 50_000, substream(1)))
m1 = max(abs(pt.value) for pt in sample_range_cloud(A, 0.5j, 50_000, substream(2)))
print(m0, m1, estimate_radius(A, 0.5, cfg).estimate)
