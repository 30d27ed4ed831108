# %% [markdown]
# # Other inner products; functions of a (x) b
#
# With a Gram weight ``G`` the inner product is ``<x, y>_G = y^H G x``. If
# ``G2 - G1`` is positive semidefinite and ``|<a,b>_1| <= |<a,b>_2|``, the
# radius under ``G1`` is at most the radius under ``G2``.

# %%
import numpy as np

from qradius import rankone as ro
from qradius.oracle import OracleConfig, estimate_radius
from qradius.verify import run_analytic_suite, run_monotonicity_suite

e1, e2 = np.array([1.0, 0]), np.array([0, 1.0])
for G in (np.eye(2), np.diag([1.0, 4.0])):
    p = ro.RankOnePair(e1, e2, G)
    A = p.g.to_standard(ro.as_matrix(p))
    print(np.diag(G), ro.evaluate_radius(p, 0.5), estimate_radius(A, 0.5, OracleConfig(restarts=32)).estimate)

print(run_monotonicity_suite(trials=1000, dim=4, seed=0).to_dict())

# %% [markdown]
# A power series ``f`` applied to ``a (x) b`` gives
# ``(sum_{k>=1} alpha_k <b,a>^(k-1)) a(x)b + alpha_0 I``. Its radius is at
# most ``w_q(a(x)b) |sum_{k>=1} ...| + q |alpha_0|``. For ``f(l) = l^2`` the
# bound is attained.

# %%
rng = np.random.default_rng(5)
p = ro.RankOnePair(rng.standard_normal(3) + 1j * rng.standard_normal(3),
                   rng.standard_normal(3) + 1j * rng.standard_normal(3))
for coeffs in ([0, 0, 1], [1, 1, 0.5, 1 / 6], [2j]):
    s = ro.PowerSeries(coeffs)
    est = estimate_radius(ro.analytic_image(p, s), 0.4, OracleConfig(restarts=64)).estimate
    print(coeffs, "oracle", round(est, 9), "bound", round(ro.analytic_bound(p, s, 0.4), 9))

print(run_analytic_suite(trials=20, seed=0).to_dict())
