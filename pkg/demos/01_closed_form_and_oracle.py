# %% [markdown]
# # Rank-one operators: closed form against brute force
#
# The q-numerical radius of ``a (x) b`` has a closed form. Here we compute it
# for a small example, look at the extremal pair ``(y, t)`` and compare with
# the hill-climbing oracle, which knows nothing about rank one.

# %%
import numpy as np

from qradius import rankone as ro
from qradius.oracle import OracleConfig, estimate_radius

p = ro.RankOnePair([1, 0], [3, 4])
print("|a||b| =", p.operator_norm, " |<a,b>| =", p.abs_inner)

# %%
for q in (0.0, 0.25, 0.5, 0.6, 0.75, 1.0):
    w = ro.evaluate_radius(p, q)
    est = estimate_radius(ro.as_matrix(p), q, OracleConfig(restarts=64)).estimate
    print(f"q={q:4.2f}  closed form {w:.9f}  oracle {est:.9f}  lambda_q {ro.lambda_factor(p, q):.6f}")

# %% [markdown]
# At ``q = |<a,b>|/(|a||b|) = 0.6`` the radius reaches the operator norm 5.
# At ``q = 1`` it reduces to ``(|a||b| + |<a,b>|)/2 = 4``.

# %%
q = 0.5
y, t = ro.witness_vectors(p, q)
pn = p.normalized()
print("y =", np.round(y, 6), " t =", np.round(t, 6))
print("<t, y> =", np.vdot(y, t))
print("objective at (y, t):", ro.witness_objective(pn, q, y, t), " radius:", ro.evaluate_radius(pn, q))

# %% [markdown]
# Seeding one oracle restart with the witness makes the estimate exact to
# rounding, which is a cheap consistency check for larger random instances.

# %%
rng = np.random.default_rng(0)
a = rng.standard_normal(6) + 1j * rng.standard_normal(6)
b = rng.standard_normal(6) + 1j * rng.standard_normal(6)
pn = ro.RankOnePair(a, b).normalized()
y, _ = ro.witness_vectors(pn, 0.3)
seeded = estimate_radius(ro.as_matrix(pn), 0.3, OracleConfig(restarts=4), starts=[y]).estimate
print("seeded oracle - closed form:", seeded - ro.evaluate_radius(pn, 0.3))
