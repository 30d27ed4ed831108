# %% [markdown]
# # The generalized Buzano inequality
#
# For unit ``x, y`` with ``<x, y> = q`` we have
# ``|<a,x><b,y>| <= w_q(a (x) b)``. At ``q = 1`` this is the classical Buzano
# inequality, a sharpening of Cauchy-Schwarz. We fuzz it and show that the
# bound is tight.

# %%
import numpy as np

from qradius import rankone as ro
from qradius.verify import run_buzano_suite

report = run_buzano_suite(trials=100_000, dim=4, seed=1)
print(report.to_dict(timing=True))

# %% [markdown]
# Tightness: with ``(y, t)`` from ``witness_vectors`` and
# ``x = q y + sqrt(1-q^2) t`` the left side is within rounding of the
# bound (for unit ``a, b``).

# %%
rng = np.random.default_rng(3)
a = rng.standard_normal(3) + 1j * rng.standard_normal(3)
b = rng.standard_normal(3) + 1j * rng.standard_normal(3)
p = ro.RankOnePair(a, b).normalized()
for q in (0.0, 0.4, 0.9, 1.0):
    y, t = ro.witness_vectors(p, q)
    # scan the phase of t to find the x that aligns both factors
    s = np.sqrt(1 - q * q)
    best = 0.0
    for phi in np.linspace(0, 2 * np.pi, 721):
        x = q * y + s * np.exp(1j * phi) * t
        best = max(best, abs(np.vdot(x, p.a) * np.vdot(y, p.b)))
    print(f"q={q:3.1f}  max over phases {best:.12f}  bound {ro.buzano_bound(p, q):.12f}")
