# %% [markdown]
# # The profile q -> w_q(a (x) b)
#
# The profile is concave. It peaks at ``q* = |<a,b>|/(|a||b|)`` with value
# ``|a||b|``, and its smallest value is at ``q = 0`` or ``q = 1``. The
# ``qradius profile`` command writes the same table as CSV.

# %%
import numpy as np

from qradius import rankone as ro

rng = np.random.default_rng(7)
p = ro.RankOnePair(rng.standard_normal(4) + 1j * rng.standard_normal(4),
                   rng.standard_normal(4) + 1j * rng.standard_normal(4))
qs = np.linspace(0, 1, 21)
print(f"q* = {ro.q_star(p):.4f}, |a||b| = {p.operator_norm:.6f}")
for q in qs:
    f, f1, f2 = ro.profile(p, q, derivatives=0 < q < 1)
    d = "" if f1 is None else f"  f'={f1:+.4f}  f''={f2:+.4f}"
    print(f"q={q:4.2f}  f={f:.6f}{d}")

# %%
lo = min(ro.evaluate_radius(p, 0), ro.evaluate_radius(p, 1))
print("min of profile:", lo, " predicted:", (p.operator_norm + min(p.abs_inner, p.gap)) / 2)

# %% [markdown]
# Optional plot (needs matplotlib).

# %%
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    grid = np.linspace(0, 1, 201)
    fig, ax = plt.subplots()
    ax.plot(grid, [ro.evaluate_radius(p, q) for q in grid])
    ax.axvline(ro.q_star(p), ls=":", c="k")
    ax.set_xlabel("q")
    ax.set_ylabel("w_q(a (x) b)")
    fig.savefig("q_profile.png", dpi=120)
    print("wrote q_profile.png")
