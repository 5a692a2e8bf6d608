# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Choosing the best orientation
#
# For an undirected graph we minimize the game values over all orientations.
# The search skips orientations that an automorphism maps to one already
# seen. It also splits the graph at bridges and prunes orientations whose
# lower bound is already too large.

# %%
from eternal_domination import oedn, oednm, optimal_orientations, verify_strategy
from eternal_domination.certificates import build_grid_tiling_cert
from eternal_domination.closed_forms import grid_low, grid_up, predict
from eternal_domination.families import figure2_counterexample, grid
from eternal_domination.necoloring import ne_build, orientation_from_ne, toroidal_padding_orientation

# %% [markdown]
# ## Small grids
#
# The 3x3 grid needs 7 guards, and one orientation class achieves this.

# %%
res = optimal_orientations(grid(3, 3), "oedn")
print("oedn(P3xP3) =", res.value, "optimal orbits:", len(res.optimal_masks))
print("arcs:", res.best_orientation.arcs())

for n in range(2, 6):
    print(f"P2xP{n}: oedn = {oedn(grid(2, n)).value}, oednm = {oednm(grid(2, n)).value}")

# %% [markdown]
# ## Larger grids need certificates
#
# Past 24 edges, exhaustive search stops. A block tiling gives an upper
# bound that anyone can check, and a counting argument gives the lower
# bound. The two meet only when a side has length at most 4.

# %%
for n, m in [(3, 6), (5, 5), (4, 6)]:
    k = verify_strategy(build_grid_tiling_cert(n, m))
    print(f"P{n}xP{m}: certified <= {k}, bounds [{grid_low(n, m)}, {grid_up(n, m)}]")

# %% [markdown]
# ## Two connected, yet more than half
#
# This 10-vertex graph is 2-connected, yet no orientation gets by with 5
# multimove guards.

# %%
print("oednm(figure 2) =", oednm(figure2_counterexample()).value)

# %% [markdown]
# ## Colorings that orient themselves
#
# In a neighborhood-equitable coloring each vertex sees equally many of
# every other color. Orienting each pair of color classes along Euler
# circuits lets the guards jump between whole classes.

# %%
for args in [("rook", 3), ("torus", 6, 6), ("king", 5, 5), ("hypergrid", 4, 4, 4)]:
    c = ne_build(*args)
    _, cert = orientation_from_ne(c)
    print(args, f"({c.k},{c.l}) coloring, certified oednm <=", verify_strategy(cert))

pad = toroidal_padding_orientation(8, 7)
print("C8xC7 padded:", pad.bound, "vs", predict("toroidal_grid", [8, 7], "oednm").describe())
