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
# # Eternal domination on small digraphs
#
# Guards sit on vertices. An attacker picks an unguarded vertex and the
# defender must move a guard onto it along an arc. The defender wins if this can
# go on forever. The single-move game moves one guard per attack. The multimove
# game may shift every guard at once.
#
# The solver computes the greatest family of guard configurations that is
# closed under defense. The smallest guard count with a nonempty family is
# the eternal domination number.

# %%
from eternal_domination import Digraph, extract_strategy, gamma_inf, gamma_inf_m, verify_strategy
from eternal_domination.invariants import alpha_digraph, check_inequality_chain, domination_number

# %% [markdown]
# ## Directed cycles
#
# On a directed cycle, a single-move defender must leave just one vertex
# empty. With multimoves, alternate vertices are enough.

# %%
for n in range(3, 8):
    d = Digraph(n, [(i, (i + 1) % n) for i in range(n)])
    print(f"C{n}: gamma_inf = {gamma_inf(d).value}, gamma_inf_m = {gamma_inf_m(d).value}")

# %% [markdown]
# ## A winning family and its strategy
#
# The winning family for directed $C_6$ with multimoves has two
# configurations, the two alternating triples. The extracted response table
# can be saved as JSON and checked independently.

# %%
c6 = Digraph(6, [(i, (i + 1) % 6) for i in range(6)])
res = gamma_inf_m(c6)
print(res.winning_family.as_lists())
cert = extract_strategy(c6, res.winning_family, res.mode, label="C6 multimove")
print("verified k =", verify_strategy(cert))
print(cert.dumps()[:120], "...")

# %% [markdown]
# ## The inequality chain
#
# Domination number <= m-eternal number <= largest induced acyclic set <=
# eternal number. Strongly connected digraphs add more rungs.

# %%
d = Digraph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (1, 4)])
rep = check_inequality_chain(d, gamma_inf(d).value, gamma_inf_m(d).value)
print(rep.values)
print("all hold:", rep.ok)
print("alpha =", alpha_digraph(d).value, " gamma =", domination_number(d).value)
