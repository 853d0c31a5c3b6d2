# Open packings, 2-packings and independent sets on a few small graphs.
#
# An open packing is a vertex set in which every vertex of the graph sees at
# most one member. Each solver returns the optimum, the lexicographically
# smallest optimal set, and whether that optimum is the only one.

# %%
from openpack import Graph, max_open_packing, max_two_packing, max_independent_set
from openpack import max_matching, total_domination_number

p4, p6, c6 = Graph.path(4), Graph.path(6), Graph.cycle(6)

# %% P6 has exactly one maximum open packing: the two end pairs.
res = max_open_packing(p6)
print("rho_o(P6) =", res.value, "witness", res.witness, "unique:", res.unique)

# %% P4 has several; ask for all of them.
res = max_open_packing(p4, enumerate=True)
print("rho_o(P4) =", res.value, "all maxima:", res.all_witnesses)

# %% The cycle C6 behaves like P4 here.
print("rho_o(C6) =", max_open_packing(c6).value, "unique:", max_open_packing(c6).unique)

# %% Related invariants on the same graphs.
for name, g in [("P4", p4), ("P6", p6), ("C6", c6)]:
    print(f"{name}: rho={max_two_packing(g).value} alpha={max_independent_set(g).value} "
          f"alpha'={max_matching(g).value} gamma_t={total_domination_number(g).value}")

# %% On trees the open packing number equals the total domination number.
t = Graph(7, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)])
print("tree: rho_o =", max_open_packing(t).value, " gamma_t =", total_domination_number(t).value)
