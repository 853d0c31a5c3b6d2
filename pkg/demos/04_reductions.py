# Graph constructions that move between open packings, 2-packings and
# independent sets.
#
#   S(g)  subdivision             rho_o(S(g)) = alpha(g) + alpha'(g)
#   g'    edge vertices as clique rho_o(g')   = rho(g)          (g connected)
#   g+    six-vertex gadgets      rho(g+)     = 2n + rho_o(g)
#   g*    product with K_n        rho(g*)     = n(n-1) + alpha(g)
#   g^2   square                  alpha(g^2)  = rho(g)

# %%
from openpack import Graph, max_independent_set, max_matching, max_open_packing, max_two_packing
from openpack.reductions import (alpha_via_uniqueness_oracle, clique_extension, gadget_plus,
                                 product_gadget, square, subdivision)

g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)])
n = g.n

# %%
rows = [
    ("S(g)", max_open_packing(subdivision(g).graph).value,
     max_independent_set(g).value + max_matching(g).value),
    ("g'", max_open_packing(clique_extension(g).graph).value, max_two_packing(g).value),
    ("g+", max_two_packing(gadget_plus(g).graph).value, 2 * n + max_open_packing(g).value),
    ("g*", max_two_packing(product_gadget(g).graph).value,
     n * (n - 1) + max_independent_set(g).value),
    ("g^2", max_independent_set(square(g).graph).value, max_two_packing(g).value),
]
for name, lhs, rhs in rows:
    print(f"{name:5s} {lhs:3d} {rhs:3d}")

# %% Each construction records what every new vertex stands for.
out = gadget_plus(Graph.path(2))
print(out.graph.n, "vertices;", list(out.vertex_map.items())[:4], "...")

# %% The independence number from uniqueness questions alone, via joins with
# empty graphs.
print("alpha via joins:", alpha_via_uniqueness_oracle(g), " direct:", max_independent_set(g).value)
