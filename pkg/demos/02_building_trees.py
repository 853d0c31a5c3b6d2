# Growing trees that keep a unique maximum open packing.
#
# Four local operations preserve uniqueness when their preconditions hold:
#   Op1 appends a P4, Op2 appends a P3, Op3 appends two P3s, Op4 subdivides
#   a cut edge and hangs a leaf on the new vertex.
# Starting from P2 and closing under them gives the class O.

# %%
from openpack import Graph, max_open_packing
from openpack.tree_ops import apply_op1, apply_op2, apply_op4, eligible_steps, generate_class_O

p2 = Graph.path(2)
print("steps allowed on P2:", eligible_steps(p2))

# %% Op1 at vertex 0 of P2 gives P6, with U = {0, 1, 4, 5} after relabelling.
p6 = apply_op1(p2, 0)
print(p6, "->", max_open_packing(p6).witness)

# %% On P6 every operation kind is available somewhere.
print("steps allowed on P6:", eligible_steps(p6))
for grown in (apply_op2(p6, 2), apply_op4(p6, (2, 3))):
    res = max_open_packing(grown)
    print(f"n={grown.n} rho_o={res.value} unique={res.unique} U={res.witness}")

# %% A precondition failure names the clause that failed.
try:
    apply_op2(p6, 0)
except ValueError as exc:
    print("rejected:", exc)

# %% Breadth-first closure up to 12 vertices.
for member in generate_class_O(12):
    print(member.graph.n, member.trace.to_text().replace("\n", " | "))
