# Deciding whether a tree has a unique maximum open packing, with a certificate.
#
# The recognizer strips pendant structure near a leaf of the branch-vertex
# tree, recurses, and replays the operations forward. A positive answer comes
# with a construction trace from P2; the trace replays with every
# precondition checked.

# %%
from openpack import Graph, recognize_tree
from openpack.tree_ops import recognize_tree_with_map

for n in range(1, 15):
    trace = recognize_tree(Graph.path(n))
    print(f"P{n}: {'member' if trace else '-'}")

# %% A tree built by two operations, handed over with shuffled labels.
t = Graph(9, [(4, 7), (7, 0), (0, 2), (2, 5), (5, 8), (2, 1), (1, 3), (3, 6)])
stats = {}
trace, phi = recognize_tree_with_map(t, stats)
print(trace.to_text())
print("solver calls:", stats["solver_calls"])

# %% phi maps the input tree onto the replayed one.
replayed = trace.replay(check=True)
print(all(replayed.has_edge(phi[u], phi[v]) for u, v in t.edges()))

# %% Local obstructions give quick negatives: a vertex with two leaves, for example.
print(recognize_tree(Graph.star(3)))
