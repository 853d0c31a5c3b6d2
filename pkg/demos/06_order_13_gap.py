# A tree with a unique maximum open packing that the four operations miss.
#
# Up to 12 vertices, the class O and the trees with a unique maximum open
# packing coincide. At 13 vertices one tree is unique but cannot be built:
# every way of undoing an operation leads to a tree with several maximum
# open packings.

# %%
from openpack import from_graph6, max_open_packing, recognize_tree
from openpack.graph_core import canonical_tree_code
from openpack.tree_ops import generate_class_O
from openpack.verify import run_check

t = from_graph6("LsO_OOC?_AA??C")
print(t)
res = max_open_packing(t, enumerate=True)
print("rho_o =", res.value, " maxima:", res.all_witnesses)

# %% Not generated, not recognized.
codes = {m.code for m in generate_class_O(13)}
print("generated:", canonical_tree_code(t) in codes, " recognized:", recognize_tree(t) is not None)

# %% The main-theorem check reports exactly this tree.
report = run_check("main-theorem", "trees n<=14")
print(report.to_json())

# %% Undoing a P3 attachment is the only reverse step that fits. Two pendant
# P3 arms exist: 2-5-8 hanging from 0 and 6-9-12 hanging from 4. Neither
# predecessor has a unique maximum, so no construction can reach this tree.
for arm in ([2, 5, 8], [6, 9, 12]):
    pred, _ = t.remove_vertices(arm)
    print("remove", arm, "-> predecessor unique:", max_open_packing(pred).unique)
