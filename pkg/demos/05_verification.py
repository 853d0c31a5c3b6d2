# Running the exhaustive checks.
#
# Each registered check runs a predicate over a corpus of small graphs (all
# trees, all graphs, all connected graphs, paths, or members of the class O)
# and returns a report. Failures are (graph6, expected, actual) triples.

# %%
from openpack.verify import CHECKS, run_all, run_check

print(sorted(CHECKS))

# %%
print(run_check("path-law", "paths n<=30").to_json())
print(run_check("subdivision-identity", "connected graphs n<=6").to_json())

# %% The whole registry on small caps.
for report in run_all(max_tree_n=10, max_graph_n=5):
    print(f"{report.theorem_id:24s} {report.corpus_spec:24s} "
          f"{report.instances_checked:5d} {'ok' if report.passed else 'FAILED'}")
