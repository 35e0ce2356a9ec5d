"""
What the fitness rewards
========================

The fitness is a sum of five penalties.  It is zero exactly when a digraph
has five vertices, five digons, no asymmetric arcs and no triangles.  Here
we look at a few reference digraphs and at random samples.
"""

import numpy as np

from hajosga import Digraph, complete_symmetric, directed_cycle, fitness, format_breakdown, symmetric_cycle

for name, d in [("D(K3)", complete_symmetric(3)), ("D(C5)", symmetric_cycle(5)),
                ("directed C5", directed_cycle(5)), ("D(C5) + chord", symmetric_cycle(5).with_arc(0, 2))]:
    print(f"--- {name}")
    print(format_breakdown(fitness(d)), end="")

###############################################################################
# Random digraphs on five vertices: how rare is a low score?

rng = np.random.default_rng(0)
totals = []
for _ in range(5000):
    adj = rng.random((5, 5)) < 0.3
    np.fill_diagonal(adj, False)
    totals.append(fitness(Digraph(adj)).total)
totals = np.array(totals)
print("quantiles", np.quantile(totals, [0, 0.1, 0.5, 0.9]).round(2))
print("fraction below 5:", np.mean(totals < 5))
