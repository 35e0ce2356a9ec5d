"""
A short seeded search
=====================

Runs the rank GA for a few hundred generations, prints the statistics it
emits, then reconstructs the best individual from its lineage.  The same
seed always gives the same run.
"""

import sys

from hajosga import GaConfig, extract_script, op_count, replay_script, run, serialize_script

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
cfg = GaConfig(seed=seed, max_generations=300, stats_interval=50)
result = run(cfg, on_stats=lambda rec: print(rec.csv_row()))

best = result.population.members[0]
print(f"best fitness {best.fitness.total:g} after {result.generations_used} generations")

###############################################################################
# The lineage gives a script that rebuilds the best genome from D(K3)

script = extract_script(result.lineage_store, best.lineage_id)
print(f"{op_count(script).total} operations")
assert replay_script(script) == best.genome
print(serialize_script(script))
