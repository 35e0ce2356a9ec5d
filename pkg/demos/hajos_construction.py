"""
Building D(C5) from D(K3) in sixteen steps
==========================================

Replays the stored construction: four directed Hajós joins and twelve
identifications.  Every intermediate digraph is 3-dichromatic, and the
fitness drops stage by stage until the symmetric 5-cycle appears.
"""

from hajosga import (PAPER_STAGES, dichromatic_number, fitness, is_isomorphic, op_count,
                     paper_script, replay_states, symmetric_cycle)

script = paper_script()
print(f"{op_count(script).total} operations: {op_count(script)}")

# every handle the script defines, in order of creation
states = replay_states(script)
for handle, d in states.items():
    print(f"{handle:4s} order {d.order}  arcs {d.arc_count:2d}  dc {dichromatic_number(d)}")

###############################################################################
# The four named stages

for handle in PAPER_STAGES:
    fb = fitness(states[handle])
    print(handle, f"fitness {fb.total:g}", dict(fb.terms()))

final = states[script.result]
print("final digraph is D(C5):", is_isomorphic(final, symmetric_cycle(5)))
