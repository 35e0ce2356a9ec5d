"""Hajós constructions of digraphs from copies of D(K_3), searched with a rank GA."""

from .digraph import (ArcRef, Digraph, PairCounts, are_independent, complete_symmetric,
                      directed_cycle, find_isomorphism, is_isomorphic, mixed_triangle_count,
                      pair_counts, parse_digraph, serialize_digraph, symmetric_cycle,
                      symmetric_triangle_count, to_dot)
from .errors import (AnomalyError, CannotRecombineError, CorruptStoreError, HajosError,
                     InstanceTooLarge, InvalidArgument, NotIndependentError, ParseError, ReplayError)
from .fitness import FitnessBreakdown, fitness, format_breakdown
from .ga import GaConfig, Individual, Population, RunResult, run
from .lineage import (PAPER_STAGES, ConstructionScript, LineageStore, OpCount, OriginRecord,
                      extract_script, op_count, paper_script, parse_script, replay_script,
                      replay_states, serialize_script)
from .ops import JoinSpec, hajos_join, identify
from .oracle import color_class_acyclic, dichromatic_number, is_r_critical

__version__ = "0.1.0"
