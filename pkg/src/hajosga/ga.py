"""Hajós Rank GA: rank-driven recombination, mutation and selection.

Each generation runs recombination -> sort -> mutation -> sort -> selection
-> sort.  Recombination is the directed Hajós join, mutation is the
identification of independent vertices, and all randomness comes from one
:class:`UniformStream` seeded from the config, consumed in a fixed order.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .digraph import ArcRef, Digraph, complete_symmetric, is_isomorphic, pair_counts, symmetric_cycle
from .errors import AnomalyError, CannotRecombineError, InvalidArgument
from .fitness import FitnessBreakdown, fitness
from ._kernels import mutate_kernel
from .lineage import LineageStore
from .ops import JoinSpec, hajos_join

log = logging.getLogger(__name__)

TARGET = symmetric_cycle(5)


@dataclass(frozen=True)
class GaConfig:
    pop_size: int = 50
    pressure: float = 3.0
    seed: int = 0
    max_generations: Optional[int] = 50_000
    stats_interval: int = 100
    max_order: Optional[int] = None
    # lineage records unreachable from the population are dropped this often
    prune_interval: int = 50
    keep_history: bool = False

    def __post_init__(self):
        if self.pop_size < 2 or self.pop_size % 2:
            raise InvalidArgument("pop_size must be even and >= 2")
        if not self.pressure > 0:
            raise InvalidArgument("pressure must be positive")
        if self.max_generations is not None and self.max_generations < 0:
            raise InvalidArgument("max_generations must be >= 0 or None")
        if self.stats_interval < 1:
            raise InvalidArgument("stats_interval must be >= 1")
        if self.max_order is not None and self.max_order < 3:
            raise InvalidArgument("max_order must be >= 3")
        if not 0 <= self.seed < 2**64:
            raise InvalidArgument("seed must fit in 64 bits")


class UniformStream:
    """One sequential stream of uniform floats in [0, 1), generated in blocks.

    Every random decision of a run reads the next float(s) from this stream,
    so a run is a pure function of the seed.  Integer draws use
    ``floor(x * n)``.
    """

    def __init__(self, seed: int, block: int = 8192):
        self._gen = np.random.Generator(np.random.PCG64(seed))
        self._block = block
        self._buf = np.empty(0)
        self._pos = 0

    def _ensure(self):
        if self._pos >= len(self._buf):
            self._buf = self._gen.random(self._block)
            self._pos = 0

    def random(self) -> float:
        self._ensure()
        x = self._buf[self._pos]
        self._pos += 1
        return float(x)

    def below(self, n: int) -> int:
        """Uniform integer in ``range(n)``."""
        return min(int(self.random() * n), n - 1)

    def peek(self, k: int) -> np.ndarray:
        """Up to ``k`` upcoming floats without consuming them (at least one)."""
        self._ensure()
        return self._buf[self._pos:self._pos + k]

    def take(self, k: int) -> np.ndarray:
        """The next ``k`` floats without consuming them."""
        have = len(self._buf) - self._pos
        if have < k:
            fresh = self._gen.random(max(self._block, k - have))
            self._buf = np.concatenate([self._buf[self._pos:], fresh])
            self._pos = 0
        return self._buf[self._pos:self._pos + k]

    def skip(self, k: int) -> None:
        while k > 0:
            self._ensure()
            step = min(k, len(self._buf) - self._pos)
            self._pos += step
            k -= step


class Individual:
    __slots__ = ("genome", "lineage_id", "_fitness")

    def __init__(self, genome: Digraph, lineage_id: int, cached_fitness: FitnessBreakdown | None = None):
        self.genome = genome
        self.lineage_id = lineage_id
        self._fitness = cached_fitness

    @property
    def fitness(self) -> FitnessBreakdown:
        if self._fitness is None:
            self._fitness = fitness(self.genome)
        return self._fitness

    @property
    def cached_fitness(self) -> FitnessBreakdown | None:
        return self._fitness

    def clone(self, lineage_id: int) -> "Individual":
        return Individual(self.genome, lineage_id, self._fitness)

    def __repr__(self):
        f = "?" if self._fitness is None else f"{self._fitness.total:g}"
        return f"Individual(order={self.genome.order}, fitness={f}, origin={self.lineage_id})"


@dataclass
class Population:
    members: list[Individual]
    generation: int = 0

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class StatsRecord:
    generation: int
    best_fitness: float
    mean_fitness: float
    best_order: int
    best_arc_count: int
    population_mean_order: float

    FIELDS = ("generation", "best_fitness", "mean_fitness", "best_order",
              "best_arc_count", "population_mean_order")

    def csv_row(self) -> str:
        return (f"{self.generation},{self.best_fitness:.6f},{self.mean_fitness:.6f},"
                f"{self.best_order},{self.best_arc_count},{self.population_mean_order:.6f}")


@dataclass
class RunResult:
    solution: Optional[Individual]
    generations_used: int
    lineage_store: LineageStore
    stats: list[StatsRecord] = field(default_factory=list)
    population: Optional[Population] = None


def init_population(cfg: GaConfig, store: LineageStore) -> Population:
    base = complete_symmetric(3)
    members = [Individual(base, store.add_init(0)) for _ in range(cfg.pop_size)]
    return evaluate_and_sort(Population(members, 0))


def evaluate_and_sort(pop: Population) -> Population:
    """Stable ascending sort on the exact fitness total."""
    members = sorted(pop.members, key=lambda ind: ind.fitness.exact_total)
    return Population(members, pop.generation)


def _random_arc(genome: Digraph, rng: UniformStream) -> ArcRef:
    tails, heads = np.nonzero(genome.adjacency)
    if len(tails) == 0:
        raise CannotRecombineError(f"genome of order {genome.order} has no arcs")
    k = rng.below(len(tails))
    return ArcRef(int(tails[k]), int(heads[k]))


def rank_recombination(pop: Population, rng: UniformStream, store: LineageStore,
                       max_order: int | None = None) -> Population:
    """Grow the population from N to 2N by Hajós joins of rank neighbours.

    Offspring are appended while the loop runs and become parents themselves;
    the last step pairs the final member with rank 0 through the modulus.
    """
    members = list(pop.members)
    gen = pop.generation
    i = 0
    while i <= len(members) - 1:
        j = (i + 1) % len(members)
        left, right = members[i], members[j]
        arc1 = _random_arc(left.genome, rng)
        arc2 = _random_arc(right.genome, rng)
        if max_order is not None and left.genome.order + right.genome.order - 1 > max_order:
            better = right if right.fitness.exact_total < left.fitness.exact_total else left
            members.append(better.clone(store.add_clone(better.lineage_id, gen)))
        else:
            child = hajos_join(JoinSpec(left.genome, arc1, right.genome, arc2))
            nid = store.add_join(left.lineage_id, arc1, right.lineage_id, arc2, gen)
            members.append(Individual(child, nid))
        i += 2
    return Population(members, gen)


def mutation_attempts(rank: int, size: int, genome: Digraph) -> int:
    """floor(r * non_adjacent_pairs) with r = rank / (size - 1), in exact arithmetic."""
    non_adjacent = pair_counts(genome).non_adjacent_pairs
    return rank * non_adjacent // (size - 1)


def _mutate(genome: Digraph, attempts: int, rng: UniformStream):
    """Run ``attempts`` identification attempts; return (genome, [(keep, remove), ...]).

    Each attempt draws a vertex and, when it has independent partners, a
    partner; attempts on saturated vertices still consume their draw.
    """
    xs = rng.take(attempts + genome.order)
    adj = genome.adjacency.copy()
    alive, pairs, used = mutate_kernel(adj, attempts, xs)
    rng.skip(int(used))
    done = [(int(k), int(r)) for k, r in pairs]
    if not done:
        return genome, done
    return Digraph._wrap(np.ascontiguousarray(adj[np.ix_(alive, alive)])), done


def rank_mutation(pop: Population, rng: UniformStream, store: LineageStore) -> Population:
    """Identify random independent pairs, ``floor(r * non_adjacent_pairs)`` attempts per rank."""
    members = list(pop.members)
    size = len(members)
    gen = pop.generation
    for i, ind in enumerate(members):
        attempts = mutation_attempts(i, size, ind.genome)
        if not attempts:
            continue
        genome, done = _mutate(ind.genome, attempts, rng)
        if done:
            nid = ind.lineage_id
            for keep, remove in done:
                nid = store.add_identify(nid, keep, remove, gen)
            members[i] = Individual(genome, nid)
    return Population(members, gen)


def clone_weights(size: int, pressure: float) -> list[float]:
    """Expected clone count P(1 - r)^(2P - 1) for each rank of a population of ``size``."""
    return [pressure * (1 - i / (size - 1)) ** (2 * pressure - 1) for i in range(size)]


def rank_selection(pop: Population, rng: UniformStream, store: LineageStore,
                   pressure: float, target_size: int) -> Population:
    """Shrink to ``target_size`` by rank-proportional cloning.

    Integer parts of the clone weights are granted outright; fractional parts
    are then tried as extra-clone probabilities, cycling from rank 0, until
    the target size is reached.
    """
    members = pop.members
    gen = pop.generation
    weights = clone_weights(len(members), pressure)
    chosen: list[Individual] = []
    for ind, w in zip(members, weights):
        chosen.extend([ind] * math.floor(w))
    del chosen[target_size:]
    fractions = [w - math.floor(w) for w in weights]
    if len(chosen) < target_size and not any(fractions):
        raise InvalidArgument("selection cannot reach the target size: all clone weights are integral")
    i = 0
    while len(chosen) < target_size:
        if rng.random() < fractions[i]:
            chosen.append(members[i])
        i = (i + 1) % len(members)
    clones = [ind.clone(store.add_clone(ind.lineage_id, gen)) for ind in chosen]
    return Population(clones, gen)


def generation_step(pop: Population, rng: UniformStream, store: LineageStore, cfg: GaConfig) -> Population:
    pop = Population(pop.members, pop.generation + 1)
    pop = evaluate_and_sort(rank_recombination(pop, rng, store, cfg.max_order))
    pop = evaluate_and_sort(rank_mutation(pop, rng, store))
    return evaluate_and_sort(rank_selection(pop, rng, store, cfg.pressure, cfg.pop_size))


def population_stats(pop: Population) -> StatsRecord:
    best = pop.members[0]
    n = len(pop.members)
    return StatsRecord(
        generation=pop.generation,
        best_fitness=best.fitness.total,
        mean_fitness=float(sum(ind.fitness.exact_total for ind in pop.members) / n),
        best_order=best.genome.order,
        best_arc_count=best.genome.arc_count,
        population_mean_order=sum(ind.genome.order for ind in pop.members) / n,
    )


def run(cfg: GaConfig,
        on_generation: Callable[[Population, LineageStore], None] | None = None,
        on_stats: Callable[[StatsRecord], None] | None = None) -> RunResult:
    """Evolve until a zero-fitness individual appears or the generation cap is hit.

    ``on_generation`` sees every population after selection; ``on_stats`` sees
    each stats record as it is produced (every ``stats_interval`` generations
    plus the final one).
    """
    rng = UniformStream(cfg.seed)
    store = LineageStore()
    pop = init_population(cfg, store)
    stats: list[StatsRecord] = []
    solution = None

    def emit(p):
        rec = population_stats(p)
        stats.append(rec)
        if on_stats is not None:
            on_stats(rec)

    if on_generation is not None:
        on_generation(pop, store)
    limit = cfg.max_generations
    while limit is None or pop.generation < limit:
        pop = generation_step(pop, rng, store, cfg)
        if on_generation is not None:
            on_generation(pop, store)
        best = pop.members[0]
        if best.fitness.exact_total == 0:
            if not is_isomorphic(best.genome, TARGET):
                raise AnomalyError(f"zero-fitness genome is not D(C5): {best.genome!r}")
            solution = best
            break
        if pop.generation % cfg.stats_interval == 0:
            emit(pop)
        if not cfg.keep_history and pop.generation % cfg.prune_interval == 0:
            store.prune(ind.lineage_id for ind in pop.members)
        if pop.generation % 1000 == 0:
            log.info("generation %d best %.4f", pop.generation, best.fitness.total)
    if not stats or stats[-1].generation != pop.generation:
        emit(pop)
    return RunResult(solution, pop.generation, store, stats, pop)
