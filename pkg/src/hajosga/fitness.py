"""Fitness of a genome against the symmetric 5-cycle target.

    ft = |n - 5| + 2a/n + |n - s| + 15 T_S + 5 T

with ``a`` asymmetric arcs, ``s`` digons, ``T_S`` copies of D(K_3) and ``T``
mixed triangles.  Only ``2a/n`` is non-integral, so totals are held exactly as
:class:`fractions.Fraction` and compared exactly when ranking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digraph import Digraph, mixed_triangle_count, pair_counts, symmetric_triangle_count
from .errors import InvalidArgument

TARGET_ORDER = 5
SYM_TRIANGLE_WEIGHT = 15
MIXED_TRIANGLE_WEIGHT = 5


@dataclass(frozen=True)
class FitnessBreakdown:
    order: int
    asymmetric_arcs: int
    digons: int
    sym_triangles: int
    mixed_triangles: int

    @property
    def order_term(self) -> int:
        return abs(self.order - TARGET_ORDER)

    @property
    def asym_density_exact(self) -> Fraction:
        return Fraction(2 * self.asymmetric_arcs, self.order)

    @property
    def asym_density_term(self) -> float:
        return float(self.asym_density_exact)

    @property
    def sym_balance_term(self) -> int:
        return abs(self.order - self.digons)

    @property
    def sym_triangle_term(self) -> int:
        return SYM_TRIANGLE_WEIGHT * self.sym_triangles

    @property
    def mixed_triangle_term(self) -> int:
        return MIXED_TRIANGLE_WEIGHT * self.mixed_triangles

    @property
    def exact_total(self) -> Fraction:
        integral = self.order_term + self.sym_balance_term + self.sym_triangle_term + self.mixed_triangle_term
        return integral + self.asym_density_exact

    @property
    def total(self) -> float:
        return float(self.exact_total)

    def terms(self) -> list[tuple[str, float]]:
        return [
            ("order_term", self.order_term),
            ("asym_density_term", self.asym_density_term),
            ("sym_balance_term", self.sym_balance_term),
            ("sym_triangle_term", self.sym_triangle_term),
            ("mixed_triangle_term", self.mixed_triangle_term),
        ]


def fitness(d: Digraph) -> FitnessBreakdown:
    if d.order == 0:
        raise InvalidArgument("fitness is undefined for the empty digraph")
    counts = pair_counts(d)
    return FitnessBreakdown(
        order=d.order,
        asymmetric_arcs=counts.asymmetric_arcs,
        digons=counts.digons,
        sym_triangles=symmetric_triangle_count(d),
        mixed_triangles=mixed_triangle_count(d),
    )


def format_breakdown(fb: FitnessBreakdown) -> str:
    """One ``name value`` line per term, then the total, in fixed order."""
    lines = [f"{name} {_fmt(value)}" for name, value in fb.terms()]
    lines.append(f"total {_fmt(fb.total)}")
    return "\n".join(lines) + "\n"


def _fmt(x) -> str:
    return f"{x:.10g}" if isinstance(x, float) else str(x)
