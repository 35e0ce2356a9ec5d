from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hajosga.digraph import Digraph, complete_symmetric, directed_cycle, symmetric_cycle
from hajosga.errors import InvalidArgument
from hajosga.fitness import fitness, format_breakdown

from helpers import STAGE_D0, STAGE_D1, STAGE_D2, brute_counts, brute_triangles, digraphs


def hand_fitness(d):
    """Evaluate the formula from brute-force counts, exactly."""
    n = d.order
    a, s, _ = brute_counts(d)
    ts, t = brute_triangles(d)
    return abs(n - 5) + Fraction(2 * a, n) + abs(n - s) + 15 * ts + 5 * t


@pytest.mark.parametrize("d, expected", [
    (complete_symmetric(3), Fraction(17)),
    (symmetric_cycle(5), Fraction(0)),
    (STAGE_D0, Fraction(172, 10)),
    (STAGE_D1, Fraction(108, 10)),
    (STAGE_D2, Fraction(54, 10)),
    (directed_cycle(5), Fraction(7)),
])
def test_examples(d, expected):
    fb = fitness(d)
    assert fb.exact_total == expected == hand_fitness(d)


def test_breakdown_terms():
    fb = fitness(complete_symmetric(3))
    assert [v for _, v in fb.terms()] == [2, 0, 0, 15, 0]
    fb = fitness(STAGE_D0)
    assert [v for _, v in fb.terms()] == [0, 1.2, 1, 0, 15]
    assert fb.total == pytest.approx(17.2)


def test_empty_digraph_rejected():
    with pytest.raises(InvalidArgument):
        fitness(Digraph.empty(0))


def test_format_breakdown():
    text = format_breakdown(fitness(STAGE_D0))
    assert text.splitlines() == [
        "order_term 0", "asym_density_term 1.2", "sym_balance_term 1",
        "sym_triangle_term 0", "mixed_triangle_term 15", "total 17.2",
    ]


def test_exact_ordering_breaks_float_ties():
    # 2a/n with n = 3 and n = 6 give equal rationals; float sums could disagree
    a = fitness(Digraph.from_arcs(3, [(0, 1)]))
    b = fitness(Digraph.from_arcs(6, [(0, 1), (2, 3)]))
    assert a.asym_density_exact == b.asym_density_exact == Fraction(2, 3)


@given(digraphs(min_order=1, max_order=7))
def test_matches_hand_evaluation(d):
    fb = fitness(d)
    assert fb.exact_total == hand_fitness(d)
    assert fb.total >= 0
    assert fb.total == pytest.approx(sum(v for _, v in fb.terms()), abs=1e-12)


@given(digraphs(min_order=1, max_order=7), st.randoms(use_true_random=False))
def test_isomorphism_invariant(d, rnd):
    perm = list(range(d.order))
    rnd.shuffle(perm)
    assert fitness(d.permuted(perm)) == fitness(d)


@given(digraphs(min_order=1, max_order=7))
def test_zero_iff_characterisation(d):
    fb = fitness(d)
    zero = (d.order == 5 and fb.asymmetric_arcs == 0 and fb.digons == 5
            and fb.sym_triangles == 0 and fb.mixed_triangles == 0)
    assert (fb.exact_total == 0) == zero
