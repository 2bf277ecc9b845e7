"""Chain intervals, successor enumeration, greedy extension, tree building."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from primecantor.chains import (
    ExponentSequence,
    PrimeChain,
    admissible_interval,
    branching_lower_bound,
    count_successors,
    counting_subinterval,
    enumerate_tree,
    extend_greedy,
    measured_branching_ratio,
    successors,
)
from primecantor.errors import ResourceBudgetError
from primecantor.primality import primes_in_range


def test_exponent_sequence_constant():
    es = ExponentSequence.constant(3)
    assert es.c(1) == es.c(7) == 3
    assert es.C(0) == 1
    assert es.C(4) == 81
    assert es.theta == 2 and es.R == 3


def test_exponent_sequence_head_tail():
    es = ExponentSequence.of([3, Fraction(5, 2)], 2)
    assert es.c(1) == 3
    assert es.c(2) == Fraction(5, 2)
    assert es.c(3) == es.c(10) == 2
    assert es.C(3) == 15
    assert es.theta == 1 and es.R == 3


def test_exponent_sequence_validation():
    with pytest.raises(ValueError):
        ExponentSequence.of([3], 2, theta=Fraction(3, 2))  # 2 < 1 + theta
    with pytest.raises(ValueError):
        ExponentSequence.constant(Fraction(1, 2))  # below 1 + theta for any theta >= 0
    with pytest.raises(IndexError):
        ExponentSequence.constant(2).c(0)


def test_prime_chain_seed_rejects_composite():
    es = ExponentSequence.constant(3)
    with pytest.raises(ValueError):
        PrimeChain.seed(4, es)
    chain = PrimeChain.seed(2, es)
    assert chain.last == 2 and len(chain) == 1
    assert chain.next_exponent() == 3


def test_admissible_interval_examples():
    assert admissible_interval(2, 3) == (8, 26)
    assert admissible_interval(11, 3) == (1331, 1727)
    assert admissible_interval(2, 2) == (4, 8)
    # Fractional exponent: [2**(5/2), 3**(5/2)) ~ [5.65, 15.58]
    assert admissible_interval(2, Fraction(5, 2)) == (6, 15)


def test_counting_subinterval_examples():
    assert counting_subinterval(2, 3) == (8, 12)
    assert counting_subinterval(11, 3) == (1331, 1452)
    assert counting_subinterval(2, 2) == (4, 6)


@given(
    st.integers(min_value=2, max_value=10**6),
    st.fractions(min_value=2, max_value=4, max_denominator=6),
)
@settings(max_examples=200, deadline=None)
def test_counting_window_inside_admissible(a, c):
    alo, ahi = admissible_interval(a, c)
    clo, chi = counting_subinterval(a, c)
    assert alo == clo
    assert alo <= chi <= ahi
    n, d = c.numerator, c.denominator
    # chi = floor(a**(c-1) * (a+1)): sandwich certificate.
    assert chi**d <= a ** (n - d) * (a + 1) ** d < (chi + 1) ** d


@given(st.integers(min_value=2, max_value=10**4), st.fractions(min_value=2, max_value=4, max_denominator=6))
@settings(max_examples=150, deadline=None)
def test_adjacent_admissible_intervals_tile(a, c):
    # Consecutive bases produce contiguous, non-overlapping integer ranges.
    _, hi_a = admissible_interval(a, c)
    lo_next, _ = admissible_interval(a + 1, c)
    assert lo_next == hi_a + 1


def test_successors_examples():
    es = ExponentSequence.constant(3)
    chain = PrimeChain.seed(2, es)
    assert successors(chain, "full") == [11, 13, 17, 19, 23]
    assert successors(chain, "counting") == [11]
    assert count_successors(chain, "full") == 5
    two_eleven = chain.extended(11)
    assert successors(two_eleven, "full")[0] == 1361
    with pytest.raises(ValueError):
        successors(chain, "bogus")


def test_successors_match_direct_sieve():
    es = ExponentSequence.constant(Fraction(5, 2))
    chain = PrimeChain.seed(3, es)
    lo, hi = admissible_interval(3, Fraction(5, 2))
    assert successors(chain, "full") == primes_in_range(lo, hi)


def test_extend_greedy_mills():
    es = ExponentSequence.constant(3)
    chain = extend_greedy(PrimeChain.seed(2, es), 3)
    assert chain.elements == (2, 11, 1361, 2521008887)
    assert chain.nesting_ok()
    assert chain.probable_prime_flags() == (False,) * 4


def test_extend_greedy_square_case():
    es = ExponentSequence.constant(2)
    chain = extend_greedy(PrimeChain.seed(2, es), 2)
    assert chain.elements == (2, 5, 29)


def test_extend_greedy_zero_steps():
    es = ExponentSequence.constant(3)
    chain = PrimeChain.seed(5, es)
    assert extend_greedy(chain, 0) is chain
    with pytest.raises(ValueError):
        extend_greedy(chain, -1)


def test_nesting_ok_detects_violation():
    es = ExponentSequence.constant(3)
    bad = PrimeChain(es, (2, 29))
    assert not bad.nesting_ok()
    good = PrimeChain(es, (2, 11, 1361))
    assert good.nesting_ok()


def test_enumerate_tree_depth0():
    es = ExponentSequence.constant(3)
    root = enumerate_tree(2, es, 0)
    assert root.children == []
    assert root.branching_total == 0
    assert not root.truncated
    assert root.depth() == 1
    assert root.level == 1


def test_enumerate_tree_depth1_full():
    es = ExponentSequence.constant(3)
    root = enumerate_tree(2, es, 1)
    assert root.branching_total == 5
    assert [c.label for c in root.children] == [11, 13, 17, 19, 23]
    assert not root.truncated
    assert root.depth() == 2
    assert [n.label for n in root.nodes_at_level(2)] == [11, 13, 17, 19, 23]


def test_enumerate_tree_cap_records_true_totals():
    es = ExponentSequence.constant(2)
    root = enumerate_tree(2, es, 2, branch_cap=2)
    assert root.branching_total == 2  # primes {5, 7} in [4, 8]
    assert not root.truncated
    assert sum(1 for _ in root.walk()) <= 7
    for child in root.children:
        lo, hi = admissible_interval(child.label, 2)
        assert child.branching_total == len(primes_in_range(lo, hi))
        assert len(child.children) <= 2
        assert child.truncated == (len(child.children) < child.branching_total)


def test_enumerate_tree_count_leaves():
    es = ExponentSequence.constant(3)
    root = enumerate_tree(2, es, 1, count_leaves=True)
    for leaf in root.children:
        lo, hi = admissible_interval(leaf.label, 3)
        assert leaf.branching_total == len(primes_in_range(lo, hi))
        assert leaf.truncated == (leaf.branching_total > 0)


def test_enumerate_tree_budget():
    es = ExponentSequence.constant(3)
    with pytest.raises(ResourceBudgetError):
        enumerate_tree(2, es, 2, node_budget=10)


def test_tree_invariants():
    es = ExponentSequence.constant(2)
    root = enumerate_tree(3, es, 2)
    for node in root.walk():
        assert len(node.children) <= max(node.branching_total, 0)
        if node.children:
            labels = [c.label for c in node.children]
            assert labels == sorted(labels)
            assert node.truncated == (len(labels) < node.branching_total)
            lo, hi = admissible_interval(node.label, 2)
            assert all(lo <= l <= hi for l in labels)


def test_branching_lower_bound_examples():
    assert branching_lower_bound(2, 3, 1, 1) == pytest.approx(
        4 / (3 * math.log(2)), rel=1e-12
    )
    assert branching_lower_bound(11, 3, 1, 1) == pytest.approx(
        121 / (3 * math.log(11)), rel=1e-12
    )
    assert branching_lower_bound(7, 1, 2.0, 1) == pytest.approx(
        2.0 / math.log(7), rel=1e-12
    )


def test_measured_branching_ratio_inverts_bound():
    # With m equal to the floor at Q = 1, the ratio recovers Q up to fp noise.
    m = branching_lower_bound(11, 3, 1.0, 1.0)
    # measured_branching_ratio expects integer-like m; use the raw formula scale
    assert measured_branching_ratio(11, 3, 17) == pytest.approx(
        17 * 3 * math.log(11) / 11**2, rel=1e-12
    )
    assert m > 0
