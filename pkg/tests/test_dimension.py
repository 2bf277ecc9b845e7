"""Nested-interval dimension estimator, analytic presets, measured levels."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from primecantor.chains import ExponentSequence, enumerate_tree
from primecantor.dimension import (
    DimensionParams,
    LevelStats,
    branching_growth_log,
    falconer_estimate,
    falconer_profile,
    measured_levels,
    middle_thirds_levels,
    paper_levels_general,
    paper_levels_simple,
    proposition_bound,
    theorem_bound,
)
from primecantor.errors import InapplicableLevelsError, TruncatedTreeError

LOG2, LOG3 = math.log(2.0), math.log(3.0)


def test_level_stats_from_values():
    s = LevelStats.from_values(3, 4.0, 0.25, "measured")
    assert s.log_m == pytest.approx(math.log(4.0))
    assert s.log_eps == pytest.approx(math.log(0.25))
    with pytest.raises(ValueError):
        LevelStats.from_values(1, 0.0, 0.5)


def test_dimension_params_validation():
    DimensionParams(a1=1009)
    with pytest.raises(ValueError):
        DimensionParams(a1=1)
    with pytest.raises(ValueError):
        DimensionParams(a1=10, delta=1.5)
    with pytest.raises(ValueError):
        DimensionParams(a1=10, theta=Fraction(5), R=Fraction(3))


def test_middle_thirds_estimate_matches_closed_form():
    # Finite-k value of the two-branch, 3**-k-gap construction:
    # (k-1) log2 / (k log3 - log2).
    levels = middle_thirds_levels(40)
    got = falconer_estimate(levels, 40)
    want = 39 * LOG2 / (40 * LOG3 - LOG2)
    assert got == pytest.approx(want, abs=1e-12)
    assert abs(got - LOG2 / LOG3) < 0.01  # converging toward log2/log3


def test_middle_thirds_estimates_increase_toward_limit():
    levels = middle_thirds_levels(60)
    values = [falconer_estimate(levels, k) for k in range(2, 61)]
    assert values == sorted(values)
    assert values[-1] < LOG2 / LOG3


def test_direct_substitution_half():
    levels = [
        LevelStats(1, LOG2, math.log(1 / 3)),
        LevelStats(2, LOG2, math.log(1 / 8)),
    ]
    # m_2 * eps_2 = 1/4, so the ratio is log2 / log4.
    assert falconer_estimate(levels, 2) == pytest.approx(0.5, abs=1e-12)


def test_falconer_estimate_validation():
    levels = middle_thirds_levels(5)
    with pytest.raises(InapplicableLevelsError):
        falconer_estimate(levels, 9)
    with pytest.raises(InapplicableLevelsError):
        falconer_estimate(levels + [LevelStats(7, LOG2, -9.0)], 7)
    with pytest.raises(InapplicableLevelsError):
        falconer_estimate([LevelStats(1, math.log(1.5), -1.0)], 1)
    with pytest.raises(InapplicableLevelsError):
        falconer_estimate([LevelStats(1, LOG2, 0.0)], 1)  # m * eps >= 1
    with pytest.raises(InapplicableLevelsError):
        falconer_estimate(levels + [LevelStats(3, LOG2, -9.0)], 3)


def test_falconer_profile_tail_minimum():
    levels = middle_thirds_levels(10)
    profile, proxy = falconer_profile(levels)
    ks = [k for k, _ in profile]
    assert ks == list(range(1, 11))
    tail = [est for k, est in profile if k > 5]
    assert proxy == min(tail)


def test_paper_levels_simple_substitutions():
    (lvl2,) = paper_levels_simple(7, 1.0, 0.0, 2)
    assert lvl2.k == 2
    assert lvl2.log_m == pytest.approx(2 * math.log(7))
    assert lvl2.log_eps == pytest.approx(-2 * LOG3 + (1 / 3 - 3) * math.log(8))
    lvl3 = paper_levels_simple(5, 1.0, 0.5, 3)[-1]
    assert lvl3.log_m == pytest.approx(4.5 * math.log(5))
    assert lvl3.log_eps == pytest.approx(-3 * LOG3 + (1 / 3 - 9) * math.log(6))


def test_paper_levels_simple_log_identity():
    for p, d1, delta in [(11, 0.5, 0.01), (101, 2.0, 0.25)]:
        for lvl in paper_levels_simple(p, d1, delta, 6):
            predicted = 3.0 ** (lvl.k - 2) * (2 - delta) + math.log(d1) / math.log(p)
            assert lvl.log_m / math.log(p) == pytest.approx(predicted)


def test_paper_levels_simple_validation():
    with pytest.raises(ValueError):
        paper_levels_simple(1, 0.5, 0.01, 5)
    with pytest.raises(ValueError):
        paper_levels_simple(7, 0.5, 0.01, 1)
    with pytest.raises(ValueError):
        paper_levels_simple(7, 0.0, 0.01, 5)


def test_paper_levels_general_substitution():
    params = DimensionParams(a1=3, Q=1.0, L=1.0, theta=Fraction(1), R=Fraction(2))
    es = ExponentSequence.constant(2)
    (lvl2,) = paper_levels_general(params, es, 2)
    assert lvl2.log_eps == pytest.approx(math.log(1 / 32))
    assert lvl2.log_m == pytest.approx(math.log(3 / (4 * math.log(3))))


def test_paper_levels_general_estimate_approaches_one():
    es = ExponentSequence.constant(2)
    prev = 0.0
    for a1 in (1009, 100003, 1000003):
        params = DimensionParams(a1=a1, theta=Fraction(1), R=Fraction(2))
        est = falconer_estimate(paper_levels_general(params, es, 20), 20)
        assert est > prev
        prev = est
    assert prev > 0.999


def test_paper_levels_general_needs_positive_theta():
    params = DimensionParams(a1=101, theta=Fraction(0), R=Fraction(3))
    es = ExponentSequence.constant(1)
    with pytest.raises(ValueError):
        paper_levels_general(params, es, 4)


def test_proposition_bound_values():
    assert proposition_bound(2, 3) == pytest.approx(
        1 / (1 + 3 / (2 * LOG2)), rel=1e-12
    )
    p = 2521008887
    eps = 1 - proposition_bound(p, 3)
    assert eps == pytest.approx(3 / (p * math.log(p) + 3), rel=1e-6)
    assert eps < 1e-10
    with pytest.raises(ValueError):
        proposition_bound(1, 3)


def test_theorem_bound_values():
    assert theorem_bound(11, 2) == pytest.approx(
        1 / (1 + 2 / (11 * math.log(11))), rel=1e-12
    )
    assert round(theorem_bound(11, 2), 4) == 0.9295
    assert round(theorem_bound(2, 2), 4) == 0.4094


def test_measured_levels_cubic_tree():
    es = ExponentSequence.constant(3)
    tree = enumerate_tree(2, es, 2)
    levels = measured_levels(tree)
    assert [lvl.k for lvl in levels] == [2, 3]
    assert all(lvl.source == "measured" for lvl in levels)
    lvl2, lvl3 = levels
    assert lvl2.log_m == pytest.approx(math.log(5))
    # Smallest adjacent sibling gap under the root: between the intervals of
    # 17 and 19, i.e. 19**(1/9) - 18**(1/9); the certified bound sits just
    # below the true value.
    true_gap = 19.0 ** (1 / 9) - 18.0 ** (1 / 9)
    eps2 = math.exp(lvl2.log_eps)
    assert eps2 <= true_gap + 1e-12
    assert eps2 > true_gap - 1e-4
    # Level-3 branching: minimum successor count over the five level-2 nodes.
    from primecantor.chains import admissible_interval
    from primecantor.primality import count_primes_in_range

    min_m3 = min(
        count_primes_in_range(*admissible_interval(a, 3))
        for a in (11, 13, 17, 19, 23)
    )
    assert lvl3.log_m == pytest.approx(math.log(min_m3))
    assert math.exp(lvl3.log_eps) < eps2  # gaps shrink with depth


def test_measured_levels_requires_two_node_levels():
    es = ExponentSequence.constant(3)
    with pytest.raises(TruncatedTreeError):
        measured_levels(enumerate_tree(2, es, 0))


def test_measured_levels_rejects_truncated_trees():
    es = ExponentSequence.constant(3)
    with pytest.raises(TruncatedTreeError):
        measured_levels(enumerate_tree(2, es, 2, branch_cap=2))


def test_measured_feeds_estimator():
    es = ExponentSequence.constant(3)
    levels = measured_levels(enumerate_tree(2, es, 2))
    est = falconer_estimate(levels, 3)
    assert 0.0 < est < 1.0


@given(
    st.floats(min_value=1.1, max_value=6.0),
    st.floats(min_value=0.05, max_value=1.0),
    st.floats(min_value=0.1, max_value=3.0),
)
@settings(max_examples=200, deadline=None)
def test_branching_growth_log_monotone(t, s_frac, L):
    s = t * s_frac * 0.9  # keep t > s > 0
    x0 = math.exp(L / (t - s))
    lo = max(2.0, x0)
    hi = lo * 1.7
    assert branching_growth_log(hi, t, s, L) >= branching_growth_log(
        lo, t, s, L
    ) - 1e-9


def test_branching_growth_log_validation():
    with pytest.raises(ValueError):
        branching_growth_log(1.0, 2.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        branching_growth_log(10.0, 1.0, 2.0, 1.0)
