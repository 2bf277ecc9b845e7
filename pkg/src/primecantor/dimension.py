"""Hausdorff-dimension lower bounds from nested-interval level statistics.

The estimator is the classical one for general Cantor constructions: if
every (k-1)-st level interval contains at least m_k k-th level intervals
separated by gaps of at least eps_k, then

    dim >= liminf_k  log(m_1 ... m_{k-1}) / (-log(m_k * eps_k)).

Level magnitudes here grow like p ** (3 ** k), so every statistic is kept
in log-space (natural log as a float); the final ratio only ever needs the
logarithms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Literal, Optional, Sequence, Tuple

from .certified import Rational, root_enclosure
from .chains import ExponentSequence, TreeNode
from .errors import InapplicableLevelsError, TruncatedTreeError

LOG2 = math.log(2.0)

Source = Literal["analytic", "measured"]


@dataclass(frozen=True)
class LevelStats:
    """Per-level statistics in log-space: ln of the minimum branching m_k
    and ln of the minimum gap eps_k."""

    k: int
    log_m: float
    log_eps: float
    source: Source = "analytic"

    @classmethod
    def from_values(cls, k: int, m: float, eps: float,
                    source: Source = "analytic") -> "LevelStats":
        if m <= 0 or eps <= 0:
            raise ValueError("level statistics must be positive")
        return cls(k, math.log(m), math.log(eps), source)


@dataclass(frozen=True)
class DimensionParams:
    """Inputs of the general analytic level formulas."""

    a1: int
    Q: float = 0.5
    L: float = 1.0
    theta: Fraction = Fraction(1)
    R: Fraction = Fraction(3)
    delta: float = 0.01

    def __post_init__(self):
        if self.a1 < 2:
            raise ValueError("a1 must be >= 2")
        if self.Q <= 0 or self.L <= 0:
            raise ValueError("Q and L must be positive")
        if not 0 < self.delta < 1:
            raise ValueError("delta must lie in (0, 1)")
        if self.R < 1 + self.theta:
            raise ValueError("R must be >= 1 + theta")


def _index_levels(levels: Sequence[LevelStats]) -> Dict[int, LevelStats]:
    by_k: Dict[int, LevelStats] = {}
    for stats in levels:
        if stats.k in by_k:
            raise InapplicableLevelsError(f"duplicate level index {stats.k}")
        by_k[stats.k] = stats
    return by_k


def falconer_estimate(levels: Sequence[LevelStats], k: int) -> float:
    """The finite-k lower-bound ratio log(m_1...m_{k-1}) / -log(m_k eps_k).

    The supplied levels must form a contiguous run ending at k (analytic
    presets start at index 2, whose level-1 statistic the constructions do
    not define).  When k is the lowest supplied index there is no branching
    product yet; the level's own log m_k is used as the numerator, i.e. the
    value the ratio would take if that level's geometry repeated.
    """
    by_k = _index_levels(levels)
    if k not in by_k:
        raise InapplicableLevelsError(f"no statistics for level {k}")
    lowest = min(by_k)
    for i in range(lowest, k + 1):
        if i not in by_k:
            raise InapplicableLevelsError(f"missing level {i}")
        if by_k[i].log_m < LOG2 - 1e-12:
            raise InapplicableLevelsError(
                f"m_{i} < 2: the nested-interval bound needs two children "
                "per interval"
            )
    denom = -(by_k[k].log_m + by_k[k].log_eps)
    if denom <= 0:
        raise InapplicableLevelsError("m_k * eps_k >= 1: gaps too wide")
    if k == lowest:
        numer = by_k[k].log_m
    else:
        numer = sum(by_k[i].log_m for i in range(lowest, k))
    return numer / denom


def falconer_profile(
    levels: Sequence[LevelStats],
) -> Tuple[List[Tuple[int, float]], float]:
    """Per-level estimates plus the conservative tail proxy for the liminf.

    Returns ([(k, estimate)], min over the deepest half of the levels).
    """
    by_k = _index_levels(levels)
    ks = sorted(by_k)
    profile = []
    for k in ks:
        try:
            profile.append((k, falconer_estimate(levels, k)))
        except InapplicableLevelsError:
            continue
    if not profile:
        raise InapplicableLevelsError("no level admits an estimate")
    tail = profile[-max(1, math.ceil(len(profile) / 2)):]
    return profile, min(est for _, est in tail)


def middle_thirds_levels(k_max: int) -> List[LevelStats]:
    """The textbook preset: two children per interval, gaps 3**-k."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    return [
        LevelStats(k, LOG2, -k * math.log(3.0), "analytic")
        for k in range(1, k_max + 1)
    ]


def paper_levels_simple(
    p: int, d1: float, delta: float, k_max: int
) -> List[LevelStats]:
    """Analytic level statistics of the cubic-exponent construction.

    m_k = d1 * p ** (3 ** (k-2) * (2 - delta)),
    eps_k = 3 ** -k * (p + 1) ** (1/3 - 3 ** (k-1)),
    both held as logarithms; defined for k >= 2.
    """
    if p < 2:
        raise ValueError("p must be >= 2")
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    if d1 <= 0:
        raise ValueError("d1 must be positive")
    log_p = math.log(p)
    log_p1 = math.log(p + 1)
    log3 = math.log(3.0)
    out = []
    for k in range(2, k_max + 1):
        log_m = math.log(d1) + 3.0 ** (k - 2) * (2.0 - delta) * log_p
        log_eps = -k * log3 + (1.0 / 3.0 - 3.0 ** (k - 1)) * log_p1
        out.append(LevelStats(k, log_m, log_eps, "analytic"))
    return out


def paper_levels_general(
    params: DimensionParams,
    exponents: ExponentSequence,
    k_max: int,
) -> List[LevelStats]:
    """Analytic level statistics for a general bounded exponent sequence.

    eps_k = (1/C_k) * (a1 + 1) ** ((1 - C_k) / C_1),
    m_k   = Q * a1 ** ((C_k - C_{k-1}) / C_1) / (C_k * ln a1) ** L,
    in log-space; defined for k >= 2.
    """
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    if exponents.theta <= 0:
        raise ValueError("the analytic level formulas need theta > 0")
    a1 = params.a1
    log_a1 = math.log(a1)
    log_a1p = math.log(a1 + 1)
    out = []
    c1 = exponents.C(1)
    c_prev = c1
    for k in range(2, k_max + 1):
        c_k = c_prev * exponents.c(k)
        log_eps = -_log_frac(c_k) + float((1 - c_k) / c1) * log_a1p
        log_m = (
            math.log(params.Q)
            + float((c_k - c_prev) / c1) * log_a1
            - params.L * (_log_frac(c_k) + math.log(log_a1))
        )
        out.append(LevelStats(k, log_m, log_eps, "analytic"))
        c_prev = c_k
    return out


def _log_frac(q: Fraction) -> float:
    """ln of a positive rational, safe for huge numerators."""
    return math.log(q.numerator) - math.log(q.denominator)


def proposition_bound(a1: int, R: Rational) -> float:
    """The closed-form limit 1 / (1 + R / (a1 * ln a1))."""
    if a1 < 2:
        raise ValueError("a1 must be >= 2")
    return 1.0 / (1.0 + float(Fraction(R)) / (a1 * math.log(a1)))


def theorem_bound(p: int, R: Rational) -> float:
    """Identical formula to proposition_bound, named for the seed prime."""
    return proposition_bound(p, R)


def measured_levels(
    tree: TreeNode, gap_guard_bits: int = 48
) -> List[LevelStats]:
    """Exact level statistics measured on an enumerated tree.

    For each level k >= 2 present in the tree: m_k is the minimum recorded
    branching over level-(k-1) nodes, and eps_k is a certified lower bound
    on the smallest gap between adjacent same-parent sibling intervals at
    level k.  Any truncated node invalidates the minima, so capped trees
    are rejected.
    """
    node_depth = tree.depth()
    if node_depth < 2:
        raise TruncatedTreeError(
            "measured_levels needs a tree with at least two node levels"
        )
    exponents = tree.chain.exponents
    out = []
    for k in range(2, node_depth + 1):
        parents = tree.nodes_at_level(k - 1)
        if any(p.truncated for p in parents):
            raise TruncatedTreeError(
                f"level {k - 1} contains truncated nodes; minima would lie"
            )
        if any(not p.children for p in parents):
            raise TruncatedTreeError(
                f"level {k - 1} contains unexpanded nodes"
            )
        m_k = min(p.branching_total for p in parents)
        eps_k = _min_sibling_gap(parents, exponents.C(k), gap_guard_bits)
        out.append(
            LevelStats(k, _safe_log_int_min(m_k), _log_frac(eps_k), "measured")
        )
    return out


def _min_sibling_gap(
    parents: Sequence[TreeNode], big_c: Fraction, guard_bits: int
) -> Fraction:
    """Certified lower bound on min gap between adjacent sibling intervals.

    The gap between the intervals of siblings a < b is
    b ** (1/C) - (a + 1) ** (1/C); enclosure precision doubles until the
    certified difference is positive (it must be: sibling labels differ
    by at least 2).
    """
    best: Optional[Fraction] = None
    for parent in parents:
        labels = [child.label for child in parent.children]
        for a, b in zip(labels, labels[1:]):
            gap = _certified_gap(a + 1, b, big_c, guard_bits)
            if best is None or gap < best:
                best = gap
    if best is None:
        raise TruncatedTreeError("no sibling pair on this level")
    return best


def _certified_gap(
    lower_label: int, upper_label: int, big_c: Fraction, guard_bits: int
) -> Fraction:
    # Rough scale of the gap from the mean value theorem, then refine.
    c_f = float(big_c)
    log2_gap = (
        -math.log2(c_f)
        + (1.0 / c_f - 1.0) * (upper_label.bit_length() - 1)
    )
    s = max(4, int(-log2_gap) + guard_bits)
    while True:
        width = Fraction(1, 1 << s)
        lo_b = root_enclosure(upper_label, big_c, width)
        hi_b = root_enclosure(lower_label, big_c, width)
        gap = lo_b.lo - hi_b.hi
        if gap > 0:
            return gap
        s *= 2


def _safe_log_int_min(m: int) -> float:
    if m <= 0:
        raise InapplicableLevelsError("level with zero branching")
    return math.log(m)


def branching_growth_log(x: float, t: float, s: float, L: float) -> float:
    """ln of x ** (t - s) * (t * ln x) ** -L, the factor whose monotonicity
    lets per-node branching bounds be pushed down to the seed.

    Increasing in x on x >= exp(L / (t - s)).
    """
    if x < 2 or t <= s or s <= 0 or L <= 0:
        raise ValueError("need x >= 2 and t > s > 0, L > 0")
    return (t - s) * math.log(x) - L * math.log(t * math.log(x))
