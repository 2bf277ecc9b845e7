"""Construction and enumeration of prime-chain trees.

A chain (a_1, ..., a_k) of primes with a_{i+1} in the admissible interval
[ceil(a_i ** c_{i+1}), ceil((a_i + 1) ** c_{i+1}) - 1] pins down a family
of constants A with floor(A ** C_i) = a_i at every level; the tree of all
such chains is the Cantor-type set whose dimension the rest of the package
estimates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Literal, Optional, Sequence, Tuple

from . import primality
from .certified import Rational, pow_ceil, pow_floor, introot
from .errors import NoPrimeInIntervalError, ResourceBudgetError
from .primality import PrimalityConfig, SieveConfig, DEFAULT_PRIMALITY, DEFAULT_SIEVE

Policy = Literal["full", "counting"]


@dataclass(frozen=True)
class ExponentSequence:
    """The exponent sequence (c_k): an explicit head, then a constant tail.

    All values are exact rationals with 1 + theta <= c_k <= R; the partial
    products C_k are computed on demand and stay exact.
    """

    head: Tuple[Fraction, ...]
    tail: Fraction
    theta: Fraction
    R: Fraction

    @classmethod
    def constant(cls, c: Rational, theta: Optional[Rational] = None,
                 R: Optional[Rational] = None) -> "ExponentSequence":
        c = Fraction(c)
        return cls.of((), c, theta, R)

    @classmethod
    def of(cls, head: Sequence[Rational], tail: Rational,
           theta: Optional[Rational] = None,
           R: Optional[Rational] = None) -> "ExponentSequence":
        head_f = tuple(Fraction(c) for c in head)
        tail_f = Fraction(tail)
        values = head_f + (tail_f,)
        theta_f = Fraction(theta) if theta is not None else min(values) - 1
        r_f = Fraction(R) if R is not None else max(values)
        return cls(head_f, tail_f, theta_f, r_f)

    def __post_init__(self):
        if self.theta < 0:
            raise ValueError("theta must be nonnegative")
        for c in self.head + (self.tail,):
            if not (1 + self.theta <= c <= self.R):
                raise ValueError(
                    f"exponent {c} outside [1 + theta, R] = "
                    f"[{1 + self.theta}, {self.R}]"
                )

    def c(self, k: int) -> Fraction:
        """c_k, 1-indexed."""
        if k < 1:
            raise IndexError("exponent index is 1-based")
        if k <= len(self.head):
            return self.head[k - 1]
        return self.tail

    def C(self, k: int) -> Fraction:
        """C_k = c_1 * ... * c_k (C_0 = 1)."""
        if k < 0:
            raise IndexError("partial product index must be >= 0")
        out = Fraction(1)
        for i in range(1, k + 1):
            out *= self.c(i)
        return out


@dataclass(frozen=True)
class PrimeChain:
    """A path (a_1, ..., a_k) through the construction tree."""

    exponents: ExponentSequence
    elements: Tuple[int, ...]

    @classmethod
    def seed(cls, p: int, exponents: ExponentSequence,
             config: PrimalityConfig = DEFAULT_PRIMALITY) -> "PrimeChain":
        if not primality.is_prime(p, config):
            raise ValueError(f"seed {p} is not prime")
        return cls(exponents, (p,))

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def last(self) -> int:
        return self.elements[-1]

    def extended(self, p: int) -> "PrimeChain":
        return PrimeChain(self.exponents, self.elements + (p,))

    def next_exponent(self) -> Fraction:
        """The exponent c_{k+1} used to extend this chain."""
        return self.exponents.c(len(self.elements) + 1)

    def nesting_ok(self) -> bool:
        """The interval-membership invariant, checked exactly at each step."""
        for i in range(len(self.elements) - 1):
            c = self.exponents.c(i + 2)
            lo, hi = admissible_interval(self.elements[i], c)
            if not lo <= self.elements[i + 1] <= hi:
                return False
        return True

    def probable_prime_flags(self) -> Tuple[bool, ...]:
        return tuple(primality.is_probable_only(a) for a in self.elements)


def admissible_interval(a: int, c: Rational) -> Tuple[int, int]:
    """Integer bounds [ceil(a**c), ceil((a+1)**c) - 1].

    Any prime in this interval extends the chain while keeping every
    constant in the refined level interval consistent with floor(A**C).
    The upper endpoint is the largest integer strictly below (a+1)**c,
    which matches the half-open level intervals for non-integer c too.
    """
    return pow_ceil(a, c), pow_ceil(a + 1, c) - 1


def counting_subinterval(a: int, c: Rational) -> Tuple[int, int]:
    """Integer bounds of [a**c, a**c + a**(c-1)], the short-density window."""
    c = Fraction(c)
    lo = pow_ceil(a, c)
    # floor(a**(c-1) * (a + 1)) with c - 1 = (n - d) / d.
    n, d = c.numerator, c.denominator
    hi = introot(a ** (n - d) * (a + 1) ** d, d)
    return lo, hi


def successors(
    chain: PrimeChain,
    policy: Policy = "full",
    sieve_config: SieveConfig = DEFAULT_SIEVE,
    primality_config: PrimalityConfig = DEFAULT_PRIMALITY,
) -> List[int]:
    """All primes extending the chain, ascending, under the given policy."""
    lo, hi = _successor_interval(chain.last, chain.next_exponent(), policy)
    return primality.primes_in_range(lo, hi, sieve_config, primality_config)


def count_successors(
    chain: PrimeChain,
    policy: Policy = "full",
    sieve_config: SieveConfig = DEFAULT_SIEVE,
    primality_config: PrimalityConfig = DEFAULT_PRIMALITY,
) -> int:
    lo, hi = _successor_interval(chain.last, chain.next_exponent(), policy)
    return primality.count_primes_in_range(lo, hi, sieve_config, primality_config)


def _successor_interval(a: int, c: Fraction, policy: Policy) -> Tuple[int, int]:
    if policy == "full":
        return admissible_interval(a, c)
    if policy == "counting":
        return counting_subinterval(a, c)
    raise ValueError(f"unknown policy {policy!r}")


def extend_greedy(
    chain: PrimeChain,
    steps: int,
    primality_config: PrimalityConfig = DEFAULT_PRIMALITY,
) -> PrimeChain:
    """Append the smallest admissible prime, ``steps`` times.

    Smallest-successor selection is the classical convention and yields the
    minimal constant in each level interval.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    for _ in range(steps):
        lo, hi = admissible_interval(chain.last, chain.next_exponent())
        p = primality.first_prime_in_range(lo, hi, primality_config)
        chain = chain.extended(p)
    return chain


@dataclass
class TreeNode:
    """One node of the (breadth-limited) construction tree."""

    chain: PrimeChain
    children: List["TreeNode"] = field(default_factory=list)
    branching_total: int = 0
    truncated: bool = False

    @property
    def label(self) -> int:
        return self.chain.last

    @property
    def level(self) -> int:
        return len(self.chain)

    def depth(self) -> int:
        """Number of node levels in this subtree (a lone root has depth 1)."""
        if not self.children:
            return 1
        return 1 + max(child.depth() for child in self.children)

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()

    def nodes_at_level(self, level: int) -> List["TreeNode"]:
        return [node for node in self.walk() if node.level == level]


def enumerate_tree(
    seed: int,
    exponents: ExponentSequence,
    depth: int,
    branch_cap: Optional[int] = None,
    policy: Policy = "full",
    node_budget: int = 1_000_000,
    count_leaves: bool = False,
    sieve_config: SieveConfig = DEFAULT_SIEVE,
    primality_config: PrimalityConfig = DEFAULT_PRIMALITY,
) -> TreeNode:
    """Materialize the construction tree through ``depth`` expansions.

    Every expanded node records its true successor count in
    ``branching_total``; with a branch cap only the smallest ``branch_cap``
    successors become children and the node is flagged truncated.  Nodes on
    the deepest level stay unexpanded with branching_total 0 unless
    ``count_leaves`` asks for their successor counts too (which costs one
    more level of sieving).
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if branch_cap is not None and branch_cap < 1:
        raise ValueError("branch_cap must be positive")
    root = TreeNode(PrimeChain.seed(seed, exponents, primality_config))
    budget = [1]

    def expand(node: TreeNode, remaining: int):
        if remaining == 0:
            if count_leaves:
                node.branching_total = count_successors(
                    node.chain, policy, sieve_config, primality_config
                )
                node.truncated = node.branching_total > 0
            return
        succ = successors(node.chain, policy, sieve_config, primality_config)
        node.branching_total = len(succ)
        kept = succ if branch_cap is None else succ[:branch_cap]
        node.truncated = len(kept) < len(succ)
        budget[0] += len(kept)
        if budget[0] > node_budget:
            raise ResourceBudgetError(
                f"tree node budget {node_budget} exceeded"
            )
        node.children = [TreeNode(node.chain.extended(p)) for p in kept]
        for child in node.children:
            expand(child, remaining - 1)

    expand(root, depth)
    return root


def branching_lower_bound(a: int, c: Rational, Q: float, L: float) -> float:
    """Q * a**(c-1) / (c * ln a)**L, the per-node branching floor.

    Diagnostic floating-point evaluation; not certified.
    """
    if a < 2:
        raise ValueError("branching_lower_bound requires a >= 2")
    c = float(Fraction(c))
    log_val = math.log(Q) + (c - 1.0) * math.log(a) - L * math.log(c * math.log(a))
    return math.exp(log_val)


def measured_branching_ratio(a: int, c: Rational, m: int) -> float:
    """m * (c * ln a) / a**(c-1), the empirical surrogate for the density
    constant in the branching bound."""
    c = float(Fraction(c))
    return m * c * math.log(a) / math.exp((c - 1.0) * math.log(a))
