"""Empirical short-interval prime density measurements.

The chain construction leans on short intervals [x, x + x**gamma] and
[p**c, p**c + p**(c-1)] holding their expected share of primes.  The
theory guarantees this only for sufficiently large x with unspecified
constants, so this module measures: it reports counts and density ratios
and leaves thresholds to the caller.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import primality
from .certified import Rational, introot
from .chains import counting_subinterval
from .errors import EmptyCensusError
from .primality import SieveConfig, DEFAULT_SIEVE


@dataclass(frozen=True)
class SurveyRecord:
    """One short-interval observation."""

    anchor: int
    exponent_label: str
    lo: int
    hi: int
    count: int
    density_ratio: float

    def csv_row(self) -> str:
        return (
            f"{self.anchor},{self.lo},{self.hi},{self.count},"
            f"{self.density_ratio:.6f}"
        )


CSV_HEADER = "anchor,lo,hi,count,density_ratio"


def _gamma_record(args) -> SurveyRecord:
    x, gamma, sieve_config = args
    length = introot(x ** gamma.numerator, gamma.denominator)
    lo, hi = x, x + length
    count = primality.count_primes_in_range(lo, hi, sieve_config)
    ratio = count * math.log(x) / math.exp(float(gamma) * math.log(x))
    return SurveyRecord(x, f"gamma={gamma}", lo, hi, count, ratio)


def gamma_survey(
    x_values: Sequence[int],
    gamma: Rational,
    sieve_config: SieveConfig = DEFAULT_SIEVE,
    workers: int = 1,
) -> List[SurveyRecord]:
    """Count primes in [x, x + floor(x**gamma)] for each anchor x.

    density_ratio = count * ln x / x**gamma, the empirical counterpart of
    the density constant the short-interval lemmas postulate (close to 1
    under the usual prime-counting heuristics).
    """
    gamma = Fraction(gamma)
    if not Fraction(1, 2) <= gamma <= 1:
        raise ValueError("gamma must lie in [1/2, 1]")
    for x in x_values:
        if x < 2:
            raise ValueError("anchors must be >= 2")
    jobs = [(x, gamma, sieve_config) for x in x_values]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_gamma_record, jobs))
    else:
        records = [_gamma_record(job) for job in jobs]
    return records


def _anchor_upper_bound(X: int, c: Fraction) -> int:
    """floor(X * (3/2) ** (1/c)), by clearing the rational exponent."""
    n, d = c.numerator, c.denominator
    # m <= X * (3/2)**(d/n)  <=>  m**n * 2**d <= X**n * 3**d
    target = X ** n * 3 ** d
    m = introot(target // 2 ** d, n)
    while (m + 1) ** n * 2 ** d <= target:
        m += 1
    while m > 0 and m ** n * 2 ** d > target:
        m -= 1
    return m


def matomaki_fraction(
    X: int,
    c: Rational,
    d_threshold: float,
    sieve_config: SieveConfig = DEFAULT_SIEVE,
    workers: int = 1,
) -> Tuple[int, int, float]:
    """Fraction of anchor primes whose counting window is prime-rich.

    Enumerates primes p in [X, (3/2)**(1/c) * X] and tests whether
    [p**c, p**c + p**(c-1)] holds more than
    d_threshold * p**(c-1) / (c * ln p) primes.  Returns (total, good,
    fraction); an empty anchor census is an error since the fraction
    would be undefined.
    """
    c = Fraction(c)
    if X < 2:
        raise ValueError("X must be >= 2")
    if c < 2:
        raise ValueError("c must be >= 2")
    if not 0 <= d_threshold < 1:
        raise ValueError("d_threshold must lie in [0, 1)")
    anchors = primality.primes_in_range(X, _anchor_upper_bound(X, c), sieve_config)
    if not anchors:
        raise EmptyCensusError(
            f"no primes in [{X}, (3/2)**(1/{c}) * {X}]"
        )
    jobs = [(p, c, d_threshold, sieve_config) for p in anchors]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            flags = list(pool.map(_window_is_good, jobs))
    else:
        flags = [_window_is_good(job) for job in jobs]
    total = len(anchors)
    good = sum(flags)
    return total, good, good / total


def _window_is_good(args) -> bool:
    p, c, d_threshold, sieve_config = args
    lo, hi = counting_subinterval(p, c)
    count = primality.count_primes_in_range(lo, hi, sieve_config)
    c_f = float(c)
    expected = math.exp((c_f - 1.0) * math.log(p)) / (c_f * math.log(p))
    return count > d_threshold * expected


def window_record(
    p: int,
    c: Rational,
    sieve_config: SieveConfig = DEFAULT_SIEVE,
) -> SurveyRecord:
    """The counting-window observation for one anchor prime."""
    c = Fraction(c)
    lo, hi = counting_subinterval(p, c)
    count = primality.count_primes_in_range(lo, hi, sieve_config)
    c_f = float(c)
    ratio = count * c_f * math.log(p) / math.exp((c_f - 1.0) * math.log(p))
    return SurveyRecord(p, f"c={c}", lo, hi, count, ratio)
