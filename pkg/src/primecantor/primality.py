"""Exact primality decisions and prime enumeration over big-integer intervals.

Primality is deterministic below ``DETERMINISTIC_LIMIT`` (a known exact
Miller-Rabin witness set) and strong-probable beyond it: a Baillie-PSW style
combination of a strong base-2 test and a strong Lucas test, plus a
configurable number of extra Miller-Rabin rounds whose bases are derived
from a fixed recorded seed.  All functions are pure; the only shared state
is a lazily built read-only table of small base primes.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterator, List, Optional

from .errors import NoPrimeInIntervalError, RangeTooLargeError

# Smallest composite that fools the first 13 prime bases is
# 3317044064679887385961981; below it the witness set is exact.
DETERMINISTIC_LIMIT = 3317044064679887385961981
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_WHEEL_MODULUS = 210
_WHEEL_RESIDUES = tuple(
    r for r in range(_WHEEL_MODULUS) if math.gcd(r, _WHEEL_MODULUS) == 1
)


@dataclass(frozen=True)
class PrimalityConfig:
    """Reproducibility knobs for the probable-prime regime.

    ``extra_rounds`` random-base Miller-Rabin rounds are appended to the
    Baillie-PSW test above the deterministic threshold; the bases depend
    only on ``rng_seed`` and the tested integer, so results are stable
    across calls and threads.
    """

    extra_rounds: int = 2
    rng_seed: int = 20240229


@dataclass(frozen=True)
class SieveConfig:
    """Work and memory budget for interval enumeration."""

    segment_size: int = 1 << 18
    base_prime_limit: int = 1_000_000
    width_limit: int = 200_000_000
    allow_candidate_fallback: bool = True


DEFAULT_PRIMALITY = PrimalityConfig()
DEFAULT_SIEVE = SieveConfig()

_BASE_PRIME_CACHE: dict[int, List[int]] = {}


def small_primes(limit: int) -> List[int]:
    """All primes <= limit via a classic sieve; cached per limit."""
    cached = _BASE_PRIME_CACHE.get(limit)
    if cached is not None:
        return cached
    if limit < 2:
        primes: List[int] = []
    else:
        flags = bytearray([1]) * (limit + 1)
        flags[0:2] = b"\x00\x00"
        for p in range(2, math.isqrt(limit) + 1):
            if flags[p]:
                flags[p * p :: p] = b"\x00" * len(range(p * p, limit + 1, p))
        primes = [i for i in range(limit + 1) if flags[i]]
    _BASE_PRIME_CACHE[limit] = primes
    return primes


def _miller_rabin_witness(n: int, a: int, d: int, s: int) -> bool:
    """True if a witnesses compositeness of n, with n-1 = d * 2**s, d odd."""
    a %= n
    if a == 0:
        return False
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def _strong_lucas_prp(n: int) -> bool:
    """Strong Lucas probable-prime test with Selfridge's parameter choice."""
    # Find D = 5, -7, 9, -11, ... with Jacobi(D, n) = -1.
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == 0:
            return False
        if j == -1:
            break
        d = -d - 2 if d > 0 else -d + 2
    p, q = 1, (1 - d) // 4

    # n + 1 = k * 2**s with k odd.
    k = n + 1
    s = 0
    while k % 2 == 0:
        k //= 2
        s += 1

    u, v, qk = _lucas_uv(k, p, q, d, n)
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if v == 0:
            return True
    return False


def _lucas_uv(k: int, p: int, q: int, d: int, n: int):
    """(U_k, V_k, Q^k) mod n by binary ladder."""
    u, v = 1, p
    qk = q % n
    for bit in bin(k)[3:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) % n, (d * u + p * v) % n
            if u & 1:
                u += n
            if v & 1:
                v += n
            u, v = (u >> 1) % n, (v >> 1) % n
            qk = qk * q % n
    return u, v, qk


def _jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0."""
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    if n == 1:
        return result
    return 0


def is_prime(n: int, config: PrimalityConfig = DEFAULT_PRIMALITY) -> bool:
    """Exact below DETERMINISTIC_LIMIT, strong probable-prime above it."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 43 * 43:
        return True

    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1

    if n < DETERMINISTIC_LIMIT:
        return not any(
            _miller_rabin_witness(n, a, d, s) for a in _DETERMINISTIC_BASES
        )

    # Baillie-PSW: strong base-2 plus strong Lucas, after a square check.
    if _miller_rabin_witness(n, 2, d, s):
        return False
    r = math.isqrt(n)
    if r * r == n:
        return False
    if not _strong_lucas_prp(n):
        return False
    if config.extra_rounds:
        rng = random.Random(f"{config.rng_seed}:{n}")
        for _ in range(config.extra_rounds):
            a = rng.randrange(2, n - 1)
            if _miller_rabin_witness(n, a, d, s):
                return False
    return True


def is_probable_only(n: int) -> bool:
    """True when a prime verdict for n rests on probabilistic tests."""
    return n >= DETERMINISTIC_LIMIT


def _sieve_segment(
    lo: int, hi: int, base_primes: List[int], need_check: bool,
    config: PrimalityConfig,
) -> Iterator[int]:
    """Yield primes in [lo, hi] after striking multiples of base_primes.

    When ``need_check`` the base primes do not reach sqrt(hi), so survivors
    are confirmed with is_prime.
    """
    width = hi - lo + 1
    flags = bytearray([1]) * width
    for p in base_primes:
        if p * p > hi:
            break
        start = max(p * p, ((lo + p - 1) // p) * p)
        flags[start - lo :: p] = b"\x00" * ((hi - start) // p + 1)
    for i in range(width):
        if flags[i]:
            n = lo + i
            if n < 2:
                continue
            if need_check and not is_prime(n, config):
                continue
            yield n


def iter_primes_in_range(
    lo: int,
    hi: int,
    sieve_config: SieveConfig = DEFAULT_SIEVE,
    primality_config: PrimalityConfig = DEFAULT_PRIMALITY,
) -> Iterator[int]:
    """Ascending primes p with lo <= p <= hi, lazily.

    Segments are struck with base primes up to min(sqrt(hi), configured
    limit); when the base primes cannot certify survivors the per-candidate
    test takes over, which is how intervals between doubly-exponential chain
    bounds stay reachable.
    """
    if lo > hi:
        return
    lo = max(lo, 2)
    root = math.isqrt(hi)
    base_limit = min(root, sieve_config.base_prime_limit)
    need_check = root > sieve_config.base_prime_limit
    if need_check and not sieve_config.allow_candidate_fallback:
        raise RangeTooLargeError(
            f"sieving to sqrt({hi}) exceeds base prime limit "
            f"{sieve_config.base_prime_limit} and fallback is disabled"
        )
    base_primes = small_primes(max(base_limit, 3))
    seg = max(sieve_config.segment_size, 16)
    start = lo
    while start <= hi:
        end = min(start + seg - 1, hi)
        yield from _sieve_segment(
            start, end, base_primes, need_check, primality_config
        )
        start = end + 1


def primes_in_range(
    lo: int,
    hi: int,
    sieve_config: SieveConfig = DEFAULT_SIEVE,
    primality_config: PrimalityConfig = DEFAULT_PRIMALITY,
) -> List[int]:
    """Exactly the primes in [lo, hi], ascending."""
    if lo > hi:
        raise ValueError("primes_in_range requires lo <= hi")
    if hi - lo + 1 > sieve_config.width_limit:
        raise RangeTooLargeError(
            f"interval width {hi - lo + 1} exceeds budget "
            f"{sieve_config.width_limit}"
        )
    return list(iter_primes_in_range(lo, hi, sieve_config, primality_config))


def count_primes_in_range(
    lo: int,
    hi: int,
    sieve_config: SieveConfig = DEFAULT_SIEVE,
    primality_config: PrimalityConfig = DEFAULT_PRIMALITY,
) -> int:
    """len(primes_in_range(lo, hi)) without materializing the list."""
    if lo > hi:
        raise ValueError("count_primes_in_range requires lo <= hi")
    if hi - lo + 1 > sieve_config.width_limit:
        raise RangeTooLargeError(
            f"interval width {hi - lo + 1} exceeds budget "
            f"{sieve_config.width_limit}"
        )
    return sum(1 for _ in iter_primes_in_range(lo, hi, sieve_config, primality_config))


def first_prime_in_range(
    lo: int,
    hi: int,
    primality_config: PrimalityConfig = DEFAULT_PRIMALITY,
) -> int:
    """Smallest prime in [lo, hi]; raises NoPrimeInIntervalError if none.

    Scans wheel-filtered candidates directly, so it works far past any
    sieving budget (this is the record-hunting code path).
    """
    if lo > hi:
        raise NoPrimeInIntervalError(lo, hi)
    for n in (2, 3, 5, 7):
        if lo <= n <= hi:
            return n
    n = max(lo, 11)
    base = (n // _WHEEL_MODULUS) * _WHEEL_MODULUS
    while base <= hi:
        for r in _WHEEL_RESIDUES:
            c = base + r
            if c < n:
                continue
            if c > hi:
                raise NoPrimeInIntervalError(lo, hi)
            if is_prime(c, primality_config):
                return c
        base += _WHEEL_MODULUS
    raise NoPrimeInIntervalError(lo, hi)


def first_primes_in_range(
    lo: int,
    hi: int,
    count: int,
    primality_config: PrimalityConfig = DEFAULT_PRIMALITY,
) -> List[int]:
    """The smallest ``count`` primes in [lo, hi] (fewer if exhausted)."""
    found: List[int] = []
    cursor = lo
    while len(found) < count and cursor <= hi:
        try:
            p = first_prime_in_range(cursor, hi, primality_config)
        except NoPrimeInIntervalError:
            break
        found.append(p)
        cursor = p + 1
    return found
