"""Largest-prime-factor machinery and the Euler totient.

P(k) denotes the largest prime dividing k, with P(1) = 0. Pointwise values
use trial division by primes up to 10**4, a deterministic primality check on
the cofactor, and Brent-cycle Pollard rho (with an input-derived seed, so the
output is reproducible) for composite cofactors. Bulk values over an interval
come from a segmented sieve that divides out every prime up to sqrt(hi).
"""

import math
import random
from dataclasses import dataclass

import numpy as np

from . import sieve

TRIAL_LIMIT = 10_000

_small_primes_cache: list[int] | None = None


def _small_primes() -> list[int]:
    global _small_primes_cache
    if _small_primes_cache is None:
        _small_primes_cache = sieve.primes_in(2, TRIAL_LIMIT).primes.tolist()
    return _small_primes_cache


@dataclass(frozen=True, eq=False)
class FactorTable:
    """Largest prime factors over a contiguous interval.

    Attributes:
        lo: First tabulated integer.
        hi: Last tabulated integer.
        lpf: int64 array with ``lpf[n - lo] == P(n)`` (and 0 at n = 1).
    """

    lo: int
    hi: int
    lpf: np.ndarray

    def __getitem__(self, n: int) -> int:
        if n < self.lo or n > self.hi:
            raise IndexError(f"{n} outside tabulated range [{self.lo}, {self.hi}]")
        return int(self.lpf[n - self.lo])

    def __len__(self) -> int:
        return int(self.lpf.size)


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of an odd composite n, Brent's cycle variant.

    Parameters are drawn from a generator seeded by n itself: identical
    inputs always factor the same way.
    """
    rng = random.Random(0x5EED ^ n)
    while True:
        y = rng.randrange(2, n - 1)
        c = rng.randrange(1, n - 1)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _largest_of_rough(m: int) -> int:
    """Largest prime factor of m when every prime factor exceeds TRIAL_LIMIT."""
    if sieve.is_prime(m):
        return m
    d = _pollard_rho(m)
    return max(_largest_of_rough(d), _largest_of_rough(m // d))


def largest_prime_factor(k: int) -> int:
    """P(k): the largest prime dividing k, with P(1) = 0.

    Raises:
        ValueError: if k < 1.
    """
    if k < 1:
        raise ValueError("largest_prime_factor requires k >= 1")
    if k == 1:
        return 0
    best = 0
    m = k
    for p in _small_primes():
        if p * p > m:
            break
        if m % p == 0:
            best = p
            while m % p == 0:
                m //= p
    if m > 1:
        # m is prime, or composite with every prime factor above TRIAL_LIMIT
        return max(best, _largest_of_rough(m))
    return best


def euler_phi(m: int) -> int:
    """Euler's totient: the count of 1 <= a <= m coprime to m."""
    if m < 1:
        raise ValueError("euler_phi requires m >= 1")
    result = m
    n = m
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            result -= result // p
            while n % p == 0:
                n //= p
    if n > 1:
        for p in _distinct_rough_factors(n):
            result -= result // p
    return result


def _distinct_rough_factors(m: int) -> set[int]:
    if sieve.is_prime(m):
        return {m}
    d = _pollard_rho(m)
    return _distinct_rough_factors(d) | _distinct_rough_factors(m // d)


def lpf_table(lo: int, hi: int, segment_length: int = sieve.DEFAULT_SEGMENT_LENGTH) -> FactorTable:
    """Exact P(n) for every n in [lo, hi], built segment by segment.

    Each segment divides out all primes up to sqrt(hi) (once per prime-power
    level, so multiplicities are exact); any cofactor left above 1 is itself
    prime and is the largest factor.

    Raises:
        ValueError: if lo < 1 or lo > hi.
    """
    if lo < 1:
        raise ValueError("interval endpoints must be positive")
    if lo > hi:
        raise ValueError(f"empty interval: lo={lo} > hi={hi}")
    root = math.isqrt(hi)
    base = np.nonzero(sieve._dense_sieve(root))[0].tolist() if root >= 2 else []
    out = np.zeros(hi - lo + 1, dtype=np.int64)
    for seg_lo in range(lo, hi + 1, segment_length):
        seg_hi = min(seg_lo + segment_length - 1, hi)
        rem = np.arange(seg_lo, seg_hi + 1, dtype=np.int64)
        lpf = np.zeros(seg_hi - seg_lo + 1, dtype=np.int64)
        for p in base:
            first = ((seg_lo + p - 1) // p) * p
            if first > seg_hi:
                continue
            lpf[first - seg_lo :: p] = p
            power = p
            while power <= seg_hi:
                start = ((seg_lo + power - 1) // power) * power
                if start > seg_hi:
                    break
                rem[start - seg_lo :: power] //= p
                power *= p
        big = rem > 1
        lpf[big] = rem[big]
        out[seg_lo - lo : seg_hi - lo + 1] = lpf
    return FactorTable(lo, hi, out)
