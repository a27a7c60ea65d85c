"""Witness quadruples and the edge-budget function they certify.

A witness for n is a quadruple (k, p, q, r) with k >= 1, primes p, q, r,
n = k*p + r and r = 1 (mod q). Its score is min{p^2 k, p k r, q r}; the
edge budget f(n) is the maximum score over all witnesses, and a single
witness is a checkable lower-bound certificate for f(n).

Two constructive strategies find witnesses at scales where exhaustive
enumeration is hopeless:

* ``strategy_bv`` picks two distinct primes p, q near n**(1/4 - eps), solves
  a = n (mod p), a = 1 (mod q), and scans the progression a (mod pq) through
  [n/4, n/2] for a prime r. Near-quarter-power p and q push the score toward
  n**(5/4).
* ``strategy_smooth`` scans a precomputed set of primes r with a large prime
  in r - 1, looking for one where n - r also has a large prime factor; p and
  q are read off the two factorizations. Scores land near n**(1 + gamma).

All searches use fixed orders, so identical inputs yield identical witnesses.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from . import factor, sieve
from .util import compare_power


@dataclass(frozen=True)
class Witness:
    """A scored witness quadruple. ``validate`` ties it to a concrete n."""

    k: int
    p: int
    q: int
    r: int
    score: int


@dataclass(frozen=True, eq=False)
class RSet:
    """Primes r in an interval whose shifted value r - 1 is rough.

    Members are exactly the primes r in [lo, hi] with P(r-1) > r**alpha,
    in increasing order.
    """

    alpha: float
    interval: tuple[int, int]
    members: list[int]

    def __len__(self) -> int:
        return len(self.members)


def score(k: int, p: int, q: int, r: int) -> int:
    """min{p^2 k, p k r, q r} for a candidate quadruple.

    Exact integer arithmetic throughout; no overflow for any supported n.

    Raises:
        ValueError: if k < 1 or any of p, q, r is not prime.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    for v in (p, q, r):
        if not sieve.is_prime(v):
            raise ValueError(f"invalid witness: {v} is not prime")
    return min(p * p * k, p * k * r, q * r)


def make_witness(k: int, p: int, q: int, r: int) -> Witness:
    """Build a Witness with its score filled in (validating primality)."""
    return Witness(k, p, q, r, score(k, p, q, r))


def _exact_int(value) -> int:
    out = int(value)
    if out != value:
        raise ValueError(f"{value!r} is not an integer")
    return out


def validate(n: int, w: Witness) -> bool:
    """True iff w certifies n.

    Checks n = k*p + r, q | r - 1, primality of p, q, r, k >= 1, and that the
    stored score matches recomputation. Never raises: malformed input is
    simply not a valid witness.
    """
    try:
        k, p, q, r, s = (_exact_int(v) for v in (w.k, w.p, w.q, w.r, w.score))
    except (AttributeError, TypeError, ValueError):
        return False
    if k < 1 or p < 2 or q < 2 or r < 3:
        return False
    if n != k * p + r or (r - 1) % q != 0:
        return False
    if not (sieve.is_prime(p) and sieve.is_prime(q) and sieve.is_prime(r)):
        return False
    return s == min(p * p * k, p * k * r, q * r)


def witness_json(n: int, w: Witness, strategy: str) -> dict:
    """The serialized certificate: {n, k, p, q, r, score, strategy}."""
    return {
        "n": n,
        "k": w.k,
        "p": w.p,
        "q": w.q,
        "r": w.r,
        "score": w.score,
        "strategy": strategy,
    }


def _table_limit(n: int) -> int:
    return 1 << max(6, n.bit_length())


@lru_cache(maxsize=6)
def _prime_flags(limit: int) -> bytes:
    return sieve._dense_sieve(limit).view("u1").tobytes()


@lru_cache(maxsize=6)
def _lpf_list(limit: int) -> list[int]:
    return [0] + factor.lpf_table(1, limit).lpf.tolist()


@lru_cache(maxsize=6)
def _prime_list(limit: int) -> list[int]:
    flags = _prime_flags(limit)
    return [i for i in range(2, limit + 1) if flags[i]]


def f_exact(n: int) -> tuple[int, Witness | None]:
    """The exact edge budget f(n) with one maximizing witness.

    Enumerates every prime p < n and k >= 1 with k*p <= n - 3, keeps
    r = n - k*p when r is prime, and takes q = P(r-1): for fixed (k, p, r)
    the score is nondecreasing in q, so the largest prime divisor of r - 1
    is optimal (property-tested against full enumeration of all prime
    divisors). Returns (0, None) when no quadruple exists at all.

    Ties are broken deterministically: the first maximizer in ascending-p,
    then ascending-k order wins. Practical up to n around 10**7, where the
    dense tables behind the enumeration stay affordable.

    Raises:
        ValueError: if n < 1.
    """
    if n < 1:
        raise ValueError("f_exact requires n >= 1")
    if n < 5:
        return 0, None
    limit = _table_limit(n)
    flags = _prime_flags(limit)
    lpf = _lpf_list(limit)
    best = 0
    best_w = None
    for p in _prime_list(limit):
        if p > n - 3:
            break
        kp = p
        while kp <= n - 3:
            r = n - kp
            if flags[r]:
                q = lpf[r - 1]
                s = min(p * kp, kp * r, q * r)
                if s > best:
                    best = s
                    best_w = Witness(kp // p, p, q, r, s)
            kp += p
    return best, best_w


def crt_pair(n: int, p: int, q: int) -> int:
    """The unique a in [0, pq) with a = n (mod p) and a = 1 (mod q).

    Raises:
        ValueError: if p == q.
    """
    if p == q:
        raise ValueError("crt_pair requires distinct primes")
    a = (n % p) * q * pow(q, -1, p) + p * pow(p, -1, q)
    return a % (p * q)


def _first_in_progression(a: int, modulus: int, lo: int) -> int:
    """Smallest value >= lo congruent to a mod modulus."""
    return a + ((lo - a + modulus - 1) // modulus) * modulus


def strategy_bv(n: int, eps: float = 0.05) -> Witness | None:
    """Witness search through primes in arithmetic progressions.

    Iterates ordered pairs of distinct primes p, q from
    [ceil(n**(1/4 - eps)), floor(2 n**(1/4 - eps))] (ascending p, then
    ascending q), skipping pairs where the combined residue a shares a factor
    with pq (the progression then holds at most one prime), and scans
    r = a (mod pq) upward through [ceil(n/4), floor(n/2)] for a prime.
    The first hit yields the witness (k = (n-r)/p, p, q, r), which always
    validates. Returns None when every pair fails, including when the prime
    interval holds fewer than two primes.

    Raises:
        ValueError: if eps is outside [0, 1/4).
    """
    if not 0 <= eps < 0.25:
        raise ValueError("eps must lie in [0, 1/4)")
    if n < 1:
        raise ValueError("strategy_bv requires n >= 1")
    width = n ** (0.25 - eps)
    snapped = round(width)
    if snapped >= 1 and abs(width - snapped) <= 1e-9 * width:
        width = float(snapped)
    lo = math.ceil(width)
    hi = math.floor(2 * width)
    if hi < lo or lo < 1:
        return None
    ps = sieve.primes_in(lo, hi).primes.tolist()
    if len(ps) < 2:
        return None
    r_lo = -(-n // 4)
    r_hi = n // 2
    for p in ps:
        for q in ps:
            if q == p:
                continue
            modulus = p * q
            a = crt_pair(n, p, q)
            if math.gcd(a, modulus) != 1:
                continue
            r = _first_in_progression(a, modulus, r_lo)
            while r <= r_hi:
                if r >= 3 and sieve.is_prime(r):
                    kp = n - r
                    if kp < p:
                        break
                    s = min(p * kp, kp * r, q * r)
                    return Witness(kp // p, p, q, r, s)
                r += modulus
    return None


def build_rset(lo: int, hi: int, alpha: float) -> RSet:
    """The complete RSet over [lo, hi]: primes r with P(r-1) > r**alpha.

    The threshold test compares logarithms with a relative guard band of
    1e-12, falling back to exact integer power comparison inside the band.

    Raises:
        ValueError: if lo > hi, lo < 1, or alpha is outside (0, 1].
    """
    if lo < 1:
        raise ValueError("interval endpoints must be positive")
    if lo > hi:
        raise ValueError(f"empty interval: lo={lo} > hi={hi}")
    if not 0 < alpha <= 1:
        raise ValueError("alpha must lie in (0, 1]")
    primes = sieve.primes_in(lo, hi).primes.tolist()
    members: list[int] = []
    if primes:
        shifted = factor.lpf_table(max(1, primes[0] - 1), primes[-1] - 1)
        for r in primes:
            if compare_power(shifted[r - 1], r, alpha) > 0:
                members.append(r)
    return RSet(alpha, (lo, hi), members)


def strategy_smooth(
    n: int,
    rset: RSet,
    gamma: float,
    lpf: factor.FactorTable | None = None,
) -> Witness | None:
    """Witness search through rough shifted primes.

    Scans the RSet in increasing order for the first member r with
    P(n - r) >= n**gamma (same guarded comparison as ``build_rset``). On a
    hit, p = P(n-r), q = P(r-1) and k = (n-r)/p form a witness that always
    validates. Returns None when no member qualifies: n is exceptional for
    this rset and gamma.

    An optional FactorTable covering the differences n - r avoids pointwise
    factoring in bulk runs.

    Raises:
        ValueError: if gamma is outside (0, 1] or some member is >= n.
    """
    if not 0 < gamma <= 1:
        raise ValueError("gamma must lie in (0, 1]")
    if rset.members and rset.members[-1] >= n:
        raise ValueError("every rset member must lie below n")
    for r in rset.members:
        d = n - r
        p = lpf[d] if lpf is not None else factor.largest_prime_factor(d)
        if p and compare_power(p, n, gamma) >= 0:
            q = factor.largest_prime_factor(r - 1)
            s = min(p * d, d * r, q * r)
            return Witness(d // p, p, q, r, s)
    return None
