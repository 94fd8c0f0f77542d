"""Exact integer arithmetic: factorization, perfect powers, projective points.

Everything here works on plain Python ints (arbitrary precision) and is pure,
so all functions are safe to call concurrently.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

from .errors import WorkLimitExceeded, ZeroPoint

# Trial division handles everything below this bound; Brent's rho picks up the
# rest.  The iteration cap keeps failures reproducible instead of open-ended.
TRIAL_DIVISION_BOUND = 10_000
DEFAULT_RHO_ITERATION_CAP = 5_000_000

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def lcm_triple(a: int, b: int, c: int) -> int:
    """lcm(a, b, c) for positive integers; equals abc / gcd(bc, ac, ab)."""
    if a < 1 or b < 1 or c < 1:
        raise ValueError("lcm_triple needs positive arguments")
    return math.lcm(a, b, c)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with a fixed witness set.

    Deterministic for n < 3.3 * 10^24; a strong probabilistic test beyond
    that, which is all the desk-scale inputs here ever need.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """sign * product(p^e) == original input; primes strictly increasing."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p**e
        return v

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def _brent_rho(n: int, rng: random.Random, budget: int) -> tuple[Optional[int], int]:
    """One Brent-rho attempt on composite n. Returns (factor or None, spent)."""
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    spent = 0
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
            spent += min(m, r - k)
            if spent > budget:
                return None, spent
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        # Backtrack one step at a time to recover the factor.
        while True:
            ys = (ys * ys + c) % n
            spent += 1
            if spent > budget:
                return None, spent
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return (g if g != n else None), spent


def factorize(n: int, rho_iteration_cap: Optional[int] = None) -> Factorization:
    """Full prime factorization of a nonzero integer.

    Trial division up to TRIAL_DIVISION_BOUND, then Brent's rho seeded
    deterministically from the input, so failures are reproducible.

    Raises WorkLimitExceeded when the rho budget runs out before the
    remaining cofactor is split.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    cap = DEFAULT_RHO_ITERATION_CAP if rho_iteration_cap is None else rho_iteration_cap
    sign = 1 if n > 0 else -1
    m = abs(n)
    counts: dict[int, int] = {}
    for p in range(2, TRIAL_DIVISION_BOUND + 1):
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    if m > 1 and m <= TRIAL_DIVISION_BOUND * TRIAL_DIVISION_BOUND:
        # Below the square of the trial bound the leftover must be prime.
        counts[m] = counts.get(m, 0) + 1
        m = 1

    rng = random.Random(abs(n) ^ 0x5EED)
    budget = cap
    stack = [m] if m > 1 else []
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if is_probable_prime(v):
            counts[v] = counts.get(v, 0) + 1
            continue
        f = None
        while f is None:
            f, spent = _brent_rho(v, rng, budget)
            budget -= spent
            if budget <= 0 and f is None:
                raise WorkLimitExceeded(n, v)
        stack.append(f)
        stack.append(v // f)

    items = tuple(sorted(counts.items()))
    return Factorization(sign, items)


def integer_nth_root(v: int, n: int) -> int:
    """Floor of the n-th root of v >= 0."""
    if v < 0:
        raise ValueError("negative radicand")
    if n < 1:
        raise ValueError("root index must be positive")
    if v in (0, 1) or n == 1:
        return v
    if n == 2:
        return math.isqrt(v)
    x = 1 << (-(-v.bit_length() // n))  # upper-bound initial guess
    while True:
        y = ((n - 1) * x + v // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    while x**n > v:
        x -= 1
    return x


def is_perfect_nth_power(v: int, n: int) -> Optional[int]:
    """The integer r with r^n == v, if one exists, else None.

    For even n the radicand must be nonnegative and the nonnegative root is
    returned; callers enumerate both signs themselves.
    """
    if n < 1:
        raise ValueError("root index must be positive")
    if n == 1:
        return v
    if v == 0:
        return 0
    if v < 0:
        if n % 2 == 0:
            return None
        r = integer_nth_root(-v, n)
        return -r if r**n == -v else None
    r = integer_nth_root(v, n)
    return r if r**n == v else None


@dataclass(frozen=True)
class ProjPointQ:
    """A point of P^1(Q) in canonical coprime form.

    Invariants: gcd(s, t) = 1 and (t > 0, or t = 0 and s > 0).  Canonical
    representatives make point-set equality a plain structural comparison.
    """

    s: int
    t: int

    def __post_init__(self):
        if self.s == 0 and self.t == 0:
            raise ZeroPoint("(0, 0) is not projective")
        if math.gcd(self.s, self.t) != 1:
            raise ValueError(f"({self.s}:{self.t}) is not in lowest terms")
        if self.t < 0 or (self.t == 0 and self.s < 0):
            raise ValueError(f"({self.s}:{self.t}) violates the sign convention")

    def __str__(self):
        return f"({self.s}:{self.t})"


def normalize_projective(s: int, t: int) -> ProjPointQ:
    """Canonical representative of (s : t); raises ZeroPoint on (0, 0)."""
    if s == 0 and t == 0:
        raise ZeroPoint("(0, 0) is not projective")
    g = math.gcd(s, t)
    s, t = s // g, t // g
    if t < 0 or (t == 0 and s < 0):
        s, t = -s, -t
    return ProjPointQ(s, t)


# The three marked points of the rooted projective line: the vanishing loci
# of s, s - t, and t.
POINT_ZERO = ProjPointQ(0, 1)
POINT_ONE = ProjPointQ(1, 1)
POINT_INFINITY = ProjPointQ(1, 0)


def intersection_ideal(P: ProjPointQ, Q: ProjPointQ) -> int:
    """Positive generator of the ideal where P and Q meet; 0 iff P == Q.

    For P = (c:d) and Q = (a:b) this is |ad - bc|.
    """
    return abs(Q.s * P.t - Q.t * P.s)
