"""Arithmetic of S-integer rings Z[S^-1].

These rings are PIDs whose units are +-(products of powers of primes in S),
so unit groups modulo n-th powers (the Kummer description of the relevant
cohomology classes) and ideal n-th-power tests reduce to valuation
bookkeeping on ordinary integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional

from .exact import is_perfect_nth_power, is_probable_prime


@dataclass(frozen=True)
class SRing:
    """Z[S^-1] for a finite, sorted set S of rational primes."""

    primes: tuple[int, ...]

    def __post_init__(self):
        ps = self.primes
        if list(ps) != sorted(set(ps)):
            raise ValueError("prime set must be strictly increasing and duplicate-free")
        for p in ps:
            if not is_probable_prime(p):
                raise ValueError(f"{p} is not prime")

    @classmethod
    def from_iterable(cls, primes: Iterable[int]) -> "SRing":
        return cls(tuple(sorted(set(int(p) for p in primes))))

    def __str__(self):
        inner = ",".join(str(p) for p in self.primes)
        return "Z" if not self.primes else f"Z[1/{{{inner}}}]"

    def prime_to_s_part(self, n: int) -> int:
        """|n| with every prime of S divided out; the ideal nZ[S^-1] is
        generated by this positive integer."""
        if n == 0:
            raise ValueError("0 has no prime-to-S part")
        m = abs(n)
        for p in self.primes:
            while m % p == 0:
                m //= p
        return m

    def is_unit(self, q) -> bool:
        """Whether the nonzero rational q lies in Z[S^-1]^x."""
        q = Fraction(q)
        if q == 0:
            return False
        return (
            self.prime_to_s_part(q.numerator) == 1
            and self.prime_to_s_part(q.denominator) == 1
        )


ZRING = SRing(())


def valuation(s: int, p: int) -> int:
    """Largest e with p^e dividing s; s must be nonzero."""
    if s == 0:
        raise ValueError("valuation of 0 is undefined")
    e = 0
    while s % p == 0:
        s //= p
        e += 1
    return e


@dataclass(frozen=True)
class UnitClassGroup:
    """Representatives of R^x modulo n-th powers of units.

    The canonical set is eps * prod(p^e) with 0 <= e < n over the primes of
    S, with eps ranging over {1, -1} for even n and {1} for odd n (for odd n
    the sign is itself an n-th power).  Count: 2 * n^|S| or n^|S|.
    """

    modulus: int
    ring: SRing
    representatives: tuple[int, ...]


def s_unit_reps(ring: SRing, n: int) -> UnitClassGroup:
    """Complete irredundant representatives of R^x/(R^x)^n."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    signs = (1, -1) if n % 2 == 0 else (1,)
    reps = []
    for eps in signs:
        for exps in product(range(n), repeat=len(ring.primes)):
            v = eps
            for p, e in zip(ring.primes, exps):
                v *= p**e
            reps.append(v)
    return UnitClassGroup(n, ring, tuple(reps))


def unit_class_key(u, ring: SRing, n: int):
    """Complete invariant of the class of the unit u in R^x/(R^x)^n.

    Two units are congruent modulo n-th powers iff their keys agree: the
    sign survives exactly when n is even, and each S-valuation matters mod n.
    """
    u = Fraction(u)
    if not ring.is_unit(u):
        raise ValueError(f"{u} is not a unit of {ring}")
    sign = 1 if n % 2 else (1 if u > 0 else -1)
    vals = tuple(
        (valuation(u.numerator, p) - valuation(u.denominator, p)) % n
        for p in ring.primes
    )
    return (sign, vals)


def same_unit_class(u, v, ring: SRing, n: int) -> bool:
    return unit_class_key(u, ring, n) == unit_class_key(v, ring, n)


def is_nth_power_ideal(s: int, n: int, ring: SRing) -> Optional[int]:
    """Positive generator g with (g)^n = (s) as ideals of Z[S^-1], or None.

    Exists iff every valuation of s at a prime outside S is divisible by n,
    i.e. iff the prime-to-S part of |s| is a perfect n-th power; no
    factorization is needed, one integer root suffices.
    """
    if s == 0:
        raise ValueError("the zero ideal is not tested here")
    if n < 1:
        raise ValueError("power index must be positive")
    core = ring.prime_to_s_part(s)
    return is_perfect_nth_power(core, n)
