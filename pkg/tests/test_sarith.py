import random
from fractions import Fraction
from itertools import combinations

import pytest

from gfdescent.exact import factorize
from gfdescent.sarith import (
    SRing,
    is_nth_power_ideal,
    s_unit_reps,
    same_unit_class,
    unit_class_key,
    valuation,
)


def test_sring_validation():
    assert SRing.from_iterable([7, 2, 2]).primes == (2, 7)
    with pytest.raises(ValueError):
        SRing((4,))
    with pytest.raises(ValueError):
        SRing((3, 2))
    assert str(SRing(())) == "Z"
    assert str(SRing((2, 3))) == "Z[1/{2,3}]"


def test_valuation_examples():
    assert valuation(48, 2) == 4
    assert valuation(7, 2) == 0
    assert valuation(-54, 3) == 3
    with pytest.raises(ValueError):
        valuation(0, 2)


def test_prime_to_s_part():
    R = SRing((2, 3))
    assert R.prime_to_s_part(48) == 1
    assert R.prime_to_s_part(-60) == 5
    assert R.is_unit(Fraction(-9, 16))
    assert not R.is_unit(Fraction(5, 2))


def test_s_unit_reps_examples():
    assert set(s_unit_reps(SRing((2,)), 4).representatives) == {
        1, 2, 4, 8, -1, -2, -4, -8,
    }
    assert s_unit_reps(SRing(()), 3).representatives == (1,)
    assert set(s_unit_reps(SRing(()), 2).representatives) == {1, -1}


def test_s_unit_reps_counts_and_distinctness():
    # 2 * n^|S| classes for even n, n^|S| for odd n; all classes distinct.
    primes = (2, 3, 5, 7)
    for r in range(len(primes) + 1):
        for subset in combinations(primes, r):
            ring = SRing(subset)
            for n in range(2, 7):
                group = s_unit_reps(ring, n)
                expected = (2 if n % 2 == 0 else 1) * n ** len(subset)
                assert len(group.representatives) == expected
                keys = {unit_class_key(u, ring, n) for u in group.representatives}
                assert len(keys) == expected


def test_unit_class_equivalence():
    ring = SRing((2,))
    assert same_unit_class(2, 32, ring, 4)  # 32 = 2 * 2^4
    assert same_unit_class(-1, Fraction(-16), ring, 4)
    assert not same_unit_class(2, -2, ring, 4)
    assert not same_unit_class(2, 4, ring, 4)
    # Odd modulus kills the sign.
    assert same_unit_class(2, -2, SRing((2,)), 3)
    with pytest.raises(ValueError):
        unit_class_key(3, ring, 4)


def test_is_nth_power_ideal_examples():
    assert is_nth_power_ideal(9, 2, SRing(())) == 3
    assert is_nth_power_ideal(2, 2, SRing(())) is None
    assert is_nth_power_ideal(-8, 4, SRing((2,))) == 1
    assert is_nth_power_ideal(-27, 3, SRing(())) == 3
    with pytest.raises(ValueError):
        is_nth_power_ideal(0, 2, SRing(()))


def test_is_nth_power_ideal_unit_invariance():
    rng = random.Random(43)
    for ring, n in [(SRing((2,)), 4), (SRing((2, 3)), 2), (SRing((5,)), 3)]:
        reps = s_unit_reps(ring, n).representatives
        for _ in range(200):
            s = rng.randrange(1, 10**4) * rng.choice((1, -1))
            base = is_nth_power_ideal(s, n, ring)
            for u in reps:
                assert is_nth_power_ideal(s * u**n, n, ring) == base


def test_is_nth_power_ideal_valuations():
    # Dual route: when a generator is returned, its valuations are exactly
    # one n-th of the input's at every prime outside S (via factorization).
    rng = random.Random(47)
    ring = SRing((2, 3))
    for _ in range(300):
        s = rng.randrange(1, 10**6) * rng.choice((1, -1))
        for n in (2, 3, 4):
            g = is_nth_power_ideal(s, n, ring)
            fac = dict(factorize(s).factors)
            outside = {p: e for p, e in fac.items() if p not in ring.primes}
            if g is None:
                assert any(e % n for e in outside.values())
            else:
                for p, e in outside.items():
                    assert valuation(g, p) * n == e
                assert dict(factorize(g).factors if g > 1 else ()) == {
                    p: e // n for p, e in outside.items() if e
                }
