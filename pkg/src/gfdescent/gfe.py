"""Generalized Fermat equations A x^a + B y^b + C z^c = 0.

Primitive-solution enumeration (with a modular pre-sieve that only ever
discards residue classes with no solution, so correctness never depends on
it), the map to the projective line, and the two directions of the
solution <-> rooted-line-point correspondence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

import numpy as np

from .belyi import StackPointCertificate, is_stack_point
from .errors import DegeneratePoint, NotAStackPoint
from .exact import (
    ProjPointQ,
    factorize,
    is_perfect_nth_power,
    is_probable_prime,
    normalize_projective,
)
from .groups import Signature
from .sarith import SRing

_SIEVE_PRIME_CAP = 100_000
_NUMPY_CHUNK_ROWS = 512


@dataclass(frozen=True)
class GFE:
    """The equation A x^a + B y^b + C z^c = 0 with nonzero coefficients."""

    sig: Signature
    A: int
    B: int
    C: int

    def __post_init__(self):
        if self.A * self.B * self.C == 0:
            raise ValueError("coefficients must be nonzero")

    def evaluate(self, x: int, y: int, z: int) -> int:
        a, b, c = self.sig
        return self.A * x**a + self.B * y**b + self.C * z**c

    def __str__(self):
        def term(coef, var, exp):
            if coef == 1:
                return f"+ {var}^{exp}"
            if coef == -1:
                return f"- {var}^{exp}"
            sign = "+" if coef > 0 else "-"
            return f"{sign} {abs(coef)}*{var}^{exp}"

        a, b, c = self.sig
        parts = [term(self.A, "x", a), term(self.B, "y", b), term(self.C, "z", c)]
        return " ".join(parts).lstrip("+ ") + " = 0"


@dataclass(frozen=True, order=True)
class PrimitiveSolution:
    """Integer triple with gcd 1 solving its equation."""

    x: int
    y: int
    z: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


def is_primitive_solution(F: GFE, x: int, y: int, z: int) -> bool:
    return math.gcd(x, math.gcd(y, z)) == 1 and F.evaluate(x, y, z) == 0


def bad_prime_set(F: GFE) -> SRing:
    """Primes dividing a*b*c*A*B*C; the equation is well behaved away from them."""
    a, b, c = F.sig
    return SRing(factorize(a * b * c * F.A * F.B * F.C).primes())


def select_sieve_primes(F: GFE, count: int = 4) -> list[int]:
    """Auxiliary sieve primes: the smallest p = 1 (mod lcm(a,b,c)) coprime to
    the equation data.  The congruence keeps the power-residue sets small, so
    each prime rejects as many residue classes as possible."""
    a, b, c = F.sig
    L = math.lcm(a, b, c)
    bad = abs(a * b * c * F.A * F.B * F.C)
    primes = []
    p = 1
    while len(primes) < count and p <= _SIEVE_PRIME_CAP:
        p += L
        if p < 3 or bad % p == 0:
            continue
        if is_probable_prime(p):
            primes.append(p)
    return primes


def _residue_lut(F: GFE, p: int) -> bytearray:
    """lut[r] = 1 iff A x^a + B y^b = r (mod p) is solvable in z, i.e. iff
    r is congruent to -C z^c for some z mod p."""
    c = F.sig.c
    lut = bytearray(p)
    for z in range(p):
        lut[(-F.C * pow(z, c, p)) % p] = 1
    return lut


def _z_values(F: GFE, x: int, y: int, bound: int) -> list[int]:
    """All z with A x^a + B y^b + C z^c = 0 and |z| <= bound, exactly."""
    w = F.A * x ** F.sig.a + F.B * y ** F.sig.b
    if w % F.C != 0:
        return []
    zc = -(w // F.C)
    c = F.sig.c
    if zc == 0:
        return [0]
    r = is_perfect_nth_power(zc, c)
    if r is None:
        return []
    zs = [r, -r] if c % 2 == 0 and r != 0 else [r]
    return [z for z in zs if abs(z) <= bound]


def _powmod_vec(base, e: int, p: int):
    """Vectorized pow(base, e, p) on int64 arrays; intermediates stay < p^2."""
    result = np.ones_like(base)
    b = base % p
    while e:
        if e & 1:
            result = result * b % p
        b = b * b % p
        e >>= 1
    return result


def _enumerate_numpy(F: GFE, bound: int, luts) -> list[tuple[int, int, int]]:
    a, b, c = F.sig
    xs = np.arange(-bound, bound + 1, dtype=np.int64)
    ax = F.A * xs**a
    by = F.B * xs**b
    window = abs(F.C) * bound**c
    window_fits = window < 2**62

    residues = []
    for p, lut in luts:
        rx = (F.A % p) * _powmod_vec(xs, a, p) % p
        ry = (F.B % p) * _powmod_vec(xs, b, p) % p
        lut_arr = np.frombuffer(bytes(lut), dtype=np.uint8).astype(bool)
        residues.append((p, rx, ry, lut_arr))

    found = []
    for i0 in range(0, len(xs), _NUMPY_CHUNK_ROWS):
        i1 = min(i0 + _NUMPY_CHUNK_ROWS, len(xs))
        if window_fits:
            w = ax[i0:i1, None] + by[None, :]
            mask = np.abs(w) <= window
        else:
            mask = np.ones((i1 - i0, len(xs)), dtype=bool)
        for p, rx, ry, lut_arr in residues:
            r = (rx[i0:i1, None] + ry[None, :]) % p
            mask &= lut_arr[r]
        for ii, jj in np.argwhere(mask):
            x = int(xs[i0 + ii])
            y = int(xs[jj])
            for z in _z_values(F, x, y, bound):
                if math.gcd(x, math.gcd(y, z)) == 1:
                    found.append((x, y, z))
    return found


def _enumerate_python(F: GFE, bound: int, luts) -> list[tuple[int, int, int]]:
    a, b, c = F.sig
    ys = range(-bound, bound + 1)
    by = [F.B * y**b for y in ys]
    window = abs(F.C) * bound**c
    rys = [(p, [(F.B % p) * pow(y % p, b, p) % p for y in ys]) for p, _ in luts]

    found = []
    for x in range(-bound, bound + 1):
        axa = F.A * x**a
        rxs = [(F.A % p) * pow(x % p, a, p) % p for p, _ in luts]
        for idx, y in enumerate(ys):
            w = axa + by[idx]
            if w > window or -w > window:
                continue
            ok = True
            for (p, lut), rx, (_, ry) in zip(luts, rxs, rys):
                if not lut[(rx + ry[idx]) % p]:
                    ok = False
                    break
            if not ok:
                continue
            for z in _z_values(F, x, y, bound):
                if math.gcd(x, math.gcd(y, z)) == 1:
                    found.append((x, y, z))
    return found


def enumerate_primitive_solutions(
    F: GFE,
    bound: int,
    use_sieve: bool = True,
    max_sieve_primes: int = 4,
) -> list[PrimitiveSolution]:
    """Exactly the primitive solutions with max(|x|,|y|,|z|) <= bound.

    Iterates over (x, y), pre-filters residue classes modulo the auxiliary
    primes, then extracts exact c-th roots; results in lexicographic order.
    The fast vectorized path is only taken when every intermediate fits in
    int64, otherwise a plain-int loop runs the same algorithm.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    a, b, _ = F.sig
    primes = select_sieve_primes(F, max_sieve_primes) if use_sieve else []
    luts = [(p, _residue_lut(F, p)) for p in primes]

    peak = abs(F.A) * bound**a + abs(F.B) * bound**b
    if peak < 2**62:
        found = _enumerate_numpy(F, bound, luts)
    else:
        found = _enumerate_python(F, bound, luts)
    return [PrimitiveSolution(*s) for s in sorted(set(found))]


def j_map(F: GFE, sol: PrimitiveSolution) -> ProjPointQ:
    """Image (-A x^a : C z^c) of a primitive solution, in canonical form.

    The image is 0, 1, infinity exactly when x, y, z vanishes respectively.
    """
    if not is_primitive_solution(F, sol.x, sol.y, sol.z):
        raise ValueError(f"{sol} does not solve {F} primitively")
    a, _, c = F.sig
    s = -F.A * sol.x**a
    t = F.C * sol.z**c
    if s == 0 and t == 0:
        raise DegeneratePoint("x = z = 0 cannot happen for a primitive solution")
    return normalize_projective(s, t)


@dataclass(frozen=True)
class RecoveredSolution:
    """A solution recovered from a point, with the coefficients it solves.

    exact_coefficients is True when (A', B', C') are the coefficients of the
    original equation; otherwise they differ from them by units of the ring
    (an S-integral recovery).
    """

    x: int
    y: int
    z: int
    coefficients: tuple[Fraction, Fraction, Fraction]
    exact_coefficients: bool

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


def _signed_roots(value: int, n: int) -> list[int]:
    """All integers r with r^n == value."""
    if value == 0:
        return [0]
    r = is_perfect_nth_power(value, n)
    if r is None:
        return []
    if n % 2 == 0:
        return [r, -r]
    return [r]


def _scale_bound(F: GFE) -> int:
    """Solutions map to scalar multiples (scale mu) of the canonical point;
    |mu| always divides prod_p p^max(v_p(A), v_p(B), v_p(C)).  Primitivity
    forces the support of mu into the primes of A*B*C, and at each such prime
    the valuation is capped by the largest coefficient valuation."""
    out = 1
    for p, _ in factorize(F.A * F.B * F.C).factors:
        e = max(
            _valuation_nonneg(F.A, p),
            _valuation_nonneg(F.B, p),
            _valuation_nonneg(F.C, p),
        )
        out *= p**e
    return out


def _valuation_nonneg(n: int, p: int) -> int:
    e = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        e += 1
    return e


def _divisors(n: int) -> list[int]:
    divs = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            divs.append(d)
            if d != n // d:
                divs.append(n // d)
        d += 1
    return sorted(divs)


def recover_solutions(
    Q: ProjPointQ,
    F: GFE,
    ring: SRing,
    search_units: bool = False,
) -> list[RecoveredSolution]:
    """Solutions whose image is Q, for Q an accepted point over the ring.

    With the original coefficients: writes (-A x^a, C z^c) = mu * (s, t) and
    scans the finitely many possible scales mu; over S = {} this finds every
    primitive integral solution mapping to Q.  With search_units, also
    returns the canonical S-integral recovery built from the certificate
    roots, whose coefficients are unit multiples of the original ones.
    """
    cert = is_stack_point(Q, F.sig, ring)
    if not cert.accepted:
        raise NotAStackPoint(f"{Q} fails the root conditions over {ring}")
    a, b, c = F.sig
    s, t = Q.s, Q.t
    values = (s, s - t, t)

    results: list[RecoveredSolution] = []
    seen = set()
    base = (Fraction(F.A), Fraction(F.B), Fraction(F.C))

    for d in _divisors(_scale_bound(F)):
        for eps in (1, -1):
            mu = eps * d
            targets = (-mu * s, mu * (s - t), mu * t)
            if any(tv % coef != 0 for tv, coef in zip(targets, (F.A, F.B, F.C))):
                continue
            root_lists = [
                _signed_roots(tv // coef, n)
                for tv, coef, n in zip(targets, (F.A, F.B, F.C), (a, b, c))
            ]
            for x, y, z in iter_product(*root_lists):
                if math.gcd(x, math.gcd(y, z)) != 1:
                    continue
                assert F.evaluate(x, y, z) == 0
                key = (x, y, z, base)
                if key not in seen:
                    seen.add(key)
                    results.append(RecoveredSolution(x, y, z, base, True))

    if search_units:
        # Canonical S-integral recovery: each nonzero coordinate is the
        # positive root guaranteed by the certificate, the leftover unit
        # moves into the coefficient.
        coords = []
        for value, n in zip(values, (a, b, c)):
            if value == 0:
                coords.append(0)
            else:
                coords.append(is_perfect_nth_power(ring.prime_to_s_part(value), n))
        x, y, z = coords
        A1 = -Fraction(s, x**a) if x else Fraction(F.A)
        B1 = Fraction(s - t, y**b) if y else Fraction(F.B)
        C1 = Fraction(t, z**c) if z else Fraction(F.C)
        triple = (A1, B1, C1)
        key = (x, y, z, triple)
        if key not in seen:
            seen.add(key)
            results.append(RecoveredSolution(x, y, z, triple, triple == base))

    return results


@dataclass(frozen=True)
class DescentEntry:
    solution: PrimitiveSolution
    image: ProjPointQ
    certificate: StackPointCertificate


@dataclass(frozen=True)
class DescentReport:
    """Outcome of pushing every enumerated solution through the point test."""

    gfe: GFE
    bound: int
    ring: SRing
    entries: tuple[DescentEntry, ...]

    @property
    def violations(self) -> tuple[DescentEntry, ...]:
        return tuple(e for e in self.entries if not e.certificate.accepted)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "equation": str(self.gfe),
            "bound": str(self.bound),
            "ring": str(self.ring),
            "solutions": [
                {
                    "solution": [str(v) for v in e.solution.as_tuple()],
                    "image": str(e.image),
                    "certificate": e.certificate.to_dict(),
                }
                for e in self.entries
            ],
            "violations": [
                [str(v) for v in e.solution.as_tuple()] for e in self.violations
            ],
            "passed": self.passed,
        }


def verify_descent_inclusion(F: GFE, bound: int) -> DescentReport:
    """Check that every primitive solution lands on the rooted line over the
    bad-prime ring.  Violations are collected in the report, never raised."""
    ring = bad_prime_set(F)
    entries = []
    for sol in enumerate_primitive_solutions(F, bound):
        image = j_map(F, sol)
        cert = is_stack_point(image, F.sig, ring)
        entries.append(DescentEntry(sol, image, cert))
    return DescentReport(F, bound, ring, tuple(entries))
