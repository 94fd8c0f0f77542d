"""Point-level arithmetic of the projective line rooted at 0, 1, infinity.

Over a PID R = Z[S^-1], a point Q = (s:t) away from the three marked points
lifts to the rooted line iff the ideals (s), (s-t), (t) are an a-th, b-th,
c-th ideal power respectively.  At a marked point of multiplicity n the
automorphism group is the n-th roots of unity of R, which inside Q is just
{+-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import NotAStackPoint
from .exact import POINT_INFINITY, POINT_ONE, POINT_ZERO, ProjPointQ, intersection_ideal
from .groups import Signature
from .sarith import SRing, is_nth_power_ideal

MARKED_POINTS = {POINT_ZERO: "0", POINT_ONE: "1", POINT_INFINITY: "inf"}


def mu_order(n: int) -> int:
    """#{u in R^x : u^n = 1} for any subring R of Q: 2 for even n, else 1."""
    return 2 if n % 2 == 0 else 1


@dataclass(frozen=True)
class RootPointResult:
    """Outcome of testing one point against one rooted divisor."""

    kind: str  # "marked" or "root"
    automorphism_order: Optional[int] = None
    root: Optional[int] = None


def root_point_test(
    P: ProjPointQ, Q: ProjPointQ, n: int, ring: SRing
) -> Optional[RootPointResult]:
    """Does Q lift to the n-th root of the line at P, over Z[S^-1]?

    At Q = P the lift exists with mu_n(R) automorphisms.  Away from P it
    exists (rigidly) iff the intersection ideal is an n-th ideal power, and
    the positive generator of its n-th root is returned.
    """
    if P == Q:
        return RootPointResult("marked", automorphism_order=mu_order(n))
    g = is_nth_power_ideal(intersection_ideal(P, Q), n, ring)
    if g is None:
        return None
    return RootPointResult("root", root=g)


@dataclass(frozen=True)
class StackPointCertificate:
    """Verdict for one candidate point with enough data to recheck it.

    status is one of "marked", "smooth", "rejected".  For smooth points the
    roots (g0, g1, ginf) generate ideals whose a-th, b-th, c-th powers are
    (s), (s-t), (t) in Z[S^-1]; for rejections `failed` lists the offending
    coordinates among "s", "s-t", "t".
    """

    point: ProjPointQ
    status: str
    marked_at: Optional[str] = None
    roots: Optional[tuple[int, int, int]] = None
    failed: tuple[str, ...] = ()

    @property
    def accepted(self) -> bool:
        return self.status != "rejected"

    def to_dict(self) -> dict:
        d = {"point": str(self.point), "status": self.status}
        if self.marked_at is not None:
            d["marked_at"] = self.marked_at
        if self.roots is not None:
            d["roots"] = [str(g) for g in self.roots]
        if self.failed:
            d["failed"] = list(self.failed)
        return d


def is_stack_point(Q: ProjPointQ, sig: Signature, ring: SRing) -> StackPointCertificate:
    """Test whether Q lies on the rooted line of the signature over Z[S^-1].

    Acceptance is well defined on the canonical representative: any other
    scaling multiplies (s, s-t, t) by a common unit.
    """
    if Q in MARKED_POINTS:
        return StackPointCertificate(Q, "marked", marked_at=MARKED_POINTS[Q])
    s, t = Q.s, Q.t
    conditions = (("s", s, sig.a), ("s-t", s - t, sig.b), ("t", t, sig.c))
    roots = []
    failed = []
    for label, value, n in conditions:
        g = is_nth_power_ideal(value, n, ring)
        if g is None:
            failed.append(label)
        else:
            roots.append(g)
    if failed:
        return StackPointCertificate(Q, "rejected", failed=tuple(failed))
    return StackPointCertificate(Q, "smooth", roots=tuple(roots))


def stack_point_automorphism_order(Q: ProjPointQ, sig: Signature, ring: SRing) -> int:
    """Automorphism count of the point over the base ring.

    Marked points of multiplicity n carry mu_n(R) = {u : u^n = 1}; smooth
    points are rigid.  (The geometric orders a, b, c live in
    groups.stabilizer_order instead.)
    """
    cert = is_stack_point(Q, sig, ring)
    if not cert.accepted:
        raise NotAStackPoint(f"{Q} is not a point of the rooted line over {ring}")
    if cert.status == "marked":
        n = {"0": sig.a, "1": sig.b, "inf": sig.c}[cert.marked_at]
        return mu_order(n)
    return 1


def euler_characteristic(sig: Signature) -> Fraction:
    """1/a + 1/b + 1/c - 1, exactly."""
    a, b, c = sig
    return Fraction(1, a) + Fraction(1, b) + Fraction(1, c) - 1


@dataclass(frozen=True)
class SignatureClass:
    """Trichotomy data for a signature.

    genus is that of a Galois cover realizing the signature: 0 when chi > 0,
    1 when chi = 0, and None (meaning >= 2, not computed) when chi < 0.  The
    cover degree 2/chi is only defined in the spherical case.
    """

    chi: Fraction
    kind: str  # "spherical", "euclidean", "hyperbolic"
    genus: Optional[int]
    degree: Optional[int]

    def genus_label(self) -> str:
        return str(self.genus) if self.genus is not None else ">= 2 (not computed)"


def classify_signature(sig: Signature) -> SignatureClass:
    """Spherical/euclidean/hyperbolic trichotomy by the sign of chi.

    Spherical signatures all have 2/chi a positive integer (they are the
    (2,2,n), (2,3,3), (2,3,4), (2,3,5) families), and that integer is the
    degree of the Galois cover; chi = 0 forces genus one, chi < 0 genus > 1.
    """
    chi = euler_characteristic(sig)
    if chi > 0:
        degree = 2 / chi
        if degree.denominator != 1:
            raise AssertionError(f"2/chi is not integral for {sig}")
        return SignatureClass(chi, "spherical", genus=0, degree=int(degree))
    if chi == 0:
        return SignatureClass(chi, "euclidean", genus=1, degree=None)
    return SignatureClass(chi, "hyperbolic", genus=None, degree=None)
